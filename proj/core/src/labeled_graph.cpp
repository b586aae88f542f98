#include "subshift/labeled_graph.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "subshift/error.hpp"

namespace subshift {

VertexSet::VertexSet(std::size_t universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t v = 0; v < universe; ++v) {
    s.insert(v);
  }
  return s;
}

void VertexSet::insert(std::size_t v) {
  bits_[v / 64] |= std::uint64_t{1} << (v % 64);
}

bool VertexSet::contains(std::size_t v) const {
  return v < n_ && ((bits_[v / 64] >> (v % 64)) & 1U) != 0;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t x) { return x == 0; });
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto x : bits_) {
    c += static_cast<std::size_t>(std::popcount(x));
  }
  return c;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t i = 0; i < bits_.size() && i < other.bits_.size(); ++i) {
    if ((bits_[i] & other.bits_[i]) != 0) {
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> VertexSet::elements() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < bits_.size() && i < other.bits_.size(); ++i) {
    bits_[i] |= other.bits_[i];
  }
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    bits_[i] &= i < other.bits_.size() ? other.bits_[i] : 0;
  }
  return *this;
}

std::size_t VertexSet::hash() const noexcept {
  std::size_t h = n_;
  for (auto x : bits_) {
    h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

LabeledGraph::LabeledGraph(Alphabet alphabet, std::vector<std::string> vertices,
                           std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::string> seen;
  for (auto const& v : vertices_) {
    if (!seen.insert(v).second) {
      throw InvalidArgument("duplicate vertex '" + v + "'");
    }
  }
  std::size_t const n = vertices_.size();
  std::size_t const k = alphabet_.size();
  out_.assign(n * k, {});
  in_.assign(n * k, {});
  for (auto const& e : edges_) {
    if (e.source >= n || e.target >= n) {
      throw InvalidArgument("edge endpoint outside vertex list");
    }
    if (e.label >= k) {
      throw InvalidArgument("edge label outside alphabet");
    }
    out_[e.source * k + e.label].push_back(e.target);
    in_[e.target * k + e.label].push_back(e.source);
  }
}

std::size_t LabeledGraph::vertex_index(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) {
    throw InvalidArgument("unknown vertex '" + name + "'");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

VertexSet LabeledGraph::step(const VertexSet& from, Symbol s) const {
  VertexSet to(vertex_count());
  from.for_each([&](std::size_t v) {
    for (auto t : successors(v, s)) {
      to.insert(t);
    }
  });
  return to;
}

VertexSet LabeledGraph::step_back(const VertexSet& to, Symbol s) const {
  VertexSet from(vertex_count());
  to.for_each([&](std::size_t v) {
    for (auto u : predecessors(v, s)) {
      from.insert(u);
    }
  });
  return from;
}

namespace {

bool resolving(const std::vector<std::vector<std::size_t>>& lists) {
  for (auto const& l : lists) {
    if (l.size() > 1) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool LabeledGraph::right_resolving() const { return resolving(out_); }

bool LabeledGraph::left_resolving() const { return resolving(in_); }

bool strongly_connected(const std::vector<std::vector<std::size_t>>& adjacency) {
  std::size_t const n = adjacency.size();
  if (n == 0) {
    return false;
  }
  auto reach_all = [n](const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  std::vector<std::vector<std::size_t>> rev(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto w : adjacency[v]) {
      rev[w].push_back(v);
    }
  }
  return reach_all(adjacency) && reach_all(rev);
}

bool LabeledGraph::irreducible() const {
  std::vector<std::vector<std::size_t>> adj(vertex_count());
  for (auto const& e : edges_) {
    adj[e.source].push_back(e.target);
  }
  return strongly_connected(adj);
}

LabeledGraph LabeledGraph::essential() const {
  std::size_t const n = vertex_count();
  std::vector<bool> alive(n, true);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> indeg(n, 0);
    std::vector<std::size_t> outdeg(n, 0);
    for (auto const& e : edges_) {
      if (alive[e.source] && alive[e.target]) {
        ++outdeg[e.source];
        ++indeg[e.target];
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (alive[v] && (indeg[v] == 0 || outdeg[v] == 0)) {
        alive[v] = false;
        changed = true;
      }
    }
  }
  std::vector<std::size_t> remap(n, n);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v]) {
      remap[v] = names.size();
      names.push_back(vertices_[v]);
    }
  }
  std::vector<Edge> kept;
  for (auto const& e : edges_) {
    if (alive[e.source] && alive[e.target]) {
      kept.push_back({remap[e.source], remap[e.target], e.label});
    }
  }
  return LabeledGraph(alphabet_, std::move(names), std::move(kept));
}

std::vector<std::vector<std::size_t>> LabeledGraph::adjacency_counts() const {
  std::vector<std::vector<std::size_t>> a(vertex_count(), std::vector<std::size_t>(vertex_count(), 0));
  for (auto const& e : edges_) {
    ++a[e.source][e.target];
  }
  return a;
}

}  // namespace subshift
