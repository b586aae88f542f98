#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "subshift/alphabet.hpp"

namespace subshift {

// Fixed-universe bit set over vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return n_; }
  void insert(std::size_t v);
  bool contains(std::size_t v) const;
  bool empty() const noexcept;
  std::size_t count() const noexcept;
  bool intersects(const VertexSet& other) const;
  std::vector<std::size_t> elements() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

  bool operator==(const VertexSet& other) const = default;
  auto operator<=>(const VertexSet& other) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t b = 0; b < bits_.size(); ++b) {
      std::uint64_t x = bits_[b];
      while (x != 0) {
        f(b * 64 + static_cast<std::size_t>(__builtin_ctzll(x)));
        x &= x - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

struct Edge {
  std::size_t source;
  std::size_t target;
  Symbol label;
  bool operator==(const Edge&) const = default;
};

class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(Alphabet alphabet, std::vector<std::string> vertices, std::vector<Edge> edges);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
  std::size_t vertex_index(const std::string& name) const;
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Targets of s-labeled edges leaving `from`.
  VertexSet step(const VertexSet& from, Symbol s) const;
  // Sources of s-labeled edges entering `to`.
  VertexSet step_back(const VertexSet& to, Symbol s) const;

  const std::vector<std::size_t>& successors(std::size_t v, Symbol s) const {
    return out_[v * alphabet_.size() + s];
  }
  const std::vector<std::size_t>& predecessors(std::size_t v, Symbol s) const {
    return in_[v * alphabet_.size() + s];
  }

  bool right_resolving() const;
  bool left_resolving() const;
  bool irreducible() const;

  // Largest subgraph in which every vertex has an incoming and an outgoing
  // edge. Vertex order is preserved.
  LabeledGraph essential() const;

  // Number of edges from u to v, indexed [u][v].
  std::vector<std::vector<std::size_t>> adjacency_counts() const;

 private:
  Alphabet alphabet_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

// Strong connectivity of a directed graph given by adjacency lists.
bool strongly_connected(const std::vector<std::vector<std::size_t>>& adjacency);

}  // namespace subshift
