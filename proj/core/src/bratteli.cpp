#include "subshift/bratteli.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "subshift/error.hpp"

namespace subshift {

using nlohmann::json;

std::string to_string(DiagramKind kind) {
  switch (kind) {
    case DiagramKind::Homoclinic:
      return "lc";
    case DiagramKind::Stable:
      return "lcs";
    case DiagramKind::Unstable:
      return "lcu";
  }
  return "lc";
}

DiagramKind diagram_kind_from_string(const std::string& name) {
  if (name == "lc") {
    return DiagramKind::Homoclinic;
  }
  if (name == "lcs") {
    return DiagramKind::Stable;
  }
  if (name == "lcu") {
    return DiagramKind::Unstable;
  }
  throw InvalidArgument("unknown diagram kind '" + name + "' (expected lc, lcs or lcu)");
}

Symbol PeriodicPoint::at(long i) const {
  if (period.empty()) {
    throw InvalidArgument("periodic point needs a non-empty period");
  }
  long const n = static_cast<long>(period.size());
  long r = (i + offset) % n;
  if (r < 0) {
    r += n;
  }
  return period[static_cast<std::size_t>(r)];
}

Word PeriodicPoint::window(long from, long to) const {
  Word w;
  for (long i = from; i <= to; ++i) {
    w.push_back(at(i));
  }
  return w;
}

std::vector<std::size_t> BratteliDiagram::level_sizes() const {
  std::vector<std::size_t> sizes;
  for (auto const& l : levels) {
    sizes.push_back(l.size());
  }
  return sizes;
}

namespace {

std::string certainty_of(const ContextOracle& oracle) {
  if (oracle.exact()) {
    return "exact";
  }
  return "bounded k=" + std::to_string(*oracle.bound());
}

std::vector<LevelVertex> vertices_from(const std::vector<ContextClass>& classes) {
  std::vector<LevelVertex> level;
  for (auto const& c : classes) {
    LevelVertex v;
    v.id = level.size();
    v.representative = c.members.front();
    v.members = c.members;
    level.push_back(std::move(v));
  }
  return level;
}

std::map<Word, std::size_t> member_index(const std::vector<LevelVertex>& level) {
  std::map<Word, std::size_t> idx;
  for (auto const& v : level) {
    for (auto const& w : v.members) {
      idx.emplace(w, v.id);
    }
  }
  return idx;
}

void add_edges(BratteliDiagram& d, std::vector<DiagramEdge> edges) {
  std::size_t const from = d.levels.size() - 2;
  IntMatrix a(d.levels[from + 1].size(), d.levels[from].size());
  for (auto const& e : edges) {
    a(e.target, e.source) += 1;
  }
  d.matrices.push_back(std::move(a));
  d.edges.push_back(std::move(edges));
}

LevelVertex root_vertex() {
  LevelVertex root;
  root.members.emplace_back();
  return root;
}

}  // namespace

BratteliDiagram build_blc(const ShiftPresentation& p, std::size_t depth,
                          const BuildOptions& options) {
  if (depth == 0) {
    throw InvalidArgument("depth must be at least 1");
  }
  std::size_t const max_len = 2 * depth - 1;
  auto oracle = make_oracle(p, max_len, {options.ext_len, false});
  auto const& alpha = p.alphabet();

  BratteliDiagram d;
  d.kind = DiagramKind::Homoclinic;
  d.alphabet = alpha;
  d.first_index = -1;
  d.levels.push_back({root_vertex()});
  d.certainty.push_back("exact");

  for (std::size_t j = 0; j < depth; ++j) {
    auto words = path_labels(oracle->graph(), 2 * j + 1);
    if (words.empty()) {
      throw InvalidArgument("presentation has an empty language");
    }
    auto level = vertices_from(partition_by_context(*oracle, words));
    for (auto& v : level) {
      v.sync = oracle->synchronizing(v.representative).synchronizing;
    }
    auto const idx = member_index(level);
    std::vector<DiagramEdge> edges;
    if (j == 0) {
      for (auto const& w : words) {
        edges.push_back({0, idx.at(w), alpha.name(w.front())});
      }
    } else {
      for (auto const& src : d.levels.back()) {
        for (Symbol a = 0; a < alpha.size(); ++a) {
          for (Symbol b = 0; b < alpha.size(); ++b) {
            Word x = concat(Word{a}, src.representative, Word{b});
            if (auto it = idx.find(x); it != idx.end()) {
              edges.push_back({src.id, it->second, "(" + alpha.name(a) + "," + alpha.name(b) + ")"});
            }
          }
        }
      }
    }
    d.levels.push_back(std::move(level));
    d.certainty.push_back(certainty_of(*oracle));
    add_edges(d, std::move(edges));
  }
  return d;
}

BratteliDiagram restrict_sync(const BratteliDiagram& d) {
  BratteliDiagram r;
  r.kind = d.kind;
  r.alphabet = d.alphabet;
  r.has_root = false;
  r.sync_restricted = true;
  r.point = d.point;
  r.ray_offset = d.ray_offset;
  r.window = d.window;

  std::vector<std::vector<std::size_t>> kept(d.levels.size());
  std::size_t first = d.levels.size();
  for (std::size_t i = 0; i < d.levels.size(); ++i) {
    bool const is_root = d.has_root && i == 0;
    for (auto const& v : d.levels[i]) {
      if (v.sync && !is_root) {
        kept[i].push_back(v.id);
      }
    }
    if (!kept[i].empty() && first == d.levels.size()) {
      first = i;
    }
  }
  if (first == d.levels.size()) {
    throw InvalidArgument("diagram has no synchronizing vertices");
  }
  r.first_index = d.index_of_position(first);
  for (std::size_t i = first; i < d.levels.size(); ++i) {
    std::vector<std::size_t> remap(d.levels[i].size(), d.levels[i].size());
    std::vector<LevelVertex> level;
    for (auto id : kept[i]) {
      LevelVertex v = d.levels[i][id];
      remap[id] = level.size();
      v.id = level.size();
      level.push_back(std::move(v));
    }
    r.levels.push_back(std::move(level));
    r.certainty.push_back(d.certainty.at(i));
    if (i > first) {
      std::vector<std::size_t> prev_remap(d.levels[i - 1].size(), d.levels[i - 1].size());
      for (std::size_t k = 0; k < kept[i - 1].size(); ++k) {
        prev_remap[kept[i - 1][k]] = k;
      }
      std::vector<DiagramEdge> edges;
      for (auto const& e : d.edges.at(i - 1)) {
        if (prev_remap[e.source] < d.levels[i - 1].size() && remap[e.target] < d.levels[i].size()) {
          edges.push_back({prev_remap[e.source], remap[e.target], e.label});
        }
      }
      add_edges(r, std::move(edges));
    }
  }
  return r;
}

namespace {

std::size_t periodicity_power(const ShiftPresentation& p) {
  if (p.finite()) {
    return graph_for(p, 0).graph.vertex_count() + 1;
  }
  return 8;
}

BratteliDiagram build_heteroclinic(const ShiftPresentation& p, const PeriodicPoint& point,
                                   std::size_t n, std::size_t depth, const BuildOptions& options,
                                   DiagramKind kind) {
  p.alphabet().validate(point.period);
  if (point.period.empty()) {
    throw InvalidArgument("periodic point needs a non-empty period");
  }
  std::size_t const period_len = point.period.size();
  std::size_t const power = periodicity_power(p);
  auto oracle = make_oracle(p, std::max(3 * period_len + depth, power * period_len),
                            {options.ext_len, false});
  Word periodic;
  for (std::size_t i = 0; i < power; ++i) {
    periodic = concat(periodic, point.window(0, static_cast<long>(period_len) - 1));
  }
  if (!oracle->contains(periodic)) {
    throw InvalidArgument("point is not periodic for this presentation");
  }
  bool const stable = kind == DiagramKind::Stable;
  long const N = static_cast<long>(n);
  Word window;
  for (std::size_t r = 1; r <= 3 && window.empty(); ++r) {
    long const len = static_cast<long>(r * period_len);
    Word w = stable ? point.window(-N - len + 1, -N) : point.window(N, N + len - 1);
    if (oracle->synchronizing(w).synchronizing) {
      window = std::move(w);
    }
  }
  if (window.empty()) {
    throw InvalidArgument("periodic point is not synchronizing");
  }

  auto const& alpha = p.alphabet();
  Side const side = stable ? Side::Right : Side::Left;
  auto ctx_word = [&](const Word& u) { return stable ? concat(window, u) : concat(u, window); };

  BratteliDiagram d;
  d.kind = kind;
  d.alphabet = alpha;
  d.first_index = -static_cast<int>(n);
  d.point = point;
  d.ray_offset = n;
  d.window = window;
  LevelVertex root = root_vertex();
  root.sync = true;
  d.levels.push_back({root});
  d.certainty.push_back(certainty_of(*oracle));

  std::vector<Word> words{Word{}};
  for (std::size_t i = 1; i <= depth; ++i) {
    std::vector<Word> next;
    for (auto const& u : words) {
      for (Symbol s = 0; s < alpha.size(); ++s) {
        Word x = stable ? concat(u, Word{s}) : concat(Word{s}, u);
        if (oracle->contains(ctx_word(x))) {
          next.push_back(std::move(x));
        }
      }
    }
    std::sort(next.begin(), next.end());
    std::map<std::vector<bool>, std::vector<Word>> groups;
    for (auto const& u : next) {
      groups[oracle->one_sided_signature(ctx_word(u), side)].push_back(u);
    }
    std::vector<ContextClass> classes;
    for (auto& [sig, members] : groups) {
      classes.push_back({std::move(members)});
    }
    std::sort(classes.begin(), classes.end(), [](auto const& a, auto const& b) {
      return a.members.front() < b.members.front();
    });
    auto level = vertices_from(classes);
    for (auto& v : level) {
      v.sync = oracle->synchronizing(ctx_word(v.representative)).synchronizing;
    }
    auto const idx = member_index(level);
    std::vector<DiagramEdge> edges;
    for (auto const& src : d.levels.back()) {
      for (Symbol s = 0; s < alpha.size(); ++s) {
        Word x = stable ? concat(src.representative, Word{s}) : concat(Word{s}, src.representative);
        if (auto it = idx.find(x); it != idx.end()) {
          edges.push_back({src.id, it->second, alpha.name(s)});
        }
      }
    }
    d.levels.push_back(std::move(level));
    d.certainty.push_back(certainty_of(*oracle));
    add_edges(d, std::move(edges));
    words = std::move(next);
  }
  return d;
}

}  // namespace

BratteliDiagram build_blcs(const ShiftPresentation& p, const PeriodicPoint& point, std::size_t n,
                           std::size_t depth, const BuildOptions& options) {
  return build_heteroclinic(p, point, n, depth, options, DiagramKind::Stable);
}

BratteliDiagram build_blcu(const ShiftPresentation& p, const PeriodicPoint& point, std::size_t n,
                           std::size_t depth, const BuildOptions& options) {
  return build_heteroclinic(p, point, n, depth, options, DiagramKind::Unstable);
}

LevelMap level_inclusion(const BratteliDiagram& from, const BratteliDiagram& to) {
  if (from.kind != to.kind || from.kind == DiagramKind::Homoclinic) {
    throw InvalidArgument("level inclusion needs two stable or two unstable diagrams");
  }
  if (!from.point || !to.point || !(*from.point == *to.point)) {
    throw InvalidArgument("diagrams were built from different periodic points");
  }
  if (from.sync_restricted || to.sync_restricted) {
    throw InvalidArgument("level inclusion needs unrestricted diagrams");
  }
  LevelMap lm;
  if (to.ray_offset == from.ray_offset) {
    lm.shift = 0;
  } else if (to.ray_offset == from.ray_offset + 1) {
    lm.shift = 1;
  } else {
    throw InvalidArgument("level inclusion maps N to N or N + 1");
  }
  bool const stable = from.kind == DiagramKind::Stable;
  long const N = static_cast<long>(from.ray_offset);
  Symbol const glue = stable ? from.point->at(-N) : from.point->at(N);
  std::size_t const usable =
      std::min(from.levels.size(), to.levels.size() > lm.shift ? to.levels.size() - lm.shift : 0);
  for (std::size_t i = 0; i < usable; ++i) {
    auto const idx = member_index(to.levels[i + lm.shift]);
    std::vector<std::size_t> map;
    std::size_t const invalid = to.levels[i + lm.shift].size();
    for (auto const& v : from.levels[i]) {
      std::size_t image = invalid;
      bool first = true;
      for (auto const& w : v.members) {
        Word x = w;
        if (lm.shift == 1) {
          x = stable ? concat(Word{glue}, w) : concat(w, Word{glue});
        }
        auto it = idx.find(x);
        std::size_t const t = it == idx.end() ? invalid : it->second;
        if (t == invalid || (!first && t != image)) {
          lm.edge_consistent = false;
        }
        if (first) {
          image = t;
          first = false;
        }
      }
      map.push_back(image);
    }
    auto sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      lm.injective = false;
    }
    lm.maps.push_back(std::move(map));
  }
  for (std::size_t i = 0; i + 1 < lm.maps.size(); ++i) {
    auto const& a = from.matrices[i];
    auto const& b = to.matrices[i + lm.shift];
    for (std::size_t s = 0; s < a.cols(); ++s) {
      for (std::size_t t = 0; t < a.rows(); ++t) {
        std::size_t const is = lm.maps[i][s];
        std::size_t const it = lm.maps[i + 1][t];
        if (is >= b.cols() || it >= b.rows() || a(t, s) != b(it, is)) {
          lm.edge_consistent = false;
        }
      }
    }
  }
  return lm;
}

IntMatrix transition_matrix(const BratteliDiagram& d, int n) {
  long const pos = static_cast<long>(n) - d.first_index;
  if (pos < 0 || pos >= static_cast<long>(d.matrices.size())) {
    throw InvalidArgument("level " + std::to_string(n) + " out of range");
  }
  return d.matrices[static_cast<std::size_t>(pos)];
}

namespace {

std::string vertex_label(const BratteliDiagram& d, std::size_t level, const LevelVertex& v) {
  if (d.has_root && level == 0) {
    if (d.kind == DiagramKind::Homoclinic) {
      return "*";
    }
    return d.kind == DiagramKind::Stable ? "..." + d.alphabet.format(d.window)
                                         : d.alphabet.format(d.window) + "...";
  }
  std::string s;
  for (std::size_t i = 0; i < v.members.size(); ++i) {
    s += (i == 0 ? "" : ", ") + d.alphabet.format(v.members[i]);
  }
  return s;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

json word_json(const Alphabet& a, const Word& w) {
  json arr = json::array();
  for (Symbol s : w) {
    arr.push_back(a.name(s));
  }
  return arr;
}

Word word_from_json(const Alphabet& a, const json& j) {
  if (j.is_string()) {
    return a.parse(j.get<std::string>());
  }
  Word w;
  for (auto const& s : j) {
    w.push_back(a.at(s.get<std::string>()));
  }
  return w;
}

json bigint_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(x);
  }
  return x.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_string()) {
    return BigInt(j.get<std::string>());
  }
  return BigInt(j.get<long long>());
}

}  // namespace

std::string export_dot(const BratteliDiagram& d) {
  std::ostringstream os;
  os << "digraph bratteli {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < d.levels.size(); ++i) {
    os << "  subgraph cluster_level" << i << " {\n";
    os << "    label=\"V_" << d.index_of_position(i) << "\";\n";
    os << "    rank=same;\n";
    for (auto const& v : d.levels[i]) {
      os << "    n" << i << "_" << v.id << " [label=\"" << dot_escape(vertex_label(d, i, v)) << "\"";
      if (v.sync && !(d.has_root && i == 0)) {
        os << ", style=bold";
      }
      os << "];\n";
    }
    os << "  }\n";
  }
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    for (auto const& e : d.edges[i]) {
      os << "  n" << i << "_" << e.source << " -> n" << i + 1 << "_" << e.target << " [label=\""
         << dot_escape(e.label) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const BratteliDiagram& d) {
  json j;
  j["schema"] = "bratteli/v1";
  j["kind"] = to_string(d.kind);
  j["alphabet"] = d.alphabet.symbols();
  j["has_root"] = d.has_root;
  j["sync_restricted"] = d.sync_restricted;
  j["first_index"] = d.first_index;
  if (d.point) {
    j["point"] = {{"period", word_json(d.alphabet, d.point->period)}, {"offset", d.point->offset}};
  } else {
    j["point"] = nullptr;
  }
  j["ray_offset"] = d.ray_offset;
  j["window"] = word_json(d.alphabet, d.window);
  json levels = json::array();
  for (std::size_t i = 0; i < d.levels.size(); ++i) {
    json vertices = json::array();
    for (auto const& v : d.levels[i]) {
      json members = json::array();
      for (auto const& m : v.members) {
        members.push_back(word_json(d.alphabet, m));
      }
      vertices.push_back({{"id", v.id},
                          {"rep", word_json(d.alphabet, v.representative)},
                          {"sync", v.sync},
                          {"members", members}});
    }
    levels.push_back({{"index", d.index_of_position(i)},
                      {"certainty", d.certainty.at(i)},
                      {"vertices", vertices}});
  }
  j["levels"] = levels;
  json matrices = json::array();
  for (auto const& m : d.matrices) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        row.push_back(bigint_json(m(r, c)));
      }
      rows.push_back(row);
    }
    matrices.push_back(rows);
  }
  j["matrices"] = matrices;
  json edges = json::array();
  for (auto const& level : d.edges) {
    json le = json::array();
    for (auto const& e : level) {
      le.push_back({{"source", e.source}, {"target", e.target}, {"label", e.label}});
    }
    edges.push_back(le);
  }
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

BratteliDiagram import_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const& e) {
    throw InvalidArgument(std::string("invalid JSON: ") + e.what());
  }
  if (j.value("schema", "") != "bratteli/v1") {
    throw InvalidArgument("expected schema bratteli/v1");
  }
  try {
    BratteliDiagram d;
    d.kind = diagram_kind_from_string(j.at("kind").get<std::string>());
    d.alphabet = Alphabet(j.at("alphabet").get<std::vector<std::string>>());
    d.has_root = j.at("has_root").get<bool>();
    d.sync_restricted = j.value("sync_restricted", false);
    d.first_index = j.at("first_index").get<int>();
    if (!j.at("point").is_null()) {
      d.point = PeriodicPoint{word_from_json(d.alphabet, j["point"].at("period")),
                              j["point"].at("offset").get<long>()};
    }
    d.ray_offset = j.value("ray_offset", std::size_t{0});
    d.window = word_from_json(d.alphabet, j.value("window", json::array()));
    for (auto const& lj : j.at("levels")) {
      std::vector<LevelVertex> level;
      for (auto const& vj : lj.at("vertices")) {
        LevelVertex v;
        v.id = vj.at("id").get<std::size_t>();
        v.representative = word_from_json(d.alphabet, vj.at("rep"));
        v.sync = vj.at("sync").get<bool>();
        for (auto const& m : vj.value("members", json::array())) {
          v.members.push_back(word_from_json(d.alphabet, m));
        }
        if (v.members.empty()) {
          v.members.push_back(v.representative);
        }
        level.push_back(std::move(v));
      }
      d.levels.push_back(std::move(level));
      d.certainty.push_back(lj.value("certainty", "exact"));
    }
    for (auto const& mj : j.at("matrices")) {
      std::vector<std::vector<BigInt>> rows;
      for (auto const& rj : mj) {
        std::vector<BigInt> row;
        for (auto const& x : rj) {
          row.push_back(bigint_from_json(x));
        }
        rows.push_back(std::move(row));
      }
      d.matrices.push_back(IntMatrix::from_rows(rows));
    }
    for (auto const& ej : j.value("edges", json::array())) {
      std::vector<DiagramEdge> level;
      for (auto const& e : ej) {
        level.push_back({e.at("source").get<std::size_t>(), e.at("target").get<std::size_t>(),
                         e.value("label", "")});
      }
      d.edges.push_back(std::move(level));
    }
    if (d.matrices.size() + 1 != d.levels.size() && !d.levels.empty()) {
      throw InvalidArgument("bratteli/v1 document needs one matrix per level transition");
    }
    for (std::size_t i = 0; i < d.matrices.size(); ++i) {
      if (d.matrices[i].rows() != d.levels[i + 1].size() || d.matrices[i].cols() != d.levels[i].size()) {
        throw InvalidArgument("matrix " + std::to_string(i) + " has the wrong shape");
      }
    }
    return d;
  } catch (json::exception const& e) {
    throw InvalidArgument(std::string("malformed bratteli/v1 document: ") + e.what());
  }
}

}  // namespace subshift
