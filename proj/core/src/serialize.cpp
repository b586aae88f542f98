#include "subshift/serialize.hpp"

#include <limits>
#include <nlohmann/json.hpp>

#include "subshift/error.hpp"
#include "subshift/zoo.hpp"

namespace subshift {

using nlohmann::json;

namespace {

json word_json(const Alphabet& a, const Word& w) {
  json out = json::array();
  for (Symbol s : w) {
    out.push_back(a.name(s));
  }
  return out;
}

Word word_from(const Alphabet& a, const json& j) {
  Word w;
  for (auto const& s : j) {
    auto idx = a.find(s.get<std::string>());
    if (!idx) {
      throw InvalidArgument("unknown symbol '" + s.get<std::string>() + "'");
    }
    w.push_back(*idx);
  }
  return w;
}

json big_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return json(x.convert_to<long long>());
  }
  return json(x.str());
}

json graph_json(const LabeledGraph& g) {
  json edges = json::array();
  for (auto const& e : g.edges()) {
    edges.push_back({g.vertex_name(e.source), g.vertex_name(e.target), g.alphabet().name(e.label)});
  }
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

LabeledGraph graph_from(const Alphabet& a, const json& j) {
  std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
  LabeledGraph index(a, vertices, {});
  std::vector<Edge> edges;
  for (auto const& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) {
      throw InvalidArgument("graph edges must be [source, target, label]");
    }
    edges.push_back(Edge{index.vertex_index(e[0].get<std::string>()),
                         index.vertex_index(e[1].get<std::string>()),
                         a.at(e[2].get<std::string>())});
  }
  return LabeledGraph(a, std::move(vertices), std::move(edges));
}

}  // namespace

std::string export_shift(const ShiftPresentation& p) {
  json j;
  j["schema"] = "subshift/v1";
  j["alphabet"] = p.alphabet().symbols();
  j["kind"] = std::string(p.kind());
  std::visit(
      [&](auto const& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ForbiddenWords>) {
          json words = json::array();
          for (auto const& w : v.words) {
            words.push_back(word_json(v.alphabet, w));
          }
          j["forbidden"] = words;
        } else if constexpr (std::is_same_v<T, SoficGraph>) {
          j["graph"] = graph_json(v.graph);
        } else if constexpr (std::is_same_v<T, TruncatedFamily>) {
          j["family"] = {{"name", v.name}, {"min_level", v.min_level}};
        } else {
          auto const& s = v.substitution;
          json images = json::object();
          for (Symbol a = 0; a < s.alphabet().size(); ++a) {
            images[s.alphabet().name(a)] = word_json(s.alphabet(), s.image(a));
          }
          j["substitution"] = {{"alphabet", s.alphabet().symbols()},
                               {"images", images},
                               {"seed", s.alphabet().name(v.seed)},
                               {"prefix_length", v.prefix_length},
                               {"marker", v.marker}};
        }
      },
      p.variant());
  return j.dump(2) + "\n";
}

ShiftPresentation import_shift(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.value("schema", "") != "subshift/v1") {
      throw InvalidArgument("expected schema subshift/v1");
    }
    Alphabet alphabet(j.at("alphabet").get<std::vector<std::string>>());
    std::string const kind = j.at("kind").get<std::string>();
    if (kind == "forbidden") {
      ForbiddenWords f{alphabet, {}};
      for (auto const& w : j.at("forbidden")) {
        f.words.push_back(word_from(alphabet, w));
      }
      return ShiftPresentation(std::move(f));
    }
    if (kind == "graph") {
      return ShiftPresentation(SoficGraph{graph_from(alphabet, j.at("graph"))});
    }
    if (kind == "family") {
      auto entry = zoo::get_shift(j.at("family").at("name").get<std::string>());
      if (entry.presentation.kind() != "family" || !(entry.presentation.alphabet() == alphabet)) {
        throw InvalidArgument("family does not match a known truncated family");
      }
      return entry.presentation;
    }
    if (kind == "substitution") {
      auto const& s = j.at("substitution");
      Alphabet base(s.at("alphabet").get<std::vector<std::string>>());
      std::vector<Word> images;
      for (auto const& name : base.symbols()) {
        images.push_back(word_from(base, s.at("images").at(name)));
      }
      SubstitutionGraph g{Substitution(base, std::move(images)),
                          base.at(s.at("seed").get<std::string>()),
                          s.value("prefix_length", std::size_t{64}), s.value("marker", std::string("e"))};
      if (!(g.alphabet() == alphabet)) {
        throw InvalidArgument("alphabet must be the substitution alphabet followed by the marker");
      }
      return ShiftPresentation(std::move(g));
    }
    throw InvalidArgument("unknown kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed shift document: ") + e.what());
  }
}

std::string export_ksummary(const KSummary& k) {
  json j;
  j["schema"] = "ksummary/v1";
  j["first_level"] = k.first_level;
  j["rank_sequence"] = k.rank_sequence;
  j["eventual_rank"] = k.eventual_rank;
  j["eventual_level"] = k.eventual_level;
  j["torsion"] = k.torsion_note;
  if (k.stationary) {
    json rows = json::array();
    for (auto const& r : k.stationary->matrix.to_rows()) {
      json row = json::array();
      for (auto const& x : r) {
        row.push_back(big_json(x));
      }
      rows.push_back(row);
    }
    j["stationary"] = {{"matrix", rows},
                       {"determinant", k.stationary->determinant ? big_json(*k.stationary->determinant)
                                                                 : json(nullptr)},
                       {"invertible", k.stationary->invertible}};
  } else {
    j["stationary"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string export_classification(const Classification& c) {
  json j;
  j["word"] = c.word;
  if (c.sync) {
    j["sync"] = *c.sync;
  } else {
    j["sync"] = "consistent-up-to-" + std::to_string(c.k);
  }
  return j.dump();
}

}  // namespace subshift
