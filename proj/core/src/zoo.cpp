#include "subshift/zoo.hpp"

#include <algorithm>
#include <charconv>

#include "subshift/error.hpp"

namespace subshift::zoo {

namespace {

Alphabet abc() { return Alphabet({"a", "b", "c"}); }

std::vector<std::string> paired_names(std::size_t level) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= level; ++i) {
    names.push_back("v" + std::to_string(i));
    names.push_back("w" + std::to_string(i));
  }
  return names;
}

std::size_t v_(std::size_t i) { return 2 * (i - 1); }
std::size_t w_(std::size_t i) { return 2 * (i - 1) + 1; }

std::size_t parse_param(const std::string& selector, const std::string& text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("bad parameter in shift selector '" + selector + "'");
  }
  return value;
}

}  // namespace

LabeledGraph anbn_right_graph(std::size_t level) {
  if (level == 0) {
    throw InvalidArgument("truncation level must be at least 1");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= level; ++i) {
    if (i < level) {
      edges.push_back({v_(i), v_(i + 1), 0});
    }
    edges.push_back({v_(i), w_(i), 1});
    if (i > 1) {
      edges.push_back({w_(i), w_(i - 1), 1});
    }
  }
  edges.push_back({w_(1), v_(1), 0});
  return LabeledGraph(Alphabet({"a", "b"}), paired_names(level), std::move(edges));
}

LabeledGraph anbn_left_graph(std::size_t level) {
  if (level == 0) {
    throw InvalidArgument("truncation level must be at least 1");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= level; ++i) {
    edges.push_back({v_(i), w_(i), 0});
    if (i < level) {
      edges.push_back({v_(i), v_(i + 1), 0});
    }
    if (i > 1) {
      edges.push_back({w_(i), w_(i - 1), 1});
    }
  }
  edges.push_back({w_(1), v_(1), 1});
  return LabeledGraph(Alphabet({"a", "b"}), paired_names(level), std::move(edges));
}

LabeledGraph example_3_6_graph(std::size_t level) {
  LabeledGraph g = anbn_right_graph(level);
  auto edges = g.edges();
  edges.push_back({w_(1), w_(1), 2});
  return LabeledGraph(abc(), g.vertices(), std::move(edges));
}

LabeledGraph gicar_graph(std::size_t level) {
  if (level == 0) {
    throw InvalidArgument("truncation level must be at least 1");
  }
  std::vector<std::string> names;
  std::vector<Edge> edges{{0, 0, 0}};
  for (std::size_t i = 0; i < level; ++i) {
    names.push_back("v" + std::to_string(i + 1));
    if (i + 1 < level) {
      edges.push_back({i, i + 1, 1});
      edges.push_back({i + 1, i, 2});
    }
  }
  return LabeledGraph(abc(), std::move(names), std::move(edges));
}

LabeledGraph charge_graph(std::size_t c) {
  if (c == 0) {
    throw InvalidArgument("charge bound must be at least 1");
  }
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i <= c; ++i) {
    names.push_back("v" + std::to_string(i));
    if (i < c) {
      edges.push_back({i, i + 1, 0});
      edges.push_back({i + 1, i, 1});
    }
  }
  return LabeledGraph(Alphabet({"+1", "-1"}), std::move(names), std::move(edges));
}

ZooEntry full_shift(std::size_t n) {
  if (n == 0) {
    throw InvalidArgument("full shift needs at least one symbol");
  }
  std::vector<std::string> symbols;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    symbols.push_back(std::to_string(i));
    edges.push_back({0, 0, static_cast<Symbol>(i)});
  }
  LabeledGraph g(Alphabet(symbols), {"v"}, std::move(edges));
  Facts f;
  f.description = "full " + std::to_string(n) + "-shift";
  f.sync_rule = "every word";
  f.default_period = Word{0};
  IntMatrix a(1, 1);
  a(0, 0) = static_cast<long long>(n * n);
  f.matrices.push_back({"A_lc", a});
  return {"full:" + std::to_string(n), ShiftPresentation(SoficGraph{std::move(g)}), std::move(f)};
}

ZooEntry golden_mean() {
  Alphabet a({"0", "1"});
  Facts f;
  f.description = "golden mean shift, forbidden word 11";
  f.sync_rule = "every word";
  f.default_period = Word{0};
  f.matrices.push_back({"A_lcs", IntMatrix{{1, 1}, {1, 0}}});
  f.matrices.push_back({"A_lcu", IntMatrix{{1, 1}, {1, 0}}});
  return {"golden_mean", ShiftPresentation(ForbiddenWords{a, {Word{1, 1}}}), std::move(f)};
}

ZooEntry even_shift() {
  // Symbol order 1 < 0 puts the classes in the order of the printed matrices.
  Alphabet a({"1", "0"});
  LabeledGraph g(a, {"l", "r"}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}});
  Facts f;
  f.description = "even shift: an even number of 0s between any two 1s";
  f.sync_rule = "w is synchronizing iff it contains 1";
  f.default_period = Word{0};
  f.matrices.push_back({"A_lc", IntMatrix{{1, 1, 1, 1, 2},
                                          {1, 0, 1, 0, 0},
                                          {1, 1, 0, 0, 0},
                                          {1, 0, 0, 0, 0},
                                          {0, 0, 0, 0, 1}}});
  f.matrices.push_back({"A_sync", IntMatrix{{1, 1, 1, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}}});
  f.matrices.push_back({"A_lcs", IntMatrix{{1, 1}, {1, 0}}});
  f.matrices.push_back({"A_lcu", IntMatrix{{1, 1}, {1, 0}}});
  return {"even", ShiftPresentation(SoficGraph{std::move(g)}), std::move(f)};
}

ZooEntry charge_constrained(std::size_t c) {
  Facts f;
  f.description = "charge constrained shift: partial sums stay within a window of width " +
                  std::to_string(c);
  f.sync_rule = "words of the embedded X_{c-1} are never synchronizing";
  f.default_period = Word{0, 1};
  return {"charge_constrained:" + std::to_string(c),
          ShiftPresentation(SoficGraph{charge_graph(c)}), std::move(f)};
}

ZooEntry anbn() {
  TruncatedFamily t{"anbn", Alphabet({"a", "b"}), anbn_right_graph, 1};
  Facts f;
  f.description = "a^n b^n shift, right-resolving presentation G_r truncated";
  f.sync_rule = "w is synchronizing iff it contains ba";
  f.default_period = Word{0, 1};
  f.matrices.push_back({"A_1", IntMatrix{{0, 1}, {1, 0}}});
  return {"anbn", ShiftPresentation(std::move(t)), std::move(f)};
}

ZooEntry gicar() {
  TruncatedFamily t{"gicar", abc(), gicar_graph, 1};
  Facts f;
  f.description = "spine shift with an a-loop at the bottom vertex";
  f.sync_rule = "w is synchronizing iff it contains a";
  f.default_period = Word{0};
  return {"gicar", ShiftPresentation(std::move(t)), std::move(f)};
}

ZooEntry example_3_6() {
  TruncatedFamily t{"example_3_6", abc(), example_3_6_graph, 1};
  Facts f;
  f.description = "a^n b^n graph with a c-loop at the bottom-left vertex";
  f.sync_rule = "ba is synchronizing";
  f.default_period = Word{0, 1};
  return {"example_3_6", ShiftPresentation(std::move(t)), std::move(f)};
}

Substitution fibonacci() {
  return Substitution(Alphabet({"a", "b"}), {Word{0, 1}, Word{0}});
}

Substitution thue_morse() {
  return Substitution(Alphabet({"a", "b"}), {Word{0, 1}, Word{1, 0}});
}

ZooEntry minimal_x_m(const Substitution& s, Symbol seed, const std::string& name) {
  if (!s.primitive()) {
    throw InvalidArgument("substitution for the minimal construction must be primitive");
  }
  SubstitutionGraph g{s, seed, 64, "e"};
  Facts f;
  f.description = "X(m) for m the " + name + " fixed point";
  f.sync_rule = "w is synchronizing iff it contains e";
  f.default_period = Word{static_cast<Symbol>(s.alphabet().size())};
  return {"minimal:" + name, ShiftPresentation(std::move(g)), std::move(f)};
}

std::vector<std::string> shift_names() {
  return {"full:<n>", "golden_mean", "even", "charge_constrained:<c>", "anbn", "gicar",
          "example_3_6", "minimal:fibonacci", "minimal:thue_morse"};
}

ZooEntry get_shift(const std::string& selector) {
  auto colon = selector.find(':');
  std::string const name = selector.substr(0, colon);
  std::string const param = colon == std::string::npos ? "" : selector.substr(colon + 1);
  auto no_param = [&] {
    if (!param.empty()) {
      throw InvalidArgument("shift '" + name + "' takes no parameter");
    }
  };
  if (name == "full") {
    return full_shift(param.empty() ? 2 : parse_param(selector, param));
  }
  if (name == "golden_mean") {
    no_param();
    return golden_mean();
  }
  if (name == "even") {
    no_param();
    return even_shift();
  }
  if (name == "charge_constrained") {
    std::size_t c = param.empty() ? 3 : parse_param(selector, param);
    if (c < 1) {
      throw InvalidArgument("charge_constrained needs c >= 1");
    }
    return charge_constrained(c);
  }
  if (name == "anbn") {
    no_param();
    return anbn();
  }
  if (name == "gicar") {
    no_param();
    return gicar();
  }
  if (name == "example_3_6") {
    no_param();
    return example_3_6();
  }
  if (name == "minimal") {
    if (param.empty() || param == "fibonacci") {
      return minimal_x_m(fibonacci(), 0, "fibonacci");
    }
    if (param == "thue_morse") {
      return minimal_x_m(thue_morse(), 0, "thue_morse");
    }
    throw InvalidArgument("unknown substitution '" + param + "'");
  }
  throw InvalidArgument("unknown shift '" + selector + "'");
}

long charge(const Alphabet& alphabet, const Word& w) {
  long d = 0;
  for (Symbol s : w) {
    auto const& n = alphabet.name(s);
    if (n == "b") {
      ++d;
    } else if (n == "c") {
      --d;
    } else {
      throw InvalidArgument("charge is defined on words over {b, c}");
    }
  }
  return d;
}

long charge(const std::string& w) {
  long d = 0;
  for (char ch : w) {
    if (ch == 'b') {
      ++d;
    } else if (ch == 'c') {
      --d;
    } else {
      throw InvalidArgument("charge is defined on words over {b, c}");
    }
  }
  return d;
}

bool d_equivalent(const Alphabet& alphabet, const Word& w, const Word& v) {
  long const dw = charge(alphabet, w);
  long const dv = charge(alphabet, v);
  return w.size() == v.size() && dw == dv;
}

bool d_equivalent(const std::string& w, const std::string& v) {
  long const dw = charge(w);
  long const dv = charge(v);
  return w.size() == v.size() && dw == dv;
}

std::vector<Word> embedded_subshift_words(std::size_t c, std::size_t n) {
  if (c < 2) {
    throw InvalidArgument("embedded_subshift_words needs c >= 2");
  }
  ShiftPresentation small(SoficGraph{charge_graph(c - 1)});
  ShiftPresentation big(SoficGraph{charge_graph(c)});
  auto words = enumerate_language(small, n).words;
  for (auto const& w : words) {
    if (!contains_word(big, w)) {
      throw Error("embedding failed: word " + big.alphabet().format(w) + " not in X_c");
    }
  }
  return words;
}

}  // namespace subshift::zoo
