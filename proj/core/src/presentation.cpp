#include "subshift/presentation.hpp"

#include <algorithm>
#include <set>

#include "subshift/error.hpp"

namespace subshift {

Substitution::Substitution(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size()) {
    throw InvalidArgument("substitution needs one image per symbol");
  }
  for (auto const& img : images_) {
    if (img.empty()) {
      throw InvalidArgument("substitution must be non-erasing");
    }
    alphabet_.validate(img);
  }
}

Word Substitution::apply(const Word& w) const {
  Word out;
  for (Symbol s : w) {
    out.insert(out.end(), images_[s].begin(), images_[s].end());
  }
  return out;
}

bool Substitution::primitive() const {
  std::size_t const k = alphabet_.size();
  // reach[a][b]: b occurs in the image of a under some positive power.
  std::vector<std::vector<bool>> m(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a) {
    for (Symbol b : images_[a]) {
      m[a][b] = true;
    }
  }
  // The boolean matrix is primitive iff some power up to (k-1)^2 + 1 is positive.
  auto power = m;
  std::size_t const bound = (k - 1) * (k - 1) + 1;
  for (std::size_t e = 1; e <= bound; ++e) {
    bool positive = true;
    for (std::size_t a = 0; a < k && positive; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (!power[a][b]) {
          positive = false;
          break;
        }
      }
    }
    if (positive) {
      return true;
    }
    std::vector<std::vector<bool>> next(k, std::vector<bool>(k, false));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t c = 0; c < k; ++c) {
        if (power[a][c]) {
          for (std::size_t b = 0; b < k; ++b) {
            if (m[c][b]) {
              next[a][b] = true;
            }
          }
        }
      }
    }
    power = std::move(next);
  }
  return false;
}

Word substitution_fixed_prefix(const Substitution& s, Symbol seed, std::size_t length) {
  if (seed >= s.alphabet().size()) {
    throw InvalidArgument("seed outside substitution alphabet");
  }
  if (length == 0) {
    throw InvalidArgument("prefix length must be at least 1");
  }
  auto const& img = s.image(seed);
  if (img.front() != seed || (img.size() < 2 && length > 1)) {
    throw InvalidArgument("seed '" + s.alphabet().name(seed) + "' is not self-prolongable");
  }
  Word w{seed};
  while (w.size() < length) {
    w = s.apply(w);
  }
  w.resize(length);
  return w;
}

Alphabet SubstitutionGraph::alphabet() const {
  auto symbols = substitution.alphabet().symbols();
  symbols.push_back(marker);
  return Alphabet(std::move(symbols));
}

LabeledGraph SubstitutionGraph::graph(std::size_t spine_length) const {
  Alphabet a = alphabet();
  Symbol const e = static_cast<Symbol>(a.size() - 1);
  Word const m = substitution_fixed_prefix(substitution, seed, std::max<std::size_t>(spine_length, 1));
  std::vector<std::string> names{"v"};
  for (std::size_t i = 1; i <= spine_length; ++i) {
    names.push_back("s" + std::to_string(i));
  }
  std::vector<Edge> edges{{0, 0, e}};
  for (std::size_t i = 0; i < spine_length; ++i) {
    edges.push_back({i, i + 1, m[i]});
    edges.push_back({i + 1, 0, e});
  }
  return LabeledGraph(std::move(a), std::move(names), std::move(edges));
}

namespace {

void validate_forbidden(const ForbiddenWords& f) {
  if (f.words.empty()) {
    throw InvalidArgument("forbidden word set must be non-empty; use a full-shift graph instead");
  }
  for (auto const& w : f.words) {
    if (w.empty()) {
      throw InvalidArgument("forbidden words must be non-empty");
    }
    f.alphabet.validate(w);
  }
}

std::size_t count_factors(const Word& m, std::size_t n) {
  std::set<Word> seen;
  for (std::size_t i = 0; i + n <= m.size(); ++i) {
    seen.emplace(m.begin() + static_cast<std::ptrdiff_t>(i),
                 m.begin() + static_cast<std::ptrdiff_t>(i + n));
  }
  return seen.size();
}

}  // namespace

ShiftPresentation::ShiftPresentation(ForbiddenWords f) : v_(std::move(f)) {
  auto const& fw = std::get<ForbiddenWords>(v_);
  validate_forbidden(fw);
  alphabet_ = fw.alphabet;
}

ShiftPresentation::ShiftPresentation(SoficGraph g) : v_(std::move(g)) {
  alphabet_ = std::get<SoficGraph>(v_).graph.alphabet();
}

ShiftPresentation::ShiftPresentation(TruncatedFamily t) : v_(std::move(t)) {
  auto const& tf = std::get<TruncatedFamily>(v_);
  if (!tf.generator) {
    throw InvalidArgument("truncated family needs a generator");
  }
  alphabet_ = tf.alphabet;
}

ShiftPresentation::ShiftPresentation(SubstitutionGraph s) : v_(std::move(s)) {
  auto const& sg = std::get<SubstitutionGraph>(v_);
  if (sg.substitution.alphabet().find(sg.marker)) {
    throw InvalidArgument("marker symbol '" + sg.marker + "' already in substitution alphabet");
  }
  substitution_fixed_prefix(sg.substitution, sg.seed, 2);
  alphabet_ = sg.alphabet();
}

std::string_view ShiftPresentation::kind() const noexcept {
  switch (v_.index()) {
    case 0:
      return "forbidden";
    case 1:
      return "graph";
    case 2:
      return "family";
    default:
      return "substitution";
  }
}

bool ShiftPresentation::finite() const noexcept { return v_.index() <= 1; }

LabeledGraph edge_shift_from_forbidden(const std::vector<Word>& forbidden, const Alphabet& alphabet) {
  validate_forbidden(ForbiddenWords{alphabet, forbidden});
  std::size_t n = 2;
  for (auto const& w : forbidden) {
    n = std::max(n, w.size());
  }
  auto allowed = [&](const Word& x) {
    return std::none_of(forbidden.begin(), forbidden.end(),
                        [&](const Word& f) { return is_subword(f, x); });
  };
  std::vector<Word> blocks;
  for (auto& w : all_words(alphabet.size(), n - 1)) {
    if (allowed(w)) {
      blocks.push_back(std::move(w));
    }
  }
  std::vector<std::string> names;
  for (auto const& b : blocks) {
    names.push_back(alphabet.format(b));
  }
  auto index_of = [&](const Word& w) {
    return static_cast<std::size_t>(std::lower_bound(blocks.begin(), blocks.end(), w) - blocks.begin());
  };
  std::vector<Edge> edges;
  for (auto const& u : blocks) {
    for (Symbol s = 0; s < alphabet.size(); ++s) {
      Word x = u;
      x.push_back(s);
      if (!allowed(x)) {
        continue;
      }
      Word v(x.begin() + 1, x.end());
      edges.push_back({index_of(u), index_of(v), s});
    }
  }
  return LabeledGraph(alphabet, std::move(names), std::move(edges)).essential();
}

std::size_t truncation_radius(const TruncatedFamily& family, std::size_t word_len,
                              std::size_t ext_len) {
  return std::max(family.min_level, word_len + 2 * ext_len + 2);
}

namespace {

std::size_t spine_for(const SubstitutionGraph& s, std::size_t path_length, bool& complete) {
  std::size_t p = std::max(s.prefix_length, 2 * path_length + 2);
  constexpr std::size_t cap = std::size_t{1} << 16;
  while (p < cap) {
    Word m = substitution_fixed_prefix(s.substitution, s.seed, 2 * p);
    Word head(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(p));
    if (count_factors(head, path_length) == count_factors(m, path_length)) {
      complete = true;
      return 2 * p;
    }
    p *= 2;
  }
  complete = false;
  return p;
}

}  // namespace

GraphAccess graph_for(const ShiftPresentation& p, std::size_t path_length) {
  return std::visit(
      [&](auto const& v) -> GraphAccess {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ForbiddenWords>) {
          return {edge_shift_from_forbidden(v.words, v.alphabet), true, 0, true};
        } else if constexpr (std::is_same_v<T, SoficGraph>) {
          return {v.graph.essential(), true, 0, true};
        } else if constexpr (std::is_same_v<T, TruncatedFamily>) {
          std::size_t level = truncation_radius(v, path_length, 0);
          return {v.generator(level), false, level, true};
        } else {
          bool complete = true;
          std::size_t spine = std::max(spine_for(v, path_length, complete), path_length + 2);
          return {v.graph(spine), false, spine, complete};
        }
      },
      p.variant());
}

std::vector<Word> path_labels(const LabeledGraph& g, std::size_t n) {
  std::vector<Word> out;
  Word w;
  std::vector<VertexSet> stack{VertexSet::full(g.vertex_count())};
  if (g.vertex_count() == 0) {
    return out;
  }
  // Depth-first in symbol order yields lexicographic output.
  auto rec = [&](auto&& self) -> void {
    if (w.size() == n) {
      out.push_back(w);
      return;
    }
    for (Symbol s = 0; s < g.alphabet().size(); ++s) {
      VertexSet next = g.step(stack.back(), s);
      if (next.empty()) {
        continue;
      }
      w.push_back(s);
      stack.push_back(std::move(next));
      self(self);
      stack.pop_back();
      w.pop_back();
    }
  };
  rec(rec);
  return out;
}

bool has_path(const LabeledGraph& g, const Word& w) {
  if (g.vertex_count() == 0) {
    return false;
  }
  VertexSet cur = VertexSet::full(g.vertex_count());
  for (Symbol s : w) {
    cur = g.step(cur, s);
    if (cur.empty()) {
      return false;
    }
  }
  return true;
}

Language enumerate_language(const ShiftPresentation& p, std::size_t n) {
  GraphAccess access = graph_for(p, n);
  Language lang{path_labels(access.graph, n), access.complete, access.level};
  if (auto const* t = std::get_if<TruncatedFamily>(&p.variant())) {
    lang.complete = path_labels(t->generator(access.level + 1), n).size() == lang.words.size();
  }
  return lang;
}

bool contains_word(const ShiftPresentation& p, const Word& w) {
  p.alphabet().validate(w);
  if (w.empty()) {
    return true;
  }
  return has_path(graph_for(p, w.size()).graph, w);
}

bool is_irreducible(const ShiftPresentation& p) {
  if (auto const* g = std::get_if<SoficGraph>(&p.variant())) {
    return g->graph.irreducible();
  }
  if (auto const* f = std::get_if<ForbiddenWords>(&p.variant())) {
    return edge_shift_from_forbidden(f->words, f->alphabet).irreducible();
  }
  throw InvalidArgument("irreducibility is only checked for finite presentations");
}

}  // namespace subshift
