#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "subshift/alphabet.hpp"
#include "subshift/labeled_graph.hpp"

namespace subshift {

// A shift of finite type given by a finite set of forbidden words.
struct ForbiddenWords {
  Alphabet alphabet;
  std::vector<Word> words;
};

// A sofic shift given by a finite labeled graph.
struct SoficGraph {
  LabeledGraph graph;
};

// An infinite labeled graph accessed through finite truncations. The graph
// at level n must embed in the graph at level n + 1.
struct TruncatedFamily {
  std::string name;
  Alphabet alphabet;
  std::function<LabeledGraph(std::size_t level)> generator;
  std::size_t min_level = 1;
};

// A non-erasing substitution on a finite alphabet.
class Substitution {
 public:
  Substitution(Alphabet alphabet, std::vector<Word> images);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(Symbol s) const { return images_.at(s); }
  Word apply(const Word& w) const;

  // Some power of the substitution maps every symbol to a word containing
  // every symbol.
  bool primitive() const;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

// Length-L prefix of the one-sided fixed point of s starting with `seed`.
Word substitution_fixed_prefix(const Substitution& s, Symbol seed, std::size_t length);

// The graph G(m): a hub vertex with a marker loop, a spine reading a prefix
// of m away from the hub, and a marker edge from every spine vertex back.
struct SubstitutionGraph {
  Substitution substitution;
  Symbol seed = 0;
  std::size_t prefix_length = 64;
  std::string marker = "e";

  // Base alphabet followed by the marker.
  Alphabet alphabet() const;
  LabeledGraph graph(std::size_t spine_length) const;
};

class ShiftPresentation {
 public:
  using Variant = std::variant<ForbiddenWords, SoficGraph, TruncatedFamily, SubstitutionGraph>;

  ShiftPresentation(ForbiddenWords f);
  ShiftPresentation(SoficGraph g);
  ShiftPresentation(TruncatedFamily t);
  ShiftPresentation(SubstitutionGraph s);

  const Variant& variant() const noexcept { return v_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::string_view kind() const noexcept;

  // Forbidden-word and sofic presentations admit exact context decisions.
  bool finite() const noexcept;

 private:
  Variant v_;
  Alphabet alphabet_;
};

// A finite graph whose path labels agree with L(X) up to `path_length`.
struct GraphAccess {
  LabeledGraph graph;
  bool exact = false;     // graph presents X itself
  std::size_t level = 0;  // truncation level or spine length, 0 when exact
  bool complete = true;   // truncation stabilized
};

GraphAccess graph_for(const ShiftPresentation& p, std::size_t path_length);

LabeledGraph edge_shift_from_forbidden(const std::vector<Word>& forbidden, const Alphabet& alphabet);

// Truncation level for paths of total length word_len + 2 * ext_len.
std::size_t truncation_radius(const TruncatedFamily& family, std::size_t word_len,
                              std::size_t ext_len);

struct Language {
  std::vector<Word> words;  // lexicographic order
  bool complete = true;
  std::size_t level = 0;
};

Language enumerate_language(const ShiftPresentation& p, std::size_t n);

// Path labels of length n on g, in lexicographic order.
std::vector<Word> path_labels(const LabeledGraph& g, std::size_t n);

bool contains_word(const ShiftPresentation& p, const Word& w);
bool has_path(const LabeledGraph& g, const Word& w);

bool is_irreducible(const ShiftPresentation& p);

}  // namespace subshift
