#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "subshift/int_matrix.hpp"
#include "subshift/presentation.hpp"

namespace subshift::zoo {

struct ExpectedMatrix {
  std::string name;
  IntMatrix matrix;
};

struct Facts {
  std::string description;
  std::string sync_rule;
  // Default periodic point for heteroclinic diagrams, as a period word.
  std::optional<Word> default_period;
  std::vector<ExpectedMatrix> matrices;
};

struct ZooEntry {
  std::string name;
  ShiftPresentation presentation;
  Facts facts;
};

// Selectors: full:<n>, golden_mean, even, charge_constrained:<c>, anbn,
// gicar, example_3_6, minimal[:fibonacci|:thue_morse].
ZooEntry get_shift(const std::string& selector);
std::vector<std::string> shift_names();

ZooEntry full_shift(std::size_t n);
ZooEntry golden_mean();
ZooEntry even_shift();
ZooEntry charge_constrained(std::size_t c);
ZooEntry anbn();
ZooEntry gicar();
ZooEntry example_3_6();
ZooEntry minimal_x_m(const Substitution& s, Symbol seed, const std::string& name);

Substitution fibonacci();
Substitution thue_morse();

// Truncations with vertex order v1, w1, v2, w2, ...
LabeledGraph anbn_right_graph(std::size_t level);
LabeledGraph anbn_left_graph(std::size_t level);
LabeledGraph example_3_6_graph(std::size_t level);
// Spine v1, v2, ... with an a-loop at v1.
LabeledGraph gicar_graph(std::size_t level);
LabeledGraph charge_graph(std::size_t c);

// Distinguished vertices s_r on G_r (w1) and s_l on G_l (v1).
constexpr std::size_t anbn_right_sync_vertex = 1;
constexpr std::size_t anbn_left_sync_vertex = 0;

// Number of b's minus number of c's; only b and c may occur.
long charge(const Alphabet& alphabet, const Word& w);
long charge(const std::string& w);
bool d_equivalent(const Alphabet& alphabet, const Word& w, const Word& v);
bool d_equivalent(const std::string& w, const std::string& v);

// L_n(X_{c-1}) written over the alphabet of X_c; each word is checked to
// lie in X_c.
std::vector<Word> embedded_subshift_words(std::size_t c, std::size_t n);

}  // namespace subshift::zoo
