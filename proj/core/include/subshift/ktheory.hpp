#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subshift/bratteli.hpp"
#include "subshift/int_matrix.hpp"
#include "subshift/presentation.hpp"

namespace subshift {

struct StationaryPart {
  IntMatrix matrix;
  std::optional<BigInt> determinant;  // square matrices only
  bool invertible = false;            // determinant is +1 or -1
};

// Finite summary of lim (Z^{V_n}, A_n).
struct KSummary {
  int first_level = 0;                     // level index of the first composite factor
  std::vector<std::size_t> rank_sequence;  // rank of A_n ... A_first for each n
  std::size_t eventual_rank = 0;
  int eventual_level = 0;  // level index where the tail value is first reached
  std::optional<StationaryPart> stationary;
  std::string torsion_note;  // "free" or "undetermined"
};

KSummary k_summary(const BratteliDiagram& d);

struct TensorVerdict {
  bool holds = false;
  bool structural_failure = false;
  std::string method;  // "canonical", "search" or empty
  std::vector<std::size_t> permutation;
  IntMatrix product;   // A_lcs (x) A_lcu
  IntMatrix sync;      // stationary A_sync in the order that matched
  std::string message;
};

// Reorders every level of a sync-restricted diagram by (stable class,
// unstable class) of each vertex, so that the level order agrees with the
// row-major order of A_lcs (x) A_lcu. Vertices whose classes cannot be
// matched keep their relative order at the end.
BratteliDiagram pair_canonicalize(const ShiftPresentation& p, const BratteliDiagram& sync,
                                  const BratteliDiagram& lcs, const BratteliDiagram& lcu);

// Permutation search is limited to sizes <= 8.
TensorVerdict tensor_factor_check(const BratteliDiagram& sync, const BratteliDiagram& lcs,
                                  const BratteliDiagram& lcu);

struct RankGrowthRow {
  std::size_t n = 0;            // window size 2n + 1
  std::size_t sync_classes = 0;
  std::size_t rank = 0;         // rank of A^sync_n
  bool full_rank = false;
};

std::vector<RankGrowthRow> sync_rank_growth(const ShiftPresentation& p, std::size_t n_max);

struct VlVrVerdict {
  bool holds = false;
  std::size_t classes = 0;
  std::size_t distinct_pairs = 0;
  std::size_t bound = 0;  // |V_l^n x V_r^n|
  bool well_defined = true;
  bool injective = true;
  // Every endpoint lies in {v1..vn, w1..wn}; reported, not required.
  bool inside_vn = true;
  std::vector<std::pair<std::string, std::string>> pairs;  // per class, by representative
  std::string message;
};

VlVrVerdict vlvr_correspondence_check(const ShiftPresentation& p, std::size_t n);

}  // namespace subshift
