#include "doctest.h"

#include "subshift/error.hpp"
#include "subshift/ktheory.hpp"
#include "subshift/zoo.hpp"

using namespace subshift;

namespace {

BratteliDiagram constant_diagram(const IntMatrix& a, std::size_t steps) {
  BratteliDiagram d;
  d.has_root = false;
  d.first_index = 0;
  for (std::size_t i = 0; i <= steps; ++i) {
    std::vector<LevelVertex> level;
    for (std::size_t v = 0; v < a.rows(); ++v) {
      level.push_back(LevelVertex{v, {}, true, {}});
    }
    d.levels.push_back(level);
    if (i < steps) {
      d.matrices.push_back(a);
      d.edges.emplace_back();
    }
  }
  return d;
}

}  // namespace

TEST_CASE("k_summary of the even shift") {
  auto even = zoo::even_shift();
  auto k = k_summary(build_blc(even.presentation, 4));
  CHECK(k.eventual_rank == 5);
  REQUIRE(k.stationary);
  CHECK(k.stationary->matrix == even.facts.matrices[0].matrix);
  CHECK(*k.stationary->determinant != 0);
  CHECK(k.stationary->invertible);
  CHECK(k.torsion_note == "free");

  PeriodicPoint p{even.presentation.alphabet().parse("1"), 0};
  auto ks = k_summary(build_blcs(even.presentation, p, 0, 4));
  CHECK(ks.eventual_rank == 2);
  REQUIRE(ks.stationary);
  CHECK(ks.stationary->matrix == IntMatrix{{1, 1}, {1, 0}});
  CHECK(*ks.stationary->determinant == -1);
}

TEST_CASE("k_summary of a non-invertible stationary matrix") {
  auto k = k_summary(constant_diagram(IntMatrix{{2}}, 3));
  CHECK(k.eventual_rank == 1);
  REQUIRE(k.stationary);
  CHECK_FALSE(k.stationary->invertible);
  CHECK(k.torsion_note == "undetermined");
  CHECK(k.first_level == 1);
  CHECK(k.rank_sequence == std::vector<std::size_t>{1, 1});
}

TEST_CASE("k_summary rank sequence uses composites") {
  IntMatrix a{{1, 0}, {0, 0}};
  auto k = k_summary(constant_diagram(a, 3));
  CHECK(k.rank_sequence == std::vector<std::size_t>{1, 1});
  IntMatrix nil{{0, 1}, {0, 0}};
  CHECK(k_summary(constant_diagram(nil, 3)).rank_sequence == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(k_summary(constant_diagram(a, 0)), InvalidArgument);
}

TEST_CASE("tensor identity for the even shift") {
  auto even = zoo::even_shift();
  PeriodicPoint p{even.presentation.alphabet().parse("1"), 0};
  auto lcs = build_blcs(even.presentation, p, 0, 4);
  auto lcu = build_blcu(even.presentation, p, 0, 4);
  auto sync = restrict_sync(build_blc(even.presentation, 4));
  auto canon = pair_canonicalize(even.presentation, sync, lcs, lcu);
  auto v = tensor_factor_check(canon, lcs, lcu);
  CHECK(v.holds);
  CHECK(v.method == "canonical");
  CHECK(v.permutation == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(v.product == kronecker(IntMatrix{{1, 1}, {1, 0}}, IntMatrix{{1, 1}, {1, 0}}));
  CHECK(v.sync == even.facts.matrices[1].matrix);
}

TEST_CASE("tensor check reports structural failures") {
  auto v = tensor_factor_check(constant_diagram(IntMatrix{{1, 1}, {1, 0}}, 3),
                               constant_diagram(IntMatrix{{1, 1}, {1, 0}}, 3),
                               constant_diagram(IntMatrix{{1, 1}, {1, 0}}, 3));
  CHECK_FALSE(v.holds);
  CHECK(v.structural_failure);
  auto w = tensor_factor_check(constant_diagram(IntMatrix{{1}}, 1), constant_diagram(IntMatrix{{1}}, 3),
                               constant_diagram(IntMatrix{{1}}, 3));
  CHECK(w.structural_failure);
}

TEST_CASE("tensor check finds permutations") {
  IntMatrix a{{1, 1}, {1, 0}};
  IntMatrix prod = kronecker(a, a);
  auto shuffled = permute_similar(prod, {3, 1, 2, 0});
  auto v = tensor_factor_check(constant_diagram(shuffled, 3), constant_diagram(a, 3),
                               constant_diagram(a, 3));
  CHECK(v.holds);
  CHECK(v.method == "search");
  CHECK(permute_similar(v.product, v.permutation) == shuffled);
}

TEST_CASE("anbn sync rank growth") {
  auto rows = sync_rank_growth(zoo::anbn().presentation, 3);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].sync_classes == (2 * rows[i].n) * (2 * rows[i].n));
    CHECK(rows[i].full_rank);
    if (i > 0) {
      CHECK(rows[i].sync_classes > rows[i - 1].sync_classes);
    }
  }
}

TEST_CASE("V_l x V_r correspondence") {
  auto p = zoo::anbn().presentation;
  for (std::size_t n = 1; n <= 2; ++n) {
    auto v = vlvr_correspondence_check(p, n);
    CHECK(v.holds);
    CHECK(v.well_defined);
    CHECK(v.injective);
    CHECK(v.classes == v.bound);
  }
  auto zero = vlvr_correspondence_check(p, 0);
  CHECK(zero.holds);
  CHECK(zero.classes == 0);
  CHECK_THROWS_AS(vlvr_correspondence_check(zoo::even_shift().presentation, 1), InvalidArgument);
}
