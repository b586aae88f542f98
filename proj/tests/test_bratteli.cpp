#include "doctest.h"

#include "oracles.hpp"
#include "subshift/bratteli.hpp"
#include "subshift/error.hpp"
#include "subshift/zoo.hpp"

using namespace subshift;

namespace {

std::vector<std::size_t> without_root(const BratteliDiagram& d) {
  auto s = d.level_sizes();
  return {s.begin() + 1, s.end()};
}

// Edge counts computed from the definition: classes of L_{2n+1} under
// brute-force bounded contexts, one edge per (a, b) with a w b in L.
IntMatrix brute_blc_matrix(const oracle::Member& in, const std::string& symbols, std::size_t n,
                           std::size_t k) {
  auto classes = [&](std::size_t len) {
    std::vector<std::pair<oracle::Context, std::string>> reps;
    for (auto const& w : oracle::language(in, symbols, len)) {
      auto c = oracle::context(in, symbols, w, k);
      bool seen = false;
      for (auto const& r : reps) {
        seen = seen || r.first == c;
      }
      if (!seen) {
        reps.emplace_back(c, w);
      }
    }
    return reps;
  };
  auto from = classes(2 * n + 1);
  auto to = classes(2 * n + 3);
  IntMatrix m(to.size(), from.size());
  for (std::size_t j = 0; j < from.size(); ++j) {
    for (char a : symbols) {
      for (char b : symbols) {
        std::string x = a + from[j].second + b;
        if (!in(x)) {
          continue;
        }
        auto c = oracle::context(in, symbols, x, k);
        for (std::size_t i = 0; i < to.size(); ++i) {
          if (to[i].first == c) {
            m(i, j) += 1;
          }
        }
      }
    }
  }
  return m;
}

bool same_up_to_order(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return false;
  }
  auto sorted_cells = [](const IntMatrix& m) {
    std::vector<std::string> rows;
    for (auto const& r : m.to_rows()) {
      std::vector<std::string> cells;
      for (auto const& x : r) {
        cells.push_back(x.str());
      }
      std::sort(cells.begin(), cells.end());
      std::string s;
      for (auto const& c : cells) {
        s += c + ",";
      }
      rows.push_back(s);
    }
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  return sorted_cells(a) == sorted_cells(b);
}

}  // namespace

TEST_CASE("even B^lc") {
  auto even = zoo::even_shift();
  auto d = build_blc(even.presentation, 3);
  CHECK(d.level_sizes() == std::vector<std::size_t>{1, 2, 5, 5});
  CHECK(d.first_index == -1);
  CHECK(transition_matrix(d, 1) == even.facts.matrices[0].matrix);
  auto d2 = build_blc(even.presentation, 2);
  IntMatrix a0 = transition_matrix(d2, 0);
  CHECK(a0.rows() == 5);
  CHECK(a0.cols() == 2);
  bool double_edge = false;
  for (std::size_t i = 0; i < a0.rows(); ++i) {
    for (std::size_t j = 0; j < a0.cols(); ++j) {
      double_edge = double_edge || a0(i, j) == 2;
    }
  }
  CHECK(double_edge);
  CHECK(transition_matrix(d, -1).cols() == 1);
}

TEST_CASE("full shift B^lc") {
  auto d = build_blc(zoo::full_shift(2).presentation, 3);
  CHECK(d.level_sizes() == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(transition_matrix(d, 1) == IntMatrix{{4}});
  auto s = restrict_sync(d);
  CHECK(without_root(d) == s.level_sizes());
  CHECK(s.matrices == std::vector<IntMatrix>(d.matrices.begin() + 1, d.matrices.end()));
}

TEST_CASE("B^lc matrices match the brute-force definition") {
  struct Case {
    std::string shift;
    oracle::Member in;
    std::string symbols;
  };
  for (auto const& c : {Case{"even", oracle::even, "10"}, Case{"golden_mean", oracle::golden, "01"},
                        Case{"anbn", oracle::anbn, "ab"}}) {
    auto d = build_blc(zoo::get_shift(c.shift).presentation, 3);
    for (int n = 0; n <= 1; ++n) {
      CAPTURE(c.shift);
      CAPTURE(n);
      CHECK(same_up_to_order(transition_matrix(d, n), brute_blc_matrix(c.in, c.symbols, n, 6)));
    }
  }
}

TEST_CASE("restricted anbn diagram grows") {
  auto s = restrict_sync(build_blc(zoo::anbn().presentation, 3));
  auto sizes = s.level_sizes();
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    CHECK(sizes[i] > sizes[i - 1]);
  }
  for (auto const& level : s.levels) {
    for (auto const& v : level) {
      CHECK(v.sync);
    }
  }
}

TEST_CASE("even heteroclinic diagrams") {
  auto even = zoo::even_shift();
  PeriodicPoint p{even.presentation.alphabet().parse("1"), 0};
  for (auto kind : {DiagramKind::Stable, DiagramKind::Unstable}) {
    auto d = kind == DiagramKind::Stable ? build_blcs(even.presentation, p, 0, 4)
                                         : build_blcu(even.presentation, p, 0, 4);
    CHECK(without_root(d) == std::vector<std::size_t>{2, 2, 2, 2});
    CHECK(d.matrices.back() == IntMatrix{{1, 1}, {1, 0}});
    CHECK(d.first_index == 0);
  }
  auto d1 = build_blcs(even.presentation, p, 0, 1);
  REQUIRE(d1.edges.size() == 1);
  std::vector<std::string> labels;
  for (auto const& e : d1.edges[0]) {
    labels.push_back(e.label);
  }
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"0", "1"});
}

TEST_CASE("GICAR stable diagram") {
  auto gicar = zoo::gicar();
  PeriodicPoint p{gicar.presentation.alphabet().parse("a"), 0};
  auto d = build_blcs(gicar.presentation, p, 0, 3);
  CHECK(without_root(d) == std::vector<std::size_t>{2, 3, 4});
  std::vector<std::vector<std::string>> level2;
  for (auto const& v : d.levels[2]) {
    std::vector<std::string> m;
    for (auto const& w : v.members) {
      m.push_back(gicar.presentation.alphabet().format(w));
    }
    level2.push_back(m);
  }
  std::sort(level2.begin(), level2.end());
  CHECK(level2 == std::vector<std::vector<std::string>>{{"aa", "bc"}, {"ab"}, {"bb"}});
  for (std::size_t i = 1; i < d.matrices.size(); ++i) {
    CHECK(d.matrices[i].nonzero_count() == 2 * d.matrices[i].cols());
  }
}

TEST_CASE("level inclusions") {
  auto gicar = zoo::gicar();
  auto const& ga = gicar.presentation.alphabet();
  PeriodicPoint pa{ga.parse("a"), 0};
  auto d0 = build_blcs(gicar.presentation, pa, 0, 3);
  auto d1 = build_blcs(gicar.presentation, pa, 1, 4);
  auto map = level_inclusion(d0, d1);
  CHECK(map.injective);
  CHECK(map.edge_consistent);
  CHECK(map.shift == 1);
  // [e; 0] is the root; its image is the class of a one level down.
  std::size_t const root_image = map.maps[0][0];
  auto const& target = d1.levels[map.shift][root_image];
  CHECK(std::find(target.members.begin(), target.members.end(), ga.parse("a")) != target.members.end());

  auto even = zoo::even_shift();
  auto const& ea = even.presentation.alphabet();
  PeriodicPoint p1{ea.parse("1"), 0};
  auto e0 = build_blcs(even.presentation, p1, 0, 3);
  auto e1 = build_blcs(even.presentation, p1, 1, 4);
  auto em = level_inclusion(e0, e1);
  std::size_t one = 0;
  for (auto const& v : e0.levels[1]) {
    if (v.representative == ea.parse("1")) {
      one = v.id;
    }
  }
  auto const& image = e1.levels[1 + em.shift][em.maps[1][one]];
  CHECK(std::find(image.members.begin(), image.members.end(), ea.parse("11")) != image.members.end());
  CHECK_THROWS_AS(level_inclusion(e0, build_blcu(even.presentation, p1, 1, 3)), InvalidArgument);
  CHECK_THROWS_AS(build_blcs(even.presentation, {ea.parse("0"), 0}, 0, 2), InvalidArgument);
}

TEST_CASE("sync vertices are upward closed") {
  std::vector<BratteliDiagram> ds{build_blc(zoo::even_shift().presentation, 4),
                                  build_blc(zoo::anbn().presentation, 3),
                                  build_blc(zoo::gicar().presentation, 3)};
  for (auto const& d : ds) {
    for (std::size_t i = 1; i < d.matrices.size(); ++i) {
      for (std::size_t s = 0; s < d.matrices[i].cols(); ++s) {
        for (std::size_t t = 0; t < d.matrices[i].rows(); ++t) {
          if (d.matrices[i](t, s) != 0 && d.levels[i][s].sync) {
            CHECK(d.levels[i + 1][t].sync);
          }
        }
      }
    }
  }
}

TEST_CASE("DOT and JSON export") {
  auto d = build_blc(zoo::even_shift().presentation, 3);
  std::string dot = export_dot(d);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("subgraph cluster_") != std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) {
    ++arrows;
  }
  BigInt total = 0;
  for (auto const& m : d.matrices) {
    for (auto const& r : m.to_rows()) {
      for (auto const& x : r) {
        total += x;
      }
    }
  }
  CHECK(BigInt(arrows) == total);
  auto back = import_json(export_json(d));
  CHECK(back.level_sizes() == d.level_sizes());
  CHECK(back.matrices == d.matrices);
  CHECK(back.first_index == d.first_index);
  CHECK(export_json(back) == export_json(d));
  CHECK_THROWS_AS(import_json("{\"schema\": \"other\"}"), InvalidArgument);
}
