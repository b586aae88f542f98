#include "doctest.h"

#include "subshift/alphabet.hpp"
#include "subshift/error.hpp"
#include "subshift/labeled_graph.hpp"

using namespace subshift;

TEST_CASE("alphabet parses by longest match and formats back") {
  Alphabet a({"+1", "-1"});
  Word w = a.parse("+1-1 -1");
  CHECK(w == Word{0, 1, 1});
  CHECK(a.format(w) == "(+1)(-1)(-1)");
  Alphabet b({"a", "ab", "b"});
  CHECK(b.parse("abab") == Word{1, 1});
  CHECK(b.format(Word{0, 1}) == "a(ab)");
  CHECK_THROWS_AS(b.parse("c"), InvalidArgument);
}

TEST_CASE("alphabet rejects duplicates and empty lists") {
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), InvalidArgument);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), InvalidArgument);
}

TEST_CASE("word helpers") {
  CHECK(is_subword(Word{1, 0}, Word{0, 1, 0, 1}));
  CHECK_FALSE(is_subword(Word{1, 1}, Word{0, 1, 0, 1}));
  CHECK(is_subword(Word{}, Word{}));
  CHECK(concat(Word{1}, Word{2}, Word{3}) == Word{1, 2, 3});
  CHECK(reversed(Word{1, 2, 3}) == Word{3, 2, 1});
  auto all = all_words(2, 3);
  REQUIRE(all.size() == 8);
  CHECK(all.front() == Word{0, 0, 0});
  CHECK(all.back() == Word{1, 1, 1});
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all_words(3, 0) == std::vector<Word>{Word{}});
}

TEST_CASE("vertex sets") {
  VertexSet s(70);
  s.insert(3);
  s.insert(69);
  CHECK(s.contains(69));
  CHECK_FALSE(s.contains(4));
  CHECK(s.count() == 2);
  CHECK(s.elements() == std::vector<std::size_t>{3, 69});
  VertexSet t = VertexSet::full(70);
  CHECK(t.count() == 70);
  CHECK(t.intersects(s));
  t &= s;
  CHECK(t == s);
  CHECK(VertexSetHash{}(t) == VertexSetHash{}(s));
}

namespace {

LabeledGraph even_graph() {
  return LabeledGraph(Alphabet({"1", "0"}), {"l", "r"}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}});
}

}  // namespace

TEST_CASE("labeled graph stepping and resolving properties") {
  auto g = even_graph();
  VertexSet all = VertexSet::full(2);
  CHECK(g.step(all, 0).elements() == std::vector<std::size_t>{0});
  CHECK(g.step(all, 1).count() == 2);
  CHECK(g.step_back(VertexSet::full(2), 0).elements() == std::vector<std::size_t>{0});
  CHECK(g.right_resolving());
  CHECK(g.left_resolving());
  CHECK(g.irreducible());
  auto counts = g.adjacency_counts();
  CHECK(counts[0][0] == 1);
  CHECK(counts[0][1] == 1);
  CHECK(counts[1][0] == 1);
  CHECK(counts[1][1] == 0);
}

TEST_CASE("essential part drops stranded vertices") {
  Alphabet a({"x"});
  LabeledGraph g(a, {"loop", "tail", "island"}, {{0, 0, 0}, {1, 0, 0}});
  CHECK_FALSE(g.irreducible());
  auto e = g.essential();
  CHECK(e.vertex_count() == 1);
  CHECK(e.vertex_name(0) == "loop");
}

TEST_CASE("graph construction validates edges") {
  Alphabet a({"x"});
  CHECK_THROWS_AS(LabeledGraph(a, {"v"}, {{0, 1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(LabeledGraph(a, {"v"}, {{0, 0, 3}}), InvalidArgument);
  CHECK_THROWS_AS(LabeledGraph(a, {"v", "v"}, {}), InvalidArgument);
}

TEST_CASE("strong connectivity") {
  CHECK(strongly_connected({{1}, {0}}));
  CHECK_FALSE(strongly_connected({{1}, {}}));
  CHECK(strongly_connected({{0}}));
}
