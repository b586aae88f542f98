#include "doctest.h"

#include <functional>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "subshift/error.hpp"
#include "subshift/presentation.hpp"
#include "subshift/zoo.hpp"

using namespace subshift;

namespace {

std::vector<std::string> formatted(const Alphabet& a, const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (auto const& w : words) {
    out.push_back(a.format(w));
  }
  return out;
}

}  // namespace

TEST_CASE("edge shift of the golden mean") {
  Alphabet a({"0", "1"});
  auto g = edge_shift_from_forbidden({Word{1, 1}}, a);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edges().size() == 3);
  CHECK(g.right_resolving());
}

TEST_CASE("empty forbidden set is rejected") {
  Alphabet a({"0", "1"});
  CHECK_THROWS_AS(edge_shift_from_forbidden({}, a), InvalidArgument);
  CHECK_THROWS_AS(ShiftPresentation(ForbiddenWords{a, {}}), InvalidArgument);
}

TEST_CASE("forbidden 1 0^(2k+1) 1 agrees with the even shift up to length 9") {
  Alphabet a({"0", "1"});
  std::vector<Word> f;
  for (std::size_t k = 0; k <= 3; ++k) {
    Word w{1};
    w.insert(w.end(), 2 * k + 1, 0);
    w.push_back(1);
    f.push_back(w);
  }
  ShiftPresentation p(ForbiddenWords{a, f});
  for (std::size_t n = 1; n <= 9; ++n) {
    CHECK(formatted(a, enumerate_language(p, n).words) == oracle::language(oracle::even, "01", n));
  }
}

TEST_CASE("edge shifts are right-resolving for random forbidden sets") {
  std::mt19937 rng(7);
  Alphabet a({"0", "1", "2"});
  std::uniform_int_distribution<int> len(1, 3);
  std::uniform_int_distribution<Symbol> sym(0, 2);
  for (int t = 0; t < 50; ++t) {
    std::vector<Word> f;
    for (int i = 0; i < 3; ++i) {
      Word w(static_cast<std::size_t>(len(rng)) + 1);
      for (auto& s : w) {
        s = sym(rng);
      }
      f.push_back(w);
    }
    auto g = edge_shift_from_forbidden(f, a);
    CHECK(g.right_resolving());
    ShiftPresentation p(ForbiddenWords{a, f});
    std::vector<std::string> names;
    for (auto const& w : f) {
      names.push_back(a.format(w));
    }
    // Independent check: a word is in L when it extends to a long
    // admissible word on both sides.
    auto admissible = [&](const std::string& w) {
      for (auto const& x : names) {
        if (w.find(x) != std::string::npos) {
          return false;
        }
      }
      return true;
    };
    // Forbidden words have length <= 4, so extendability depends on the
    // last three symbols; 28 steps exceed the number of 3-blocks.
    std::map<std::pair<std::string, int>, bool> memo;
    std::function<bool(const std::string&, int, bool)> extends = [&](const std::string& tail, int steps,
                                                                   bool right) -> bool {
      if (steps == 0) {
        return true;
      }
      auto key = std::make_pair(tail + (right ? ">" : "<"), steps);
      if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
      }
      bool ok = false;
      for (char ch : std::string("012")) {
        std::string y = right ? tail + ch : ch + tail;
        if (admissible(y)) {
          ok = extends(right ? y.substr(1) : y.substr(0, 3), steps - 1, right);
          if (ok) {
            break;
          }
        }
      }
      memo[key] = ok;
      return ok;
    };
    auto in_language = [&](const std::string& w) {
      for (auto const& l : oracle::words("012", 3)) {
        for (auto const& r : oracle::words("012", 3)) {
          std::string y = l + w + r;
          if (admissible(y) && extends(l, 28, false) && extends(r, 28, true)) {
            return true;
          }
        }
      }
      return false;
    };
    if (!admissible("")) {
      continue;
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<std::string> want;
      for (auto const& w : oracle::words("012", n)) {
        if (admissible(w) && in_language(w)) {
          want.push_back(w);
        }
      }
      CHECK(formatted(a, enumerate_language(p, n).words) == want);
    }
  }
}

TEST_CASE("enumerate_language examples") {
  auto full = zoo::full_shift(2);
  CHECK(enumerate_language(full.presentation, 3).words.size() == 8);
  auto even = zoo::even_shift();
  auto l3 = formatted(even.presentation.alphabet(), enumerate_language(even.presentation, 3).words);
  CHECK(l3.size() == 7);
  CHECK(std::find(l3.begin(), l3.end(), "101") == l3.end());
  auto anbn = zoo::anbn();
  auto l2 = enumerate_language(anbn.presentation, 2);
  CHECK(formatted(anbn.presentation.alphabet(), l2.words) ==
        std::vector<std::string>{"aa", "ab", "ba", "bb"});
  CHECK(l2.complete);
}

TEST_CASE("languages match rule-based oracles") {
  struct Case {
    std::string shift;
    oracle::Member in;
    std::string symbols;
    std::size_t max_n;
  };
  std::vector<Case> cases{{"even", oracle::even, "10", 8},
                          {"golden_mean", oracle::golden, "01", 8},
                          {"anbn", oracle::anbn, "ab", 9},
                          {"gicar", oracle::gicar, "abc", 6}};
  for (auto const& c : cases) {
    auto p = zoo::get_shift(c.shift).presentation;
    for (std::size_t n = 0; n <= c.max_n; ++n) {
      CAPTURE(c.shift);
      CAPTURE(n);
      CHECK(formatted(p.alphabet(), enumerate_language(p, n).words) ==
            oracle::language(c.in, c.symbols, n));
    }
  }
}

TEST_CASE("language is factorial and consistent with contains_word") {
  for (auto const& name : {"even", "golden_mean", "charge_constrained:3", "anbn", "gicar",
                           "example_3_6", "minimal:fibonacci", "minimal:thue_morse"}) {
    auto p = zoo::get_shift(name).presentation;
    for (std::size_t n = 1; n <= 6; ++n) {
      auto shorter = enumerate_language(p, n).words;
      std::set<Word> set(shorter.begin(), shorter.end());
      for (auto const& w : enumerate_language(p, n + 1).words) {
        CHECK(set.count(Word(w.begin(), w.end() - 1)) == 1);
        CHECK(set.count(Word(w.begin() + 1, w.end())) == 1);
      }
      for (auto const& w : all_words(p.alphabet().size(), n)) {
        CHECK(contains_word(p, w) == (set.count(w) == 1));
      }
    }
  }
}

TEST_CASE("contains_word examples") {
  auto even = zoo::even_shift().presentation;
  auto const& a = even.alphabet();
  CHECK_FALSE(contains_word(even, a.parse("10001")));
  CHECK(contains_word(even, a.parse("1001")));
  CHECK(contains_word(even, Word{}));
  CHECK(contains_word(zoo::anbn().presentation, Word{}));
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(zoo::golden_mean().presentation));
  CHECK(is_irreducible(zoo::charge_constrained(3).presentation));
  Alphabet a({"x", "y"});
  LabeledGraph g(a, {"p", "q"}, {{0, 0, 0}, {1, 1, 1}});
  CHECK_FALSE(is_irreducible(ShiftPresentation(SoficGraph{g})));
  LabeledGraph lonely(a, {"p", "q"}, {{0, 0, 0}, {0, 0, 1}});
  CHECK_FALSE(is_irreducible(ShiftPresentation(SoficGraph{lonely})));
}

TEST_CASE("truncation radius") {
  auto anbn = zoo::anbn().presentation;
  auto const& fam = std::get<TruncatedFamily>(anbn.variant());
  CHECK(truncation_radius(fam, 5, 3) == 13);
  CHECK(truncation_radius(fam, 0, 0) == 2);
  CHECK(truncation_radius(fam, 4, 4) == 14);
}

TEST_CASE("successive truncations agree within the radius") {
  for (auto const& name : {"anbn", "gicar", "example_3_6"}) {
    auto p = zoo::get_shift(name).presentation;
    auto const& fam = std::get<TruncatedFamily>(p.variant());
    for (std::size_t n = 1; n <= 6; ++n) {
      std::size_t const level = truncation_radius(fam, n, 0);
      CHECK(path_labels(fam.generator(level), n) == path_labels(fam.generator(level + 1), n));
    }
  }
}

TEST_CASE("substitution fixed points") {
  auto fib = zoo::fibonacci();
  CHECK(fib.alphabet().format(substitution_fixed_prefix(fib, 0, 8)) == "abaababa");
  auto tm = zoo::thue_morse();
  CHECK(tm.alphabet().format(substitution_fixed_prefix(tm, 0, 8)) == "abbabaab");
  CHECK(substitution_fixed_prefix(fib, 0, 1) == Word{0});
  CHECK(fib.primitive());
  CHECK(tm.primitive());
  Substitution identity(Alphabet({"a", "b"}), {Word{0}, Word{1}});
  CHECK_FALSE(identity.primitive());
  CHECK_THROWS_AS(substitution_fixed_prefix(fib, 1, 8), InvalidArgument);
  CHECK_THROWS_AS(Substitution(Alphabet({"a"}), {Word{}}), InvalidArgument);
}

TEST_CASE("G(m) language matches the rule-based description") {
  auto p = zoo::get_shift("minimal:fibonacci").presentation;
  oracle::MinimalLanguage in(oracle::fixed_point({"ab", "a"}, "ab", 4096));
  for (std::size_t n = 1; n <= 8; ++n) {
    auto lang = enumerate_language(p, n);
    CHECK(lang.complete);
    CHECK(formatted(p.alphabet(), lang.words) == oracle::language(std::cref(in), "abe", n));
  }
}
