#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <map>

#include "oracles.hpp"
#include "subshift/contexts.hpp"
#include "subshift/zoo.hpp"

using namespace subshift;

namespace {

std::string golden_path() {
  return std::string(SUBSHIFT_GOLDEN_DIR) + "/minimal_fibonacci_refuting_k.txt";
}

}  // namespace

TEST_CASE("refuting lengths for e-free words match the golden file") {
  oracle::MinimalLanguage in(oracle::fixed_point({"ab", "a"}, "ab", 4096));
  std::map<std::string, std::size_t> brute;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& w : in.factors(n)) {
      brute[w] = oracle::refuting_k(std::cref(in), "abe", w, 10);
    }
  }
  if (std::getenv("SUBSHIFT_REGEN_GOLDEN") != nullptr) {
    std::ofstream out(golden_path());
    for (auto const& [w, k] : brute) {
      out << w << ' ' << k << '\n';
    }
  }
  std::map<std::string, std::size_t> golden;
  std::ifstream in_file(golden_path());
  std::string w;
  std::size_t k;
  while (in_file >> w >> k) {
    golden[w] = k;
  }
  CHECK(golden == brute);
  for (auto const& [word, refuting] : brute) {
    CHECK(refuting >= 1);
    CHECK(refuting <= 10);
  }

  auto p = zoo::get_shift("minimal:fibonacci").presentation;
  for (std::size_t n = 1; n <= 6; ++n) {
    auto oracle = make_oracle(p, n, {10, true});
    for (auto const& word : in.factors(n)) {
      auto v = oracle->synchronizing(p.alphabet().parse(word));
      CAPTURE(word);
      CHECK(v.refuted_at.value_or(0) == golden[word]);
    }
  }
}

TEST_CASE("e-containing words survive brute-force refutation") {
  oracle::MinimalLanguage in(oracle::fixed_point({"ab", "a"}, "ab", 4096));
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& w : oracle::language(std::cref(in), "abe", n)) {
      if (w.find('e') != std::string::npos) {
        CAPTURE(w);
        CHECK(oracle::refuting_k(std::cref(in), "abe", w, 4) == 0);
      }
    }
  }
}
