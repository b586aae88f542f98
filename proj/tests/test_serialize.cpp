#include "doctest.h"

#include <nlohmann/json.hpp>

#include "subshift/error.hpp"
#include "subshift/serialize.hpp"
#include "subshift/zoo.hpp"

using namespace subshift;

TEST_CASE("every zoo entry round-trips through subshift/v1") {
  for (auto const& name : {"full:2", "golden_mean", "even", "charge_constrained:3", "anbn", "gicar",
                           "example_3_6", "minimal:fibonacci", "minimal:thue_morse"}) {
    auto p = zoo::get_shift(name).presentation;
    std::string text = export_shift(p);
    auto j = nlohmann::json::parse(text);
    CHECK(j["schema"] == "subshift/v1");
    CHECK(j["kind"] == std::string(p.kind()));
    auto back = import_shift(text);
    CHECK(back.kind() == p.kind());
    CHECK(back.alphabet() == p.alphabet());
    CHECK(export_shift(back) == text);
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(enumerate_language(back, n).words == enumerate_language(p, n).words);
    }
  }
}

TEST_CASE("hand-written documents") {
  auto p = import_shift(R"({"schema": "subshift/v1", "alphabet": ["0", "1"], "kind": "graph",
    "graph": {"vertices": ["x", "y"], "edges": [["x", "x", "0"], ["x", "y", "1"], ["y", "x", "0"]]}})");
  CHECK(p.kind() == "graph");
  CHECK(enumerate_language(p, 2).words.size() == 3);
  auto f = import_shift(R"({"schema": "subshift/v1", "alphabet": ["0", "1"], "kind": "forbidden",
    "forbidden": [["1", "1"]]})");
  CHECK(enumerate_language(f, 3).words.size() == 5);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(import_shift("not json"), InvalidArgument);
  CHECK_THROWS_AS(import_shift(R"({"schema": "subshift/v2"})"), InvalidArgument);
  CHECK_THROWS_AS(import_shift(R"({"schema": "subshift/v1", "alphabet": ["0"], "kind": "other"})"),
                  InvalidArgument);
  CHECK_THROWS_AS(import_shift(R"({"schema": "subshift/v1", "alphabet": ["0"], "kind": "forbidden",
    "forbidden": [["2"]]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(import_shift(R"({"schema": "subshift/v1", "alphabet": ["0"], "kind": "family",
    "family": {"name": "even"}})"),
                  InvalidArgument);
}

TEST_CASE("ksummary and classification JSON") {
  KSummary k;
  k.first_level = 1;
  k.rank_sequence = {5, 5};
  k.eventual_rank = 5;
  k.eventual_level = 1;
  k.torsion_note = "free";
  k.stationary = StationaryPart{IntMatrix{{1, 1}, {1, 0}}, BigInt(-1), true};
  auto j = nlohmann::json::parse(export_ksummary(k));
  CHECK(j["schema"] == "ksummary/v1");
  CHECK(j["stationary"]["determinant"] == -1);
  CHECK(j["stationary"]["matrix"][0][1] == 1);
  CHECK(export_classification({"0001", true, 0}) == R"({"sync":true,"word":"0001"})");
  CHECK(export_classification({"ab", std::nullopt, 8}) ==
        R"({"sync":"consistent-up-to-8","word":"ab"})");
}
