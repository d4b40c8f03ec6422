#include <catch_amalgamated.hpp>

#include <random>

#include "schur_rainbow/io.hpp"
#include "test_helpers.hpp"

using namespace schur_rainbow;

TEST_CASE("family JSON round trip", "[io][property]") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = testing::random_family(rng, 1 + static_cast<int>(rng() % 80), 3,
                                          1 + static_cast<int>(rng() % 6), 0.3);
    const auto text = family_to_json(f).dump();
    CHECK(family_from_json(json::parse(text)) == f);
  }
}

TEST_CASE("family JSON layout", "[io]") {
  const auto f = Family::from_lists(5, 2, {{1, 3, 5}, {}, {2}});
  CHECK(family_to_json(f).dump() == R"({"n":5,"m":2,"sets":[[1,3,5],[],[2]]})");
}

TEST_CASE("family JSON validation", "[io]") {
  CHECK_THROWS_AS(family_from_json(json::parse(R"({"n":5,"m":2,"sets":[[3,1]]})")), FormatError);
  CHECK_THROWS_AS(family_from_json(json::parse(R"({"n":5,"m":2,"sets":[[2,2]]})")), FormatError);
  CHECK_THROWS_AS(family_from_json(json::parse(R"({"n":5,"m":2,"sets":[[6]]})")), RangeError);
  CHECK_THROWS_AS(family_from_json(json::parse(R"({"n":5,"sets":[[1]]})")), FormatError);
  CHECK_THROWS_AS(family_from_json(json::parse(R"({"n":5,"m":2,"sets":[]})")), FormatError);
  CHECK_THROWS_AS(family_from_json(json::parse(R"([1,2])")), FormatError);
  CHECK(family_from_json(json::parse(R"({"n":5,"sets":[[1],[2],[3]]})"), 2).problem() ==
        Problem(5, 2, 3));
}

TEST_CASE("witness and class JSON", "[io]") {
  const Witness w{{{1, 1}, {2, 2}}, {3, 3}};
  CHECK(witness_to_json(w).dump() ==
        R"({"sources":[{"set":1,"value":1},{"set":2,"value":2}],"target":{"set":3,"value":3}})");
  CHECK(class_to_json(SuffixIntervals{{3, 4}}).dump() == R"({"class":"suffix","thresholds":[3,4]})");
  CHECK(class_to_json(OddsAll{}).dump() == R"({"class":"odd"})");
}

TEST_CASE("big integers fall back to strings beyond 64 bits", "[io]") {
  CHECK(big_to_json(BigInt(27)).dump() == "27");
  const BigInt big = BigInt(1) << 70;
  CHECK(big_to_json(big).dump() == "\"" + big.str() + "\"");
}

TEST_CASE("check-theorem CSV columns", "[io]") {
  SearchOptions o;
  o.enumerate_all = true;
  const auto rows = check_theorem({2, 3, 5, 5}, o);
  CHECK(csv_header() == "n,m,k,mode,search_optimum,closed_form,match,maximizers_match,elapsed_ms");
  const auto line = row_to_csv(rows[0]);
  CHECK(line.rfind("5,2,3,full,9,9,true,true,", 0) == 0);
  const auto j = row_to_json(rows[0]);
  CHECK(j["status"] == "match");
}
