#include <catch_amalgamated.hpp>

#include "schur_rainbow/bounds.hpp"
#include "schur_rainbow/rainbow.hpp"

using namespace schur_rainbow;

namespace {

std::vector<std::string> keys(const std::vector<Family>& fams) {
  std::vector<std::string> out;
  for (const auto& f : fams) out.push_back(canonical_multiset(f).to_string());
  return out;
}

}  // namespace

TEST_CASE("sum_bound", "[bounds]") {
  CHECK(sum_bound(Problem(5, 2, 3)) == 9);
  CHECK(sum_bound(Problem(6, 2, 3)) == 10);
  CHECK(sum_bound(Problem(6, 3, 4)) == 18);
  CHECK(sum_bound(Problem(7, 3, 4)) == 21);
  CHECK_THROWS_AS(sum_bound(Problem(5, 2, 2)), DomainError);
  CHECK_THROWS_AS(sum_bound(Problem(2, 2, 3)), DomainError);
}

TEST_CASE("product_bound under both readings", "[bounds]") {
  const Problem p523(5, 2, 3);
  CHECK(product_bound(p523, ProductInterpretation::Corrected) == 27);
  CHECK(product_bound(p523, ProductInterpretation::Printed) == 243);
  const Problem p634(6, 3, 4);
  CHECK(product_bound(p634, ProductInterpretation::Corrected) == 400);
  CHECK(product_bound(p634, ProductInterpretation::Printed) == 25 * 256);
  // Large parameters need arbitrary precision: (61-20)^40 > 2^64.
  CHECK(product_bound(Problem(61, 3, 40), ProductInterpretation::Corrected) > BigInt(1) << 64);
  CHECK_THROWS_AS(product_bound(Problem(3, 3, 4), ProductInterpretation::Corrected), DomainError);
}

TEST_CASE("construct_extremal", "[bounds]") {
  const Problem p623(6, 2, 3);
  const auto suffix = construct_extremal(p623, SuffixIntervals{{3, 4}});
  CHECK(suffix == Family::from_lists(6, 2, {{3, 4, 5, 6}, {4, 5, 6}, {4, 5, 6}}));
  CHECK(family_stats(suffix).total == 10);

  const auto special = construct_extremal(p623, SpecialEven{});
  CHECK(special == Family::from_lists(6, 2, {{3, 4, 5, 6}, {3, 4, 5, 6}, {4, 5}}));
  CHECK(family_stats(special).total == 10);

  const auto odds = construct_extremal(Problem(5, 2, 3), OddsAll{});
  CHECK(odds == Family::from_lists(5, 2, {{1, 3, 5}, {1, 3, 5}, {1, 3, 5}}));
  CHECK(family_stats(odds).total == 9);

  const auto trivial = construct_extremal(Problem(5, 2, 3), TrivialWithEmpty{});
  CHECK(trivial == Family::from_lists(5, 2, {{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}, {}}));
}

TEST_CASE("construct_extremal rejects mismatched classes", "[bounds]") {
  const Problem p623(6, 2, 3);
  CHECK_THROWS_AS(construct_extremal(p623, OddsAll{}), DomainError);
  CHECK_THROWS_AS(construct_extremal(Problem(7, 2, 3), SpecialEven{}), DomainError);
  CHECK_THROWS_AS(construct_extremal(Problem(6, 2, 4), SpecialEven{}), DomainError);
  CHECK_THROWS_AS(construct_extremal(p623, SuffixIntervals{{3, 3}}), DomainError);
  CHECK_THROWS_AS(construct_extremal(p623, SuffixIntervals{{2, 5}}), DomainError);
  CHECK_THROWS_AS(construct_extremal(p623, SuffixIntervals{{4, 3}}), DomainError);
  CHECK_THROWS_AS(construct_extremal(p623, SuffixIntervals{{7}}), DomainError);
}

TEST_CASE("enumerate_theorem_families", "[bounds]") {
  CHECK(keys(enumerate_theorem_families(Problem(5, 2, 3), false)) ==
        std::vector<std::string>{"{1,3,5}|{1,3,5}|{1,3,5}", "{3,4,5}|{3,4,5}|{3,4,5}"});
  CHECK(keys(enumerate_theorem_families(Problem(6, 2, 3), false)) ==
        std::vector<std::string>{"{3,4,5,6}|{3,4,5,6}|{4,5}", "{3,4,5,6}|{4,5,6}|{4,5,6}"});
  CHECK(keys(enumerate_theorem_families(Problem(6, 3, 4), false)) ==
        std::vector<std::string>{"{1,2,3,4,5,6}|{3,4,5,6}|{3,4,5,6}|{3,4,5,6}",
                                 "{2,3,4,5,6}|{2,3,4,5,6}|{2,3,4,5,6}|{3,4,5}",
                                 "{2,3,4,5,6}|{2,3,4,5,6}|{3,4,5,6}|{3,4,5,6}"});
  CHECK(enumerate_theorem_families(Problem(5, 2, 3), true).size() == 3);
}

TEST_CASE("classify", "[bounds]") {
  const auto c = classify(Family::from_lists(6, 2, {{4, 5, 6}, {3, 4, 5, 6}, {4, 5, 6}}));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == ExtremalClass{SuffixIntervals{{3, 4}}});

  const auto not_extremal = Family::from_lists(6, 2, {{3, 4, 5, 6}, {3, 4, 5, 6}, {3, 4, 5, 6}});
  CHECK(classify(not_extremal).empty());
  CHECK(naive_find_rainbow(not_extremal));

  const auto odd = classify(Family::from_lists(5, 2, {{1, 3, 5}, {1, 3, 5}, {1, 3, 5}}));
  REQUIRE(odd.size() == 1);
  CHECK(std::holds_alternative<OddsAll>(odd[0]));

  CHECK(classify(Family::from_lists(3, 2, {{1}, {2}})).empty());
}

TEST_CASE("extremal grid: rainbow-free, bound-attaining, classify round trip", "[bounds][property]") {
  for (int m = 2; m <= 3; ++m) {
    for (int k = m + 1; k <= m + 3; ++k) {
      for (int n = m + 1; n <= 12; ++n) {
        const Problem p(n, m, k);
        const long long bound = sum_bound(p);
        CHECK(bound == static_cast<long long>(k) * (n - p.q()) + m - p.r() - 1);
        for (const auto& f : enumerate_theorem_families(p, false)) {
          CHECK_FALSE(find_rainbow(f));
          CHECK(family_stats(f).total == bound);
        }
        for (const auto& c : theorem_classes(p, true)) {
          const auto f = construct_extremal(p, c);
          const auto back = classify(f);
          CHECK(std::find(back.begin(), back.end(), c) != back.end());
          if (const auto* s = std::get_if<SuffixIntervals>(&c)) {
            long long total = static_cast<long long>(k - m) * (n - p.q());
            for (int t : s->thresholds) total += n - t + 1;
            CHECK(total == bound);
          }
        }
        const long long trivial = static_cast<long long>(m) * n;
        // Each set beyond m+1 adds n-q to the bound, so "trivial wins iff
        // q >= m" only holds at k = m+1.
        CHECK(trivial - bound == p.q() + 1 - m - static_cast<long long>(k - m - 1) * (n - p.q()));
        if (k == m + 1) CHECK((trivial > bound) == (p.q() >= m));
        CHECK(family_stats(construct_extremal(p, TrivialWithEmpty{})).total == trivial);
        CHECK_FALSE(find_rainbow(construct_extremal(p, TrivialWithEmpty{})));
      }
    }
  }
}
