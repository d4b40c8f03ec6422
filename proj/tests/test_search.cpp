#include <catch_amalgamated.hpp>

#include "schur_rainbow/io.hpp"
#include "schur_rainbow/search.hpp"

using namespace schur_rainbow;

namespace {

SearchOptions opts(Objective o, Mode mode, bool allow_empty = false, bool all = true) {
  SearchOptions s;
  s.objective = o;
  s.mode = mode;
  s.allow_empty = allow_empty;
  s.enumerate_all = all;
  return s;
}

std::vector<std::string> keys(const std::vector<Family>& fams) {
  std::vector<std::string> out;
  for (const auto& f : fams) out.push_back(canonical_multiset(f).to_string());
  return out;
}

}  // namespace

TEST_CASE("full search at (5,2,3)", "[search]") {
  const Problem p(5, 2, 3);
  const auto sum = search_max(p, opts(Objective::Sum, Mode::Full));
  CHECK(sum.optimum == BigInt(9));
  REQUIRE(sum.maximizers);
  CHECK(keys(*sum.maximizers) ==
        std::vector<std::string>{"{1,3,5}|{1,3,5}|{1,3,5}", "{3,4,5}|{3,4,5}|{3,4,5}"});

  const auto empty_ok = search_max(p, opts(Objective::Sum, Mode::Full, true));
  CHECK(empty_ok.optimum == BigInt(10));
  CHECK(keys(*empty_ok.maximizers) == std::vector<std::string>{"{1,2,3,4,5}|{1,2,3,4,5}|{}"});

  const auto prod = search_max(p, opts(Objective::Product, Mode::Full));
  CHECK(prod.optimum == BigInt(27));
  CHECK(keys(*prod.maximizers) == keys(*sum.maximizers));
}

TEST_CASE("pruning does not change results", "[search]") {
  for (const auto& p : {Problem(4, 2, 3), Problem(5, 2, 3), Problem(4, 3, 4), Problem(3, 2, 4)}) {
    for (auto o : {Objective::Sum, Objective::Product}) {
      for (bool allow_empty : {false, true}) {
        auto with = opts(o, Mode::Full, allow_empty);
        auto without = with;
        without.prune = false;
        const auto a = search_max(p, with);
        const auto b = search_max(p, without);
        CHECK(a.optimum == b.optimum);
        CHECK(*a.maximizers == *b.maximizers);
        CHECK(b.families_examined == (std::uint64_t{1} << (p.k() * p.n())));
        CHECK(a.families_examined < b.families_examined);
      }
    }
  }
}

TEST_CASE("nested mode agrees with full mode on the sum optimum", "[search]") {
  for (const auto& p : {Problem(3, 2, 3), Problem(4, 2, 3), Problem(5, 2, 3), Problem(6, 2, 3),
                        Problem(4, 3, 4), Problem(5, 3, 4), Problem(4, 2, 4)}) {
    for (bool allow_empty : {false, true}) {
      const auto full = search_max(p, opts(Objective::Sum, Mode::Full, allow_empty));
      const auto nested = search_max(p, opts(Objective::Sum, Mode::Nested, allow_empty));
      CHECK(full.optimum == nested.optimum);
      CHECK(*full.maximizers == *nested.maximizers);
    }
  }
  auto no_prune = opts(Objective::Sum, Mode::Nested);
  no_prune.prune = false;
  const auto unpruned = search_max(Problem(5, 2, 3), no_prune);
  CHECK(unpruned.families_examined == 4 * 4 * 4 * 4 * 4);
  CHECK(unpruned.optimum == BigInt(9));
}

TEST_CASE("search outside the closed-form hypotheses still runs", "[search]") {
  // k = m: no rainbow solution is possible, every set can be [n].
  const auto r = search_max(Problem(3, 2, 2), opts(Objective::Sum, Mode::Full));
  CHECK(r.optimum == BigInt(6));
}

TEST_CASE("search contract errors and budget refusal", "[search]") {
  CHECK_THROWS_AS(search_max(Problem(5, 2, 3), opts(Objective::Product, Mode::Nested)),
                  ContractError);
  auto tight = opts(Objective::Sum, Mode::Full);
  tight.budget = 1000;
  try {
    search_max(Problem(5, 2, 3), tight);
    FAIL("expected refusal");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required == BigInt(1) << 15);
  }
}

TEST_CASE("reports are identical for any worker count", "[search]") {
  const Problem p(6, 2, 3);
  std::string first;
  for (int w : {1, 3, 8}) {
    auto o = opts(Objective::Sum, Mode::Full);
    o.workers = w;
    const auto text = report_to_json(search_max(p, o), false).dump();
    if (first.empty()) first = text;
    CHECK(text == first);
  }
}

TEST_CASE("assume_theorem reaches the same optimum with fewer families", "[search]") {
  const Problem p(6, 2, 3);
  auto plain = opts(Objective::Sum, Mode::Full);
  auto assumed = plain;
  assumed.assume_theorem = true;
  const auto a = search_max(p, plain);
  const auto b = search_max(p, assumed);
  CHECK(a.optimum == b.optimum);
  CHECK(*a.maximizers == *b.maximizers);
  CHECK(b.families_examined <= a.families_examined);
}

TEST_CASE("check_theorem rows", "[search]") {
  const auto rows = check_theorem({2, 3, 3, 6}, opts(Objective::Sum, Mode::Full));
  REQUIRE(rows.size() == 4);
  const std::vector<int> expected{6, 7, 9, 10};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].report.optimum == BigInt(expected[i]));
    CHECK(rows[i].match);
    CHECK(rows[i].maximizers_match == true);
    CHECK(rows[i].pass());
  }
  const auto product = check_theorem({2, 3, 5, 5}, opts(Objective::Product, Mode::Full));
  CHECK(product[0].match);
  CHECK_FALSE(product[0].printed_match);
  CHECK(*product[0].printed_bound == 243);

  CHECK_THROWS_AS(check_theorem({2, 3, 2, 4}, opts(Objective::Sum, Mode::Full)), DomainError);
}
