#pragma once

// Exhaustive recomputation of optima over rainbow-free families.
//
// Full mode walks all 2^(k*n) families in lexicographic order of the
// concatenated characteristic vectors (A_1 bits 1..n, then A_2, ...).
// Nested mode walks multiplicity vectors c: [n] -> {0..k} lexicographically,
// the family being B_i = {x : c(x) >= i}; that space holds the sum optimum.
//
// The space is cut into work units by a fixed-length prefix that does not
// depend on the worker count; units are folded in prefix order, so reports
// are identical for any number of workers.
//
// Pruning (on by default) is verification-grade:
//   - a partial family that already has a rainbow solution is dropped,
//     since adding elements never destroys one;
//   - a branch is dropped when filling every undecided position cannot reach
//     the unit's incumbent, or a completed set is empty when empty sets are
//     disallowed.
// `assume_theorem` additionally drops branches that cannot reach the closed
// form. It presupposes the result being checked and is off by default.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "schur_rainbow/bounds.hpp"
#include "schur_rainbow/core.hpp"
#include "schur_rainbow/rainbow.hpp"

namespace schur_rainbow {

enum class Objective { Sum, Product };
enum class Mode { Full, Nested };

inline std::string to_string(Objective o) { return o == Objective::Sum ? "sum" : "product"; }
inline std::string to_string(Mode m) { return m == Mode::Full ? "full" : "nested"; }

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(BigInt required_budget, std::uint64_t budget)
      : std::runtime_error("search space of " + required_budget.str() +
                           " families exceeds budget " + std::to_string(budget)),
        required(std::move(required_budget)) {}
  BigInt required;
};

struct SearchOptions {
  Objective objective = Objective::Sum;
  Mode mode = Mode::Full;
  bool allow_empty = false;
  bool enumerate_all = false;
  int workers = 1;
  std::uint64_t budget = kDefaultBudget;
  bool prune = true;
  bool assume_theorem = false;
};

struct SearchReport {
  Problem problem;
  SearchOptions options;
  std::optional<BigInt> optimum;  // absent only if nothing reached the assumed floor
  std::optional<std::vector<Family>> maximizers;
  std::uint64_t families_examined = 0;
  std::uint64_t subtrees_pruned = 0;
  std::chrono::nanoseconds elapsed{0};
};

// 2^(k*n) for full mode, (k+1)^n for nested mode.
inline BigInt search_space_size(const Problem& p, Mode mode) {
  BigInt out = 1;
  if (mode == Mode::Full) {
    for (int i = 0; i < p.k() * p.n(); ++i) out *= 2;
  } else {
    for (int i = 0; i < p.n(); ++i) out *= (p.k() + 1);
  }
  return out;
}

namespace detail {

using Mask = std::uint64_t;

// Rainbow detection on masks (bit x = element x, n <= 62): sumsets of all
// index subsets of size <= m, each extending the subset without its top index.
class MaskDetector {
 public:
  MaskDetector(int n, int m, int k)
      : m_(m), k_(k), ground_((Mask{1} << (n + 1)) - 2), sums_(std::size_t{1} << k, 0) {
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << k); ++s) {
      const int c = std::popcount(s);
      if (c <= m) order_.push_back(s);
      if (c == m) full_.push_back(s);
    }
    std::stable_sort(order_.begin(), order_.end(), [](std::uint32_t a, std::uint32_t b) {
      return std::popcount(a) < std::popcount(b);
    });
  }

  bool has_rainbow(const Mask* sets) {
    if (k_ < m_ + 1) return false;
    for (std::uint32_t s : order_) {
      const int top = 31 - std::countl_zero(s);
      const std::uint32_t rest = s & ~(std::uint32_t{1} << top);
      if (rest == 0) {
        sums_[s] = sets[top];
        continue;
      }
      const Mask base = sums_[rest];
      Mask acc = 0;
      if (base != 0) {
        Mask a = sets[top];
        while (a != 0) {
          acc |= base << std::countr_zero(a);
          a &= a - 1;
        }
      }
      sums_[s] = acc & ground_;
    }
    const std::uint32_t all = (std::uint32_t{1} << k_) - 1;
    for (std::uint32_t s : full_) {
      const Mask z = sums_[s];
      if (z == 0) continue;
      std::uint32_t targets = all & ~s;
      while (targets != 0) {
        if ((z & sets[std::countr_zero(targets)]) != 0) return true;
        targets &= targets - 1;
      }
    }
    return false;
  }

 private:
  int m_;
  int k_;
  Mask ground_;
  std::vector<Mask> sums_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> full_;
};

struct MaskKeyLess {
  bool operator()(const std::vector<Mask>& a, const std::vector<Mask>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        canonical_mask_less);
  }
};

struct UnitResult {
  long long best = -1;
  std::set<std::vector<Mask>, MaskKeyLess> maximizers;
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
};

class Walker {
 public:
  Walker(const Problem& p, const SearchOptions& opt, long long floor)
      : p_(p),
        opt_(opt),
        n_(p.n()),
        k_(p.k()),
        floor_(floor),
        detector_(p.n(), p.m(), p.k()),
        sets_(static_cast<std::size_t>(p.k()), 0),
        sizes_(static_cast<std::size_t>(p.k()), 0) {}

  UnitResult run_full(std::uint64_t unit, int prefix_len) {
    reset();
    const int length = n_ * k_;
    for (int j = 0; j < prefix_len; ++j) {
      if ((unit >> (prefix_len - 1 - j)) & 1U) add_full(j);
    }
    if (opt_.prune && detector_.has_rainbow(sets_.data())) {
      ++res_.pruned;
    } else {
      walk_full(prefix_len, length);
    }
    return std::move(res_);
  }

  UnitResult run_nested(std::uint64_t unit, int prefix_len) {
    reset();
    std::vector<int> digits(static_cast<std::size_t>(prefix_len));
    for (int j = prefix_len; j-- > 0;) {
      digits[static_cast<std::size_t>(j)] = static_cast<int>(unit % static_cast<std::uint64_t>(k_ + 1));
      unit /= static_cast<std::uint64_t>(k_ + 1);
    }
    for (int j = 0; j < prefix_len; ++j) add_nested(j + 1, digits[static_cast<std::size_t>(j)]);
    if (opt_.prune && detector_.has_rainbow(sets_.data())) {
      ++res_.pruned;
    } else {
      walk_nested(prefix_len + 1);
    }
    return std::move(res_);
  }

 private:
  void reset() {
    std::fill(sets_.begin(), sets_.end(), 0);
    std::fill(sizes_.begin(), sizes_.end(), 0);
    total_ = 0;
    res_ = UnitResult{};
  }

  void add_full(int pos) {
    const int i = pos / n_;
    sets_[static_cast<std::size_t>(i)] |= Mask{1} << (pos % n_ + 1);
    ++sizes_[static_cast<std::size_t>(i)];
    ++total_;
  }

  void remove_full(int pos) {
    const int i = pos / n_;
    sets_[static_cast<std::size_t>(i)] &= ~(Mask{1} << (pos % n_ + 1));
    --sizes_[static_cast<std::size_t>(i)];
    --total_;
  }

  void add_nested(int x, int mult) {
    for (int i = 0; i < mult; ++i) {
      sets_[static_cast<std::size_t>(i)] |= Mask{1} << x;
      ++sizes_[static_cast<std::size_t>(i)];
    }
    total_ += mult;
  }

  void remove_nested(int x, int mult) {
    for (int i = 0; i < mult; ++i) {
      sets_[static_cast<std::size_t>(i)] &= ~(Mask{1} << x);
      --sizes_[static_cast<std::size_t>(i)];
    }
    total_ -= mult;
  }

  // Best objective value reachable by filling every undecided position;
  // `open[i]` is the number of undecided positions of set i.
  template <class OpenFn>
  long long upper_bound(OpenFn open) const {
    for (int i = 0; i < k_ && !opt_.allow_empty; ++i) {
      if (sizes_[static_cast<std::size_t>(i)] + open(i) == 0) return -1;
    }
    if (opt_.objective == Objective::Sum) {
      long long u = total_;
      for (int i = 0; i < k_; ++i) u += open(i);
      return u;
    }
    long long u = 1;
    for (int i = 0; i < k_; ++i) u *= sizes_[static_cast<std::size_t>(i)] + open(i);
    return u;
  }

  template <class OpenFn>
  bool bound_prunes(OpenFn open) {
    if (!opt_.prune) return false;
    const long long u = upper_bound(open);
    const long long need = std::max(res_.best, floor_);
    const bool cut = u < 0 || u < need || (!opt_.enumerate_all && res_.best >= 0 && u <= res_.best);
    if (cut) ++res_.pruned;
    return cut;
  }

  void walk_full(int depth, int length) {
    if (depth == length) {
      leaf();
      return;
    }
    const auto open = [&](int i) { return std::clamp((i + 1) * n_ - depth, 0, n_); };
    if (bound_prunes(open)) return;
    walk_full(depth + 1, length);
    add_full(depth);
    if (opt_.prune && detector_.has_rainbow(sets_.data())) {
      ++res_.pruned;
    } else {
      walk_full(depth + 1, length);
    }
    remove_full(depth);
  }

  void walk_nested(int x) {
    if (x > n_) {
      leaf();
      return;
    }
    const int open_elems = n_ - x + 1;
    if (bound_prunes([&](int) { return open_elems; })) return;
    for (int c = 0; c <= k_; ++c) {
      add_nested(x, c);
      const bool dead = opt_.prune && c > 0 && detector_.has_rainbow(sets_.data());
      if (!dead) walk_nested(x + 1);
      remove_nested(x, c);
      if (dead) {
        // Larger multiplicities give supersets of this partial family.
        ++res_.pruned;
        break;
      }
    }
  }

  void leaf() {
    ++res_.examined;
    if (!opt_.allow_empty) {
      for (int s : sizes_) {
        if (s == 0) return;
      }
    }
    if (!opt_.prune && detector_.has_rainbow(sets_.data())) return;
    long long v = total_;
    if (opt_.objective == Objective::Product) {
      v = 1;
      for (int s : sizes_) v *= s;
    }
    if (v < floor_) return;
    if (v > res_.best) {
      res_.best = v;
      res_.maximizers.clear();
    }
    if (v == res_.best && opt_.enumerate_all) {
      std::vector<Mask> key = sets_;
      std::sort(key.begin(), key.end(), canonical_mask_less);
      res_.maximizers.insert(std::move(key));
    }
  }

  const Problem& p_;
  const SearchOptions& opt_;
  int n_;
  int k_;
  long long floor_;
  MaskDetector detector_;
  std::vector<Mask> sets_;
  std::vector<int> sizes_;
  long long total_ = 0;
  UnitResult res_;
};

inline long long objective_value(const Family& f, Objective o) {
  const auto st = family_stats(f);
  return o == Objective::Sum ? st.total : static_cast<long long>(st.product);
}

}  // namespace detail

inline SearchReport search_max(const Problem& p, const SearchOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  if (opt.mode == Mode::Nested && opt.objective == Objective::Product) {
    throw ContractError("nested mode only preserves the sum objective");
  }
  const BigInt space = search_space_size(p, opt.mode);
  if (space > opt.budget) throw BudgetExceeded(space, opt.budget);
  if (p.n() > 62 || p.k() > 24) throw DomainError("search supports n <= 62 and k <= 24");

  long long floor = 0;
  if (opt.assume_theorem) {
    if (opt.objective == Objective::Sum) {
      floor = expected_sum_optimum(p, opt.allow_empty);
    } else {
      floor = static_cast<long long>(product_bound(p, ProductInterpretation::Corrected));
    }
  }

  int prefix_len = 0;
  std::uint64_t units = 1;
  if (opt.mode == Mode::Full) {
    prefix_len = std::min(p.k() * p.n(), 12);
    units = std::uint64_t{1} << prefix_len;
  } else {
    const auto base = static_cast<std::uint64_t>(p.k() + 1);
    while (prefix_len < p.n() && units * base <= 4096) {
      units *= base;
      ++prefix_len;
    }
  }

  std::vector<detail::UnitResult> results(units);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    detail::Walker walker(p, opt, floor);
    for (std::uint64_t u = next++; u < units; u = next++) {
      results[u] = opt.mode == Mode::Full ? walker.run_full(u, prefix_len)
                                          : walker.run_nested(u, prefix_len);
    }
  };
  const int workers = static_cast<int>(
      std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(opt.workers, 1)), 1, units));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  SearchReport report{p, opt, std::nullopt, std::nullopt, 0, 0, {}};
  long long best = -1;
  for (const auto& r : results) {
    best = std::max(best, r.best);
    report.families_examined += r.examined;
    report.subtrees_pruned += r.pruned;
  }
  if (best >= 0) report.optimum = BigInt(best);

  if (opt.enumerate_all) {
    std::set<std::vector<detail::Mask>, detail::MaskKeyLess> merged;
    for (auto& r : results) {
      if (r.best == best) merged.insert(r.maximizers.begin(), r.maximizers.end());
    }
    std::vector<Family> fams;
    for (const auto& key : merged) {
      std::vector<IntSet> sets;
      for (auto mask : key) sets.push_back(IntSet::from_mask(p.n(), mask));
      Family f(p, std::move(sets));
      // Re-verify through the independent IntSet path before emitting.
      if (find_rainbow(f) || detail::objective_value(f, opt.objective) != best) {
        throw std::logic_error("search: maximizer failed re-verification: " +
                               canonical_multiset(f).to_string());
      }
      fams.push_back(std::move(f));
    }
    report.maximizers = std::move(fams);
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

// Closed form the search optimum is compared against.
inline BigInt closed_form(const Problem& p, Objective o, bool allow_empty) {
  if (o == Objective::Sum) return BigInt(expected_sum_optimum(p, allow_empty));
  return product_bound(p, ProductInterpretation::Corrected);
}

// Families the closed-form characterization predicts as maximizers.
inline std::vector<Family> expected_maximizers(const Problem& p, Objective o, bool allow_empty) {
  std::vector<Family> out;
  const BigInt target = closed_form(p, o, allow_empty);
  const bool with_trivial = o == Objective::Sum && allow_empty;
  for (auto& f : enumerate_theorem_families(p, with_trivial)) {
    const auto st = family_stats(f);
    const BigInt v = o == Objective::Sum ? BigInt(st.total) : st.product;
    if (v == target) out.push_back(std::move(f));
  }
  return out;
}

struct CheckRow {
  Problem problem;
  SearchReport report;
  BigInt closed_form;
  bool match = false;
  std::optional<BigInt> printed_bound;  // product objective only
  bool printed_match = false;
  std::optional<bool> maximizers_match;

  bool pass() const { return match && maximizers_match.value_or(true); }
};

struct CheckGrid {
  int m = 2;
  int k = 3;
  int n_from = 3;
  int n_to = 3;
};

// One row per n. Every grid point is budget-checked before any search runs.
inline std::vector<CheckRow> check_theorem(const CheckGrid& grid, const SearchOptions& opt) {
  if (grid.n_from > grid.n_to) throw DomainError("check_theorem: empty n range");
  for (int n = grid.n_from; n <= grid.n_to; ++n) {
    const Problem p(n, grid.m, grid.k);
    p.require_hypotheses();
    const BigInt space = search_space_size(p, opt.mode);
    if (space > opt.budget) throw BudgetExceeded(space, opt.budget);
  }
  std::vector<CheckRow> rows;
  for (int n = grid.n_from; n <= grid.n_to; ++n) {
    const Problem p(n, grid.m, grid.k);
    SearchReport report = search_max(p, opt);
    CheckRow row{p, report, closed_form(p, opt.objective, opt.allow_empty), false, std::nullopt,
                 false, std::nullopt};
    row.match = report.optimum && *report.optimum == row.closed_form;
    if (opt.objective == Objective::Product) {
      row.printed_bound = product_bound(p, ProductInterpretation::Printed);
      row.printed_match = report.optimum && *report.optimum == *row.printed_bound;
    }
    if (report.maximizers) {
      const auto expected = expected_maximizers(p, opt.objective, opt.allow_empty);
      row.maximizers_match = expected == *report.maximizers;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace schur_rainbow
