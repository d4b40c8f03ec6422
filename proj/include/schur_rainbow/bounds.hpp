#pragma once

// Closed-form optima for rainbow-free families and the extremal families
// attaining them.
//
// With n = m*q + r, 0 <= r < m, k >= m+1, n >= m+1 and all sets nonempty:
//
//   sum |A_i| <= k(n - q) + m - (r + 1)
//
// attained exactly by
//   - suffix intervals: m sets [t_i, n] with 1 <= t_i <= q+1, sum t_i = n+1,
//     and k-m sets [q+1, n];
//   - special even: k = m+1, r = 0, m sets [q, n] and one set [q+1, n-1];
//   - odds: m = 2, n odd, every set is the odd elements of [n].
// Allowing empty sets adds the trivial family: m copies of [1, n], the rest
// empty (total m*n).

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "schur_rainbow/core.hpp"

namespace schur_rainbow {

struct SuffixIntervals {
  std::vector<int> thresholds;  // nondecreasing, length m
  friend bool operator==(const SuffixIntervals&, const SuffixIntervals&) = default;
};
struct SpecialEven {
  friend bool operator==(const SpecialEven&, const SpecialEven&) = default;
};
struct OddsAll {
  friend bool operator==(const OddsAll&, const OddsAll&) = default;
};
struct TrivialWithEmpty {
  friend bool operator==(const TrivialWithEmpty&, const TrivialWithEmpty&) = default;
};

using ExtremalClass = std::variant<SuffixIntervals, SpecialEven, OddsAll, TrivialWithEmpty>;

inline std::string class_name(const ExtremalClass& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SuffixIntervals>) return "suffix";
        if constexpr (std::is_same_v<T, SpecialEven>) return "special";
        if constexpr (std::is_same_v<T, OddsAll>) return "odd";
        return "trivial";
      },
      c);
}

// Reading of the product bound's second exponent.
enum class ProductInterpretation {
  Printed,    // n - m + (r+1): the exponents do not total k
  Corrected,  // k - m + (r+1): matches the extremal family (m-(r+1) sets [q,n], rest [q+1,n])
};

inline long long sum_bound(const Problem& p) {
  p.require_hypotheses();
  return static_cast<long long>(p.k()) * (p.n() - p.q()) + p.m() - (p.r() + 1);
}

inline BigInt product_bound(const Problem& p, ProductInterpretation interp) {
  p.require_hypotheses();
  const int n = p.n();
  const int m = p.m();
  const int r = p.r();
  const int q = p.q();
  const int first_exp = m - (r + 1);
  const int second_exp = interp == ProductInterpretation::Printed ? n - m + (r + 1)
                                                                  : p.k() - m + (r + 1);
  BigInt out = 1;
  for (int i = 0; i < first_exp; ++i) out *= (n - q + 1);
  for (int i = 0; i < second_exp; ++i) out *= (n - q);
  return out;
}

// Optimum of the sum objective, with or without empty sets.
inline long long expected_sum_optimum(const Problem& p, bool allow_empty) {
  const long long bound = sum_bound(p);
  return allow_empty ? std::max<long long>(bound, static_cast<long long>(p.m()) * p.n()) : bound;
}

inline void validate_class(const Problem& p, const ExtremalClass& c) {
  p.require_hypotheses();
  if (const auto* s = std::get_if<SuffixIntervals>(&c)) {
    if (static_cast<int>(s->thresholds.size()) != p.m()) {
      throw DomainError("suffix class: need exactly m = " + std::to_string(p.m()) + " thresholds");
    }
    long long sum = 0;
    for (std::size_t i = 0; i < s->thresholds.size(); ++i) {
      const int t = s->thresholds[i];
      if (t < 1 || t > p.q() + 1) {
        throw DomainError("suffix class: threshold " + std::to_string(t) + " outside [1, q+1 = " +
                          std::to_string(p.q() + 1) + "]");
      }
      if (i > 0 && s->thresholds[i - 1] > t) {
        throw DomainError("suffix class: thresholds must be nondecreasing");
      }
      sum += t;
    }
    if (sum != p.n() + 1) {
      throw DomainError("suffix class: thresholds sum to " + std::to_string(sum) +
                        ", need n+1 = " + std::to_string(p.n() + 1));
    }
  } else if (std::holds_alternative<SpecialEven>(c)) {
    if (p.r() != 0 || p.k() != p.m() + 1) {
      throw DomainError("special class: needs r = 0 and k = m+1");
    }
  } else if (std::holds_alternative<OddsAll>(c)) {
    if (p.m() != 2 || p.n() % 2 == 0) throw DomainError("odd class: needs m = 2 and n odd");
  }
}

inline Family construct_extremal(const Problem& p, const ExtremalClass& c) {
  validate_class(p, c);
  const int n = p.n();
  const int m = p.m();
  const int k = p.k();
  const int q = p.q();
  std::vector<IntSet> sets;
  sets.reserve(static_cast<std::size_t>(k));

  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SuffixIntervals>) {
          for (int t : v.thresholds) sets.push_back(IntSet::interval(n, t, n));
          for (int i = m; i < k; ++i) sets.push_back(IntSet::interval(n, q + 1, n));
        } else if constexpr (std::is_same_v<T, SpecialEven>) {
          for (int i = 0; i < m; ++i) sets.push_back(IntSet::interval(n, q, n));
          sets.push_back(IntSet::interval(n, q + 1, n - 1));
        } else if constexpr (std::is_same_v<T, OddsAll>) {
          IntSet odds(n);
          for (int x = 1; x <= n; x += 2) odds.insert(x);
          sets.assign(static_cast<std::size_t>(k), odds);
        } else {
          for (int i = 0; i < m; ++i) sets.push_back(IntSet::interval(n, 1, n));
          for (int i = m; i < k; ++i) sets.emplace_back(n);
        }
      },
      c);
  return Family(p, std::move(sets));
}

// Nondecreasing t_1 <= ... <= t_m in [1, q+1] with sum n+1.
inline std::vector<std::vector<int>> threshold_vectors(const Problem& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const int cap = p.q() + 1;
  std::function<void(int, int)> rec = [&](int lo, int remaining) {
    const int slots = p.m() - static_cast<int>(cur.size());
    if (slots == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int t = lo; t <= cap; ++t) {
      if (static_cast<long long>(t) * slots > remaining) break;
      if (static_cast<long long>(cap) * slots < remaining) return;
      cur.push_back(t);
      rec(t, remaining - t);
      cur.pop_back();
    }
  };
  rec(1, p.n() + 1);
  return out;
}

// Every valid class for p, in a fixed order.
inline std::vector<ExtremalClass> theorem_classes(const Problem& p, bool allow_empty) {
  p.require_hypotheses();
  std::vector<ExtremalClass> out;
  for (auto& t : threshold_vectors(p)) out.emplace_back(SuffixIntervals{std::move(t)});
  if (p.r() == 0 && p.k() == p.m() + 1) out.emplace_back(SpecialEven{});
  if (p.m() == 2 && p.n() % 2 == 1) out.emplace_back(OddsAll{});
  if (allow_empty) out.emplace_back(TrivialWithEmpty{});
  return out;
}

// All families generated by the classes, canonicalized, deduplicated and
// sorted by canonical key.
inline std::vector<Family> enumerate_theorem_families(const Problem& p, bool allow_empty) {
  std::vector<Family> out;
  std::set<CanonicalKey> seen;
  for (const auto& c : theorem_classes(p, allow_empty)) {
    Family f = canonical_family(construct_extremal(p, c));
    if (seen.insert(canonical_multiset(f)).second) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Family& a, const Family& b) {
    return canonical_multiset(a) < canonical_multiset(b);
  });
  return out;
}

// Classes whose constructed family equals f as a multiset. Structural only;
// no rainbow check.
inline std::vector<ExtremalClass> classify(const Family& f) {
  const Problem& p = f.problem();
  std::vector<ExtremalClass> out;
  if (!p.satisfies_hypotheses()) return out;
  const CanonicalKey key = canonical_multiset(f);
  auto matches = [&](const ExtremalClass& c) {
    return canonical_multiset(construct_extremal(p, c)) == key;
  };

  std::vector<int> thresholds;
  bool all_suffix = true;
  for (const auto& s : f.sets()) {
    const auto t = is_suffix_interval(s);
    if (!t) {
      all_suffix = false;
      break;
    }
    thresholds.push_back(*t);
  }
  if (all_suffix) {
    std::sort(thresholds.begin(), thresholds.end());
    // k-m copies of q+1 belong to the tail; the rest are t_1..t_m.
    int tail = p.k() - p.m();
    std::vector<int> head;
    for (auto it = thresholds.rbegin(); it != thresholds.rend(); ++it) {
      if (tail > 0 && *it == p.q() + 1) {
        --tail;
      } else {
        head.push_back(*it);
      }
    }
    std::reverse(head.begin(), head.end());
    long long sum = 0;
    for (int t : head) sum += t;
    const bool in_range = std::all_of(head.begin(), head.end(),
                                      [&](int t) { return t >= 1 && t <= p.q() + 1; });
    if (tail == 0 && in_range && sum == p.n() + 1) {
      ExtremalClass c = SuffixIntervals{head};
      if (matches(c)) out.push_back(std::move(c));
    }
  }
  if (p.r() == 0 && p.k() == p.m() + 1 && matches(SpecialEven{})) out.emplace_back(SpecialEven{});
  if (p.m() == 2 && p.n() % 2 == 1 && matches(OddsAll{})) out.emplace_back(OddsAll{});
  if (matches(TrivialWithEmpty{})) out.emplace_back(TrivialWithEmpty{});
  return out;
}

}  // namespace schur_rainbow
