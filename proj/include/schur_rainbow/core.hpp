#pragma once

// Ground-set arithmetic shared by every other header: integer sets over
// [1, U], families of k such sets, canonical multiset keys and the
// structural predicates (suffix interval, arithmetic progression).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schur_rainbow {

using BigInt = boost::multiprecision::cpp_int;

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Violated caller contract (e.g. lifting a witness that is not valid).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// Problem parameters (n, m, k) with n = m*q + r, 0 <= r < m.
//
// Construction only requires n >= 1, m >= 2, k >= 1. The stronger
// hypotheses k >= m+1, n >= m+1 under which the closed-form optima hold are
// checked by `satisfies_hypotheses()` and enforced in bounds.hpp.
class Problem {
 public:
  Problem(int n, int m, int k) : n_(n), m_(m), k_(k) {
    if (n < 1) throw DomainError("problem: n must be >= 1, got " + std::to_string(n));
    if (m < 2) throw DomainError("problem: m must be >= 2, got " + std::to_string(m));
    if (k < 1) throw DomainError("problem: k must be >= 1, got " + std::to_string(k));
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int k() const noexcept { return k_; }
  int q() const noexcept { return n_ / m_; }
  int r() const noexcept { return n_ % m_; }

  bool satisfies_hypotheses() const noexcept { return k_ >= m_ + 1 && n_ >= m_ + 1; }

  void require_hypotheses() const {
    if (!satisfies_hypotheses()) {
      throw DomainError("problem (n=" + std::to_string(n_) + ", m=" + std::to_string(m_) +
                        ", k=" + std::to_string(k_) + ") needs m >= 2, k >= m+1, n >= m+1");
    }
  }

  friend bool operator==(const Problem&, const Problem&) = default;

 private:
  int n_;
  int m_;
  int k_;
};

// A finite subset of [1, U] stored as a characteristic bit vector. Bit x
// holds element x; bit 0 is never set, so a left shift by b maps A to A + b.
class IntSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  IntSet() : IntSet(1) {}

  explicit IntSet(int universe_max) : universe_max_(universe_max) {
    if (universe_max < 1) {
      throw RangeError("intset: universe_max must be >= 1, got " + std::to_string(universe_max));
    }
    words_.assign(static_cast<std::size_t>(universe_max / kWordBits + 1), 0);
  }

  // [lo, hi] clipped to [1, U]; empty when lo > hi.
  static IntSet interval(int universe_max, int lo, int hi) {
    IntSet s(universe_max);
    for (int x = std::max(lo, 1); x <= std::min(hi, universe_max); ++x) s.set_bit(x);
    return s;
  }

  // Build from a raw low word (bit x = element x); bits above U are dropped.
  static IntSet from_mask(int universe_max, Word mask) {
    IntSet s(universe_max);
    s.words_[0] = mask & ~Word{1};
    s.trim();
    return s;
  }

  int universe_max() const noexcept { return universe_max_; }

  bool contains(long long x) const noexcept {
    if (x < 1 || x > universe_max_) return false;
    return (words_[static_cast<std::size_t>(x / kWordBits)] >> (x % kWordBits)) & 1U;
  }

  void insert(int x) {
    if (x < 1 || x > universe_max_) {
      throw RangeError("intset: element " + std::to_string(x) + " outside [1, " +
                       std::to_string(universe_max_) + "]");
    }
    set_bit(x);
  }

  void erase(int x) noexcept {
    if (x < 1 || x > universe_max_) return;
    words_[static_cast<std::size_t>(x / kWordBits)] &= ~(Word{1} << (x % kWordBits));
  }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  std::optional<int> min() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
    }
    return std::nullopt;
  }

  std::optional<int> max() const noexcept {
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != 0) {
        return static_cast<int>(i) * kWordBits + (kWordBits - 1 - std::countl_zero(words_[i]));
      }
    }
    return std::nullopt;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int x) { out.push_back(x); });
    return out;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        fn(static_cast<int>(i) * kWordBits + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::span<const Word> words() const noexcept { return words_; }

  // Low word, valid as a complete mask only when U < 64.
  Word low_word() const noexcept { return words_[0]; }

  // this |= (other << shift), truncated to [1, U].
  void or_shifted(const IntSet& other, int shift) {
    const std::size_t word_shift = static_cast<std::size_t>(shift / kWordBits);
    const int bit_shift = shift % kWordBits;
    const std::size_t nw = words_.size();
    for (std::size_t j = 0; j < other.words_.size(); ++j) {
      const Word w = other.words_[j];
      if (w == 0) continue;
      const std::size_t lo = j + word_shift;
      if (lo < nw) words_[lo] |= w << bit_shift;
      if (bit_shift != 0 && lo + 1 < nw) words_[lo + 1] |= w >> (kWordBits - bit_shift);
    }
    trim();
  }

  bool intersects(const IntSet& other) const noexcept {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  bool is_subset_of(const IntSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const Word o = i < other.words_.size() ? other.words_[i] : 0;
      if ((words_[i] & ~o) != 0) return false;
    }
    return true;
  }

  // Smallest element of (this ∩ other), if any.
  std::optional<int> first_common(const IntSet& other) const noexcept {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const Word w = words_[i] & other.words_[i];
      if (w != 0) return static_cast<int>(i) * kWordBits + std::countr_zero(w);
    }
    return std::nullopt;
  }

  friend bool operator==(const IntSet&, const IntSet&) = default;

 private:
  void set_bit(int x) noexcept {
    words_[static_cast<std::size_t>(x / kWordBits)] |= Word{1} << (x % kWordBits);
  }

  void trim() noexcept {
    words_[0] &= ~Word{1};
    const int top = universe_max_ % kWordBits;
    if (top != kWordBits - 1) words_.back() &= (Word{1} << (top + 1)) - 1;
  }

  int universe_max_;
  std::vector<Word> words_;
};

inline IntSet make_set(int universe_max, std::span<const int> elements) {
  IntSet s(universe_max);
  for (int x : elements) s.insert(x);
  return s;
}

inline IntSet make_set(int universe_max, std::initializer_list<int> elements) {
  return make_set(universe_max, std::span<const int>(elements.begin(), elements.size()));
}

// Returns t when A = [t, U] exactly.
inline std::optional<int> is_suffix_interval(const IntSet& a) {
  const auto lo = a.min();
  if (!lo) return std::nullopt;
  if (*a.max() != a.universe_max()) return std::nullopt;
  if (a.size() != static_cast<std::size_t>(a.universe_max() - *lo + 1)) return std::nullopt;
  return lo;
}

// Common difference of an arithmetic progression. A singleton is compatible
// with every difference and is reported as `any_difference`.
struct ApDifference {
  bool any_difference = false;
  int difference = 0;

  bool compatible_with(const ApDifference& o) const noexcept {
    return any_difference || o.any_difference || difference == o.difference;
  }

  friend bool operator==(const ApDifference&, const ApDifference&) = default;
};

inline std::optional<ApDifference> is_arith_progression(const IntSet& a) {
  if (a.empty()) throw DomainError("is_arith_progression: empty set");
  const auto xs = a.elements();
  if (xs.size() == 1) return ApDifference{true, 0};
  const int d = xs[1] - xs[0];
  for (std::size_t i = 2; i < xs.size(); ++i) {
    if (xs[i] - xs[i - 1] != d) return std::nullopt;
  }
  return ApDifference{false, d};
}

// k sets over the common ground set [1, n], in index order.
class Family {
 public:
  Family(Problem problem, std::vector<IntSet> sets) : problem_(problem), sets_(std::move(sets)) {
    if (static_cast<int>(sets_.size()) != problem_.k()) {
      throw DomainError("family: expected " + std::to_string(problem_.k()) + " sets, got " +
                        std::to_string(sets_.size()));
    }
    for (const auto& s : sets_) {
      if (s.universe_max() != problem_.n()) {
        throw DomainError("family: set universe " + std::to_string(s.universe_max()) +
                          " differs from n = " + std::to_string(problem_.n()));
      }
    }
  }

  // Convenience: element lists, k taken from the list length.
  static Family from_lists(int n, int m, const std::vector<std::vector<int>>& lists) {
    std::vector<IntSet> sets;
    sets.reserve(lists.size());
    for (const auto& l : lists) sets.push_back(make_set(n, l));
    return Family(Problem(n, m, static_cast<int>(lists.size())), std::move(sets));
  }

  const Problem& problem() const noexcept { return problem_; }
  int k() const noexcept { return problem_.k(); }
  const std::vector<IntSet>& sets() const noexcept { return sets_; }

  // 1-based, matching witness indices.
  const IntSet& set(int index) const { return sets_.at(static_cast<std::size_t>(index - 1)); }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  Problem problem_;
  std::vector<IntSet> sets_;
};

struct FamilyStats {
  long long total = 0;
  BigInt product = 0;
  bool nested = false;
  std::map<int, int> multiplicity;
};

inline FamilyStats family_stats(const Family& f) {
  FamilyStats st;
  st.product = 1;
  st.nested = true;
  for (std::size_t i = 0; i < f.sets().size(); ++i) {
    const auto& s = f.sets()[i];
    st.total += static_cast<long long>(s.size());
    st.product *= s.size();
    if (i > 0 && !s.is_subset_of(f.sets()[i - 1])) st.nested = false;
    s.for_each([&](int x) { ++st.multiplicity[x]; });
  }
  return st;
}

// Canonical set order: compare characteristic vectors from element 1
// upward; at the first differing element the set containing it comes first.
// Supersets precede their subsets, and the empty set comes last.
inline bool canonical_set_less(const IntSet& a, const IntSet& b) noexcept {
  if (a.universe_max() != b.universe_max()) return a.universe_max() < b.universe_max();
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    const auto d = wa[i] ^ wb[i];
    if (d != 0) return (wa[i] & (d & (~d + 1))) != 0;
  }
  return false;
}

// Same order on raw masks (bit x = element x).
inline bool canonical_mask_less(std::uint64_t a, std::uint64_t b) noexcept {
  const std::uint64_t d = a ^ b;
  return d != 0 && (a & (d & (~d + 1))) != 0;
}

inline std::string set_to_string(const IntSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int x) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  });
  return out + "}";
}

// Order-insensitive key of a family: its sets sorted in canonical order.
class CanonicalKey {
 public:
  explicit CanonicalKey(std::vector<IntSet> sorted_sets) : sets_(std::move(sorted_sets)) {}

  const std::vector<IntSet>& sets() const noexcept { return sets_; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (i > 0) out += '|';
      out += set_to_string(sets_[i]);
    }
    return out;
  }

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;

  friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) noexcept {
    return std::lexicographical_compare(a.sets_.begin(), a.sets_.end(), b.sets_.begin(),
                                        b.sets_.end(), canonical_set_less);
  }

 private:
  std::vector<IntSet> sets_;
};

inline CanonicalKey canonical_multiset(const Family& f) {
  auto sets = f.sets();
  std::sort(sets.begin(), sets.end(), canonical_set_less);
  return CanonicalKey(std::move(sets));
}

// The family with its sets reordered canonically.
inline Family canonical_family(const Family& f) {
  return Family(f.problem(), canonical_multiset(f).sets());
}

}  // namespace schur_rainbow
