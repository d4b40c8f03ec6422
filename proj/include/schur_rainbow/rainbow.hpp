#pragma once

// Sumsets and rainbow-solution detection for x_1 + ... + x_m = x_{m+1}:
// each variable must be drawn from a different set of the family. Values
// may repeat across sets; set indices may not.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "schur_rainbow/core.hpp"

namespace schur_rainbow {

struct WitnessEntry {
  int set_index = 0;  // 1-based
  int value = 0;

  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
  friend auto operator<=>(const WitnessEntry&, const WitnessEntry&) = default;
};

// A concrete rainbow solution; sources are kept sorted by set index.
struct Witness {
  std::vector<WitnessEntry> sources;
  WitnessEntry target;

  std::vector<int> source_indices() const {
    std::vector<int> out;
    for (const auto& e : sources) out.push_back(e.set_index);
    return out;
  }

  std::vector<int> source_values() const {
    std::vector<int> out;
    for (const auto& e : sources) out.push_back(e.value);
    return out;
  }

  friend bool operator==(const Witness&, const Witness&) = default;

  // (target index, target value, source indices, source values).
  friend bool operator<(const Witness& a, const Witness& b) {
    return std::make_tuple(a.target.set_index, a.target.value, a.source_indices(),
                           a.source_values()) <
           std::make_tuple(b.target.set_index, b.target.value, b.source_indices(),
                           b.source_values());
  }
};

// {a_1 + ... + a_t}; universe is the sum of the input universes.
inline IntSet iterated_sumset(std::span<const IntSet> sets) {
  if (sets.empty()) throw DomainError("iterated_sumset: empty list");
  int universe = 0;
  for (const auto& s : sets) universe += s.universe_max();
  IntSet acc(universe);
  sets[0].for_each([&](int x) { acc.insert(x); });
  for (std::size_t i = 1; i < sets.size(); ++i) {
    IntSet next(universe);
    sets[i].for_each([&](int b) { next.or_shifted(acc, b); });
    acc = std::move(next);
  }
  return acc;
}

inline bool verify_witness(const Family& f, const Witness& w) {
  const int k = f.k();
  if (static_cast<int>(w.sources.size()) != f.problem().m()) return false;
  std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
  auto take = [&](const WitnessEntry& e) {
    if (e.set_index < 1 || e.set_index > k) return false;
    if (used[static_cast<std::size_t>(e.set_index)]) return false;
    used[static_cast<std::size_t>(e.set_index)] = true;
    return f.set(e.set_index).contains(e.value);
  };
  long long sum = 0;
  for (std::size_t i = 0; i < w.sources.size(); ++i) {
    if (i > 0 && w.sources[i - 1].set_index >= w.sources[i].set_index) return false;
    if (!take(w.sources[i])) return false;
    sum += w.sources[i].value;
  }
  if (!take(w.target)) return false;
  return sum == w.target.value;
}

namespace detail {

// Advance a sorted combination drawn from `pool`; false once exhausted.
inline bool next_combination(std::vector<std::size_t>& pos, std::size_t pool_size) {
  const std::size_t r = pos.size();
  for (std::size_t i = r; i-- > 0;) {
    if (pos[i] < pool_size - r + i) {
      ++pos[i];
      for (std::size_t j = i + 1; j < r; ++j) pos[j] = pos[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Memoized sumsets over subsets of set indices (bit i = set i, 0-based),
// truncated to [1, n] since a target never exceeds n. Each subset's sumset
// extends the sumset of the subset without its highest index.
class SubsetSumsets {
 public:
  explicit SubsetSumsets(const Family& f) : family_(f) {
    if (f.k() > 32) throw DomainError("rainbow detection supports k <= 32");
  }

  const IntSet& get(std::uint32_t subset) {
    if (auto it = memo_.find(subset); it != memo_.end()) return it->second;
    const int top = 31 - std::countl_zero(subset);
    const auto& top_set = family_.sets()[static_cast<std::size_t>(top)];
    const std::uint32_t rest = subset & ~(std::uint32_t{1} << top);
    IntSet out(family_.problem().n());
    if (rest == 0) {
      out = top_set;
    } else {
      const IntSet& base = get(rest);
      top_set.for_each([&](int a) { out.or_shifted(base, a); });
    }
    return memo_.emplace(subset, std::move(out)).first->second;
  }

 private:
  const Family& family_;
  std::unordered_map<std::uint32_t, IntSet> memo_;
};

}  // namespace detail

// Returns the least witness in Witness order, or nothing if F is rainbow-free.
inline std::optional<Witness> find_rainbow(const Family& f) {
  const int k = f.k();
  const int m = f.problem().m();
  if (k < m + 1) return std::nullopt;
  detail::SubsetSumsets sums(f);

  for (int t = 0; t < k; ++t) {
    const IntSet& target_set = f.sets()[static_cast<std::size_t>(t)];
    if (target_set.empty()) continue;
    std::vector<int> others;
    for (int i = 0; i < k; ++i) {
      if (i != t) others.push_back(i);
    }
    std::vector<std::size_t> pos(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;

    std::optional<int> best_value;
    std::uint32_t best_subset = 0;
    do {
      std::uint32_t subset = 0;
      for (auto p : pos) subset |= std::uint32_t{1} << others[p];
      if (auto v = sums.get(subset).first_common(target_set); v && (!best_value || *v < *best_value)) {
        best_value = v;
        best_subset = subset;
      }
    } while (detail::next_combination(pos, others.size()));
    if (!best_value) continue;

    // Lexicographically least source values for the chosen subset.
    Witness w;
    w.target = {t + 1, *best_value};
    int remaining = *best_value;
    std::uint32_t rest = best_subset;
    while (rest != 0) {
      const int idx = std::countr_zero(rest);
      rest &= rest - 1;
      const IntSet& s = f.sets()[static_cast<std::size_t>(idx)];
      int chosen = 0;
      if (rest == 0) {
        chosen = remaining;
      } else {
        const IntSet& tail = sums.get(rest);
        for (int a : s.elements()) {
          if (a < remaining && tail.contains(remaining - a)) {
            chosen = a;
            break;
          }
        }
      }
      w.sources.push_back({idx + 1, chosen});
      remaining -= chosen;
    }
    return w;
  }
  return std::nullopt;
}

// Brute force over every injective assignment of the m+1 variables to set
// indices and every value tuple; returns the least witness in Witness order.
// Exponential; intended as a test oracle for tiny families.
inline std::optional<Witness> naive_find_rainbow(const Family& f) {
  const int k = f.k();
  const int m = f.problem().m();
  std::optional<Witness> best;
  std::vector<int> idx(static_cast<std::size_t>(m) + 1);
  std::vector<int> val(static_cast<std::size_t>(m) + 1);
  std::vector<bool> used(static_cast<std::size_t>(k), false);

  auto consider = [&] {
    Witness w;
    for (int j = 0; j < m; ++j) w.sources.push_back({idx[j] + 1, val[j]});
    std::sort(w.sources.begin(), w.sources.end());
    w.target = {idx[static_cast<std::size_t>(m)] + 1, val[static_cast<std::size_t>(m)]};
    if (!best || w < *best) best = std::move(w);
  };

  auto assign_values = [&](auto&& self, int j, long long sum) -> void {
    if (sum + (m - j) > f.problem().n()) return;
    if (j == m) {
      const auto& target = f.sets()[static_cast<std::size_t>(idx[static_cast<std::size_t>(m)])];
      if (sum <= f.problem().n() && target.contains(sum)) {
        val[static_cast<std::size_t>(m)] = static_cast<int>(sum);
        consider();
      }
      return;
    }
    for (int v : f.sets()[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])].elements()) {
      val[static_cast<std::size_t>(j)] = v;
      self(self, j + 1, sum + v);
    }
  };

  auto assign_indices = [&](auto&& self, int j) -> void {
    if (j == m + 1) {
      assign_values(assign_values, 0, 0);
      return;
    }
    for (int i = 0; i < k; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      used[static_cast<std::size_t>(i)] = true;
      idx[static_cast<std::size_t>(j)] = i;
      self(self, j + 1);
      used[static_cast<std::size_t>(i)] = false;
    }
  };

  assign_indices(assign_indices, 0);
  return best;
}

}  // namespace schur_rainbow
