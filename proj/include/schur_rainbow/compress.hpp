#pragma once

// Compression of a family into nested layers B_1 ⊇ B_2 ⊇ ... ⊇ B_k, where
// B_i holds the elements lying in at least i of the original sets, and the
// greedy map carrying a rainbow solution of the layers back to the original
// family.

#include <algorithm>
#include <numeric>
#include <vector>

#include "schur_rainbow/core.hpp"
#include "schur_rainbow/rainbow.hpp"

namespace schur_rainbow {

inline Family compress(const Family& f) {
  const int n = f.problem().n();
  std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& s : f.sets()) s.for_each([&](int x) { ++mult[static_cast<std::size_t>(x)]; });

  std::vector<IntSet> layers(static_cast<std::size_t>(f.k()), IntSet(n));
  for (int x = 1; x <= n; ++x) {
    for (int i = 0; i < mult[static_cast<std::size_t>(x)]; ++i) {
      layers[static_cast<std::size_t>(i)].insert(x);
    }
  }
  return Family(f.problem(), std::move(layers));
}

// Lifts a witness of compress(f) to one of f. Entries are processed in
// increasing layer index; an element of layer i lies in at least i original
// sets and fewer than i are used by then, so an unused one always exists.
// Ties go to the smallest original index.
inline Witness lift_witness(const Family& f, const Witness& layered) {
  const Family layers = compress(f);
  if (!verify_witness(layers, layered)) {
    throw ContractError("lift_witness: witness is not valid for the compressed family");
  }

  struct Item {
    WitnessEntry entry;
    bool is_target;
  };
  std::vector<Item> items;
  for (const auto& e : layered.sources) items.push_back({e, false});
  items.push_back({layered.target, true});
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.entry.set_index < b.entry.set_index; });

  std::vector<bool> used(static_cast<std::size_t>(f.k()) + 1, false);
  Witness out;
  for (const auto& item : items) {
    int chosen = 0;
    for (int j = 1; j <= f.k(); ++j) {
      if (!used[static_cast<std::size_t>(j)] && f.set(j).contains(item.entry.value)) {
        chosen = j;
        break;
      }
    }
    if (chosen == 0) {
      throw ContractError("lift_witness: no unused set contains " +
                          std::to_string(item.entry.value));
    }
    used[static_cast<std::size_t>(chosen)] = true;
    const WitnessEntry lifted{chosen, item.entry.value};
    if (item.is_target) {
      out.target = lifted;
    } else {
      out.sources.push_back(lifted);
    }
  }
  std::sort(out.sources.begin(), out.sources.end());
  return out;
}

}  // namespace schur_rainbow
