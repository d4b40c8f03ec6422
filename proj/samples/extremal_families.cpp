// Lists the extremal families for one parameter choice and checks each one.
//
//   sample_extremal_families 6 3 4

#include <cstdlib>
#include <iostream>

#include "schur_rainbow/schur_rainbow.hpp"

using namespace schur_rainbow;

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 6;
  const int m = argc > 2 ? std::atoi(argv[2]) : 3;
  const int k = argc > 3 ? std::atoi(argv[3]) : 4;
  const Problem p(n, m, k);

  std::cout << "n=" << n << " m=" << m << " k=" << k << "  sum bound " << sum_bound(p) << '\n';
  for (const auto& f : enumerate_theorem_families(p, true)) {
    const auto stats = family_stats(f);
    std::cout << "  " << canonical_multiset(f).to_string() << "  total " << stats.total
              << (find_rainbow(f) ? "  HAS RAINBOW" : "  rainbow-free") << '\n';
  }
}
