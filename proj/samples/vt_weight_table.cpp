// Prints the weight distribution of VT_b(n) for every residue b, computed
// from the Ramanujan-sum closed form.
//
//   vt_weight_table [n]

#include "ccodes/ccodes.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  const std::uint64_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 8;
  if (n == 0) {
    std::cerr << "n must be positive\n";
    return 2;
  }
  std::cout << "VT_b(" << n << ")\n";
  for (std::uint64_t b = 0; b <= n; ++b) {
    const auto w = ccodes::vt_weight_enumerator_closed(n, b);
    std::cout << "  b=" << b << "  |C|=" << w.size() << "  W(z) = " << w.polynomial() << '\n';
  }
  return 0;
}
