// Renders the staircase banding of S(N) on [0, beta_3) as ASCII: one row per
// unit cell, with the removed subinterval shown as dots. The hole position is
// constant within a block and steps cyclically from block to block, which is
// what makes every arithmetic progression eventually fall into a hole.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>

#include "apfree/apfree.hpp"

int main() {
  using namespace apfree;
  const std::int64_t n = 3;
  const int width = 30;  // characters per unit interval

  std::cout << "S(" << n << ") cells on [0, " << beta(n, 3).str() << "):\n\n";
  integer limit = beta(n, 3);
  for (integer m = 0; m < limit; ++m) {
    block_info blk = block_index(n, m);
    std::string bar(width, '#');
    int lo = static_cast<int>(blk.residue * width / n);
    int hi = static_cast<int>((blk.residue + 1) * width / n);
    for (int i = lo; i < hi; ++i) bar[i] = '.';
    std::cout << "m=" << std::setw(2) << m.str() << "  block " << blk.level << "  hole "
              << blk.residue << "/" << n << "  [" << bar << ")\n";
    if (m + 1 == blk.beta_k1 && m + 1 < limit)
      std::cout << std::string(18, ' ') << "--- block boundary at " << blk.beta_k1.str()
                << " ---\n";
  }

  auto trace = window_rational(set_spec::make_basic(n), rational(0), rational(3));
  std::cout << "\nExact trace on [0, 3): " << trace << "\n";
  std::cout << "Measure: " << trace.measure().str() << " (per unit cell: " << (1 - 1.0 / n)
            << ")\n";
  return 0;
}
