// Prints the first terms of floor(n sqrt 2), their parities, the condition
// vector at a few indices, and writes the walk of 10^5 parity bits as SVG.
#include <fstream>
#include <iostream>

#include "beatty_lab/beatty_lab.hpp"

int main() {
  using namespace beatty_lab;

  for (std::uint64_t n = 1; n <= 10; ++n) std::cout << beatty_sqrt2(Natural{n}) << ' ';
  std::cout << '\n';

  const BitStream bits = parity_bits(100'000);
  for (std::size_t i = 0; i < 10; ++i) std::cout << int{bits[i]};
  std::cout << '\n';

  for (std::uint64_t n : {1, 2, 4}) {
    const auto cv = condition_vector(Natural{n}, true);
    std::cout << "n=" << cv.n << " unanimous=" << cv.unanimous() << " sigma~" << *cv.sigma_decimal << '\n';
  }

  const Walk walk = cloitre_walk(bits);
  const WalkStats stats = walk_stats(walk);
  std::cout << "endpoint (" << stats.endpoint.x << ", " << stats.endpoint.y << "), " << stats.distinct_points
            << " distinct points\n";
  std::ofstream("parity_walk.svg") << render_svg(walk);
}
