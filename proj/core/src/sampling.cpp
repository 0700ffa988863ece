#include "heisgeo/sampling.hpp"

namespace heisgeo {

double halton(std::uint64_t index, unsigned base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * (index % base);
    index /= base;
    f /= base;
  }
  return result;
}

Point2 halton2(std::uint64_t index, const Domain2& dom) {
  return {dom.x_min + dom.width() * halton(index, 2),
          dom.y_min + dom.height() * halton(index, 3)};
}

std::mt19937_64 seeded_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>{lo, hi}(rng);
}

Jet2 random_jet(std::mt19937_64& rng, double max_abs) {
  std::uniform_real_distribution<double> d{-max_abs, max_abs};
  return {d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
}

}  // namespace heisgeo
