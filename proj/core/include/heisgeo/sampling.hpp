#pragma once

#include <cstdint>
#include <random>

#include "heisgeo/scalar_field.hpp"

// Deterministic point and jet generators used by the invariant batteries.

namespace heisgeo {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Radical-inverse (van der Corput) value of index in the given base.
double halton(std::uint64_t index, unsigned base);

// Low-discrepancy point in dom, bases 2 and 3; index should start at 1.
Point2 halton2(std::uint64_t index, const Domain2& dom);

std::mt19937_64 seeded_rng(std::uint64_t seed);
double uniform_in(std::mt19937_64& rng, double lo, double hi);

// Jet with all derivative entries uniform in [-max_abs, max_abs].
Jet2 random_jet(std::mt19937_64& rng, double max_abs);

}  // namespace heisgeo
