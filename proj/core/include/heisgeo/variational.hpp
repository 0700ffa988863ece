#pragma once

#include <random>
#include <vector>

#include "heisgeo/scalar_field.hpp"

// Area functional of graph surfaces and its first and second variations
// under vertical perturbations vanishing on the domain boundary.

namespace heisgeo {

enum class QuadRule {
  midpoint,   // composite midpoint; never evaluates on the boundary
  trapezoid,  // composite trapezoid; requires boundary-evaluable fields
};

// Panel counts must be >= 8 in each direction.
struct QuadratureSpec {
  QuadRule rule = QuadRule::midpoint;
  int n_x = 256;
  int n_y = 256;
};

// A perturbation field h with h = 0 on the boundary of its domain.
// Construction samples the four sides and throws std::invalid_argument
// when |h| exceeds 1e-12 anywhere on them. Holds a non-owning view of h,
// which must outlive the Perturbation.
class Perturbation {
 public:
  Perturbation(const ScalarField& h, const Domain2& dom,
               int boundary_samples = 257);

  const ScalarField& field() const { return *h_; }
  const Domain2& domain() const { return dom_; }

 private:
  const ScalarField* h_;
  Domain2 dom_;
};

// Sum of sine modes c * sin(m pi (x-x0)/Lx) * sin(n pi (y-y0)/Ly); zero on
// the boundary by construction, with exact jets.
class FourierBump final : public ScalarField {
 public:
  struct Mode {
    int m = 1;
    int n = 1;
    double coef = 1.0;
  };

  FourierBump(const Domain2& dom, std::vector<Mode> modes);
  static FourierBump random(std::mt19937_64& rng, const Domain2& dom,
                            int max_mode = 3);

  Jet2 jet_at(double x, double y) const override;
  const Domain2& domain() const { return dom_; }
  // Max |h| on a sampling grid, for admissibility statements.
  double max_abs(int samples_per_axis = 41) const;

 private:
  Domain2 dom_;
  std::vector<Mode> modes_;
};

// Integral of w = sqrt(1 + p^2 + q^2) over dom. Panel contributions are
// accumulated in a fixed row-major order and reduced pairwise, so results
// are bit-reproducible for a fixed spec.
double area(const ScalarField& f, const Domain2& dom,
            const QuadratureSpec& quad = {});

// d/dt area(f + t h) at t = 0: integral of (p h_x + q h_y) / w.
double first_variation(const ScalarField& f, const Perturbation& h,
                       const QuadratureSpec& quad = {});

// d^2/dt^2 area(f + t h) at t = 0:
// integral of [h_x^2 + h_y^2 + (q h_x - p h_y)^2] / w^3.
// The integrand is pointwise nonnegative, so the result is >= 0 for any
// admissible h and vanishes only when h is constant zero.
double second_variation(const ScalarField& f, const Perturbation& h,
                        const QuadratureSpec& quad = {});

}  // namespace heisgeo
