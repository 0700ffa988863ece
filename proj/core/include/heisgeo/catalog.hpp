#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heisgeo/scalar_field.hpp"

// Closed-form graph surfaces with exact analytic jets. These are the
// ground-truth inputs for everything else: the solver takes their boundary
// traces, the variational and invariant batteries sample them, and the CLI
// exposes them by name.

namespace heisgeo {

enum class SurfaceId {
  plane,                  // f = a x + b y + c
  hyperbolic_paraboloid,  // f = x y / 2
  saddle_type,            // f = x y / 2 + k [asinh(y) + y sqrt(1+y^2)]
  tilted_product,         // f = 2 k y - x y / 2
  rank1_family,           // f = x y / 2 - (k/2) [y sqrt(1+y^2) + asinh(y)]
  non_minimal_quadratic,  // f = x^2 + y^2
};

struct SurfaceExpected {
  bool is_minimal = false;
  int rank_class = 2;  // rank of the Gauss map: 1 on the degenerate families
  bool is_ruled = false;
};

class CatalogSurface final : public ScalarField {
 public:
  static CatalogSurface plane(double a, double b, double c);
  static CatalogSurface hyperbolic_paraboloid();
  static CatalogSurface saddle_type(double k);
  static CatalogSurface tilted_product(double k);
  static CatalogSurface rank1_family(double k);
  static CatalogSurface non_minimal_quadratic();

  Jet2 jet_at(double x, double y) const override;
  SurfaceExpected expected() const;

  SurfaceId id() const { return id_; }
  // CLI-visible identifier: plane, hparab, saddle, tilted, rank1, quad.
  std::string name() const;
  // Human-readable name with parameters, e.g. "saddle(k=1)".
  std::string describe() const;

  double param_k() const { return k_; }

  // Builds a surface from a CLI identifier and a parameter map (keys
  // "a","b","c" for the plane, "k" for the one-parameter families; missing
  // keys fall back to a=1, b=2, c=3, k=1). Unknown names yield nullopt;
  // non-finite parameters throw std::invalid_argument.
  static std::optional<CatalogSurface> from_name(
      const std::string& name, const std::map<std::string, double>& params);

  // All six surfaces with default parameters, for batteries and tests.
  static std::vector<CatalogSurface> default_set();

 private:
  CatalogSurface(SurfaceId id, double a, double b, double c, double k);

  SurfaceId id_;
  double a_ = 0.0, b_ = 0.0, c_ = 0.0;  // plane coefficients
  double k_ = 0.0;                      // family parameter
};

}  // namespace heisgeo
