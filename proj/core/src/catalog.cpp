#include "heisgeo/catalog.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace heisgeo {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string("CatalogSurface: parameter ") +
                                name + " is not finite");
  }
}

double param_or(const std::map<std::string, double>& params,
                const std::string& key, double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

CatalogSurface::CatalogSurface(SurfaceId id, double a, double b, double c,
                               double k)
    : id_(id), a_(a), b_(b), c_(c), k_(k) {
  require_finite(a_, "a");
  require_finite(b_, "b");
  require_finite(c_, "c");
  require_finite(k_, "k");
}

CatalogSurface CatalogSurface::plane(double a, double b, double c) {
  return CatalogSurface(SurfaceId::plane, a, b, c, 0.0);
}

CatalogSurface CatalogSurface::hyperbolic_paraboloid() {
  return CatalogSurface(SurfaceId::hyperbolic_paraboloid, 0, 0, 0, 0);
}

CatalogSurface CatalogSurface::saddle_type(double k) {
  return CatalogSurface(SurfaceId::saddle_type, 0, 0, 0, k);
}

CatalogSurface CatalogSurface::tilted_product(double k) {
  return CatalogSurface(SurfaceId::tilted_product, 0, 0, 0, k);
}

CatalogSurface CatalogSurface::rank1_family(double k) {
  return CatalogSurface(SurfaceId::rank1_family, 0, 0, 0, k);
}

CatalogSurface CatalogSurface::non_minimal_quadratic() {
  return CatalogSurface(SurfaceId::non_minimal_quadratic, 0, 0, 0, 0);
}

Jet2 CatalogSurface::jet_at(double x, double y) const {
  switch (id_) {
    case SurfaceId::plane:
      return {a_ * x + b_ * y + c_, a_, b_, 0.0, 0.0, 0.0};
    case SurfaceId::hyperbolic_paraboloid:
      return {0.5 * x * y, 0.5 * y, 0.5 * x, 0.0, 0.5, 0.0};
    case SurfaceId::saddle_type: {
      // asinh(y) instead of log(y + sqrt(1+y^2)): the log form cancels
      // catastrophically for y << 0.
      const double s = std::sqrt(1.0 + y * y);
      const double bracket = std::asinh(y) + y * s;
      return {0.5 * x * y + k_ * bracket,
              0.5 * y,
              0.5 * x + 2.0 * k_ * s,
              0.0,
              0.5,
              2.0 * k_ * y / s};
    }
    case SurfaceId::tilted_product:
      return {2.0 * k_ * y - 0.5 * x * y, -0.5 * y, 2.0 * k_ - 0.5 * x,
              0.0,                        -0.5,     0.0};
    case SurfaceId::rank1_family: {
      const double s = std::sqrt(1.0 + y * y);
      const double bracket = y * s + std::asinh(y);
      return {0.5 * x * y - 0.5 * k_ * bracket,
              0.5 * y,
              0.5 * x - k_ * s,
              0.0,
              0.5,
              -k_ * y / s};
    }
    case SurfaceId::non_minimal_quadratic:
      return {x * x + y * y, 2.0 * x, 2.0 * y, 2.0, 0.0, 2.0};
  }
  throw std::logic_error("CatalogSurface: unknown id");
}

SurfaceExpected CatalogSurface::expected() const {
  switch (id_) {
    case SurfaceId::plane:
      return {true, 2, true};
    case SurfaceId::hyperbolic_paraboloid:
    case SurfaceId::saddle_type:
    case SurfaceId::tilted_product:
    case SurfaceId::rank1_family:
      return {true, 1, true};
    case SurfaceId::non_minimal_quadratic:
      return {false, 2, false};
  }
  throw std::logic_error("CatalogSurface: unknown id");
}

std::string CatalogSurface::name() const {
  switch (id_) {
    case SurfaceId::plane:
      return "plane";
    case SurfaceId::hyperbolic_paraboloid:
      return "hparab";
    case SurfaceId::saddle_type:
      return "saddle";
    case SurfaceId::tilted_product:
      return "tilted";
    case SurfaceId::rank1_family:
      return "rank1";
    case SurfaceId::non_minimal_quadratic:
      return "quad";
  }
  throw std::logic_error("CatalogSurface: unknown id");
}

std::string CatalogSurface::describe() const {
  std::ostringstream os;
  switch (id_) {
    case SurfaceId::plane:
      os << "plane(a=" << a_ << ",b=" << b_ << ",c=" << c_ << ")";
      break;
    case SurfaceId::saddle_type:
    case SurfaceId::tilted_product:
    case SurfaceId::rank1_family:
      os << name() << "(k=" << k_ << ")";
      break;
    default:
      os << name();
      break;
  }
  return os.str();
}

std::optional<CatalogSurface> CatalogSurface::from_name(
    const std::string& name, const std::map<std::string, double>& params) {
  const double k = param_or(params, "k", 1.0);
  if (name == "plane") {
    return plane(param_or(params, "a", 1.0), param_or(params, "b", 2.0),
                 param_or(params, "c", 3.0));
  }
  if (name == "hparab") return hyperbolic_paraboloid();
  if (name == "saddle") return saddle_type(k);
  if (name == "tilted") return tilted_product(k);
  if (name == "rank1") return rank1_family(k);
  if (name == "quad") return non_minimal_quadratic();
  return std::nullopt;
}

std::vector<CatalogSurface> CatalogSurface::default_set() {
  return {plane(1.0, 2.0, 3.0), hyperbolic_paraboloid(), saddle_type(1.0),
          tilted_product(1.0),  rank1_family(1.0),       non_minimal_quadratic()};
}

}  // namespace heisgeo
