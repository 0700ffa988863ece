#include "heisgeo/variational.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>

#include "heisgeo/graph_geometry.hpp"

namespace heisgeo {

namespace {

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 16) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

void validate_quadrature(const Domain2& dom, const QuadratureSpec& quad) {
  if (!dom.valid()) {
    throw std::invalid_argument("quadrature: invalid domain");
  }
  if (quad.n_x < 8 || quad.n_y < 8) {
    throw std::invalid_argument("quadrature: panel counts must be >= 8");
  }
}

// Composite quadrature of integrand(x, y) over dom. Contributions are
// collected in a fixed row-major order and reduced pairwise, so the result
// is bit-stable for a given spec.
template <typename F>
double integrate(const Domain2& dom, const QuadratureSpec& quad, F integrand) {
  validate_quadrature(dom, quad);
  const double dx = dom.width() / quad.n_x;
  const double dy = dom.height() / quad.n_y;
  std::vector<double> cells;

  if (quad.rule == QuadRule::midpoint) {
    cells.reserve(static_cast<std::size_t>(quad.n_x) * quad.n_y);
    for (int j = 0; j < quad.n_y; ++j) {
      const double y = dom.y_min + (j + 0.5) * dy;
      for (int i = 0; i < quad.n_x; ++i) {
        const double x = dom.x_min + (i + 0.5) * dx;
        cells.push_back(integrand(x, y));
      }
    }
  } else {
    cells.reserve(static_cast<std::size_t>(quad.n_x + 1) * (quad.n_y + 1));
    for (int j = 0; j <= quad.n_y; ++j) {
      const double y = dom.y_min + j * dy;
      const double wy = (j == 0 || j == quad.n_y) ? 0.5 : 1.0;
      for (int i = 0; i <= quad.n_x; ++i) {
        const double x = dom.x_min + i * dx;
        const double wx = (i == 0 || i == quad.n_x) ? 0.5 : 1.0;
        cells.push_back(wx * wy * integrand(x, y));
      }
    }
  }
  return dx * dy * pairwise_sum(cells);
}

}  // namespace

Perturbation::Perturbation(const ScalarField& h, const Domain2& dom,
                           int boundary_samples)
    : h_(&h), dom_(dom) {
  if (!dom_.valid()) {
    throw std::invalid_argument("Perturbation: invalid domain");
  }
  if (boundary_samples < 2) {
    throw std::invalid_argument("Perturbation: need at least two samples");
  }
  constexpr double kBoundaryTol = 1e-12;
  const int ns = boundary_samples;
  for (int k = 0; k < ns; ++k) {
    const double s = static_cast<double>(k) / (ns - 1);
    const double x = dom_.x_min + s * dom_.width();
    const double y = dom_.y_min + s * dom_.height();
    const double values[4] = {h.jet_at(x, dom_.y_min).f,
                              h.jet_at(x, dom_.y_max).f,
                              h.jet_at(dom_.x_min, y).f,
                              h.jet_at(dom_.x_max, y).f};
    for (double v : values) {
      if (!(std::fabs(v) <= kBoundaryTol)) {
        throw std::invalid_argument(
            "Perturbation: field does not vanish on the domain boundary");
      }
    }
  }
}

FourierBump::FourierBump(const Domain2& dom, std::vector<Mode> modes)
    : dom_(dom), modes_(std::move(modes)) {
  if (!dom_.valid()) {
    throw std::invalid_argument("FourierBump: invalid domain");
  }
  for (const Mode& m : modes_) {
    if (m.m < 1 || m.n < 1 || !std::isfinite(m.coef)) {
      throw std::invalid_argument("FourierBump: bad mode");
    }
  }
}

FourierBump FourierBump::random(std::mt19937_64& rng, const Domain2& dom,
                                int max_mode) {
  std::uniform_real_distribution<double> coef{-1.0, 1.0};
  std::vector<Mode> modes;
  modes.reserve(static_cast<std::size_t>(max_mode) * max_mode);
  for (int m = 1; m <= max_mode; ++m) {
    for (int n = 1; n <= max_mode; ++n) {
      modes.push_back({m, n, coef(rng)});
    }
  }
  return FourierBump(dom, std::move(modes));
}

Jet2 FourierBump::jet_at(double x, double y) const {
  const double xi = (x - dom_.x_min) / dom_.width();
  const double eta = (y - dom_.y_min) / dom_.height();
  Jet2 jet;
  for (const Mode& mode : modes_) {
    const double kx = mode.m * std::numbers::pi / dom_.width();
    const double ky = mode.n * std::numbers::pi / dom_.height();
    const double sx = std::sin(mode.m * std::numbers::pi * xi);
    const double cx = std::cos(mode.m * std::numbers::pi * xi);
    const double sy = std::sin(mode.n * std::numbers::pi * eta);
    const double cy = std::cos(mode.n * std::numbers::pi * eta);
    jet.f += mode.coef * sx * sy;
    jet.fx += mode.coef * kx * cx * sy;
    jet.fy += mode.coef * ky * sx * cy;
    jet.fxx -= mode.coef * kx * kx * sx * sy;
    jet.fxy += mode.coef * kx * ky * cx * cy;
    jet.fyy -= mode.coef * ky * ky * sx * sy;
  }
  return jet;
}

double FourierBump::max_abs(int samples_per_axis) const {
  double worst = 0.0;
  for (int j = 0; j < samples_per_axis; ++j) {
    const double y =
        dom_.y_min + dom_.height() * j / (samples_per_axis - 1.0);
    for (int i = 0; i < samples_per_axis; ++i) {
      const double x =
          dom_.x_min + dom_.width() * i / (samples_per_axis - 1.0);
      worst = std::max(worst, std::fabs(jet_at(x, y).f));
    }
  }
  return worst;
}

double area(const ScalarField& f, const Domain2& dom,
            const QuadratureSpec& quad) {
  return integrate(dom, quad, [&f](double x, double y) {
    return slope(f.jet_at(x, y), x, y).w;
  });
}

double first_variation(const ScalarField& f, const Perturbation& h,
                       const QuadratureSpec& quad) {
  const ScalarField& hf = h.field();
  return integrate(h.domain(), quad, [&f, &hf](double x, double y) {
    const SlopeData s = slope(f.jet_at(x, y), x, y);
    const Jet2 hj = hf.jet_at(x, y);
    return (s.p * hj.fx + s.q * hj.fy) / s.w;
  });
}

double second_variation(const ScalarField& f, const Perturbation& h,
                        const QuadratureSpec& quad) {
  const ScalarField& hf = h.field();
  return integrate(h.domain(), quad, [&f, &hf](double x, double y) {
    const SlopeData s = slope(f.jet_at(x, y), x, y);
    const Jet2 hj = hf.jet_at(x, y);
    const double twist = s.q * hj.fx - s.p * hj.fy;
    return (hj.fx * hj.fx + hj.fy * hj.fy + twist * twist) /
           (s.w * s.w * s.w);
  });
}

}  // namespace heisgeo
