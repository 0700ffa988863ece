#include "heisgeo/catalog.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "heisgeo/graph_geometry.hpp"
#include "heisgeo/sampling.hpp"

using namespace heisgeo;

TEST_CASE("catalog jets at spot points") {
  const double k = 1.5;
  const Jet2 saddle0 = CatalogSurface::saddle_type(k).jet_at(0.0, 0.0);
  CHECK(saddle0.f == doctest::Approx(0.0));
  CHECK(saddle0.fx == doctest::Approx(0.0));
  CHECK(saddle0.fy == doctest::Approx(2.0 * k));
  CHECK(saddle0.fxx == 0.0);
  CHECK(saddle0.fxy == 0.5);
  CHECK(saddle0.fyy == doctest::Approx(0.0));

  const Jet2 plane = CatalogSurface::plane(2.0, -1.0, 0.5).jet_at(3.0, 4.0);
  CHECK(plane.f == doctest::Approx(2.0 * 3.0 - 4.0 + 0.5));
  CHECK(plane.fx == 2.0);
  CHECK(plane.fy == -1.0);
  CHECK(plane.fxx == 0.0);
  CHECK(plane.fxy == 0.0);

  const double x0 = -1.2, y0 = 0.7;
  const Jet2 tilted = CatalogSurface::tilted_product(k).jet_at(x0, y0);
  CHECK(tilted.f == doctest::Approx(2.0 * k * y0 - 0.5 * x0 * y0));
  CHECK(tilted.fx == doctest::Approx(-0.5 * y0));
  CHECK(tilted.fy == doctest::Approx(2.0 * k - 0.5 * x0));
  CHECK(tilted.fxy == -0.5);
  CHECK(tilted.fyy == 0.0);
}

TEST_CASE("expected metadata") {
  CHECK(CatalogSurface::plane(1, 2, 3).expected().is_minimal);
  CHECK(CatalogSurface::plane(1, 2, 3).expected().rank_class == 2);
  CHECK(CatalogSurface::saddle_type(1).expected().rank_class == 1);
  CHECK(CatalogSurface::saddle_type(1).expected().is_ruled);
  CHECK_FALSE(CatalogSurface::non_minimal_quadratic().expected().is_minimal);
}

TEST_CASE("minimality at low-discrepancy samples") {
  const Domain2 box{-5, 5, -5, 5};
  for (const CatalogSurface& s : CatalogSurface::default_set()) {
    if (!s.expected().is_minimal) continue;
    double worst = 0.0;
    for (std::uint64_t idx = 1; idx <= 2000; ++idx) {
      const Point2 pt = halton2(idx, box);
      worst = std::max(worst, std::fabs(minimal_residual(
                                  s.jet_at(pt.x, pt.y), pt.x, pt.y)));
    }
    CAPTURE(s.describe());
    CHECK(worst <= 1e-9);
  }
  // The quadratic bowl is decisively non-minimal everywhere.
  const CatalogSurface quad = CatalogSurface::non_minimal_quadratic();
  for (std::uint64_t idx = 1; idx <= 500; ++idx) {
    const Point2 pt = halton2(idx, box);
    CHECK(minimal_residual(quad.jet_at(pt.x, pt.y), pt.x, pt.y) >= 4.0);
  }
}

TEST_CASE("rank-one identity is exact on the degenerate families") {
  const Domain2 box{-5, 5, -5, 5};
  for (const CatalogSurface& s : CatalogSurface::default_set()) {
    if (s.expected().rank_class != 1) continue;
    for (std::uint64_t idx = 1; idx <= 2000; ++idx) {
      const Point2 pt = halton2(idx, box);
      const Jet2 jet = s.jet_at(pt.x, pt.y);
      CHECK(jet.fxx * jet.fyy - jet.fxy * jet.fxy + 0.25 == 0.0);
    }
  }
}

TEST_CASE("family correspondence: rank1(k) equals saddle(-k/2)") {
  std::mt19937_64 rng{83};
  std::uniform_real_distribution<double> d{-5.0, 5.0};
  for (int t = 0; t < 200; ++t) {
    const double k = d(rng);
    const CatalogSurface lhs = CatalogSurface::rank1_family(k);
    const CatalogSurface rhs = CatalogSurface::saddle_type(-0.5 * k);
    const double x = d(rng), y = d(rng);
    const Jet2 a = lhs.jet_at(x, y);
    const Jet2 b = rhs.jet_at(x, y);
    CHECK(a.f == b.f);
    CHECK(a.fx == b.fx);
    CHECK(a.fy == b.fy);
    CHECK(a.fxx == b.fxx);
    CHECK(a.fxy == b.fxy);
    CHECK(a.fyy == b.fyy);
  }
}

TEST_CASE("normal at the origin matches the tilt parameter") {
  for (const double k : {-2.0, 0.5, 1.0}) {
    const double scale = 1.0 / std::sqrt(1.0 + 4.0 * k * k);
    for (const CatalogSurface& s :
         {CatalogSurface::tilted_product(k), CatalogSurface::saddle_type(k)}) {
      const FrameVec3 n = unit_normal(s.jet_at(0, 0), 0, 0);
      CAPTURE(s.describe());
      CHECK(n.v1 == doctest::Approx(0.0));
      CHECK(n.v2 == doctest::Approx(-2.0 * k * scale));
      CHECK(n.v3 == doctest::Approx(scale));
    }
  }
}

TEST_CASE("saddle bracket term is stable far from the origin") {
  // The asinh form keeps the odd symmetry of the bracket term at large
  // negative y, where the naive logarithm cancels catastrophically.
  const CatalogSurface saddle = CatalogSurface::saddle_type(1.0);
  for (const double y : {0.5, 10.0, 1e3, 1e6}) {
    const double plus = saddle.jet_at(0.0, y).f;
    const double minus = saddle.jet_at(0.0, -y).f;
    CHECK(plus == doctest::Approx(-minus).epsilon(1e-12));
    CHECK(std::isfinite(minus));
  }
}

TEST_CASE("surface lookup by CLI name") {
  const auto saddle = CatalogSurface::from_name("saddle", {{"k", 2.0}});
  REQUIRE(saddle.has_value());
  CHECK(saddle->param_k() == 2.0);
  CHECK(saddle->name() == "saddle");

  const auto plane = CatalogSurface::from_name("plane", {});
  REQUIRE(plane.has_value());
  CHECK(plane->jet_at(0, 0).fx == 1.0);  // defaults a=1, b=2, c=3
  CHECK(plane->jet_at(0, 0).fy == 2.0);

  CHECK_FALSE(CatalogSurface::from_name("nosuch", {}).has_value());
  CHECK_THROWS_AS(
      CatalogSurface::from_name("saddle", {{"k", std::nan("")}}),
      std::invalid_argument);
}
