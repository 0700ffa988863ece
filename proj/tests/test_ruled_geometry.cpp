#include "heisgeo/ruled_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"

using namespace heisgeo;

TEST_CASE("ruled fundamental forms") {
  // Straight directrix a = k t: the E3 coefficient vanishes.
  const double k = 1.5, t = 2.0;
  const RuledForms f = ruled_forms({k * t, k, 0.0}, t);
  CHECK(f.E == doctest::Approx(1.0 + k * k));
  CHECK(f.F == doctest::Approx(0.0));
  CHECK(f.G == 1.0);
  CHECK(f.L == doctest::Approx(0.0));
  CHECK(f.M == doctest::Approx(std::sqrt(1.0 + k * k) / 2.0));
  CHECK(f.N == 0.0);

  // The xz-plane.
  const RuledForms f0 = ruled_forms({0, 0, 0}, 0.7);
  CHECK(f0.E == doctest::Approx(1.0));
  CHECK(f0.F == doctest::Approx(0.0));
  CHECK(f0.M == doctest::Approx(0.5));

  // Parabolic directrix a = t^2 at t = 1.
  const RuledForms fp = ruled_forms({1.0, 2.0, 2.0}, 1.0);
  CHECK(fp.E == doctest::Approx(5.25));
  CHECK(fp.F == doctest::Approx(-0.5));
  CHECK(fp.L == doctest::Approx(-9.0 / (2.0 * std::sqrt(5.0))));
  CHECK(fp.M == doctest::Approx(std::sqrt(5.0) / 2.0));
}

TEST_CASE("ruled mean curvature") {
  std::mt19937_64 rng{71};
  std::uniform_real_distribution<double> d{-5.0, 5.0};

  // Affine directrices are minimal; the sign of H is opposite to a''.
  for (int i = 0; i < 200; ++i) {
    const double k = d(rng), c = d(rng), t = d(rng);
    CHECK(std::fabs(ruled_mean_curvature({c + k * t, k, 0.0}, t)) <= 1e-14);
  }
  CHECK(ruled_mean_curvature({0.0, 0.0, 0.0}, 3.0) == 0.0);

  // a = t^2: H = -2 / (2 (1+4t^2)^{3/2}) < 0.
  for (const double t : {-1.0, 0.0, 2.0}) {
    const DirectrixJet dj{t * t, 2.0 * t, 2.0};
    const double expected =
        -2.0 / (2.0 * std::pow(1.0 + 4.0 * t * t, 1.5));
    CHECK(ruled_mean_curvature(dj, t) == doctest::Approx(expected));
    CHECK(ruled_mean_curvature(dj, t) < 0.0);
  }

  // The two computations agree at random jets.
  for (int i = 0; i < 1000; ++i) {
    const DirectrixJet dj{d(rng), d(rng), d(rng)};
    const double t = d(rng);
    CHECK(std::fabs(ruled_mean_curvature(dj, t) -
                    ruled_mean_curvature_closed(dj)) <= 1e-12);
    if (dj.a2 != 0.0) {
      CHECK(ruled_mean_curvature(dj, t) * dj.a2 <= 0.0);
    }
  }
}

TEST_CASE("closed-form directrix") {
  CHECK(closed_form_a(1.7, -3.25, 0.0) == doctest::Approx(-3.25));
  CHECK(closed_form_a(0.0, -3.25, 12.0) == doctest::Approx(-3.25));
  CHECK(closed_form_a(2.0, 0.0, 1.0) ==
        doctest::Approx(std::sqrt(2.0) + std::log(1.0 + std::sqrt(2.0))));

  // a'(1) = lambda sqrt(2) by centered differences.
  const double eps = 1e-6;
  const double fd =
      (closed_form_a(2.0, 0.0, 1.0 + eps) - closed_form_a(2.0, 0.0, 1.0 - eps)) /
      (2.0 * eps);
  CHECK(fd == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-9));

  // (1+t^2) a'' - t a' = 0 with the analytic derivatives.
  std::mt19937_64 rng{73};
  std::uniform_real_distribution<double> d{-3.0, 3.0};
  for (int i = 0; i < 500; ++i) {
    const double lambda = d(rng), t = d(rng);
    const double s = std::sqrt(1.0 + t * t);
    const double a1 = lambda * s;
    const double a2 = lambda * t / s;
    CHECK(std::fabs((1.0 + t * t) * a2 - t * a1) <= 1e-10);
  }
}

TEST_CASE("slope ODE preserves its equilibria and exact lines") {
  const OdeTrajectory rest = integrate_slope_ode(0.0, 0.0, 0.0, 3.0, 1e-2);
  for (std::size_t k = 0; k < rest.size(); ++k) {
    CHECK(rest.state(k, 0) == 0.0);
    CHECK(rest.state(k, 1) == 0.0);
  }

  for (const double slope0 : {-1.0, -2.0}) {
    const OdeTrajectory traj = integrate_slope_ode(0.0, slope0, 0.0, 5.0, 1e-3);
    CHECK(traj.size() == 5001);
    double worst = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k) {
      worst = std::max(worst,
                       std::fabs(traj.state(k, 0) - slope0 * traj.t[k]));
      CHECK(traj.state(k, 1) == slope0);
    }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("directrix system reduces to the closed form for u = 0") {
  const OdeTrajectory still =
      integrate_directrix_system(0, 0, 0, 0, 0.0, 2.0, 1e-2);
  for (std::size_t k = 0; k < still.size(); ++k) {
    CHECK(still.state(k, 0) == 0.0);
    CHECK(still.state(k, 2) == 0.0);
  }

  const double lambda = 2.0, mu = -0.5;
  const OdeTrajectory traj =
      integrate_directrix_system(0.0, 0.0, mu, lambda, 0.0, 2.0, 1e-3);
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    CHECK(traj.state(k, 0) == 0.0);  // u never leaves zero
    worst = std::max(worst, std::fabs(traj.state(k, 2) -
                                      closed_form_a(lambda, mu, traj.t[k])));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("directrix integration converges at fourth order") {
  const double lambda = 2.0;
  auto max_error = [lambda](double step) {
    const OdeTrajectory traj =
        integrate_directrix_system(0, 0, 0, lambda, 0.0, 2.0, step);
    double err = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k) {
      err = std::max(err, std::fabs(traj.state(k, 2) -
                                    closed_form_a(lambda, 0.0, traj.t[k])));
    }
    return err;
  };
  const double ratio = max_error(0.02) / max_error(0.01);
  CHECK(ratio >= 12.0);
  CHECK(ratio <= 20.0);
}

TEST_CASE("integration input validation and divergence") {
  CHECK_THROWS_AS(integrate_slope_ode(0, 0, 0.0, 1.0, -1e-3),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_slope_ode(0, 0, 2.0, 1.0, 1e-3),
                  std::invalid_argument);

  // An enormous initial slope overflows within a step.
  try {
    integrate_slope_ode(1.0, 1e160, 0.0, 1.0, 0.25);
    FAIL("expected divergence");
  } catch (const OdeDivergenceError& e) {
    CHECK(e.last_valid_t >= 0.0);
    CHECK(e.last_valid_t < 1.0);
  }
}

TEST_CASE("trajectory CSV layout") {
  const OdeTrajectory traj = integrate_slope_ode(0.0, -1.0, 0.0, 1.0, 0.25);
  std::ostringstream os;
  traj.write_csv(os);
  const std::string text = os.str();
  CHECK(text.rfind("t,R,R1\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 5);

  const OdeTrajectory traj6 =
      integrate_directrix_system(0, 0, 0, 1, 0.0, 1.0, 0.5);
  std::ostringstream os6;
  traj6.write_csv(os6);
  CHECK(os6.str().rfind("t,u,u1,a,a1\n", 0) == 0);
}
