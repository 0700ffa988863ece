#include "heisgeo/solver.hpp"

#include <cmath>
#include <limits>

#include "doctest.h"
#include "heisgeo/catalog.hpp"

using namespace heisgeo;

namespace {

const Domain2 kBox{-1.0, 1.0, -1.0, 1.0};

DirichletProblem trace_problem(const CatalogSurface& s, int n,
                               SolverConfig config = {}) {
  return {kBox, n,
          [s](double x, double y) { return s.jet_at(x, y).f; }, config};
}

double max_error_vs(const GridField& sol, const CatalogSurface& s) {
  double err = 0.0;
  for (int j = 0; j < sol.n_y(); ++j) {
    for (int i = 0; i < sol.n_x(); ++i) {
      err = std::max(err, std::fabs(sol.value(i, j) -
                                    s.jet_at(sol.x_of(i), sol.y_of(j)).f));
    }
  }
  return err;
}

}  // namespace

TEST_CASE("discrete residual vanishes exactly on sampled planes") {
  const CatalogSurface plane = CatalogSurface::plane(1.0, 2.0, 3.0);
  const GridField g = GridField::sample(plane, kBox, 17, 17);
  const GridField r = discrete_residual(g);
  for (double v : r.values()) CHECK(v == 0.0);
  CHECK(residual_norm(g) == 0.0);
}

TEST_CASE("discrete residual matches the analytic value on a quadratic") {
  // Central stencils are exact on x^2 + y^2, so the discrete residual
  // equals 4 + 2(p^2 + q^2) with the exact slopes.
  const CatalogSurface quad = CatalogSurface::non_minimal_quadratic();
  const GridField g = GridField::sample(quad, kBox, 17, 17);
  const GridField r = discrete_residual(g);
  for (int j = 1; j <= 15; ++j) {
    for (int i = 1; i <= 15; ++i) {
      const double x = g.x_of(i), y = g.y_of(j);
      const double p = 2.0 * x + 0.5 * y;
      const double q = 2.0 * y - 0.5 * x;
      CHECK(r.value(i, j) ==
            doctest::Approx(4.0 + 2.0 * (p * p + q * q)).epsilon(1e-12));
    }
  }
}

TEST_CASE("discrete residual works on rectangular grids") {
  // Node coordinates like j/12 are not exact binary fractions, so the
  // sampled quadratic is stencil-exact only up to value rounding over h^2.
  const CatalogSurface tilted = CatalogSurface::tilted_product(2.0);
  const GridField g = GridField::sample(tilted, {-1, 2, 0, 1}, 9, 13);
  const GridField r = discrete_residual(g);
  CHECK(r.n_x() == 9);
  CHECK(r.n_y() == 13);
  for (double v : r.values()) CHECK(std::fabs(v) <= 1e-12);
}

TEST_CASE("discrete residual converges at second order on the saddle") {
  const CatalogSurface saddle = CatalogSurface::saddle_type(1.0);
  auto worst = [&saddle](int n) {
    return residual_norm(GridField::sample(saddle, kBox, n, n));
  };
  const double r33 = worst(33);
  const double r65 = worst(65);
  CHECK(r33 / r65 >= 3.0);
  CHECK(r33 / r65 <= 5.0);
}

TEST_CASE("zero trace yields the zero field without Newton steps") {
  DirichletProblem problem{kBox, 17, [](double, double) { return 0.0; }, {}};
  const SolveResult result = solve(problem);
  CHECK(result.iterations == 0);
  CHECK(result.final_residual == 0.0);
  for (double v : result.solution.values()) CHECK(v == 0.0);
}

TEST_CASE("polynomial traces are recovered to rounding") {
  for (const CatalogSurface& s : {CatalogSurface::plane(1.0, 2.0, 3.0),
                                  CatalogSurface::tilted_product(1.0)}) {
    const SolveResult result = solve(trace_problem(s, 33));
    CAPTURE(s.describe());
    CHECK(result.iterations <= 1);
    CHECK(max_error_vs(result.solution, s) <= 1e-12);
  }
}

TEST_CASE("saddle trace converges with a small discretization error") {
  const CatalogSurface saddle = CatalogSurface::saddle_type(1.0);
  const SolveResult result = solve(trace_problem(saddle, 65));
  CHECK(result.final_residual <= 1e-10);
  CHECK(max_error_vs(result.solution, saddle) <= 2e-3);
  // The reported residual is the residual of the returned field.
  CHECK(residual_norm(result.solution) == result.final_residual);

  // Boundary nodes carry the trace exactly.
  const GridField& sol = result.solution;
  for (int i = 0; i < sol.n_x(); ++i) {
    CHECK(sol.value(i, 0) == saddle.jet_at(sol.x_of(i), sol.y_of(0)).f);
    CHECK(sol.value(i, sol.n_y() - 1) ==
          saddle.jet_at(sol.x_of(i), sol.y_of(sol.n_y() - 1)).f);
  }

  // Accepted Newton steps never increase the residual.
  for (std::size_t k = 1; k < result.residual_history.size(); ++k) {
    CHECK(result.residual_history[k] < result.residual_history[k - 1]);
  }
}

TEST_CASE("iteration budget is enforced") {
  SolverConfig config;
  config.max_newton_iters = 1;
  try {
    solve(trace_problem(CatalogSurface::saddle_type(1.0), 65, config));
    FAIL("expected non-convergence");
  } catch (const NonConvergenceError& e) {
    CHECK(e.iterations == 1);
    CHECK(e.last_residual > 1e-10);
  }
}

TEST_CASE("problem validation") {
  DirichletProblem problem{kBox, 16, [](double, double) { return 0.0; }, {}};
  CHECK_THROWS_AS(solve(problem), std::invalid_argument);  // even n
  problem.n = 3;
  CHECK_THROWS_AS(solve(problem), std::invalid_argument);  // too small
  problem.n = 17;
  problem.boundary_trace = nullptr;
  CHECK_THROWS_AS(solve(problem), std::invalid_argument);
  problem.boundary_trace = [](double, double) {
    return std::numeric_limits<double>::infinity();
  };
  CHECK_THROWS_AS(solve(problem), std::invalid_argument);
}

TEST_CASE("convergence study on the saddle") {
  const ConvergenceReport report = convergence_study(
      CatalogSurface::saddle_type(1.0), kBox, {17, 33, 65});
  REQUIRE(report.rows.size() == 3);
  CHECK(std::isnan(report.rows[0].observed_order));
  for (std::size_t k = 1; k < 3; ++k) {
    CHECK(report.rows[k].observed_order >= std::log2(3.0));
    CHECK(report.rows[k].observed_order <= std::log2(5.0));
  }
  for (const ConvergenceRow& row : report.rows) {
    CHECK(row.final_residual <= 1e-10);
    CHECK(row.hessian_det_max <= 1e-8);
    CHECK_FALSE(row.exact);
  }

  const std::string json = report_json(report);
  for (const char* key : {"\"n\"", "\"max_error\"", "\"observed_order\"",
                          "\"residual\"", "\"prop53_max\"", "\"exact\""}) {
    CAPTURE(key);
    CHECK(json.find(key) != std::string::npos);
  }
}

TEST_CASE("convergence study reports stencil-exact surfaces") {
  const ConvergenceReport report = convergence_study(
      CatalogSurface::tilted_product(1.0), kBox, {17, 33});
  for (const ConvergenceRow& row : report.rows) {
    CHECK(row.exact);
    CHECK(row.max_error <= 1e-12);
    CHECK(std::isnan(row.observed_order));
  }
  const std::string json = report_json(report);
  CHECK(json.find("\"observed_order\": null") != std::string::npos);
}

TEST_CASE("convergence study validates its inputs") {
  CHECK_THROWS_AS(convergence_study(CatalogSurface::non_minimal_quadratic(),
                                    kBox, {17, 33}),
                  std::invalid_argument);
  CHECK_THROWS_AS(convergence_study(CatalogSurface::saddle_type(1.0), kBox,
                                    {17, 31}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      convergence_study(CatalogSurface::saddle_type(1.0), kBox, {}),
      std::invalid_argument);
}
