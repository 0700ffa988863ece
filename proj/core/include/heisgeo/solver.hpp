#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heisgeo/catalog.hpp"
#include "heisgeo/scalar_field.hpp"

// Finite-difference Newton solver for the Dirichlet problem of the
// minimal-graph equation
//   (1 + q^2) f_xx - 2 q p f_xy + (1 + p^2) f_yy = 0,  p = f_x + y/2,
//   q = f_y - x/2,
// on a rectangle, with second-order central stencils, an analytic stencil
// Jacobian, and a banded direct linear solve.

namespace heisgeo {

struct SolverConfig {
  int max_newton_iters = 50;
  double residual_tol = 1e-10;  // max-norm of the discrete residual
  int max_line_search_halvings = 20;
};

// n is the node count per axis; it must be odd and >= 5 so that halving the
// spacing nests the grids.
struct DirichletProblem {
  Domain2 domain;
  int n = 33;
  std::function<double(double, double)> boundary_trace;
  SolverConfig config{};
};

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, int iterations,
                      double last_residual)
      : std::runtime_error(what),
        iterations(iterations),
        last_residual(last_residual) {}
  int iterations;
  double last_residual;
};

struct SolveResult {
  GridField solution;
  int iterations = 0;
  double final_residual = 0.0;
  // Max-norm residual after each accepted Newton step, starting with the
  // initial iterate; nonincreasing by construction of the line search.
  std::vector<double> residual_history;
};

// Discrete residual of the minimal-graph equation on the fd_jet of g:
// interior nodes carry the stencil value, boundary nodes are set to zero.
GridField discrete_residual(const GridField& g);

// Max-norm of the interior residual.
double residual_norm(const GridField& g);

// Damped Newton from the discrete harmonic extension of the trace.
// The returned solution matches the trace exactly at boundary nodes and has
// residual_norm <= config.residual_tol. Throws NonConvergenceError when the
// iteration budget or the line search is exhausted, SingularSystemError when
// a Newton system is exactly singular, and std::invalid_argument on bad
// problem data.
SolveResult solve(const DirichletProblem& problem);

struct ConvergenceRow {
  int n = 0;
  double max_error = 0.0;       // vs the analytic surface, all nodes
  double observed_order = 0.0;  // log2(err(h)/err(h/2)); NaN on the first row
  double final_residual = 0.0;
  double hessian_det_max = 0.0;  // max of fxx*fyy - fxy^2 over interior
  int iterations = 0;
  bool exact = false;  // error at rounding level, order not meaningful
};

struct ConvergenceReport {
  std::string surface;
  Domain2 domain;
  std::vector<ConvergenceRow> rows;
};

// Solves the Dirichlet problem with the trace of a minimal catalog surface
// on each grid in ns (ascending, nested: n_{k+1} = 2 n_k - 1) and reports
// errors against the analytic surface. Throws std::invalid_argument for a
// non-minimal surface or a non-nested ladder.
ConvergenceReport convergence_study(const CatalogSurface& surface,
                                    const Domain2& dom,
                                    const std::vector<int>& ns,
                                    const SolverConfig& config = {});

// JSON array of {n, max_error, observed_order, residual, prop53_max, exact};
// observed_order is null where not meaningful.
std::string report_json(const ConvergenceReport& report);

}  // namespace heisgeo
