#include "heisgeo/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "heisgeo/band_matrix.hpp"
#include "heisgeo/graph_geometry.hpp"
#include "json.hpp"

namespace heisgeo {

namespace {

// Raw grid view used by the Newton iteration; values row-major, x fastest.
struct GridView {
  const Domain2* dom;
  int nx, ny;
  double hx, hy;
  double x_of(int i) const { return dom->x_min + i * hx; }
  double y_of(int j) const { return dom->y_min + j * hy; }
};

double residual_at(const GridView& g, const std::vector<double>& u, int i,
                   int j) {
  const int n = g.nx;
  const auto idx = [n](int ii, int jj) {
    return static_cast<std::size_t>(jj) * n + ii;
  };
  const double c = u[idx(i, j)];
  const double xp = u[idx(i + 1, j)], xm = u[idx(i - 1, j)];
  const double yp = u[idx(i, j + 1)], ym = u[idx(i, j - 1)];
  const double pp = u[idx(i + 1, j + 1)], pm = u[idx(i + 1, j - 1)];
  const double mp = u[idx(i - 1, j + 1)], mm = u[idx(i - 1, j - 1)];

  const double fx = (xp - xm) / (2.0 * g.hx);
  const double fy = (yp - ym) / (2.0 * g.hy);
  const double fxx = (xp - 2.0 * c + xm) / (g.hx * g.hx);
  const double fyy = (yp - 2.0 * c + ym) / (g.hy * g.hy);
  const double fxy = (pp - pm - mp + mm) / (4.0 * g.hx * g.hy);

  const double p = fx + 0.5 * g.y_of(j);
  const double q = fy - 0.5 * g.x_of(i);
  return (1.0 + q * q) * fxx - 2.0 * q * p * fxy + (1.0 + p * p) * fyy;
}

double interior_residual_norm(const GridView& g, const std::vector<double>& u) {
  double worst = 0.0;
  for (int j = 1; j <= g.ny - 2; ++j) {
    for (int i = 1; i <= g.nx - 2; ++i) {
      worst = std::max(worst, std::fabs(residual_at(g, u, i, j)));
    }
  }
  return worst;
}

// Solves the 5-point Laplace system for the interior with the boundary
// values already written into u.
void harmonic_extension(const GridView& g, std::vector<double>& u) {
  const int n = g.nx;
  const int m = n - 2;
  const int unknowns = m * m;
  const int band = m;  // neighbors (i, j +- 1) sit m columns away
  BandMatrix lap(unknowns, band, band);
  std::vector<double> rhs(unknowns, 0.0);

  const double cx = 1.0 / (g.hx * g.hx);
  const double cy = 1.0 / (g.hy * g.hy);
  const auto row_of = [m](int i, int j) { return (j - 1) * m + (i - 1); };
  const auto idx = [n](int ii, int jj) {
    return static_cast<std::size_t>(jj) * n + ii;
  };

  for (int j = 1; j <= n - 2; ++j) {
    for (int i = 1; i <= n - 2; ++i) {
      const int r = row_of(i, j);
      lap.at(r, r) = -2.0 * (cx + cy);
      const auto couple = [&](int ii, int jj, double coef) {
        if (ii >= 1 && ii <= n - 2 && jj >= 1 && jj <= n - 2) {
          lap.at(r, row_of(ii, jj)) = coef;
        } else {
          rhs[r] -= coef * u[idx(ii, jj)];
        }
      };
      couple(i + 1, j, cx);
      couple(i - 1, j, cx);
      couple(i, j + 1, cy);
      couple(i, j - 1, cy);
    }
  }
  lap.factor();
  lap.solve(rhs);
  for (int j = 1; j <= n - 2; ++j) {
    for (int i = 1; i <= n - 2; ++i) {
      u[idx(i, j)] = rhs[row_of(i, j)];
    }
  }
}

// Assembles the Newton system J delta = -residual for the interior
// unknowns. The residual at (i,j) touches the 3x3 stencil; derivatives with
// respect to each stencil value follow from the chain rule through
// fxx, fyy, fxy and the slopes p, q.
void assemble_newton(const GridView& g, const std::vector<double>& u,
                     BandMatrix& jac, std::vector<double>& rhs) {
  const int n = g.nx;
  const int m = n - 2;
  const auto row_of = [m](int i, int j) { return (j - 1) * m + (i - 1); };
  const auto idx = [n](int ii, int jj) {
    return static_cast<std::size_t>(jj) * n + ii;
  };
  const double inv_hx2 = 1.0 / (g.hx * g.hx);
  const double inv_hy2 = 1.0 / (g.hy * g.hy);
  const double inv_2hx = 1.0 / (2.0 * g.hx);
  const double inv_2hy = 1.0 / (2.0 * g.hy);
  const double inv_4hxy = 1.0 / (4.0 * g.hx * g.hy);

  for (int j = 1; j <= n - 2; ++j) {
    for (int i = 1; i <= n - 2; ++i) {
      const double c = u[idx(i, j)];
      const double xp = u[idx(i + 1, j)], xm = u[idx(i - 1, j)];
      const double yp = u[idx(i, j + 1)], ym = u[idx(i, j - 1)];
      const double pp = u[idx(i + 1, j + 1)], pm = u[idx(i + 1, j - 1)];
      const double mp = u[idx(i - 1, j + 1)], mm = u[idx(i - 1, j - 1)];

      const double fx = (xp - xm) * inv_2hx;
      const double fy = (yp - ym) * inv_2hy;
      const double fxx = (xp - 2.0 * c + xm) * inv_hx2;
      const double fyy = (yp - 2.0 * c + ym) * inv_hy2;
      const double fxy = (pp - pm - mp + mm) * inv_4hxy;

      const double p = fx + 0.5 * g.y_of(j);
      const double q = fy - 0.5 * g.x_of(i);

      const double axx = 1.0 + q * q;
      const double ayy = 1.0 + p * p;
      const double axy = -2.0 * q * p;

      const int r = row_of(i, j);
      rhs[r] = -(axx * fxx + axy * fxy + ayy * fyy);

      // dR/dp and dR/dq, feeding the first-derivative stencil entries.
      const double dR_dp = -2.0 * q * fxy + 2.0 * p * fyy;
      const double dR_dq = 2.0 * q * fxx - 2.0 * p * fxy;

      const auto add = [&](int ii, int jj, double coef) {
        if (ii >= 1 && ii <= n - 2 && jj >= 1 && jj <= n - 2) {
          jac.at(r, row_of(ii, jj)) += coef;
        }
        // Boundary values are fixed; they contribute nothing to J.
      };

      add(i, j, -2.0 * axx * inv_hx2 - 2.0 * ayy * inv_hy2);
      add(i + 1, j, axx * inv_hx2 + dR_dp * inv_2hx);
      add(i - 1, j, axx * inv_hx2 - dR_dp * inv_2hx);
      add(i, j + 1, ayy * inv_hy2 + dR_dq * inv_2hy);
      add(i, j - 1, ayy * inv_hy2 - dR_dq * inv_2hy);
      add(i + 1, j + 1, axy * inv_4hxy);
      add(i - 1, j - 1, axy * inv_4hxy);
      add(i + 1, j - 1, -axy * inv_4hxy);
      add(i - 1, j + 1, -axy * inv_4hxy);
    }
  }
}

}  // namespace

GridField discrete_residual(const GridField& g) {
  GridView view{&g.domain(), g.n_x(), g.n_y(), g.h_x(), g.h_y()};
  std::vector<double> out(g.values().size(), 0.0);
  for (int j = 1; j <= g.n_y() - 2; ++j) {
    for (int i = 1; i <= g.n_x() - 2; ++i) {
      out[static_cast<std::size_t>(j) * g.n_x() + i] =
          residual_at(view, g.values(), i, j);
    }
  }
  return GridField(g.domain(), g.n_x(), g.n_y(), std::move(out));
}

double residual_norm(const GridField& g) {
  GridView view{&g.domain(), g.n_x(), g.n_y(), g.h_x(), g.h_y()};
  return interior_residual_norm(view, g.values());
}

SolveResult solve(const DirichletProblem& problem) {
  if (!problem.domain.valid()) {
    throw std::invalid_argument("solve: invalid domain");
  }
  if (problem.n < 5 || problem.n % 2 == 0) {
    throw std::invalid_argument("solve: n must be odd and >= 5");
  }
  if (!problem.boundary_trace) {
    throw std::invalid_argument("solve: missing boundary trace");
  }
  const SolverConfig& cfg = problem.config;
  if (!(cfg.residual_tol > 0.0) || cfg.max_newton_iters < 1) {
    throw std::invalid_argument("solve: bad solver configuration");
  }

  const int n = problem.n;
  GridView g{&problem.domain, n, n, problem.domain.width() / (n - 1),
             problem.domain.height() / (n - 1)};
  std::vector<double> u(static_cast<std::size_t>(n) * n, 0.0);
  const auto idx = [n](int ii, int jj) {
    return static_cast<std::size_t>(jj) * n + ii;
  };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i == 0 || i == n - 1 || j == 0 || j == n - 1) {
        const double v = problem.boundary_trace(g.x_of(i), g.y_of(j));
        if (!std::isfinite(v)) {
          throw std::invalid_argument("solve: non-finite boundary trace");
        }
        u[idx(i, j)] = v;
      }
    }
  }

  harmonic_extension(g, u);

  SolveResult result{GridField(problem.domain, n, n, u), 0, 0.0, {}};
  double norm = interior_residual_norm(g, u);
  result.residual_history.push_back(norm);

  const int m = n - 2;
  const int unknowns = m * m;
  const int band = m + 1;  // diagonal stencil neighbors sit m±1 away

  for (int iter = 0; iter < cfg.max_newton_iters && norm > cfg.residual_tol;
       ++iter) {
    BandMatrix jac(unknowns, band, band);
    std::vector<double> step(unknowns, 0.0);
    assemble_newton(g, u, jac, step);
    jac.factor();
    jac.solve(step);

    // Halving line search on the residual max-norm.
    double alpha = 1.0;
    std::vector<double> trial = u;
    bool accepted = false;
    for (int halving = 0; halving <= cfg.max_line_search_halvings; ++halving) {
      for (int j = 1; j <= n - 2; ++j) {
        for (int i = 1; i <= n - 2; ++i) {
          trial[idx(i, j)] = u[idx(i, j)] + alpha * step[(j - 1) * m + (i - 1)];
        }
      }
      const double trial_norm = interior_residual_norm(g, trial);
      if (trial_norm < norm) {
        u.swap(trial);
        norm = trial_norm;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    result.iterations = iter + 1;
    if (!accepted) {
      throw NonConvergenceError(
          "solve: line search failed to reduce the residual",
          result.iterations, norm);
    }
    result.residual_history.push_back(norm);
  }

  if (norm > cfg.residual_tol) {
    throw NonConvergenceError("solve: Newton iteration budget exhausted",
                              result.iterations, norm);
  }

  result.solution = GridField(problem.domain, n, n, std::move(u));
  result.final_residual = norm;
  return result;
}

ConvergenceReport convergence_study(const CatalogSurface& surface,
                                    const Domain2& dom,
                                    const std::vector<int>& ns,
                                    const SolverConfig& config) {
  if (!surface.expected().is_minimal) {
    throw std::invalid_argument(
        "convergence_study: surface must be minimal so the analytic graph is "
        "the reference solution");
  }
  if (ns.empty()) {
    throw std::invalid_argument("convergence_study: empty grid ladder");
  }
  for (std::size_t k = 1; k < ns.size(); ++k) {
    if (ns[k] != 2 * ns[k - 1] - 1) {
      throw std::invalid_argument(
          "convergence_study: grids must nest (n -> 2n - 1)");
    }
  }

  ConvergenceReport report;
  report.surface = surface.describe();
  report.domain = dom;

  constexpr double kExactLevel = 1e-12;
  double prev_error = std::numeric_limits<double>::quiet_NaN();
  for (int n : ns) {
    DirichletProblem problem{dom, n,
                             [&surface](double x, double y) {
                               return surface.jet_at(x, y).f;
                             },
                             config};
    SolveResult solved = solve(problem);

    ConvergenceRow row;
    row.n = n;
    row.final_residual = solved.final_residual;
    row.iterations = solved.iterations;

    const GridField& sol = solved.solution;
    double err = 0.0;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const double truth = surface.jet_at(sol.x_of(i), sol.y_of(j)).f;
        err = std::max(err, std::fabs(sol.value(i, j) - truth));
      }
    }
    row.max_error = err;

    double hess_max = -std::numeric_limits<double>::infinity();
    for (int j = 1; j <= n - 2; ++j) {
      for (int i = 1; i <= n - 2; ++i) {
        const Jet2 jet = sol.fd_jet(i, j);
        hess_max = std::max(hess_max, jet.fxx * jet.fyy - jet.fxy * jet.fxy);
      }
    }
    row.hessian_det_max = hess_max;

    row.exact = err <= kExactLevel;
    if (std::isnan(prev_error) || row.exact || prev_error <= kExactLevel) {
      row.observed_order = std::numeric_limits<double>::quiet_NaN();
    } else {
      row.observed_order = std::log2(prev_error / err);
    }
    prev_error = err;
    report.rows.push_back(row);
  }
  return report;
}

std::string report_json(const ConvergenceReport& report) {
  nlohmann::ordered_json j;
  j["surface"] = report.surface;
  j["domain"] = {{"x_min", report.domain.x_min},
                 {"x_max", report.domain.x_max},
                 {"y_min", report.domain.y_min},
                 {"y_max", report.domain.y_max}};
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    r["max_error"] = row.max_error;
    if (std::isnan(row.observed_order)) {
      r["observed_order"] = nullptr;
    } else {
      r["observed_order"] = row.observed_order;
    }
    r["residual"] = row.final_residual;
    r["prop53_max"] = row.hessian_det_max;
    r["exact"] = row.exact;
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j.dump(2);
}

}  // namespace heisgeo
