// Command-line front end: evaluate catalog geometry on grids, solve the
// minimal-graph Dirichlet problem, integrate the ruled-surface ODEs, and run
// the invariant battery. Exit codes: 0 success, 2 usage error, 3 solver
// non-convergence, 4 ODE divergence.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "heisgeo/catalog.hpp"
#include "heisgeo/checks.hpp"
#include "heisgeo/format.hpp"
#include "heisgeo/graph_geometry.hpp"
#include "heisgeo/ruled_geometry.hpp"
#include "heisgeo/solver.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitDivergence = 4;

struct ConfigOverlay {
  nlohmann::json data;

  static ConfigOverlay load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    ConfigOverlay overlay;
    in >> overlay.data;
    return overlay;
  }

  // Applies a config value to a flag the user did not pass explicitly.
  template <typename T>
  void apply(const CLI::Option* opt, const std::string& key, T& target) const {
    if (opt != nullptr && opt->count() > 0) return;  // flags override file
    if (const auto it = data.find(key); it != data.end()) {
      target = it->get<T>();
    }
  }
};

bool all_finite(std::initializer_list<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::map<std::string, double> parse_params(
    const std::vector<std::string>& kv_pairs) {
  std::map<std::string, double> params;
  for (const std::string& kv : kv_pairs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("bad --param entry (want key=value): " + kv);
    }
    try {
      params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --param value in: " + kv);
    }
  }
  return params;
}

std::ofstream open_out(const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + (dir / name).string());
  }
  return out;
}

struct EvalArgs {
  std::string surface;
  std::vector<std::string> params;
  double k = 1.0, a = 1.0, b = 2.0, c = 3.0;
  std::vector<double> domain = {-2.0, 2.0, -2.0, 2.0};
  int n = 41;
  std::string out_dir = ".";
  std::string config_file;
};

int run_eval(const EvalArgs& args, const CLI::App* cmd) {
  EvalArgs merged = args;
  if (!merged.config_file.empty()) {
    const auto overlay = ConfigOverlay::load(merged.config_file);
    overlay.apply(cmd->get_option("--n"), "n", merged.n);
    overlay.apply(cmd->get_option("--k"), "k", merged.k);
    overlay.apply(cmd->get_option("--a"), "a", merged.a);
    overlay.apply(cmd->get_option("--b"), "b", merged.b);
    overlay.apply(cmd->get_option("--c"), "c", merged.c);
    overlay.apply(cmd->get_option("--domain"), "domain", merged.domain);
    overlay.apply(cmd->get_option("--out"), "out", merged.out_dir);
  }

  auto params = parse_params(merged.params);
  const auto set_if_passed = [&params, cmd](const char* flag,
                                            const char* key, double value) {
    if (cmd->get_option(flag)->count() > 0 || params.find(key) == params.end()) {
      params[key] = value;
    }
  };
  set_if_passed("--k", "k", merged.k);
  set_if_passed("--a", "a", merged.a);
  set_if_passed("--b", "b", merged.b);
  set_if_passed("--c", "c", merged.c);

  if (merged.domain.size() != 4 ||
      !all_finite({merged.domain[0], merged.domain[1], merged.domain[2],
                   merged.domain[3]})) {
    std::cerr << "eval: --domain wants four finite numbers\n";
    return kExitUsage;
  }
  for (const auto& [key, value] : params) {
    if (!std::isfinite(value)) {
      std::cerr << "eval: parameter " << key << " is not finite\n";
      return kExitUsage;
    }
  }
  if (merged.n < 2 || merged.n > 4097) {
    std::cerr << "eval: --n out of range\n";
    return kExitUsage;
  }

  const auto surface = heisgeo::CatalogSurface::from_name(merged.surface, params);
  if (!surface) {
    std::cerr << "eval: unknown surface id '" << merged.surface
              << "' (want plane, hparab, saddle, tilted, rank1, quad)\n";
    return kExitUsage;
  }

  const heisgeo::Domain2 dom{merged.domain[0], merged.domain[1],
                             merged.domain[2], merged.domain[3]};
  if (!dom.valid()) {
    std::cerr << "eval: empty domain\n";
    return kExitUsage;
  }

  auto out = open_out(merged.out_dir, "eval.csv");
  out << "x,y,f,p,q,w,H,K,rank_det,trace_gauss,umbilicity_defect\n";
  const double hx = dom.width() / (merged.n - 1);
  const double hy = dom.height() / (merged.n - 1);
  using heisgeo::format_sci17;
  for (int j = 0; j < merged.n; ++j) {
    for (int i = 0; i < merged.n; ++i) {
      const double x = dom.x_min + i * hx;
      const double y = dom.y_min + j * hy;
      const heisgeo::Jet2 jet = surface->jet_at(x, y);
      const auto r = heisgeo::point_report(jet, x, y);
      out << format_sci17(x) << ',' << format_sci17(y) << ','
          << format_sci17(jet.f) << ',' << format_sci17(r.slope.p) << ','
          << format_sci17(r.slope.q) << ',' << format_sci17(r.slope.w) << ','
          << format_sci17(r.mean_curvature) << ','
          << format_sci17(r.surface_K) << ',' << format_sci17(r.rank_det)
          << ',' << format_sci17(r.gauss_jac.trace()) << ','
          << format_sci17(r.umbilicity_defect) << '\n';
    }
  }
  std::cout << "wrote " << (fs::path(merged.out_dir) / "eval.csv").string()
            << " (" << merged.n * merged.n << " rows)\n";
  return kExitOk;
}

struct SolveArgs {
  std::string trace = "zero";
  std::vector<std::string> params;
  double k = 1.0, a = 1.0, b = 2.0, c = 3.0;
  std::vector<double> domain = {-1.0, 1.0, -1.0, 1.0};
  int n = 33;
  int max_iters = 50;
  double tol = 1e-10;
  std::string out_dir = ".";
  std::string config_file;
};

int run_solve(const SolveArgs& args, const CLI::App* cmd) {
  SolveArgs merged = args;
  if (!merged.config_file.empty()) {
    const auto overlay = ConfigOverlay::load(merged.config_file);
    overlay.apply(cmd->get_option("--n"), "n", merged.n);
    overlay.apply(cmd->get_option("--k"), "k", merged.k);
    overlay.apply(cmd->get_option("--domain"), "domain", merged.domain);
    overlay.apply(cmd->get_option("--max-iters"), "max_iters", merged.max_iters);
    overlay.apply(cmd->get_option("--tol"), "tol", merged.tol);
    overlay.apply(cmd->get_option("--out"), "out", merged.out_dir);
    overlay.apply(cmd->get_option("--trace"), "trace", merged.trace);
  }

  if (merged.domain.size() != 4 ||
      !all_finite({merged.domain[0], merged.domain[1], merged.domain[2],
                   merged.domain[3]}) ||
      !std::isfinite(merged.tol)) {
    std::cerr << "solve: non-finite numeric input\n";
    return kExitUsage;
  }
  const heisgeo::Domain2 dom{merged.domain[0], merged.domain[1],
                             merged.domain[2], merged.domain[3]};
  if (!dom.valid() || merged.n < 5 || merged.n % 2 == 0) {
    std::cerr << "solve: need a nonempty domain and odd --n >= 5\n";
    return kExitUsage;
  }

  std::function<double(double, double)> trace;
  std::string trace_name = merged.trace;
  if (merged.trace == "zero") {
    trace = [](double, double) { return 0.0; };
  } else {
    auto params = parse_params(merged.params);
    if (cmd->get_option("--k")->count() > 0 || params.find("k") == params.end())
      params["k"] = merged.k;
    if (cmd->get_option("--a")->count() > 0 || params.find("a") == params.end())
      params["a"] = merged.a;
    if (cmd->get_option("--b")->count() > 0 || params.find("b") == params.end())
      params["b"] = merged.b;
    if (cmd->get_option("--c")->count() > 0 || params.find("c") == params.end())
      params["c"] = merged.c;
    const auto surface = heisgeo::CatalogSurface::from_name(merged.trace, params);
    if (!surface) {
      std::cerr << "solve: unknown trace '" << merged.trace << "'\n";
      return kExitUsage;
    }
    trace_name = surface->describe();
    trace = [s = *surface](double x, double y) { return s.jet_at(x, y).f; };
  }

  heisgeo::DirichletProblem problem{dom, merged.n, trace, {}};
  problem.config.max_newton_iters = merged.max_iters;
  problem.config.residual_tol = merged.tol;

  ordered_json report;
  report["trace"] = trace_name;
  report["n"] = merged.n;
  try {
    const heisgeo::SolveResult result = heisgeo::solve(problem);
    report["converged"] = true;
    report["iterations"] = result.iterations;
    report["final_residual"] = result.final_residual;
    auto csv = open_out(merged.out_dir, "solution.csv");
    result.solution.write_csv(csv);
    auto meta = open_out(merged.out_dir, "solution.json");
    meta << result.solution.meta_json() << '\n';
    auto rep = open_out(merged.out_dir, "solve_report.json");
    rep << report.dump(2) << '\n';
    std::cout << "converged in " << result.iterations
              << " iteration(s), residual " << result.final_residual << '\n';
    return kExitOk;
  } catch (const heisgeo::NonConvergenceError& e) {
    report["converged"] = false;
    report["iterations"] = e.iterations;
    report["final_residual"] = e.last_residual;
    auto rep = open_out(merged.out_dir, "solve_report.json");
    rep << report.dump(2) << '\n';
    std::cerr << "solve: " << e.what() << " (residual " << e.last_residual
              << ")\n";
    return kExitNoConvergence;
  }
}

struct OdeArgs {
  std::string system;
  double r0 = 0.0, r1 = 0.0;
  double u0 = 0.0, u1 = 0.0, a0 = 0.0, a1 = 0.0;
  std::vector<double> span = {0.0, 2.0};
  double step = 1e-3;
  std::string out_dir = ".";
  std::string config_file;
};

int run_ode(const OdeArgs& args, const CLI::App* cmd) {
  OdeArgs merged = args;
  if (!merged.config_file.empty()) {
    const auto overlay = ConfigOverlay::load(merged.config_file);
    overlay.apply(cmd->get_option("--r0"), "r0", merged.r0);
    overlay.apply(cmd->get_option("--r1"), "r1", merged.r1);
    overlay.apply(cmd->get_option("--u0"), "u0", merged.u0);
    overlay.apply(cmd->get_option("--u1"), "u1", merged.u1);
    overlay.apply(cmd->get_option("--a0"), "a0", merged.a0);
    overlay.apply(cmd->get_option("--a1"), "a1", merged.a1);
    overlay.apply(cmd->get_option("--span"), "span", merged.span);
    overlay.apply(cmd->get_option("--step"), "step", merged.step);
    overlay.apply(cmd->get_option("--out"), "out", merged.out_dir);
  }

  if (merged.span.size() != 2 ||
      !all_finite({merged.span[0], merged.span[1], merged.step}) ||
      merged.span[1] <= merged.span[0] || merged.step <= 0.0) {
    std::cerr << "ode: need a finite increasing --span and positive --step\n";
    return kExitUsage;
  }

  ordered_json meta;
  meta["method"] = "rk4";
  meta["span"] = {merged.span[0], merged.span[1]};
  meta["step"] = merged.step;
  try {
    heisgeo::OdeTrajectory traj;
    if (merged.system == "item5") {
      if (!all_finite({merged.r0, merged.r1})) {
        std::cerr << "ode: non-finite initial state\n";
        return kExitUsage;
      }
      traj = heisgeo::integrate_slope_ode(merged.r0, merged.r1, merged.span[0],
                                          merged.span[1], merged.step);
      meta["system"] = "item5";
      meta["initial"] = {{"R0", merged.r0}, {"R1", merged.r1}};
    } else if (merged.system == "item6") {
      if (!all_finite({merged.u0, merged.u1, merged.a0, merged.a1})) {
        std::cerr << "ode: non-finite initial state\n";
        return kExitUsage;
      }
      traj = heisgeo::integrate_directrix_system(
          merged.u0, merged.u1, merged.a0, merged.a1, merged.span[0],
          merged.span[1], merged.step);
      meta["system"] = "item6";
      meta["initial"] = {{"u0", merged.u0},
                         {"u1", merged.u1},
                         {"a0", merged.a0},
                         {"a1", merged.a1}};
    } else {
      std::cerr << "ode: unknown system '" << merged.system
                << "' (want item5 or item6)\n";
      return kExitUsage;
    }
    meta["realized_step"] = traj.step;
    auto csv = open_out(merged.out_dir, "trajectory.csv");
    traj.write_csv(csv);
    auto mj = open_out(merged.out_dir, "trajectory.json");
    mj << meta.dump(2) << '\n';
    std::cout << "integrated " << traj.size() - 1 << " steps of "
              << merged.system << '\n';
    return kExitOk;
  } catch (const heisgeo::OdeDivergenceError& e) {
    std::cerr << "ode: " << e.what() << '\n';
    return kExitDivergence;
  }
}

struct CheckArgs {
  std::vector<std::string> groups;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

int run_check(const CheckArgs& args) {
  const std::uint64_t seed =
      args.seed_set ? args.seed : heisgeo::checks::seed_from_env();
  std::vector<heisgeo::checks::CheckResult> results;
  try {
    results = args.groups.empty()
                  ? heisgeo::checks::run_all(seed)
                  : heisgeo::checks::run_selected(args.groups, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "check: " << e.what() << "\navailable groups:";
    for (const auto& name : heisgeo::checks::group_names()) {
      std::cerr << ' ' << name;
    }
    std::cerr << '\n';
    return kExitUsage;
  }
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
              << '\n';
    all_pass = all_pass && r.pass;
  }
  std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << " (seed "
            << seed << ")\n";
  return all_pass ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry of graph surfaces in the Heisenberg group"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "Evaluate catalog-surface geometry on a grid");
  eval_cmd->add_option("surface", eval_args.surface,
                       "surface id: plane, hparab, saddle, tilted, rank1, quad")
      ->required();
  eval_cmd->add_option("--param", eval_args.params,
                       "surface parameter as key=value (repeatable)");
  eval_cmd->add_option("--k", eval_args.k, "family parameter k");
  eval_cmd->add_option("--a", eval_args.a, "plane coefficient a");
  eval_cmd->add_option("--b", eval_args.b, "plane coefficient b");
  eval_cmd->add_option("--c", eval_args.c, "plane coefficient c");
  eval_cmd->add_option("--domain", eval_args.domain,
                       "xmin xmax ymin ymax")->expected(4);
  eval_cmd->add_option("--n", eval_args.n, "nodes per axis");
  eval_cmd->add_option("--out", eval_args.out_dir, "output directory");
  eval_cmd->add_option("--config", eval_args.config_file,
                       "JSON config file; flags override file values");

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "Solve the minimal-graph Dirichlet problem on a rectangle");
  solve_cmd->add_option("--trace", solve_args.trace,
                        "boundary trace: a surface id or 'zero'");
  solve_cmd->add_option("--param", solve_args.params,
                        "trace parameter as key=value (repeatable)");
  solve_cmd->add_option("--k", solve_args.k, "family parameter k");
  solve_cmd->add_option("--a", solve_args.a, "plane coefficient a");
  solve_cmd->add_option("--b", solve_args.b, "plane coefficient b");
  solve_cmd->add_option("--c", solve_args.c, "plane coefficient c");
  solve_cmd->add_option("--domain", solve_args.domain,
                        "xmin xmax ymin ymax")->expected(4);
  solve_cmd->add_option("--n", solve_args.n, "nodes per axis (odd, >= 5)");
  solve_cmd->add_option("--max-iters", solve_args.max_iters,
                        "Newton iteration budget");
  solve_cmd->add_option("--tol", solve_args.tol,
                        "max-norm residual tolerance");
  solve_cmd->add_option("--out", solve_args.out_dir, "output directory");
  solve_cmd->add_option("--config", solve_args.config_file,
                        "JSON config file; flags override file values");

  OdeArgs ode_args;
  CLI::App* ode_cmd = app.add_subcommand(
      "ode", "Integrate a ruled-minimal-surface ODE system");
  ode_cmd->add_option("system", ode_args.system, "system id: item5 or item6")
      ->required();
  ode_cmd->add_option("--r0", ode_args.r0, "item5: R(t0)");
  ode_cmd->add_option("--r1", ode_args.r1, "item5: R'(t0)");
  ode_cmd->add_option("--u0", ode_args.u0, "item6: u(t0)");
  ode_cmd->add_option("--u1", ode_args.u1, "item6: u'(t0)");
  ode_cmd->add_option("--a0", ode_args.a0, "item6: a(t0)");
  ode_cmd->add_option("--a1", ode_args.a1, "item6: a'(t0)");
  ode_cmd->add_option("--span", ode_args.span, "t0 t1")->expected(2);
  ode_cmd->add_option("--step", ode_args.step, "integration step");
  ode_cmd->add_option("--out", ode_args.out_dir, "output directory");
  ode_cmd->add_option("--config", ode_args.config_file,
                      "JSON config file; flags override file values");

  CheckArgs check_args;
  CLI::App* check_cmd =
      app.add_subcommand("check", "Run the cross-module invariant battery");
  check_cmd->add_option("--group", check_args.groups,
                        "run only the named group(s)");
  CLI::Option* seed_opt = check_cmd->add_option(
      "--seed", check_args.seed, "RNG seed (default: HEISGEO_SEED or fixed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  check_args.seed_set = seed_opt->count() > 0;

  try {
    if (eval_cmd->parsed()) return run_eval(eval_args, eval_cmd);
    if (solve_cmd->parsed()) return run_solve(solve_args, solve_cmd);
    if (ode_cmd->parsed()) return run_ode(ode_args, ode_cmd);
    if (check_cmd->parsed()) return run_check(check_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
