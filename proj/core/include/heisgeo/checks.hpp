#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Cross-module invariant battery. Each group bundles the quantitative
// identities one part of the library must satisfy, runs them at frozen
// tolerances, and reports a single pass/fail verdict with a short summary
// of the worst observed deviation. The CLI `check` command and the
// acceptance suite both run these.

namespace heisgeo::checks {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// 1. Connection identities (torsion-free, metric compatibility, exactly on
//    all frame triples) and the frame-plane sectional curvatures.
CheckResult check_connection();

// 2. Minimal catalog surfaces satisfy the minimal-graph equation at 1e4
//    low-discrepancy points of [-5,5]^2.
CheckResult check_catalog_minimality();

// 3. Rank classes: the degenerate families have fxx*fyy - fxy^2 + 1/4 = 0
//    identically; the plane's rank determinant stays bounded below.
CheckResult check_rank_classes();

// 4. Gauss equation at random bounded jets.
CheckResult check_gauss_equation(std::uint64_t seed);

// 5. Gauss-map operator identity, the trace-free alpha matrix, and the
//    trace criterion for minimality.
CheckResult check_gauss_map_identity(std::uint64_t seed);

// 6. fxx*fyy - fxy^2 <= 0 on minimal catalog surfaces and on converged
//    solver solutions.
CheckResult check_hessian_inequality();

// 7. Solver convergence ladder on the saddle trace; stencil-exact recovery
//    of polynomial traces.
CheckResult check_solver_convergence();

// 8. Variational identities: near-zero first variation on minimal
//    surfaces, nonnegative second variation, agreement with centered
//    finite differences of t -> area(f + t h).
CheckResult check_variational(std::uint64_t seed);

// 9. Ruled surfaces: H = 0 for affine directrices, the closed-form
//    directrix solves its ODE, RK4 reproduces it at fourth order, and the
//    exact linear solutions of the slope ODE are preserved.
CheckResult check_ruled_odes(std::uint64_t seed);

// 10. Umbilicity defect is positive off a measure-zero set on every
//     catalog surface and on every sampled grid line.
CheckResult check_umbilicity();

// All groups in criterion order.
std::vector<CheckResult> run_all(std::uint64_t seed);

// Names in the order of run_all, for CLI filtering.
std::vector<std::string> group_names();

// Runs only the named groups (unknown names throw std::invalid_argument).
std::vector<CheckResult> run_selected(const std::vector<std::string>& names,
                                      std::uint64_t seed);

// Seed from the HEISGEO_SEED environment variable, or the fixed default.
std::uint64_t seed_from_env();

inline constexpr std::uint64_t kDefaultSeed = 20260808ull;

}  // namespace heisgeo::checks
