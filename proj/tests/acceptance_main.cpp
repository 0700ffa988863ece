// Acceptance suite: runs every acceptance criterion at its frozen tolerance
// and prints one pass/fail line per criterion. Exit code 0 iff all pass.
//
// Usage: heisgeo_acceptance [--criterion N]
// The RNG seed for the randomized criteria comes from HEISGEO_SEED.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "heisgeo/checks.hpp"

namespace {

struct Criterion {
  int number;
  const char* title;
  heisgeo::checks::CheckResult (*run)(std::uint64_t seed);
};

using heisgeo::checks::CheckResult;

CheckResult run_connection(std::uint64_t) {
  return heisgeo::checks::check_connection();
}
CheckResult run_minimality(std::uint64_t) {
  return heisgeo::checks::check_catalog_minimality();
}
CheckResult run_rank(std::uint64_t) {
  return heisgeo::checks::check_rank_classes();
}
CheckResult run_gauss_eq(std::uint64_t seed) {
  return heisgeo::checks::check_gauss_equation(seed);
}
CheckResult run_gauss_map(std::uint64_t seed) {
  return heisgeo::checks::check_gauss_map_identity(seed);
}
CheckResult run_hessian(std::uint64_t) {
  return heisgeo::checks::check_hessian_inequality();
}
CheckResult run_solver(std::uint64_t) {
  return heisgeo::checks::check_solver_convergence();
}
CheckResult run_variational(std::uint64_t seed) {
  return heisgeo::checks::check_variational(seed);
}
CheckResult run_ruled(std::uint64_t seed) {
  return heisgeo::checks::check_ruled_odes(seed);
}
CheckResult run_umbilicity(std::uint64_t) {
  return heisgeo::checks::check_umbilicity();
}

const Criterion kCriteria[] = {
    {1, "connection and frame sectional curvatures", run_connection},
    {2, "catalog minimality", run_minimality},
    {3, "Gauss-map rank classes", run_rank},
    {4, "Gauss equation", run_gauss_eq},
    {5, "Gauss-map operator identity and traces", run_gauss_map},
    {6, "Hessian-determinant inequality", run_hessian},
    {7, "solver convergence ladder", run_solver},
    {8, "area variations", run_variational},
    {9, "ruled surfaces and ODE integrators", run_ruled},
    {10, "umbilicity defect", run_umbilicity},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }

  const std::uint64_t seed = heisgeo::checks::seed_from_env();
  int failures = 0;
  int ran = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    const CheckResult result = c.run(seed);
    ++ran;
    if (!result.pass) ++failures;
    std::printf("criterion %2d [%s] %s: %s\n", c.number,
                result.pass ? "PASS" : "FAIL", c.title, result.detail.c_str());
    std::fflush(stdout);
  }
  if (ran == 0) {
    std::fprintf(stderr, "no such criterion: %d\n", only);
    return 2;
  }
  std::printf("%d/%d criteria passed (seed %llu)\n", ran - failures, ran,
              static_cast<unsigned long long>(seed));
  return failures == 0 ? 0 : 1;
}
