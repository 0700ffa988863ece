#include "heisgeo/ambient.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace heisgeo;

namespace {

bool near(const Point3& p, const Point3& q, double tol = 1e-15) {
  return std::fabs(p.x - q.x) <= tol && std::fabs(p.y - q.y) <= tol &&
         std::fabs(p.z - q.z) <= tol;
}

bool near(const FrameVec3& u, const FrameVec3& v, double tol = 1e-15) {
  return std::fabs(u.v1 - v.v1) <= tol && std::fabs(u.v2 - v.v2) <= tol &&
         std::fabs(u.v3 - v.v3) <= tol;
}

Point3 random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d{-10.0, 10.0};
  return {d(rng), d(rng), d(rng)};
}

// Independent route to the connection on basis fields: the Koszul formula
// degenerates to bracket terms because metric coefficients are constant,
// 2<nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>.
FrameVec3 koszul_nabla(std::size_t i, std::size_t j) {
  FrameVec3 out;
  double* comps[3] = {&out.v1, &out.v2, &out.v3};
  const FrameVec3 x = frame_basis(i);
  const FrameVec3 y = frame_basis(j);
  for (std::size_t k = 0; k < 3; ++k) {
    const FrameVec3 z = frame_basis(k);
    *comps[k] = 0.5 * (metric(lie_bracket(x, y), z) -
                       metric(lie_bracket(y, z), x) +
                       metric(lie_bracket(z, x), y));
  }
  return out;
}

}  // namespace

TEST_CASE("group law") {
  CHECK(near(group_mul({0, 0, 0}, {4, -5, 6}), {4, -5, 6}));
  CHECK(near(group_mul({4, -5, 6}, {0, 0, 0}), {4, -5, 6}));
  CHECK(near(group_mul({1, 0, 0}, {0, 1, 0}), {1, 1, 0.5}));

  std::mt19937_64 rng{123};
  for (int t = 0; t < 200; ++t) {
    const Point3 p = random_point(rng);
    CHECK(near(group_mul(p, {-p.x, -p.y, -p.z}), {0, 0, 0}));
    CHECK(near(group_mul({-p.x, -p.y, -p.z}, p), {0, 0, 0}));
  }
}

TEST_CASE("group law is associative") {
  std::mt19937_64 rng{321};
  for (int t = 0; t < 500; ++t) {
    const Point3 p = random_point(rng);
    const Point3 q = random_point(rng);
    const Point3 r = random_point(rng);
    const Point3 lhs = group_mul(group_mul(p, q), r);
    const Point3 rhs = group_mul(p, group_mul(q, r));
    CHECK(near(lhs, rhs, 1e-12));
  }
}

TEST_CASE("group inverse") {
  CHECK(near(group_inv({0, 0, 0}), {0, 0, 0}));
  CHECK(near(group_inv({1, 2, 3}), {-1, -2, -3}));

  std::mt19937_64 rng{7};
  for (int t = 0; t < 200; ++t) {
    const Point3 p = random_point(rng);
    CHECK(near(group_mul(p, group_inv(p)), {0, 0, 0}));
    CHECK(near(group_mul(group_inv(p), p), {0, 0, 0}));
  }
}

TEST_CASE("coordinate to frame conversion") {
  // At the identity the frame and coordinate bases agree.
  CHECK(near(coord_to_frame({0, 0, 0}, {1, 0, 0}), {1, 0, 0}));
  CHECK(near(coord_to_frame({0, 0, 0}, {0, 1, 0}), {0, 1, 0}));

  // E3 = d/dz everywhere.
  CHECK(near(coord_to_frame({3.7, -2.1, 9.9}, {0, 0, 1}), {0, 0, 1}));

  // Tangent of t -> (t, a(t), s): (1, a', 0) becomes (1, a', (a - t a')/2).
  const double t = 1.3, a = -0.8, adot = 2.4, s = 5.0;
  const FrameVec3 v = coord_to_frame({t, a, s}, {1.0, adot, 0.0});
  CHECK(v.v1 == doctest::Approx(1.0));
  CHECK(v.v2 == doctest::Approx(adot));
  CHECK(v.v3 == doctest::Approx(0.5 * (a - t * adot)));
}

TEST_CASE("metric is the frame dot product") {
  CHECK(metric({1, 0, 0}, {1, 0, 0}) == 1.0);
  CHECK(metric({1, 0, 0}, {0, 1, 0}) == 0.0);
  CHECK(metric({1, 2, 3}, {3, 2, 1}) == 10.0);
  CHECK(norm({3, 4, 0}) == doctest::Approx(5.0));
}

TEST_CASE("connection basis table") {
  const FrameVec3 e1 = frame_basis(0), e2 = frame_basis(1), e3 = frame_basis(2);
  CHECK(near(nabla(e1, e2), {0, 0, 0.5}));
  CHECK(near(nabla(e2, e1), {0, 0, -0.5}));
  CHECK(near(nabla(e1, e3), {0, -0.5, 0}));
  CHECK(near(nabla(e3, e1), {0, -0.5, 0}));
  CHECK(near(nabla(e2, e3), {0.5, 0, 0}));
  CHECK(near(nabla(e3, e2), {0.5, 0, 0}));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(near(nabla(frame_basis(i), frame_basis(i)), {0, 0, 0}));
  }
}

TEST_CASE("connection agrees with the Koszul formula") {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(near(nabla(frame_basis(i), frame_basis(j)), koszul_nabla(i, j)));
    }
  }
}

TEST_CASE("connection is torsion-free and metric-compatible") {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const FrameVec3 torsion =
          nabla(frame_basis(i), frame_basis(j)) -
          nabla(frame_basis(j), frame_basis(i)) -
          lie_bracket(frame_basis(i), frame_basis(j));
      CHECK(near(torsion, {0, 0, 0}, 0.0));
      for (std::size_t k = 0; k < 3; ++k) {
        const double compat =
            metric(nabla(frame_basis(i), frame_basis(j)), frame_basis(k)) +
            metric(frame_basis(j), nabla(frame_basis(i), frame_basis(k)));
        CHECK(compat == 0.0);
      }
    }
  }
}

TEST_CASE("nabla is bilinear") {
  std::mt19937_64 rng{99};
  std::uniform_real_distribution<double> d{-3.0, 3.0};
  for (int t = 0; t < 100; ++t) {
    const FrameVec3 u{d(rng), d(rng), d(rng)};
    const FrameVec3 v{d(rng), d(rng), d(rng)};
    const FrameVec3 w{d(rng), d(rng), d(rng)};
    const double s = d(rng);
    CHECK(near(nabla(u + s * w, v), nabla(u, v) + s * nabla(w, v), 1e-12));
    CHECK(near(nabla(u, v + s * w), nabla(u, v) + s * nabla(u, w), 1e-12));
  }
}

TEST_CASE("curvature tensor symmetries") {
  // Antisymmetry in the first slots.
  const FrameVec3 e1 = frame_basis(0), e2 = frame_basis(1);
  CHECK(near(curvature(e1, e1, e2), {0, 0, 0}, 0.0));

  // Pair symmetry <R(U,V)W, T> = <R(W,T)U, V> on all index combinations.
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t l = 0; l < 3; ++l) {
          const double lhs = metric(
              curvature(frame_basis(i), frame_basis(j), frame_basis(k)),
              frame_basis(l));
          const double rhs = metric(
              curvature(frame_basis(k), frame_basis(l), frame_basis(i)),
              frame_basis(j));
          CHECK(lhs == doctest::Approx(rhs).epsilon(1e-15));
        }
      }
    }
  }
}

TEST_CASE("sectional curvatures of the frame planes") {
  CHECK(sectional(frame_basis(0), frame_basis(1)) == doctest::Approx(-0.75));
  CHECK(sectional(frame_basis(0), frame_basis(2)) == doctest::Approx(0.25));
  CHECK(sectional(frame_basis(1), frame_basis(2)) == doctest::Approx(0.25));

  // Invariant under rescaling and shears of the spanning pair.
  const FrameVec3 u = 2.0 * frame_basis(0);
  const FrameVec3 v = frame_basis(1) + 0.5 * frame_basis(0);
  CHECK(sectional(u, v) == doctest::Approx(-0.75));

  CHECK_THROWS_AS(sectional(frame_basis(0), frame_basis(0)),
                  std::invalid_argument);
}
