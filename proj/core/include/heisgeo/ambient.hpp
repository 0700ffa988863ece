#pragma once

#include <cstddef>

// The 3-dimensional Heisenberg group as a Riemannian manifold: the group
// law in exponential coordinates, the orthonormal left-invariant frame
// {E1, E2, E3}, the metric, the Riemannian connection and the curvature
// tensor on constant-coefficient left-invariant fields.

namespace heisgeo {

// A point of the group in exponential coordinates.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Tangent vector as coefficients in the orthonormal left-invariant frame
// {E1, E2, E3}. The frame is orthonormal, so the metric is the plain dot
// product of coefficients.
struct FrameVec3 {
  double v1 = 0.0;
  double v2 = 0.0;
  double v3 = 0.0;
};

// Tangent vector in the coordinate basis {d/dx, d/dy, d/dz}.
struct CoordVec3 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

FrameVec3 operator+(const FrameVec3& a, const FrameVec3& b);
FrameVec3 operator-(const FrameVec3& a, const FrameVec3& b);
FrameVec3 operator*(double s, const FrameVec3& v);

// (x1,y1,z1)*(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+(x1*y2-x2*y1)/2).
Point3 group_mul(const Point3& p, const Point3& q);

// Two-sided inverse under group_mul; (0,0,0) is the identity.
Point3 group_inv(const Point3& p);

// Rewrites a coordinate-basis vector at p in the left-invariant frame,
// using d/dx = E1 + (y/2)E3, d/dy = E2 - (x/2)E3, d/dz = E3.
FrameVec3 coord_to_frame(const Point3& p, const CoordVec3& v);

double metric(const FrameVec3& u, const FrameVec3& v);
double norm(const FrameVec3& u);

// Bracket of constant-coefficient left-invariant fields:
// [E1,E2] = E3, [Ei,E3] = 0.
FrameVec3 lie_bracket(const FrameVec3& u, const FrameVec3& v);

// Riemannian connection on constant-coefficient left-invariant fields.
// Basis table: nabla_{E1}E2 = E3/2 = -nabla_{E2}E1,
//              nabla_{E1}E3 = -E2/2 = nabla_{E3}E1,
//              nabla_{E2}E3 =  E1/2 = nabla_{E3}E2,
//              nabla_{Ei}Ei = 0.
FrameVec3 nabla(const FrameVec3& u, const FrameVec3& v);

// R(u,v)w = nabla_u nabla_v w - nabla_v nabla_u w - nabla_{[u,v]} w.
FrameVec3 curvature(const FrameVec3& u, const FrameVec3& v, const FrameVec3& w);

// K(u,v) = <R(u,v)v, u> / (|u|^2 |v|^2 - <u,v>^2).
// The plane spanned by E1,E2 has K = -3/4; planes containing E3 have K = 1/4.
// Throws std::invalid_argument when u, v do not span a plane.
double sectional(const FrameVec3& u, const FrameVec3& v);

// E1, E2, E3 as frame vectors, index 0..2. Out-of-range index throws.
FrameVec3 frame_basis(std::size_t i);

}  // namespace heisgeo
