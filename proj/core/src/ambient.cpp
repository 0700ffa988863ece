#include "heisgeo/ambient.hpp"

#include <cmath>
#include <stdexcept>

namespace heisgeo {

FrameVec3 operator+(const FrameVec3& a, const FrameVec3& b) {
  return {a.v1 + b.v1, a.v2 + b.v2, a.v3 + b.v3};
}

FrameVec3 operator-(const FrameVec3& a, const FrameVec3& b) {
  return {a.v1 - b.v1, a.v2 - b.v2, a.v3 - b.v3};
}

FrameVec3 operator*(double s, const FrameVec3& v) {
  return {s * v.v1, s * v.v2, s * v.v3};
}

Point3 group_mul(const Point3& p, const Point3& q) {
  return {p.x + q.x, p.y + q.y, p.z + q.z + 0.5 * (p.x * q.y - q.x * p.y)};
}

Point3 group_inv(const Point3& p) { return {-p.x, -p.y, -p.z}; }

FrameVec3 coord_to_frame(const Point3& p, const CoordVec3& v) {
  return {v.a, v.b, 0.5 * (v.a * p.y - v.b * p.x) + v.c};
}

double metric(const FrameVec3& u, const FrameVec3& v) {
  return u.v1 * v.v1 + u.v2 * v.v2 + u.v3 * v.v3;
}

double norm(const FrameVec3& u) { return std::sqrt(metric(u, u)); }

FrameVec3 lie_bracket(const FrameVec3& u, const FrameVec3& v) {
  return {0.0, 0.0, u.v1 * v.v2 - u.v2 * v.v1};
}

FrameVec3 nabla(const FrameVec3& u, const FrameVec3& v) {
  // Bilinear extension of the basis table in the header.
  return {0.5 * (u.v2 * v.v3 + u.v3 * v.v2),
          -0.5 * (u.v1 * v.v3 + u.v3 * v.v1),
          0.5 * (u.v1 * v.v2 - u.v2 * v.v1)};
}

FrameVec3 curvature(const FrameVec3& u, const FrameVec3& v,
                    const FrameVec3& w) {
  // All inputs are constant-coefficient left-invariant fields, so nabla of
  // a nabla is again the algebraic bilinear map.
  return nabla(u, nabla(v, w)) - nabla(v, nabla(u, w)) -
         nabla(lie_bracket(u, v), w);
}

double sectional(const FrameVec3& u, const FrameVec3& v) {
  const double uv = metric(u, v);
  const double gram = metric(u, u) * metric(v, v) - uv * uv;
  if (!(gram > 0.0)) {
    throw std::invalid_argument("sectional: vectors do not span a plane");
  }
  return metric(curvature(u, v, v), u) / gram;
}

FrameVec3 frame_basis(std::size_t i) {
  switch (i) {
    case 0:
      return {1.0, 0.0, 0.0};
    case 1:
      return {0.0, 1.0, 0.0};
    case 2:
      return {0.0, 0.0, 1.0};
    default:
      throw std::out_of_range("frame_basis: index must be 0, 1 or 2");
  }
}

}  // namespace heisgeo
