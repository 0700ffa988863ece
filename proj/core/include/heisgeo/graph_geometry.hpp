#pragma once

#include <string>

#include "heisgeo/ambient.hpp"
#include "heisgeo/scalar_field.hpp"

// Pointwise geometry of graph surfaces z = f(x,y) in the Heisenberg group:
// fundamental forms, unit normal, Weingarten operator, curvatures, and the
// matrices attached to the Lie-group Gauss map. Every operation consumes a
// second-order jet of f together with the base point (x,y); all formulas
// are expanded analytically, nothing is finite-differenced here.

namespace heisgeo {

// p = f_x + y/2, q = f_y - x/2, w = sqrt(1 + p^2 + q^2).
struct SlopeData {
  double p = 0.0;
  double q = 0.0;
  double w = 1.0;
};

struct Mat2 {
  double m11 = 0.0, m12 = 0.0;
  double m21 = 0.0, m22 = 0.0;

  double trace() const { return m11 + m22; }
  double det() const { return m11 * m22 - m12 * m21; }
  double max_abs() const;
  double frobenius() const;
  Mat2 inverse() const;  // throws std::invalid_argument when singular
};

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(double s, const Mat2& a);

SlopeData slope(const Jet2& jet, double x, double y);

// First fundamental form [[E,F],[F,G]] = [[1+p^2, pq],[pq, 1+q^2]];
// det = EG - F^2 = w^2 >= 1, so the form is always invertible.
Mat2 first_form(const Jet2& jet, double x, double y);

// Inward-up unit normal (-p/w, -q/w, 1/w) in the left-invariant frame.
FrameVec3 unit_normal(const Jet2& jet, double x, double y);

// Second fundamental form [[L,M],[M,N]] with
// L = (fxx + qp)/w, M = (fxy + (q^2 - p^2)/2)/w, N = (fyy - qp)/w.
Mat2 second_form(const Jet2& jet, double x, double y);

// Shape operator in the parametrization basis {X_x, X_y}: I^{-1} * II.
Mat2 weingarten(const Jet2& jet, double x, double y);

// H = (EN + GL - 2FM) / (2(EG - F^2)).
double mean_curvature(const Jet2& jet, double x, double y);

// Left side of the minimal-graph equation:
// (1+q^2) fxx - 2qp fxy + (1+p^2) fyy. Vanishes exactly when H does;
// the algebraic identity is 2*H*w^3 = minimal_residual.
double minimal_residual(const Jet2& jet, double x, double y);

// Differential of the translated Gauss map in the basis {X_x, X_y}:
// [[-(p/w)_x, -(p/w)_y], [-(q/w)_x, -(q/w)_y]] with p_x = fxx,
// p_y = fxy + 1/2, q_x = fxy - 1/2, q_y = fyy. Its trace equals
// -minimal_residual / w^3, and gauss_jacobian = -(weingarten + alpha_matrix)
// with the sign fixed by kGaussIdentitySign below.
Mat2 gauss_jacobian(const Jet2& jet, double x, double y);

// Rank determinant of the Gauss map: (fxx*fyy - fxy^2 + 1/4) / w^2.
// Zero exactly where the Gauss map drops rank; for the determinant of
// gauss_jacobian itself the normalization is 1/w^4, i.e.
// det(gauss_jacobian) = rank_det / w^2.
double rank_det(const Jet2& jet, double x, double y);

// Left-invariant correction term of the Gauss-map differential:
// (1/2w) [[-pq, 1-q^2],[p^2-1, pq]]. Trace-free by construction.
Mat2 alpha_matrix(const Jet2& jet, double x, double y);

// Sign resolving the operator identity
//   gauss_jacobian = kGaussIdentitySign * -(weingarten + alpha_matrix).
// Determined empirically against the catalog surfaces and frozen.
inline constexpr double kGaussIdentitySign = 1.0;

// Intrinsic sectional curvature of the graph:
// K = [fxx*fyy - fxy^2 + 1/4 + pq(fyy - fxx) + p^2(fxy - 1/2)
//      - q^2(fxy + 1/2) - 1] / w^4.
// Satisfies the Gauss equation K = ambient_sectional + det(weingarten).
double surface_sectional(const Jet2& jet, double x, double y);

// Ambient sectional curvature of the tangent plane: 1/4 - 1/w^2.
double ambient_sectional(const Jet2& jet, double x, double y);

// Frobenius norm of the trace-free part of the Weingarten operator,
// ||A - (trace(A)/2) Id||_F. Vanishes exactly at umbilical points.
double umbilicity_defect(const Jet2& jet, double x, double y);

// Everything above evaluated once at a point.
struct SurfacePointReport {
  SlopeData slope;
  Mat2 first_form;
  Mat2 second_form;
  FrameVec3 normal;
  Mat2 weingarten;
  double mean_curvature = 0.0;
  double surface_K = 0.0;
  double ambient_K = 0.0;
  Mat2 gauss_jac;
  Mat2 alpha;
  double rank_det = 0.0;
  double umbilicity_defect = 0.0;
};

SurfacePointReport point_report(const Jet2& jet, double x, double y);

// JSON object with fields p,q,w,E,F,G,L,M,N,normal,H,K,K_ambient,rank_det,
// trace_gauss,umbilicity_defect (normal as a 3-array).
std::string report_json(const SurfacePointReport& r);

}  // namespace heisgeo
