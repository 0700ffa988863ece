#include "heisgeo/graph_geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace heisgeo {

double Mat2::max_abs() const {
  return std::max(std::max(std::fabs(m11), std::fabs(m12)),
                  std::max(std::fabs(m21), std::fabs(m22)));
}

double Mat2::frobenius() const {
  return std::sqrt(m11 * m11 + m12 * m12 + m21 * m21 + m22 * m22);
}

Mat2 Mat2::inverse() const {
  const double d = det();
  if (d == 0.0 || !std::isfinite(d)) {
    throw std::invalid_argument("Mat2::inverse: singular matrix");
  }
  return {m22 / d, -m12 / d, -m21 / d, m11 / d};
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

Mat2 operator*(double s, const Mat2& a) {
  return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
}

SlopeData slope(const Jet2& jet, double x, double y) {
  const double p = jet.fx + 0.5 * y;
  const double q = jet.fy - 0.5 * x;
  return {p, q, std::sqrt(1.0 + p * p + q * q)};
}

Mat2 first_form(const Jet2& jet, double x, double y) {
  const SlopeData s = slope(jet, x, y);
  const double f = s.p * s.q;
  return {1.0 + s.p * s.p, f, f, 1.0 + s.q * s.q};
}

FrameVec3 unit_normal(const Jet2& jet, double x, double y) {
  const SlopeData s = slope(jet, x, y);
  return {-s.p / s.w, -s.q / s.w, 1.0 / s.w};
}

Mat2 second_form(const Jet2& jet, double x, double y) {
  const SlopeData s = slope(jet, x, y);
  const double pq = s.q * s.p;
  const double l = (jet.fxx + pq) / s.w;
  const double m = (jet.fxy + 0.5 * (s.q * s.q - s.p * s.p)) / s.w;
  const double n = (jet.fyy - pq) / s.w;
  return {l, m, m, n};
}

Mat2 weingarten(const Jet2& jet, double x, double y) {
  return first_form(jet, x, y).inverse() * second_form(jet, x, y);
}

double mean_curvature(const Jet2& jet, double x, double y) {
  const Mat2 fi = first_form(jet, x, y);
  const Mat2 se = second_form(jet, x, y);
  // E = fi.m11, F = fi.m12, G = fi.m22; L = se.m11, M = se.m12, N = se.m22.
  return 0.5 * (fi.m11 * se.m22 + fi.m22 * se.m11 - 2.0 * fi.m12 * se.m12) /
         fi.det();
}

double minimal_residual(const Jet2& jet, double x, double y) {
  const SlopeData s = slope(jet, x, y);
  return (1.0 + s.q * s.q) * jet.fxx - 2.0 * s.q * s.p * jet.fxy +
         (1.0 + s.p * s.p) * jet.fyy;
}

Mat2 gauss_jacobian(const Jet2& jet, double x, double y) {
  const SlopeData s = slope(jet, x, y);
  const double px = jet.fxx;
  const double py = jet.fxy + 0.5;
  const double qx = jet.fxy - 0.5;
  const double qy = jet.fyy;
  const double wx = (s.p * px + s.q * qx) / s.w;
  const double wy = (s.p * py + s.q * qy) / s.w;
  const double inv_w = 1.0 / s.w;
  // Entry (1,1) is -d(p/w)/dx and so on, by the quotient rule.
  return {-(px - s.p * wx * inv_w) * inv_w, -(py - s.p * wy * inv_w) * inv_w,
          -(qx - s.q * wx * inv_w) * inv_w, -(qy - s.q * wy * inv_w) * inv_w};
}

double rank_det(const Jet2& jet, double x, double y) {
  const SlopeData s = slope(jet, x, y);
  return (jet.fxx * jet.fyy - jet.fxy * jet.fxy + 0.25) / (s.w * s.w);
}

Mat2 alpha_matrix(const Jet2& jet, double x, double y) {
  const SlopeData s = slope(jet, x, y);
  const double c = 0.5 / s.w;
  const double cpq = c * (s.p * s.q);
  return {-cpq, c * (1.0 - s.q * s.q), c * (s.p * s.p - 1.0), cpq};
}

double surface_sectional(const Jet2& jet, double x, double y) {
  const SlopeData s = slope(jet, x, y);
  const double w2 = s.w * s.w;
  const double num = jet.fxx * jet.fyy - jet.fxy * jet.fxy + 0.25 +
                     s.p * s.q * (jet.fyy - jet.fxx) +
                     s.p * s.p * (jet.fxy - 0.5) -
                     s.q * s.q * (jet.fxy + 0.5) - 1.0;
  return num / (w2 * w2);
}

double ambient_sectional(const Jet2& jet, double x, double y) {
  const SlopeData s = slope(jet, x, y);
  return 0.25 - 1.0 / (s.w * s.w);
}

double umbilicity_defect(const Jet2& jet, double x, double y) {
  const Mat2 a = weingarten(jet, x, y);
  const double half_trace = 0.5 * a.trace();
  const Mat2 d{a.m11 - half_trace, a.m12, a.m21, a.m22 - half_trace};
  return d.frobenius();
}

SurfacePointReport point_report(const Jet2& jet, double x, double y) {
  SurfacePointReport r;
  r.slope = slope(jet, x, y);
  r.first_form = first_form(jet, x, y);
  r.second_form = second_form(jet, x, y);
  r.normal = unit_normal(jet, x, y);
  r.weingarten = r.first_form.inverse() * r.second_form;
  r.mean_curvature = mean_curvature(jet, x, y);
  r.surface_K = surface_sectional(jet, x, y);
  r.ambient_K = ambient_sectional(jet, x, y);
  r.gauss_jac = gauss_jacobian(jet, x, y);
  r.alpha = alpha_matrix(jet, x, y);
  r.rank_det = rank_det(jet, x, y);
  r.umbilicity_defect = umbilicity_defect(jet, x, y);
  return r;
}

std::string report_json(const SurfacePointReport& r) {
  nlohmann::ordered_json j;
  j["p"] = r.slope.p;
  j["q"] = r.slope.q;
  j["w"] = r.slope.w;
  j["E"] = r.first_form.m11;
  j["F"] = r.first_form.m12;
  j["G"] = r.first_form.m22;
  j["L"] = r.second_form.m11;
  j["M"] = r.second_form.m12;
  j["N"] = r.second_form.m22;
  j["normal"] = {r.normal.v1, r.normal.v2, r.normal.v3};
  j["H"] = r.mean_curvature;
  j["K"] = r.surface_K;
  j["K_ambient"] = r.ambient_K;
  j["rank_det"] = r.rank_det;
  j["trace_gauss"] = r.gauss_jac.trace();
  j["umbilicity_defect"] = r.umbilicity_defect;
  return j.dump(2);
}

}  // namespace heisgeo
