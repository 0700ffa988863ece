#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

// Scalar functions f(x,y) carrying second-order derivative data, either as
// analytic closed forms or as finite differences on uniform grids.

namespace heisgeo {

// Value and partial derivatives of a scalar function through second order.
struct Jet2 {
  double f = 0.0;
  double fx = 0.0;
  double fy = 0.0;
  double fxx = 0.0;
  double fxy = 0.0;
  double fyy = 0.0;
};

// Closed rectangle [x_min,x_max] x [y_min,y_max].
struct Domain2 {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  bool contains(double x, double y) const {
    return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
  }
  bool valid() const;
};

// Uniform evaluation interface: anything that can produce a Jet2 at (x,y).
class ScalarField {
 public:
  virtual ~ScalarField() = default;
  virtual Jet2 jet_at(double x, double y) const = 0;
};

// Field defined by a jet-valued callable; derivatives are exact.
class AnalyticField final : public ScalarField {
 public:
  explicit AnalyticField(std::function<Jet2(double, double)> jet)
      : jet_(std::move(jet)) {}
  Jet2 jet_at(double x, double y) const override { return jet_(x, y); }

 private:
  std::function<Jet2(double, double)> jet_;
};

// f + t*h, jets combined linearly. Non-owning views of f and h.
class ScaledSumField final : public ScalarField {
 public:
  ScaledSumField(const ScalarField& f, const ScalarField& h, double t)
      : f_(&f), h_(&h), t_(t) {}
  Jet2 jet_at(double x, double y) const override;

 private:
  const ScalarField* f_;
  const ScalarField* h_;
  double t_;
};

// Scalar samples on a uniform rectangular grid, immutable after
// construction. Values are stored row-major with x varying fastest:
// value(i,j) = values[j*n_x + i]. Node (i,j) sits at
// (x_min + i*h_x, y_min + j*h_y) with h = (max-min)/(n-1).
class GridField final : public ScalarField {
 public:
  // Throws std::invalid_argument on an invalid domain, node counts < 3,
  // a size mismatch, or non-finite values.
  GridField(const Domain2& dom, int n_x, int n_y, std::vector<double> values);

  static GridField sample(const ScalarField& f, const Domain2& dom, int n_x,
                          int n_y);

  const Domain2& domain() const { return dom_; }
  int n_x() const { return nx_; }
  int n_y() const { return ny_; }
  double h_x() const { return hx_; }
  double h_y() const { return hy_; }
  double x_of(int i) const { return dom_.x_min + i * hx_; }
  double y_of(int j) const { return dom_.y_min + j * hy_; }
  double value(int i, int j) const { return v_[static_cast<std::size_t>(j) * nx_ + i]; }
  const std::vector<double>& values() const { return v_; }
  bool is_interior(int i, int j) const {
    return i >= 1 && i <= nx_ - 2 && j >= 1 && j <= ny_ - 2;
  }

  // Second-order central differences at an interior node. Boundary or
  // out-of-grid indices throw std::out_of_range; there are no one-sided
  // stencils.
  Jet2 fd_jet(int i, int j) const;

  // Jet at the node nearest to (x,y). Points outside the domain, or whose
  // nearest node is a boundary node, throw std::domain_error. No
  // interpolation takes place.
  Jet2 jet_at(double x, double y) const override;

  // CSV with header "x,y,f", one row per node in storage order, every
  // number in 17-significant-digit scientific form.
  void write_csv(std::ostream& os) const;

  // JSON sidecar {"domain": {...}, "n_x": ..., "n_y": ...}.
  std::string meta_json() const;

  // Rebuilds a field from write_csv output plus its sidecar; values
  // round-trip exactly.
  static GridField read_csv(std::istream& csv, const std::string& meta_json);

 private:
  Domain2 dom_;
  int nx_ = 0;
  int ny_ = 0;
  double hx_ = 0.0;
  double hy_ = 0.0;
  std::vector<double> v_;
};

}  // namespace heisgeo
