#include "heisgeo/scalar_field.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "heisgeo/format.hpp"
#include "json.hpp"

namespace heisgeo {

bool Domain2::valid() const {
  return std::isfinite(x_min) && std::isfinite(x_max) &&
         std::isfinite(y_min) && std::isfinite(y_max) && x_min < x_max &&
         y_min < y_max;
}

Jet2 ScaledSumField::jet_at(double x, double y) const {
  const Jet2 a = f_->jet_at(x, y);
  const Jet2 b = h_->jet_at(x, y);
  return {a.f + t_ * b.f,     a.fx + t_ * b.fx,   a.fy + t_ * b.fy,
          a.fxx + t_ * b.fxx, a.fxy + t_ * b.fxy, a.fyy + t_ * b.fyy};
}

GridField::GridField(const Domain2& dom, int n_x, int n_y,
                     std::vector<double> values)
    : dom_(dom), nx_(n_x), ny_(n_y), v_(std::move(values)) {
  if (!dom_.valid()) {
    throw std::invalid_argument("GridField: invalid domain");
  }
  if (nx_ < 3 || ny_ < 3) {
    throw std::invalid_argument("GridField: node counts must be >= 3");
  }
  if (v_.size() != static_cast<std::size_t>(nx_) * ny_) {
    throw std::invalid_argument("GridField: value count does not match grid");
  }
  for (double t : v_) {
    if (!std::isfinite(t)) {
      throw std::invalid_argument("GridField: non-finite value");
    }
  }
  hx_ = dom_.width() / (nx_ - 1);
  hy_ = dom_.height() / (ny_ - 1);
}

GridField GridField::sample(const ScalarField& f, const Domain2& dom, int n_x,
                            int n_y) {
  if (!dom.valid() || n_x < 3 || n_y < 3) {
    throw std::invalid_argument("GridField::sample: bad domain or node count");
  }
  const double hx = dom.width() / (n_x - 1);
  const double hy = dom.height() / (n_y - 1);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n_x) * n_y);
  for (int j = 0; j < n_y; ++j) {
    for (int i = 0; i < n_x; ++i) {
      values.push_back(f.jet_at(dom.x_min + i * hx, dom.y_min + j * hy).f);
    }
  }
  return GridField(dom, n_x, n_y, std::move(values));
}

Jet2 GridField::fd_jet(int i, int j) const {
  if (!is_interior(i, j)) {
    throw std::out_of_range("fd_jet: node is on the boundary or outside");
  }
  const double c = value(i, j);
  const double xp = value(i + 1, j), xm = value(i - 1, j);
  const double yp = value(i, j + 1), ym = value(i, j - 1);
  const double pp = value(i + 1, j + 1), pm = value(i + 1, j - 1);
  const double mp = value(i - 1, j + 1), mm = value(i - 1, j - 1);
  return {c,
          (xp - xm) / (2.0 * hx_),
          (yp - ym) / (2.0 * hy_),
          (xp - 2.0 * c + xm) / (hx_ * hx_),
          (pp - pm - mp + mm) / (4.0 * hx_ * hy_),
          (yp - 2.0 * c + ym) / (hy_ * hy_)};
}

Jet2 GridField::jet_at(double x, double y) const {
  if (!dom_.contains(x, y)) {
    throw std::domain_error("GridField::jet_at: point outside the domain");
  }
  const int i = static_cast<int>(std::llround((x - dom_.x_min) / hx_));
  const int j = static_cast<int>(std::llround((y - dom_.y_min) / hy_));
  if (!is_interior(i, j)) {
    throw std::domain_error(
        "GridField::jet_at: nearest node is a boundary node");
  }
  return fd_jet(i, j);
}

void GridField::write_csv(std::ostream& os) const {
  os << "x,y,f\n";
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) {
      os << format_sci17(x_of(i)) << ',' << format_sci17(y_of(j)) << ','
         << format_sci17(value(i, j)) << '\n';
    }
  }
}

std::string GridField::meta_json() const {
  nlohmann::ordered_json meta;
  meta["domain"] = {{"x_min", dom_.x_min},
                    {"x_max", dom_.x_max},
                    {"y_min", dom_.y_min},
                    {"y_max", dom_.y_max}};
  meta["n_x"] = nx_;
  meta["n_y"] = ny_;
  return meta.dump(2);
}

GridField GridField::read_csv(std::istream& csv, const std::string& meta_json) {
  const auto meta = nlohmann::json::parse(meta_json);
  Domain2 dom{meta.at("domain").at("x_min").get<double>(),
              meta.at("domain").at("x_max").get<double>(),
              meta.at("domain").at("y_min").get<double>(),
              meta.at("domain").at("y_max").get<double>()};
  const int nx = meta.at("n_x").get<int>();
  const int ny = meta.at("n_y").get<int>();

  std::string line;
  if (!std::getline(csv, line) || line.rfind("x,y,f", 0) != 0) {
    throw std::invalid_argument("GridField::read_csv: missing x,y,f header");
  }
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(nx) * ny);
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw std::invalid_argument("GridField::read_csv: malformed row");
    }
    values.push_back(std::stod(line.substr(c2 + 1)));
  }
  return GridField(dom, nx, ny, std::move(values));
}

}  // namespace heisgeo
