#include "heisgeo/ruled_geometry.hpp"

#include <array>
#include <cmath>
#include <ostream>
#include <sstream>

#include "heisgeo/format.hpp"

namespace heisgeo {

RuledForms ruled_forms(const DirectrixJet& d, double t) {
  const double rad = 1.0 + d.a1 * d.a1;
  const double root = std::sqrt(rad);
  const double half_c = 0.5 * (d.a - t * d.a1);
  RuledForms f;
  f.E = rad + half_c * half_c;
  f.F = half_c;
  f.G = 1.0;
  f.L = ((d.a - t * d.a1) * rad - 2.0 * d.a2) / (2.0 * root);
  f.M = 0.5 * root;
  f.N = 0.0;
  return f;
}

double ruled_mean_curvature(const DirectrixJet& d, double t) {
  const RuledForms f = ruled_forms(d, t);
  return 0.5 * (f.E * f.N + f.G * f.L - 2.0 * f.F * f.M) /
         (f.E * f.G - f.F * f.F);
}

double ruled_mean_curvature_closed(const DirectrixJet& d) {
  const double rad = 1.0 + d.a1 * d.a1;
  return -d.a2 / (2.0 * rad * std::sqrt(rad));
}

double closed_form_a(double lambda, double mu, double t) {
  const double s = std::sqrt(1.0 + t * t);
  return 0.5 * lambda * (t * s + std::asinh(t)) + mu;
}

void OdeTrajectory::write_csv(std::ostream& os) const {
  os << 't';
  for (const auto& name : state_names) os << ',' << name;
  os << '\n';
  const std::size_t d = state_names.size();
  for (std::size_t k = 0; k < t.size(); ++k) {
    os << format_sci17(t[k]);
    for (std::size_t c = 0; c < d; ++c) {
      os << ',' << format_sci17(states[k * d + c]);
    }
    os << '\n';
  }
}

namespace {

// Classical fixed-step RK4. Deriv maps (t, state) -> state derivative.
template <std::size_t N, typename Deriv>
OdeTrajectory run_rk4(Deriv deriv, std::array<double, N> y, double t0,
                      double t1, double step, std::string system,
                      std::vector<std::string> names) {
  if (!(std::isfinite(t0) && std::isfinite(t1)) || !(t1 > t0)) {
    throw std::invalid_argument("integrate: span must be finite with t1 > t0");
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("integrate: step must be positive");
  }
  for (double v : y) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("integrate: non-finite initial state");
    }
  }

  const double span = t1 - t0;
  const long long nsteps =
      std::max<long long>(1, static_cast<long long>(std::llround(span / step)));
  const double h = span / static_cast<double>(nsteps);

  OdeTrajectory traj;
  traj.system = std::move(system);
  traj.step = h;
  traj.state_names = std::move(names);
  traj.t.reserve(static_cast<std::size_t>(nsteps) + 1);
  traj.states.reserve((static_cast<std::size_t>(nsteps) + 1) * N);

  auto push = [&traj, &y](double tk) {
    traj.t.push_back(tk);
    for (double v : y) traj.states.push_back(v);
  };
  push(t0);

  std::array<double, N> k1, k2, k3, k4, tmp;
  for (long long s = 0; s < nsteps; ++s) {
    const double tk = t0 + static_cast<double>(s) * h;
    k1 = deriv(tk, y);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    k2 = deriv(tk + 0.5 * h, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    k3 = deriv(tk + 0.5 * h, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * k3[i];
    k4 = deriv(tk + h, tmp);
    bool finite = true;
    for (std::size_t i = 0; i < N; ++i) {
      y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      finite = finite && std::isfinite(y[i]);
    }
    if (!finite) {
      std::ostringstream msg;
      msg << "integrate: state diverged after t = " << tk;
      throw OdeDivergenceError(msg.str(), tk);
    }
    push(t0 + static_cast<double>(s + 1) * h);
  }
  return traj;
}

}  // namespace

OdeTrajectory integrate_slope_ode(double R0, double R1, double t0, double t1,
                                  double step) {
  auto deriv = [](double /*t*/, const std::array<double, 2>& y) {
    const double R = y[0];
    const double V = y[1];
    return std::array<double, 2>{
        V, 2.0 * R * (V + 1.0) * (V + 2.0) / (4.0 + R * R)};
  };
  return run_rk4<2>(deriv, {R0, R1}, t0, t1, step, "item5", {"R", "R1"});
}

OdeTrajectory integrate_directrix_system(double u0, double u1, double a0,
                                         double a1, double t0, double t1,
                                         double step) {
  auto deriv = [](double t, const std::array<double, 4>& y) {
    const double u = y[0];
    const double up = y[1];
    const double ap = y[3];
    const double denom = 1.0 + u * u + t * t;
    const double common = 1.0 + 2.0 * up * ap;
    return std::array<double, 4>{up, common * t * up / denom, ap,
                                 common * (t * ap - u) / denom};
  };
  return run_rk4<4>(deriv, {u0, u1, a0, a1}, t0, t1, step, "item6",
                    {"u", "u1", "a", "a1"});
}

}  // namespace heisgeo
