#pragma once

#include <stdexcept>
#include <string>
#include <vector>

// Vertical ruled surfaces X(t,s) = (t, a(t), s): fundamental forms, mean
// curvature, and the two ODE systems whose solutions sweep out the ruled
// minimal surfaces.

namespace heisgeo {

// Directrix data a(t), a'(t), a''(t) at one parameter value.
struct DirectrixJet {
  double a = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
};

// E,F,G / L,M,N in the basis {X_t, X_s}.
struct RuledForms {
  double E = 1.0, F = 0.0, G = 1.0;
  double L = 0.0, M = 0.0, N = 0.0;
};

// E = 1 + a1^2 + (a - t*a1)^2/4, F = (a - t*a1)/2, G = 1,
// L = ((a - t*a1)(1 + a1^2) - 2*a2) / (2*sqrt(1 + a1^2)),
// M = sqrt(1 + a1^2)/2, N = 0. Note EG - F^2 = 1 + a1^2 >= 1.
RuledForms ruled_forms(const DirectrixJet& d, double t);

// H = (EN + GL - 2FM) / (2(EG - F^2)) from ruled_forms.
double ruled_mean_curvature(const DirectrixJet& d, double t);

// The same quantity in closed form, -a2 / (2 (1 + a1^2)^{3/2}); the two
// routes agree to rounding and vanish exactly when a is affine.
double ruled_mean_curvature_closed(const DirectrixJet& d);

// Thrown when an integration produces a non-finite state.
class OdeDivergenceError : public std::runtime_error {
 public:
  OdeDivergenceError(const std::string& what, double last_valid_t)
      : std::runtime_error(what), last_valid_t(last_valid_t) {}
  double last_valid_t;
};

// Fixed-step trajectory of an ODE system. states is row-major:
// state k, component c lives at states[k*dim + c].
struct OdeTrajectory {
  std::string system;  // CLI-visible id ("item5", "item6")
  std::string method = "rk4";
  double step = 0.0;  // realized uniform step
  std::vector<std::string> state_names;
  std::vector<double> t;
  std::vector<double> states;

  int dim() const { return static_cast<int>(state_names.size()); }
  std::size_t size() const { return t.size(); }
  double state(std::size_t k, int c) const {
    return states[k * state_names.size() + static_cast<std::size_t>(c)];
  }
  double last_state(int c) const { return state(size() - 1, c); }

  // CSV with header "t,<state names...>" in 17-significant-digit form.
  void write_csv(std::ostream& os) const;
};

// Classical RK4 on R'' = 2R(R'+1)(R'+2) / (4+R^2) from (R0, R1) over
// [t0, t1]. The denominator never vanishes. The requested step is snapped
// to span/round(span/step) so the grid is exactly uniform. R = -t and
// R = -2t are exact solutions and are preserved to rounding.
// Throws OdeDivergenceError when the state leaves the finite range and
// std::invalid_argument on a bad span or step.
OdeTrajectory integrate_slope_ode(double R0, double R1, double t0, double t1,
                                  double step);

// Classical RK4 on the coupled system
//   u'' = (1 + 2u'a') t u' / (1 + u^2 + t^2)
//   a'' = (1 + 2u'a') (t a' - u) / (1 + u^2 + t^2)
// from (u0, u1, a0, a1). With u = 0, u' = 0 the u-component stays zero and
// a solves (1+t^2) a'' - t a' = 0.
OdeTrajectory integrate_directrix_system(double u0, double u1, double a0,
                                         double a1, double t0, double t1,
                                         double step);

// General solution of (1+t^2) a'' - t a' = 0:
// a(t) = (lambda/2) [t sqrt(1+t^2) + asinh(t)] + mu, with a(0) = mu and
// a'(t) = lambda sqrt(1+t^2).
double closed_form_a(double lambda, double mu, double t);

}  // namespace heisgeo
