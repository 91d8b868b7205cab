#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace triperiod {

using cdouble = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

namespace detail {

// Central finite differences, order <= 6, O(h^2) stencils with a
// scale-aware step.  Good to ~1e-6 relative for smooth inputs, which is all
// the norm estimation below needs.
cdouble fd_derivative(const std::function<cdouble(double)>& f, int order, double x,
                      double step_scale = 1.0);

}  // namespace detail

// Smooth function on the circle R/(period Z), period pi or 2pi.
//
// Exponential polynomials sum_k a_k e^{ikc} carry analytic derivatives; any
// other callable falls back to finite differences.  "even" records the
// reflection symmetry f(-c) = f(c); invariance under c -> c + period is what
// the period field asserts.  Sup norms of derivatives are sampled once at
// construction (257-point grid, 5% headroom).
class CircleFunction {
 public:
  using Eval = std::function<cdouble(double)>;
  using Deriv = std::function<cdouble(int, double)>;

  static CircleFunction exp_poly(std::vector<std::pair<int, cdouble>> terms, double period);
  static CircleFunction constant(cdouble value, double period);
  // Smooth bump supported on |c - center| < half_width (one copy per period).
  static CircleFunction bump(double center, double half_width, double period);
  static CircleFunction from_callable(Eval f, double period, bool even,
                                      double frequency_hint = 0.0, int max_order = 6);

  cdouble operator()(double c) const { return eval_(c); }
  cdouble deriv(int order, double c) const;

  double period() const { return period_; }
  bool even() const { return even_; }
  // Largest |d phase/dc| scale present, used to seed oscillation-aware panels.
  double frequency_hint() const { return frequency_hint_; }
  // sup over j <= order, c in [0, period) of |f^(j)(c)|  (sampled)
  double cnorm(int order) const;

 private:
  CircleFunction() = default;
  void sample_norms(int up_to);

  Eval eval_;
  Deriv deriv_;
  double period_ = 2.0 * kPi;
  bool even_ = false;
  double frequency_hint_ = 0.0;
  int max_order_ = 6;
  std::vector<double> norms_;  // norms_[k] = sampled sup of |f^(k)|
};

// Compactly supported smooth function on the line (amplitudes, phases and
// weight profiles for the beta / van der Corput machinery).  Phases are not
// compactly supported; for those the "support" is just the working interval.
class LineFunction {
 public:
  using Eval = std::function<cdouble(double)>;
  using Deriv = std::function<cdouble(int, double)>;

  static LineFunction bump(double center, double half_width);
  static LineFunction from_callable(Eval f, double lo, double hi, double frequency_hint = 0.0,
                                    int max_order = 6);
  static LineFunction with_derivative(Eval f, Deriv df, double lo, double hi,
                                      double frequency_hint = 0.0);

  cdouble operator()(double x) const { return eval_(x); }
  cdouble deriv(int order, double x) const;

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double cnorm(int order) const;

 private:
  LineFunction() = default;
  void sample_norms(int up_to);

  Eval eval_;
  Deriv deriv_;
  double lo_ = 0.0;
  double hi_ = 1.0;
  double frequency_hint_ = 0.0;
  int max_order_ = 6;
  std::vector<double> norms_;
};

// First-order differential operator xi = v(y) d/dy with derivatives of the
// coefficient available (needed to push xi through products exactly).
struct VectorField {
  std::function<double(double)> v;
  std::function<double(int, double)> v_deriv;  // d^k v / dy^k
};

// xi = y d/dy
VectorField euler_field();

}  // namespace triperiod
