#include "triperiod/functions.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace triperiod {

namespace detail {

cdouble fd_derivative(const std::function<cdouble(double)>& f, int order, double x,
                      double step_scale) {
  if (order == 0) return f(x);
  // step balances truncation O(h^2) against cancellation eps/h^order
  static const double steps[7] = {0.0, 5e-6, 2e-4, 1.5e-3, 6e-3, 1.5e-2, 3e-2};
  if (order < 0 || order > 6) throw std::domain_error("fd_derivative: order must be in [0,6]");
  const double h = steps[order] * step_scale;
  auto at = [&](double u) { return f(x + u * h); };
  switch (order) {
    case 1:
      return (at(-2) - 8.0 * at(-1) + 8.0 * at(1) - at(2)) / (12.0 * h);
    case 2:
      return (-at(-2) + 16.0 * at(-1) - 30.0 * at(0) + 16.0 * at(1) - at(2)) / (12.0 * h * h);
    case 3:
      return (-at(-2) + 2.0 * at(-1) - 2.0 * at(1) + at(2)) / (-2.0 * h * h * h);
    case 4:
      return (at(-2) - 4.0 * at(-1) + 6.0 * at(0) - 4.0 * at(1) + at(2)) / (h * h * h * h);
    case 5:
      return (-at(-3) + 4.0 * at(-2) - 5.0 * at(-1) + 5.0 * at(1) - 4.0 * at(2) + at(3)) /
             (2.0 * std::pow(h, 5));
    default:
      return (at(-3) - 6.0 * at(-2) + 15.0 * at(-1) - 20.0 * at(0) + 15.0 * at(1) - 6.0 * at(2) +
              at(3)) /
             std::pow(h, 6);
  }
}

}  // namespace detail

// ---------------------------------------------------------------- circle ---

CircleFunction CircleFunction::exp_poly(std::vector<std::pair<int, cdouble>> terms,
                                        double period) {
  CircleFunction f;
  f.period_ = period;
  // A term e^{ikc} has period pi iff k is even; 2pi otherwise.  Callers pick
  // the period; we only record the largest frequency.
  int kmax = 0;
  bool even = true;
  for (const auto& [k, a] : terms) {
    kmax = std::max(kmax, std::abs(k));
    if (k != 0 && std::abs(a) > 0.0) even = false;
  }
  // e^{ikc} + e^{-ikc} pairs with equal coefficients are (-c)-even
  if (!even) {
    even = true;
    for (const auto& [k, a] : terms) {
      cdouble mirror{};
      for (const auto& [k2, a2] : terms)
        if (k2 == -k) mirror += a2;
      if (std::abs(mirror - a) > 1e-14 * (1.0 + std::abs(a))) even = false;
    }
  }
  auto shared = std::make_shared<std::vector<std::pair<int, cdouble>>>(std::move(terms));
  f.eval_ = [shared](double c) {
    cdouble s{};
    for (const auto& [k, a] : *shared) s += a * std::polar(1.0, k * c);
    return s;
  };
  f.deriv_ = [shared](int order, double c) {
    cdouble s{};
    for (const auto& [k, a] : *shared)
      s += a * std::pow(cdouble(0.0, double(k)), order) * std::polar(1.0, k * c);
    return s;
  };
  f.even_ = even;
  f.frequency_hint_ = double(kmax);
  f.max_order_ = 64;
  f.sample_norms(4);
  return f;
}

CircleFunction CircleFunction::constant(cdouble value, double period) {
  return exp_poly({{0, value}}, period);
}

CircleFunction CircleFunction::bump(double center, double half_width, double period) {
  if (half_width <= 0.0 || 2.0 * half_width >= period)
    throw std::domain_error("CircleFunction::bump: need 0 < half_width < period/2");
  CircleFunction f;
  f.period_ = period;
  f.even_ = false;
  f.frequency_hint_ = 2.0 / half_width;
  auto eval = [center, half_width, period](double c) -> cdouble {
    double d = std::remainder(c - center, period);
    double y = d / half_width;
    if (std::abs(y) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - y * y));
  };
  f.eval_ = eval;
  f.deriv_ = [eval, half_width](int order, double c) {
    return detail::fd_derivative(eval, order, c, std::min(1.0, half_width));
  };
  f.max_order_ = 6;
  f.sample_norms(4);
  return f;
}

CircleFunction CircleFunction::from_callable(Eval f, double period, bool even,
                                             double frequency_hint, int max_order) {
  CircleFunction g;
  g.period_ = period;
  g.even_ = even;
  g.frequency_hint_ = frequency_hint;
  g.eval_ = f;
  g.deriv_ = [f](int order, double c) { return detail::fd_derivative(f, order, c); };
  g.max_order_ = max_order;
  g.sample_norms(4);
  return g;
}

cdouble CircleFunction::deriv(int order, double c) const {
  if (order < 0 || order > max_order_)
    throw std::domain_error("CircleFunction::deriv: unsupported order");
  if (order == 0) return eval_(c);
  return deriv_(order, c);
}

void CircleFunction::sample_norms(int up_to) {
  const int n = 257;
  norms_.assign(up_to + 1, 0.0);
  for (int k = 0; k <= up_to; ++k) {
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
      double c = period_ * (i + 0.31) / n;
      m = std::max(m, std::abs(k == 0 ? eval_(c) : deriv_(k, c)));
    }
    norms_[k] = 1.05 * m;
  }
  // cnorm(k) is a sup over all orders <= k
  for (size_t k = 1; k < norms_.size(); ++k) norms_[k] = std::max(norms_[k], norms_[k - 1]);
}

double CircleFunction::cnorm(int order) const {
  if (order < 0) throw std::domain_error("cnorm: negative order");
  if (order < int(norms_.size())) return norms_[order];
  // rarely used beyond 4; sample on demand
  double m = norms_.back();
  const int n = 257;
  for (int k = int(norms_.size()); k <= order; ++k)
    for (int i = 0; i < n; ++i) {
      double c = period_ * (i + 0.31) / n;
      m = std::max(m, std::abs(deriv_(k, c)));
    }
  return 1.05 * m;
}

// ------------------------------------------------------------------ line ---

LineFunction LineFunction::bump(double center, double half_width) {
  if (half_width <= 0.0) throw std::domain_error("LineFunction::bump: half_width <= 0");
  LineFunction f;
  f.lo_ = center - half_width;
  f.hi_ = center + half_width;
  f.frequency_hint_ = 2.0 / half_width;
  auto eval = [center, half_width](double x) -> cdouble {
    double y = (x - center) / half_width;
    if (std::abs(y) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - y * y));
  };
  f.eval_ = eval;
  f.deriv_ = [eval, half_width](int order, double x) {
    return detail::fd_derivative(eval, order, x, std::min(1.0, half_width));
  };
  f.max_order_ = 6;
  f.sample_norms(4);
  return f;
}

LineFunction LineFunction::from_callable(Eval f, double lo, double hi, double frequency_hint,
                                         int max_order) {
  LineFunction g;
  g.lo_ = lo;
  g.hi_ = hi;
  g.frequency_hint_ = frequency_hint;
  g.eval_ = f;
  double scale = std::min(1.0, (hi - lo) / 8.0);
  g.deriv_ = [f, scale](int order, double x) { return detail::fd_derivative(f, order, x, scale); };
  g.max_order_ = max_order;
  g.sample_norms(4);
  return g;
}

LineFunction LineFunction::with_derivative(Eval f, Deriv df, double lo, double hi,
                                           double frequency_hint) {
  LineFunction g;
  g.lo_ = lo;
  g.hi_ = hi;
  g.frequency_hint_ = frequency_hint;
  g.eval_ = f;
  g.deriv_ = std::move(df);
  g.max_order_ = 64;
  g.sample_norms(4);
  return g;
}

cdouble LineFunction::deriv(int order, double x) const {
  if (order < 0 || order > max_order_)
    throw std::domain_error("LineFunction::deriv: unsupported order");
  if (order == 0) return eval_(x);
  return deriv_(order, x);
}

void LineFunction::sample_norms(int up_to) {
  const int n = 257;
  norms_.assign(up_to + 1, 0.0);
  for (int k = 0; k <= up_to; ++k) {
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
      double x = lo_ + (hi_ - lo_) * (i + 0.31) / n;
      m = std::max(m, std::abs(k == 0 ? eval_(x) : deriv_(k, x)));
    }
    norms_[k] = 1.05 * m;
  }
  for (size_t k = 1; k < norms_.size(); ++k) norms_[k] = std::max(norms_[k], norms_[k - 1]);
}

double LineFunction::cnorm(int order) const {
  if (order < 0) throw std::domain_error("cnorm: negative order");
  if (order < int(norms_.size())) return norms_[order];
  double m = norms_.back();
  const int n = 257;
  for (int k = int(norms_.size()); k <= order; ++k)
    for (int i = 0; i < n; ++i) {
      double x = lo_ + (hi_ - lo_) * (i + 0.31) / n;
      m = std::max(m, std::abs(deriv_(k, x)));
    }
  return 1.05 * m;
}

VectorField euler_field() {
  return VectorField{
      [](double y) { return y; },
      [](int k, double y) { return k == 0 ? y : (k == 1 ? 1.0 : 0.0); },
  };
}

}  // namespace triperiod
