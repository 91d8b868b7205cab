#pragma once

#include <functional>
#include <span>
#include <vector>

#include "triperiod/functions.hpp"

namespace triperiod::oscquad {

// Adaptive Gauss-Kronrod (7-15) quadrature for oscillatory integrands with
// declared algebraic singularities |x - s|^sigma, Re sigma > -1.
//
// Strategy:
//   * the interval is split at every declared singular point;
//   * on each sub-segment touching a singularity the substitution
//     x = s +/- u^2 removes a |x-s|^{-1/2} factor exactly (the only exponent
//     the kernels here produce) and softens any other integrable power;
//   * the declared maximum local frequency seeds the initial panels so that
//     no panel spans more than a few radians of phase; adaptive bisection
//     by largest error term does the rest (in particular it resolves the
//     logarithmic phase pile-up |x|^{-it} near singular points, where the
//     local frequency exceeds any a-priori bound).
//
// Integrands are evaluated through a context-passing interface: when a panel
// lives in substituted coordinates, the integrand receives the index of the
// governing singular point and the exact signed distance x - s computed in
// the substitution variable.  This keeps |x - s| fully accurate down to
// distances ~1e-30, where forming x - s naively would lose every digit.

struct SingularPoint {
  double location = 0.0;
  double exponent_re = -0.5;  // Re sigma of the local |x - s|^sigma factor, > -1
};

struct Options {
  double rel_tol = 1e-8;
  double abs_tol = 1e-14;
  // Caller-declared maximum |d phase/dx| away from singular points.
  double max_frequency = 0.0;
  long long max_evals = 10'000'000;
  int max_depth = 52;
  // Maximum radians of declared phase per initial panel.  GK15 resolves
  // ~6 radians to near machine precision; adaptivity covers the excess.
  double panel_phase_budget = 6.0;
};

struct QuadResult {
  cdouble value{};
  double err_estimate = 0.0;
  long long n_evals = 0;
  bool converged = false;
};

// x: evaluation point; sing_index: index into the singularity list when a
// substitution is active (-1 otherwise); signed_dist: exact x - s for that
// singular point (meaningless when sing_index < 0).
using Integrand = std::function<cdouble(double x, int sing_index, double signed_dist)>;

QuadResult integrate_line(const Integrand& f, double a, double b,
                          std::span<const SingularPoint> singularities, const Options& opt = {});

// One full period of a periodic integrand; singular locations are taken
// modulo the period.
QuadResult integrate_circle(const Integrand& f, double period,
                            std::span<const SingularPoint> singularities,
                            const Options& opt = {});

// Adapter for integrands that do not need the distance context.
Integrand plain(std::function<cdouble(double)> f);

}  // namespace triperiod::oscquad
