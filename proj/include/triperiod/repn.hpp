#pragma once

#include <complex>

#include "triperiod/functions.hpp"

namespace triperiod::repn {

// Fixed pair of principal-series parameters (tau, tau') together with the
// derived cutoff S = 2(|tau| + |tau'|) + 1.  Both parameters are purely
// imaginary; construction takes the imaginary parts.
class RepParams {
 public:
  RepParams(double tau_im, double tau_prime_im)
      : tau_im_(tau_im), tau_prime_im_(tau_prime_im) {}

  cdouble tau() const { return {0.0, tau_im_}; }
  cdouble tau_prime() const { return {0.0, tau_prime_im_}; }
  double s_cutoff() const { return 2.0 * (std::abs(tau_im_) + std::abs(tau_prime_im_)) + 1.0; }

 private:
  double tau_im_;
  double tau_prime_im_;
};

// Spectral parameter: principal series lambda = it (t real) or complementary
// series lambda = s in (0,1).  Everything downstream computes only with the
// principal variant; the complementary one is stored for completeness and
// rejected by every analytic operation.
class SpectralParam {
 public:
  static SpectralParam principal(double t) { return SpectralParam(true, t); }
  static SpectralParam complementary(double s);

  bool is_principal() const { return principal_; }
  double t() const;           // principal only
  double s() const;           // complementary only
  cdouble lambda() const { return principal_ ? cdouble{0.0, value_} : cdouble{value_, 0.0}; }

 private:
  SpectralParam(bool principal, double value) : principal_(principal), value_(value) {}
  bool principal_;
  double value_;
};

// throws std::domain_error unless lam is the principal variant
void require_principal(const SpectralParam& lam, const char* who);

enum class TestVectorKind { plain, tilde };

// Diagonal-K-invariant test vector w_n (plain) or w_n + w_{n+2} (tilde),
// identified by the K-type index n (even, >= 0).
struct TestVector {
  int n = 0;
  TestVectorKind kind = TestVectorKind::plain;
};

TestVector make_test_vector(int n, TestVectorKind kind);

// Reduced amplitude phi: 1 for plain, 1 + e^{2ic} for tilde.  Period pi.
CircleFunction profile_of(const TestVector& w);
// Full reduced profile u(c) = e^{inc} phi(c).  Period pi.
CircleFunction reduced_profile(const TestVector& w);

// Kernel of the model trilinear functional on the circle:
//   |sin(x-y)|^{(-tau-tau'+lam-1)/2} |sin(x-z)|^{(-tau+tau'-lam-1)/2}
//   |sin(y-z)|^{(tau-tau'-lam-1)/2}
// Powers of positive reals use the principal logarithm.  Throws
// singularity_error when any pairwise difference is a multiple of pi.
cdouble eval_kernel(const RepParams& p, const SpectralParam& lam, double x, double y, double z);

// |sin(arg)|^w via the principal branch, with the |sin| argument supplied
// directly (used by the quadrature layer to keep tiny distances exact).
cdouble abs_sin_pow(double arg, cdouble w);

}  // namespace triperiod::repn
