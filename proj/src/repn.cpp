#include "triperiod/repn.hpp"

#include <cmath>
#include <stdexcept>

#include "triperiod/errors.hpp"

namespace triperiod::repn {

SpectralParam SpectralParam::complementary(double s) {
  if (!(s > 0.0 && s < 1.0))
    throw std::domain_error("SpectralParam: complementary parameter must lie in (0,1)");
  return SpectralParam(false, s);
}

double SpectralParam::t() const {
  if (!principal_) throw std::domain_error("SpectralParam::t: not a principal parameter");
  return value_;
}

double SpectralParam::s() const {
  if (principal_) throw std::domain_error("SpectralParam::s: not a complementary parameter");
  return value_;
}

void require_principal(const SpectralParam& lam, const char* who) {
  if (!lam.is_principal())
    throw std::domain_error(std::string(who) + ": complementary-series parameter not supported");
}

TestVector make_test_vector(int n, TestVectorKind kind) {
  if (n < 0) throw std::domain_error("make_test_vector: K-type index must be non-negative");
  if (n % 2 != 0) throw std::domain_error("make_test_vector: K-type index must be even");
  return TestVector{n, kind};
}

CircleFunction profile_of(const TestVector& w) {
  if (w.kind == TestVectorKind::plain) return CircleFunction::exp_poly({{0, 1.0}}, kPi);
  return CircleFunction::exp_poly({{0, 1.0}, {2, 1.0}}, kPi);
}

CircleFunction reduced_profile(const TestVector& w) {
  if (w.kind == TestVectorKind::plain) return CircleFunction::exp_poly({{w.n, 1.0}}, kPi);
  return CircleFunction::exp_poly({{w.n, 1.0}, {w.n + 2, 1.0}}, kPi);
}

cdouble abs_sin_pow(double arg, cdouble w) {
  double s = std::abs(std::sin(arg));
  if (s < 1e-300) throw singularity_error("abs_sin_pow: |sin| vanishes");
  return std::exp(w * std::log(s));
}

cdouble eval_kernel(const RepParams& p, const SpectralParam& lam, double x, double y, double z) {
  require_principal(lam, "eval_kernel");
  const cdouble tau = p.tau(), taup = p.tau_prime(), l = lam.lambda();
  const double tiny = 1e-12;
  if (std::abs(std::sin(x - y)) < tiny || std::abs(std::sin(x - z)) < tiny ||
      std::abs(std::sin(y - z)) < tiny)
    throw singularity_error("eval_kernel: evaluation on the singular set");
  return abs_sin_pow(x - y, (-tau - taup + l - 1.0) / 2.0) *
         abs_sin_pow(x - z, (-tau + taup - l - 1.0) / 2.0) *
         abs_sin_pow(y - z, (tau - taup - l - 1.0) / 2.0);
}

}  // namespace triperiod::repn
