#include "heunwell/specfun.hpp"

#include <cmath>
#include <limits>

namespace heunwell {

namespace {

constexpr int kMaxSeriesTerms = 4000;
constexpr long double kSeriesTol = 1e-19L;
const long double kSqrtPi = 1.7724538509055160272981674833411452L;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// M(alpha, beta, z) power series, z >= 0 expected by the caller.
long double kummer_series(long double alpha, long double beta, long double z) {
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    term *= (alpha + k) * z / ((beta + k) * (k + 1));
    sum += term;
    if (std::fabs(term) <= kSeriesTol * std::fabs(sum)) return sum;
  }
  throw ConvergenceError("kummer_m: series did not converge");
}

long double kummer_m_ld(long double alpha, long double beta, long double z) {
  if (is_nonpositive_integer(static_cast<double>(beta)))
    throw std::domain_error("kummer_m: beta at a pole");
  if (std::fabs(static_cast<double>(z)) > 11000.0)
    throw ConvergenceError("kummer_m: argument outside declared domain");
  if (z < 0.0L) return std::exp(z) * kummer_series(beta - alpha, beta, -z);
  return kummer_series(alpha, beta, z);
}

long double reciprocal_gamma_ld(long double x) {
  if (x <= 0.0L && x == std::floor(x)) return 0.0L;
  return 1.0L / std::tgamma(x);
}

// (2z)^nu * 2F0(-nu/2, (1-nu)/2; ; -1/z^2), valid for real z well past the
// transient layer; terminates exactly for non-negative integer nu.
double hermite_asymptotic(double nu, double z) {
  long double term = 1.0L;
  long double sum = 1.0L;
  long double prev = std::numeric_limits<long double>::max();
  const long double zz = static_cast<long double>(z) * z;
  for (int k = 0; k < 60; ++k) {
    term *= (-nu / 2 + k) * ((1.0L - nu) / 2 + k) / ((k + 1) * (-zz));
    if (std::fabs(term) > prev) break;  // asymptotic tail: stop at min term
    sum += term;
    prev = std::fabs(term);
    if (prev <= kSeriesTol * std::fabs(sum)) break;
  }
  return static_cast<double>(std::pow(2.0L * z, static_cast<long double>(nu)) * sum);
}

}  // namespace

double gamma_fn(double x) {
  if (is_nonpositive_integer(x))
    throw std::domain_error("gamma_fn: pole at non-positive integer");
  return std::tgamma(x);
}

double reciprocal_gamma(double x) {
  return static_cast<double>(reciprocal_gamma_ld(static_cast<long double>(x)));
}

double kummer_m(double alpha, double beta, double z) {
  return static_cast<double>(kummer_m_ld(alpha, beta, z));
}

ComplexValue hermite_h(double nu, AxisValue z) {
  if (z.kind == AxisValue::Kind::real) {
    const double zr = z.magnitude;
    if (zr >= 4.5 && zr >= std::sqrt(2.0 * std::fabs(nu)) + 2.0)
      return {hermite_asymptotic(nu, zr), 0.0};
    const long double w = static_cast<long double>(zr) * zr;
    const long double t1 =
        kummer_m_ld(-nu / 2.0L, 0.5L, w) * reciprocal_gamma_ld((1.0L - nu) / 2.0L);
    const long double t2 =
        2.0L * zr * kummer_m_ld((1.0L - nu) / 2.0L, 1.5L, w) * reciprocal_gamma_ld(-nu / 2.0L);
    const long double scale = std::pow(2.0L, static_cast<long double>(nu)) * kSqrtPi;
    return {static_cast<double>(scale * (t1 - t2)), 0.0};
  }
  // z = i t: z^2 = -t^2 real, the first Kummer term stays real and the
  // 2z factor makes the second purely imaginary.
  const double t = z.magnitude;
  const long double w = -static_cast<long double>(t) * t;
  const long double t1 =
      kummer_m_ld(-nu / 2.0L, 0.5L, w) * reciprocal_gamma_ld((1.0L - nu) / 2.0L);
  const long double t2 =
      2.0L * t * kummer_m_ld((1.0L - nu) / 2.0L, 1.5L, w) * reciprocal_gamma_ld(-nu / 2.0L);
  const long double scale = std::pow(2.0L, static_cast<long double>(nu)) * kSqrtPi;
  return {static_cast<double>(scale * t1), static_cast<double>(-scale * t2)};
}

double hermite_h_real(double nu, double z) {
  return hermite_h(nu, AxisValue::real_axis(z)).real();
}

double b0_constant() {
  return gamma_fn(1.0 / 3.0) / (6.0 * std::cbrt(3.0) * gamma_fn(2.0 / 3.0));
}

}  // namespace heunwell
