#ifndef HEUNWELL_SPECFUN_HPP
#define HEUNWELL_SPECFUN_HPP

#include <complex>
#include <stdexcept>

namespace heunwell {

/// Raised when an iterative evaluation fails to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A real number or a purely imaginary one, kept on its axis so that the
/// special-function kernels can work with the real quantity z^2 throughout.
struct AxisValue {
  enum class Kind { real, imaginary };

  Kind kind = Kind::real;
  double magnitude = 0.0;  // value is magnitude (real) or i*magnitude (imaginary)

  static AxisValue real_axis(double v) { return {Kind::real, v}; }
  static AxisValue imaginary_axis(double v) { return {Kind::imaginary, v}; }

  // z^2 is real on both axes: +m^2 on the real axis, -m^2 on the imaginary one.
  double squared() const {
    return kind == Kind::real ? magnitude * magnitude : -magnitude * magnitude;
  }
};

using ComplexValue = std::complex<double>;

/// Gamma function for real arguments, reflection handled for negative
/// non-integers. Throws std::domain_error at the poles.
double gamma_fn(double x);

/// 1/Gamma(x) with the limit value 0 at the poles.
double reciprocal_gamma(double x);

/// Kummer confluent hypergeometric M(alpha, beta, z) for real arguments.
///
/// Direct power series for z >= 0 (terms are eventually single-signed, so no
/// cancellation); for z < 0 the series alternates, so the Kummer transform
/// M(alpha,beta,z) = e^z M(beta-alpha, beta, -z) is applied and the series is
/// again evaluated at a non-negative argument. Accumulation is in long double.
/// Declared domain |z| <= 700 with relative accuracy ~1e-12 (target 1e-10).
double kummer_m(double alpha, double beta, double z);

/// Hermite function of arbitrary real order nu on a real or purely imaginary
/// argument, via the two-Kummer representation
///   H_nu(z) = 2^nu sqrt(pi) [ M(-nu/2,1/2,z^2)/Gamma((1-nu)/2)
///                             - 2 z M((1-nu)/2,3/2,z^2)/Gamma(-nu/2) ].
/// For large positive real z the two Kummer terms cancel to ~e^{-z^2} of
/// their size, so the (2z)^nu-leading asymptotic series is used instead once
/// z >= 4.5 and z is past the transient layer z ~ sqrt(2 nu).
/// At integer nu the 1/Gamma poles zero the corresponding term and the result
/// reduces to the Hermite polynomial.
ComplexValue hermite_h(double nu, AxisValue z);

/// Convenience overload for real arguments; the result is real.
double hermite_h_real(double nu, double z);

/// B0 = Gamma(1/3) / (6 * 3^(1/3) * Gamma(2/3)) = 0.22862019403307472...
double b0_constant();

}  // namespace heunwell

#endif
