#ifndef HEUNWELL_SPECTRUM_HPP
#define HEUNWELL_SPECTRUM_HPP

#include <utility>
#include <vector>

#include "heunwell/model.hpp"

namespace heunwell {

enum class Provenance { exact, trig_approx, closed_form, oracle };

/// One bound state. Indices start at n = 1; the root a = 1/2 is excluded
/// (it yields the identically-zero wave function).
struct Level {
  int n = 0;
  double a_n = 0.0;  // 0 when the method has no spectral root (closed form)
  double E_n = 0.0;
  Provenance provenance = Provenance::exact;
};

/// The root of the spectrum equation that carries no state; detected by
/// find_roots and excluded from the level indexing.
inline constexpr double kDiscardedRoot = 0.5;

/// Left side of the exact spectrum equation:
/// H_{a+1/2}(-sqrt(2a)) + (sqrt(2a) + (2a)^{1/6}) H_{a-1/2}(-sqrt(2a)).
double spectrum_lhs(double a);

/// Scans spectrum_lhs on (1/2 + scan_step, a_max], brackets sign changes and
/// bisects to |da| <= 1e-12. Deterministic; roots are returned in increasing
/// order and indexed n = 1, 2, ...
std::vector<double> find_roots(double a_max, double scan_step = 0.01);

/// Exact levels: roots of the spectrum equation mapped through energy_of_a.
std::vector<Level> exact_levels(const PhysParams& p, int n_max);

/// Exact ratio form F(a) = 1 + (sqrt(2a)+(2a)^{1/6}) H_{a-1/2}/H_{a+1/2}
/// evaluated at -sqrt(2a). Has poles where the denominator Hermite function
/// vanishes; root-finding uses spectrum_lhs instead.
double f_ratio(double a);

/// Trigonometric approximation of F, verbatim including the asymmetric
/// denominator term 6 B0 a^{1/3} (the numerator carries 6 B0 2^{-1/3}).
double f_ratio_approx(double a);

/// Roots of sin(pi a - pi/3) - kappa sin(pi a + pi/3) = 0, one per unit
/// interval, by the closed-form arctan inversion
/// tan(pi a) = sqrt(3) (1 + kappa) / (1 - kappa).
/// Default kappa = 6 B0 2^{-1/3}; kappa = 1 degenerates to a_n = n + 1/2.
std::vector<double> trig_roots(int n_max, double kappa);
std::vector<double> trig_roots(int n_max);

/// E_n = V0 - 32 m^3 V1^4 / (hbar^6 (2n+1)^{2/3}), n = 1..n_max.
std::vector<Level> closed_form_levels(const PhysParams& p, int n_max);

/// Relative error of the closed-form levels against the exact ones, per n.
std::vector<std::pair<int, double>> error_report(const PhysParams& p, int n_max);

}  // namespace heunwell

#endif
