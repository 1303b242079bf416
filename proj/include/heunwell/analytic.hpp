#ifndef HEUNWELL_ANALYTIC_HPP
#define HEUNWELL_ANALYTIC_HPP

#include <vector>

#include "heunwell/model.hpp"
#include "heunwell/specfun.hpp"

namespace heunwell {

struct WaveSample {
  double x = 0.0;
  ComplexValue psi{0.0, 0.0};
};

enum class WaveProvenance { analytic, oracle };

struct WaveTable {
  std::vector<WaveSample> samples;
  WaveProvenance provenance = WaveProvenance::analytic;
  bool normalized = false;
  double norm = 0.0;  // quadrature norm removed by normalize(), 0 if never set
};

/// One fundamental solution of the Schrodinger equation:
///   psi_F = x^{-1/4} e^{-y^2/2} [ H_{a+1/2}(y)
///           + (sqrt(2a) + A (2a)^{1/6}) (1 + eps hbar^2 sqrt(x)/(4 m V1)) H_{a-1/2}(y) ],
///   y = sqrt(-eps x) - sqrt(2a).
/// Minus branch (eps < 0, A = 1): everything is real. Plus branch (eps > 0,
/// a < 0, A = e^{4 i pi/3}): the radicals are taken on the principal branch,
/// sqrt(-eps x) = i sqrt(eps x) and sqrt(2a) = i sqrt(2|a|), so y is purely
/// imaginary and the result is genuinely complex.
/// Requires x > 0, E < V0, V1 > 0, V2 = 0. Below x = 1e-8 the expression is
/// not evaluated (cancellation between the x^{-1/4} prefactor and the
/// vanishing bracket); a domain error is thrown instead.
ComplexValue fundamental_solution(const PhysParams& p, double E, Branch b, double x);

/// c1 * psi_F(minus) + c2 * psi_F(plus).
ComplexValue general_solution(const PhysParams& p, double E, ComplexValue c1,
                              ComplexValue c2, double x);

/// Minus-branch solution at E = energy_of_a(a_n), tabulated on the grid.
/// a_n must satisfy |spectrum_lhs(a_n)| <= root_tol or a std::invalid_argument
/// is thrown (root-validity check).
WaveTable bound_wavefunction(const PhysParams& p, double a_n,
                             const std::vector<double>& grid,
                             double root_tol = 1e-6);

/// Scales the table so the trapezoid quadrature of |psi|^2 is 1. Requires the
/// tail amplitudes at both grid ends to be below decay_tol * max |psi|.
/// (A bound state only vanishes as x^{5/4} toward the origin, so the default
/// tolerance accommodates grids that start around x ~ 1e-2.)
WaveTable normalize(const WaveTable& w, double decay_tol = 0.05);

/// max over interior grid points of |psi'' + (2m/hbar^2)(E - V) psi|,
/// normalized by the largest magnitude either term reaches on the grid, with
/// psi'' by three-point differences. The primary falsifier for the
/// fundamental-solution transcription: a wrong transcription leaves an O(1)
/// defect where psi is large. Needs at least 5 grid points.
/// An identically-zero table is rejected as degenerate (returns 0).
double schrodinger_residual(const PhysParams& p, double E, const WaveTable& w);

/// |<w1, w2>| / (||w1|| ||w2||) by trapezoid quadrature; the tables must share
/// their grid.
double overlap(const WaveTable& w1, const WaveTable& w2);

/// Uniform grid helper, n >= 2 points on [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, int n);

}  // namespace heunwell

#endif
