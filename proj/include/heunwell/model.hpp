#ifndef HEUNWELL_MODEL_HPP
#define HEUNWELL_MODEL_HPP

#include <complex>

namespace heunwell {

/// Physical constants and potential strengths. No unit system is enforced;
/// the caller fixes conventions (m = hbar = 1 in all reference runs).
struct PhysParams {
  double m = 1.0;
  double hbar = 1.0;
  double V0 = 0.0;
  double V1 = 1.0;
  double V2 = 0.0;
};

/// Selects the fundamental solution: sign of epsilon and the phase A.
enum class Branch { minus, plus };

/// Phase A of the fundamental solution: 1 on the minus branch,
/// e^{4 i pi / 3} on the plus branch.
std::complex<double> branch_phase(Branch b);

/// V(x) = V0 + 5 hbar^2/(32 m x^2) + V1 x^{-3/2} + V2/x
///        + 8 m V1 (-2 m V1^2 + hbar^2 V2) hbar^{-4} x^{-1/2}.
/// With V2 = 0 the sqrt(x) coefficient reduces to -16 m^2 V1^3 / hbar^4.
double potential(const PhysParams& p, double x);

/// epsilon = +-sqrt(8 m (V0 - E)) / hbar, sign taken from the branch.
/// Requires E < V0.
double epsilon_of_energy(const PhysParams& p, double E, Branch b);

/// a = -2^11 m^6 V1^6 / (hbar^12 epsilon^3); positive on the minus branch.
double a_of_energy(const PhysParams& p, double E, Branch b);

/// Inverse of a_of_energy on the minus branch:
/// E = V0 - 2^{13/3} a^{-2/3} m^3 V1^4 / hbar^6, for a > 0.
double energy_of_a(const PhysParams& p, double a);

}  // namespace heunwell

#endif
