#ifndef HEUNWELL_ORACLE_HPP
#define HEUNWELL_ORACLE_HPP

#include <vector>

#include "heunwell/analytic.hpp"
#include "heunwell/model.hpp"
#include "heunwell/spectrum.hpp"

namespace heunwell {

/// Grid and tolerance settings for the shooting eigensolver.
struct ShootingConfig {
  double x_start = 1e-4;
  double x_end = 0.0;  // 0 = auto: 3x the outer classical turning point
  int steps = 200000;
  double energy_tol = 1e-10;  // relative
  int max_bisections = 200;
};

struct BoundaryData {
  double psi = 0.0;
  double dpsi = 0.0;
};

struct IntegrationResult {
  double log_derivative = 0.0;  // psi'/psi at x_end
  int node_count = 0;           // interior sign changes
  double psi_end = 0.0;         // renormalized terminal values
  double dpsi_end = 0.0;
};

/// Frobenius series of the regular solution at the origin,
///   psi = x^{5/4} (1 + c_1 sqrt(x) + c_2 x + ...),
/// where 5/4 solves the indicial equation s(s-1) = 5/16 of the fixed
/// centrifugal term and c_k = 4 (A3 c_{k-1} + A2 c_{k-2} + A1 c_{k-3}
/// + A0 c_{k-4}) / (k (k+3)) with A* the x^{-3/2}..x^0 coefficients of
/// (2m/hbar^2)(V - E). In particular c_1 = 2 m V1 / hbar^2.
/// Throws if the series has not converged at x0 (cutoff too large).
BoundaryData frobenius_boundary(const PhysParams& p, double E, double x0);

/// Outer classical turning point: the solution of V(x) = E beyond the
/// potential minimum. Requires V_min < E < V0.
double outer_turning_point(const PhysParams& p, double E);

/// Location of the potential minimum (single-well shape assumed).
double potential_minimum(const PhysParams& p);

/// Numerov integration of psi'' = (2m/hbar^2)(V - E) psi from the Frobenius
/// boundary data to x_end, fixed step, with periodic renormalization against
/// overflow. Throws on unrecoverable overflow.
IntegrationResult integrate_outward(const PhysParams& p, double E,
                                    const ShootingConfig& cfg);

/// Eigenvalues by node-count bracketing plus bisection on the terminal decay
/// mismatch psi' + k_WKB psi at x_end, k_WKB = sqrt(2m(V - E))/hbar.
/// Provenance = oracle. Throws on bracket failure.
std::vector<Level> eigenvalues_numeric(const PhysParams& p, int n_max,
                                       const ShootingConfig& cfg = {});

/// Normalized eigenfunction for a converged eigenvalue; the amplified-garbage
/// tail past the outer turning point is clipped at its minimum amplitude.
WaveTable wavefunction_numeric(const PhysParams& p, double E_n,
                               const ShootingConfig& cfg = {});

}  // namespace heunwell

#endif
