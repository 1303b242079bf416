#include "heunwell/model.hpp"

#include <cmath>
#include <stdexcept>

namespace heunwell {

namespace {

void require_valid(const PhysParams& p) {
  if (p.m <= 0.0 || p.hbar <= 0.0)
    throw std::domain_error("PhysParams: m and hbar must be positive");
}

void require_well(const PhysParams& p) {
  require_valid(p);
  if (p.V1 <= 0.0) throw std::domain_error("PhysParams: bound states need V1 > 0");
}

}  // namespace

std::complex<double> branch_phase(Branch b) {
  if (b == Branch::minus) return {1.0, 0.0};
  const double phi = 4.0 * M_PI / 3.0;
  return {std::cos(phi), std::sin(phi)};
}

double potential(const PhysParams& p, double x) {
  require_valid(p);
  if (x <= 0.0) throw std::domain_error("potential: defined on x > 0 only");
  const double h2 = p.hbar * p.hbar;
  const double barrier = 5.0 * h2 / (32.0 * p.m * x * x);
  const double sqrt_coef =
      8.0 * p.m * p.V1 * (-2.0 * p.m * p.V1 * p.V1 + h2 * p.V2) / (h2 * h2);
  return p.V0 + barrier + p.V1 / (x * std::sqrt(x)) + p.V2 / x +
         sqrt_coef / std::sqrt(x);
}

double epsilon_of_energy(const PhysParams& p, double E, Branch b) {
  require_valid(p);
  if (E >= p.V0)
    throw std::domain_error("epsilon_of_energy: requires E < V0 (bound regime)");
  const double mag = std::sqrt(8.0 * p.m * (p.V0 - E)) / p.hbar;
  return b == Branch::minus ? -mag : mag;
}

double a_of_energy(const PhysParams& p, double E, Branch b) {
  require_well(p);
  const double eps = epsilon_of_energy(p, E, b);
  const double mv = p.m * p.V1;
  const double h2 = p.hbar * p.hbar;
  // -2^11 m^6 V1^6 / (hbar^12 eps^3)
  const double num = 2048.0 * mv * mv * mv * mv * mv * mv;
  const double den = h2 * h2 * h2 * h2 * h2 * h2 * eps * eps * eps;
  return -num / den;
}

double energy_of_a(const PhysParams& p, double a) {
  require_well(p);
  if (a <= 0.0) throw std::domain_error("energy_of_a: requires a > 0 (minus branch)");
  const double h2 = p.hbar * p.hbar;
  const double depth = std::pow(2.0, 13.0 / 3.0) * p.m * p.m * p.m * p.V1 * p.V1 *
                       p.V1 * p.V1 / (h2 * h2 * h2);
  return p.V0 - depth * std::pow(a, -2.0 / 3.0);
}

}  // namespace heunwell
