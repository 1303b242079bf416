#include "heunwell/oracle.hpp"

#include <cmath>

#include "doctest.h"

using namespace heunwell;

namespace {

const PhysParams unit{1.0, 1.0, 0.0, 1.0, 0.0};
constexpr double a1_ref = 1.5038224781380439803;  // mpmath root of the spectrum equation

ShootingConfig quick() {
  ShootingConfig cfg;
  cfg.steps = 40000;
  return cfg;
}

}  // namespace

TEST_CASE("frobenius_boundary: indicial exponent 5/4 and matched alpha") {
  // psi / x^{5/4} -> 1 and the sqrt(x) correction carries alpha = 2 m V1 / hbar^2
  for (double x0 : {1e-4, 1e-5}) {
    const auto b = frobenius_boundary(unit, -10.0, x0);
    const double ratio = b.psi / std::pow(x0, 1.25);
    CHECK(ratio == doctest::Approx(1.0).epsilon(1e-2));
    const double alpha = (ratio - 1.0) / std::sqrt(x0);
    CHECK(alpha == doctest::Approx(2.0).epsilon(0.05));
  }
  // V1 -> 0 removes the x^{-3/2} matching term
  PhysParams barrier = unit;
  barrier.V1 = 0.0;
  const auto b = frobenius_boundary(barrier, -1.0, 1e-4);
  CHECK(b.psi / std::pow(1e-4, 1.25) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("frobenius_boundary: derivative consistent with the value") {
  const double x0 = 1e-3, dx = 1e-6;
  const auto lo = frobenius_boundary(unit, -10.0, x0 - dx);
  const auto hi = frobenius_boundary(unit, -10.0, x0 + dx);
  const auto mid = frobenius_boundary(unit, -10.0, x0);
  CHECK((hi.psi - lo.psi) / (2.0 * dx) == doctest::Approx(mid.dpsi).epsilon(1e-6));
  CHECK_THROWS_AS(frobenius_boundary(unit, -10.0, 0.0), std::domain_error);
}

TEST_CASE("potential_minimum and outer_turning_point") {
  const double xm = potential_minimum(unit);
  const double vm = potential(unit, xm);
  CHECK(potential(unit, xm * 0.9) > vm);
  CHECK(potential(unit, xm * 1.1) > vm);
  const double xt = outer_turning_point(unit, -10.0);
  CHECK(potential(unit, xt) == doctest::Approx(-10.0).epsilon(1e-8));
  CHECK(xt > xm);
  CHECK_THROWS_AS(outer_turning_point(unit, vm - 1.0), std::domain_error);
}

TEST_CASE("integrate_outward: Sturm node counts") {
  // V_min = -21.53, E1 = -15.36, E2 = -10.93
  CHECK(integrate_outward(unit, -18.0, quick()).node_count == 0);
  CHECK(integrate_outward(unit, -12.0, quick()).node_count == 1);  // between E1 and E2
  ShootingConfig bad = quick();
  bad.steps = 5000;
  CHECK_THROWS_AS(integrate_outward(unit, -10.0, bad), std::invalid_argument);
}

TEST_CASE("integrate_outward: node count is non-decreasing in E") {
  int prev = -1;
  for (double E = -21.0; E < -5.0; E += 1.0) {
    const int n = integrate_outward(unit, E, quick()).node_count;
    CHECK(n >= prev);
    prev = n;
  }
}

TEST_CASE("integrate_outward: step halving moves the terminal log-derivative little") {
  ShootingConfig coarse = quick();
  coarse.x_end = 10.0;
  ShootingConfig fine = coarse;
  fine.steps *= 2;
  const double ld1 = integrate_outward(unit, -12.0, coarse).log_derivative;
  const double ld2 = integrate_outward(unit, -12.0, fine).log_derivative;
  CHECK(std::fabs(ld1 - ld2) <= 1e-5 * std::max(1.0, std::fabs(ld2)));
}

TEST_CASE("eigenvalues_numeric: agreement with the analytic spectrum") {
  const auto exact = exact_levels(unit, 3);
  const auto numeric = eigenvalues_numeric(unit, 3, quick());
  REQUIRE(numeric.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(numeric[i].provenance == Provenance::oracle);
    CHECK(std::fabs(numeric[i].E_n - exact[i].E_n) / std::fabs(exact[i].E_n) <= 1e-4);
  }
  CHECK(numeric[0].E_n < numeric[1].E_n);
  CHECK(numeric[1].E_n < numeric[2].E_n);
}

TEST_CASE("eigenvalues_numeric: insensitive to the inner cutoff") {
  ShootingConfig a = quick();
  ShootingConfig b = quick();
  b.x_start = a.x_start / 10.0;
  const double ea = eigenvalues_numeric(unit, 1, a)[0].E_n;
  const double eb = eigenvalues_numeric(unit, 1, b)[0].E_n;
  CHECK(std::fabs(ea - eb) <= 10.0 * a.energy_tol * std::fabs(ea) * 10.0);
}

TEST_CASE("wavefunction_numeric: shapes, overlap and orthogonality") {
  ShootingConfig cfg = quick();
  const auto levels = eigenvalues_numeric(unit, 2, cfg);
  // common grid for both states and the analytic comparison
  cfg.x_end = 3.0 * outer_turning_point(unit, levels[1].E_n);
  const auto w1 = wavefunction_numeric(unit, levels[0].E_n, cfg);
  const auto w2 = wavefunction_numeric(unit, levels[1].E_n, cfg);
  CHECK(w1.normalized);

  // single maximum for n = 1: |psi| rises then falls, no interior sign change
  int sign_changes = 0;
  double peak = 0.0;
  for (const auto& s : w1.samples) peak = std::max(peak, std::fabs(s.psi.real()));
  double last = 0.0;
  for (const auto& s : w1.samples) {
    const double v = s.psi.real();
    if (std::fabs(v) < 1e-6 * peak) continue;
    if (last != 0.0 && (v < 0.0) != (last < 0.0)) ++sign_changes;
    last = v;
  }
  CHECK(sign_changes == 0);

  // Sturm-Liouville orthogonality
  double dot = 0.0;
  for (std::size_t i = 1; i < w1.samples.size(); ++i) {
    const double dx = w1.samples[i].x - w1.samples[i - 1].x;
    dot += 0.5 * dx *
           (w1.samples[i].psi.real() * w2.samples[i].psi.real() +
            w1.samples[i - 1].psi.real() * w2.samples[i - 1].psi.real());
  }
  // limited by the eigenvalue tolerance and the clipped tails
  CHECK(std::fabs(dot) <= 2e-3);

  // overlap with the normalized analytic bound state
  std::vector<double> grid;
  grid.reserve(w1.samples.size());
  for (const auto& s : w1.samples) grid.push_back(s.x);
  const auto analytic1 = normalize(bound_wavefunction(unit, a1_ref, grid));
  CHECK(overlap(w1, analytic1) >= 0.9999);
}
