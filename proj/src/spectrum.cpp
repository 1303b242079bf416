#include "heunwell/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "heunwell/specfun.hpp"

namespace heunwell {

namespace {

double bisect(double lo, double hi, double flo) {
  // flo is spectrum_lhs(lo); invariant: sign change inside [lo, hi]
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    const double fm = spectrum_lhs(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double spectrum_lhs(double a) {
  if (a <= 0.0) throw std::domain_error("spectrum_lhs: requires a > 0");
  const double s = std::sqrt(2.0 * a);
  const double h_hi = hermite_h_real(a + 0.5, -s);
  const double h_lo = hermite_h_real(a - 0.5, -s);
  return h_hi + (s + std::pow(2.0 * a, 1.0 / 6.0)) * h_lo;
}

std::vector<double> find_roots(double a_max, double scan_step) {
  if (a_max <= 1.0) throw std::domain_error("find_roots: requires a_max > 1");
  if (scan_step <= 0.0 || scan_step > 0.1)
    throw std::domain_error("find_roots: requires 0 < scan_step <= 0.1");
  std::vector<double> roots;
  double a = kDiscardedRoot + scan_step;
  double f = spectrum_lhs(a);
  while (a < a_max) {
    double b = a + scan_step;
    if (b > a_max) b = a_max;
    const double g = spectrum_lhs(b);
    if (f == 0.0) {
      roots.push_back(a);
    } else if ((f < 0.0) != (g < 0.0)) {
      roots.push_back(bisect(a, b, f));
    }
    a = b;
    f = g;
  }
  return roots;
}

std::vector<Level> exact_levels(const PhysParams& p, int n_max) {
  if (n_max < 1) throw std::domain_error("exact_levels: requires n_max >= 1");
  // roots sit just above n + 1/2, so n_max + 1 bounds the scan
  const auto roots = find_roots(n_max + 1.0);
  if (static_cast<int>(roots.size()) < n_max)
    throw std::runtime_error("exact_levels: fewer roots than requested");
  std::vector<Level> levels;
  levels.reserve(n_max);
  for (int n = 1; n <= n_max; ++n)
    levels.push_back({n, roots[n - 1], energy_of_a(p, roots[n - 1]), Provenance::exact});
  return levels;
}

double f_ratio(double a) {
  if (a <= 0.0) throw std::domain_error("f_ratio: requires a > 0");
  const double s = std::sqrt(2.0 * a);
  const double h_hi = hermite_h_real(a + 0.5, -s);
  const double h_lo = hermite_h_real(a - 0.5, -s);
  const double coef = s + std::pow(2.0 * a, 1.0 / 6.0);
  if (std::fabs(h_hi) < 1e-300 * std::fabs(coef * h_lo))
    throw std::domain_error("f_ratio: pole, denominator Hermite function vanishes");
  return 1.0 + coef * h_lo / h_hi;
}

double f_ratio_approx(double a) {
  if (a <= 0.0) throw std::domain_error("f_ratio_approx: requires a > 0");
  const double b0 = b0_constant();
  const double sm = std::sin(M_PI * a - M_PI / 3.0);
  const double sp = std::sin(M_PI * a + M_PI / 3.0);
  const double num = sm - 6.0 * b0 * std::pow(2.0, -1.0 / 3.0) * sp;
  const double den = sm + 6.0 * b0 * std::cbrt(a) * sp;
  if (den == 0.0) throw std::domain_error("f_ratio_approx: pole");
  return num / den;
}

std::vector<double> trig_roots(int n_max, double kappa) {
  if (n_max < 1) throw std::domain_error("trig_roots: requires n_max >= 1");
  double delta;
  if (kappa == 1.0) {
    delta = 0.5;  // -sqrt(3) cos(pi a) = 0
  } else {
    delta = std::atan(std::sqrt(3.0) * (1.0 + kappa) / (1.0 - kappa)) / M_PI;
    if (delta < 0.0) delta += 1.0;
  }
  std::vector<double> roots;
  roots.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) roots.push_back(n + delta);
  return roots;
}

std::vector<double> trig_roots(int n_max) {
  return trig_roots(n_max, 6.0 * b0_constant() * std::pow(2.0, -1.0 / 3.0));
}

std::vector<Level> closed_form_levels(const PhysParams& p, int n_max) {
  if (n_max < 1) throw std::domain_error("closed_form_levels: requires n_max >= 1");
  if (p.V1 <= 0.0) throw std::domain_error("closed_form_levels: requires V1 > 0");
  const double h2 = p.hbar * p.hbar;
  const double depth =
      32.0 * p.m * p.m * p.m * p.V1 * p.V1 * p.V1 * p.V1 / (h2 * h2 * h2);
  std::vector<Level> levels;
  levels.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const double E = p.V0 - depth * std::pow(2.0 * n + 1.0, -2.0 / 3.0);
    levels.push_back({n, 0.0, E, Provenance::closed_form});
  }
  return levels;
}

std::vector<std::pair<int, double>> error_report(const PhysParams& p, int n_max) {
  const auto exact = exact_levels(p, n_max);
  const auto closed = closed_form_levels(p, n_max);
  std::vector<std::pair<int, double>> report;
  report.reserve(n_max);
  for (int i = 0; i < n_max; ++i)
    report.emplace_back(i + 1,
                        std::fabs(closed[i].E_n - exact[i].E_n) / std::fabs(exact[i].E_n));
  return report;
}

}  // namespace heunwell
