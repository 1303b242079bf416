#include "heunwell/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heunwell/spectrum.hpp"

namespace heunwell {

namespace {

void require_solution_domain(const PhysParams& p, double E, double x) {
  if (p.V1 <= 0.0) throw std::domain_error("fundamental_solution: requires V1 > 0");
  if (p.V2 != 0.0) throw std::domain_error("fundamental_solution: requires V2 = 0");
  if (E >= p.V0) throw std::domain_error("fundamental_solution: requires E < V0");
  if (x <= 0.0) throw std::domain_error("fundamental_solution: requires x > 0");
  if (x < 1e-8)
    throw std::domain_error(
        "fundamental_solution: x below 1e-8, prefactor/bracket cancellation");
}

double trapezoid_norm2(const WaveTable& w) {
  double acc = 0.0;
  for (std::size_t i = 1; i < w.samples.size(); ++i) {
    const double f0 = std::norm(w.samples[i - 1].psi);
    const double f1 = std::norm(w.samples[i].psi);
    acc += 0.5 * (f0 + f1) * (w.samples[i].x - w.samples[i - 1].x);
  }
  return acc;
}

}  // namespace

ComplexValue fundamental_solution(const PhysParams& p, double E, Branch b, double x) {
  require_solution_domain(p, E, x);
  const double eps = epsilon_of_energy(p, E, b);
  const double a = a_of_energy(p, E, b);
  const double h2 = p.hbar * p.hbar;
  const double radial = 1.0 + eps * h2 * std::sqrt(x) / (4.0 * p.m * p.V1);
  const double prefactor = std::pow(x, -0.25);

  if (b == Branch::minus) {
    const double s = std::sqrt(2.0 * a);
    const double y = std::sqrt(-eps * x) - s;
    const double h_hi = hermite_h_real(a + 0.5, y);
    const double h_lo = hermite_h_real(a - 0.5, y);
    const double coef = (s + std::pow(2.0 * a, 1.0 / 6.0)) * radial;
    const double value = prefactor * std::exp(-0.5 * y * y) * (h_hi + coef * h_lo);
    return {value, 0.0};
  }

  // plus branch: a < 0, y = i t with t = sqrt(eps x) - sqrt(2|a|)
  const double s = std::sqrt(-2.0 * a);
  const double t = std::sqrt(eps * x) - s;
  const ComplexValue h_hi = hermite_h(a + 0.5, AxisValue::imaginary_axis(t));
  const ComplexValue h_lo = hermite_h(a - 0.5, AxisValue::imaginary_axis(t));
  // principal sixth root of the negative real 2a: (2|a|)^{1/6} e^{i pi/6}
  const ComplexValue root6 =
      std::pow(-2.0 * a, 1.0 / 6.0) * ComplexValue{std::cos(M_PI / 6.0), std::sin(M_PI / 6.0)};
  const ComplexValue coef = (ComplexValue{0.0, s} + branch_phase(Branch::plus) * root6) * radial;
  // e^{-y^2/2} = e^{t^2/2}
  return prefactor * std::exp(0.5 * t * t) * (h_hi + coef * h_lo);
}

ComplexValue general_solution(const PhysParams& p, double E, ComplexValue c1,
                              ComplexValue c2, double x) {
  ComplexValue acc{0.0, 0.0};
  if (c1 != ComplexValue{0.0, 0.0})
    acc += c1 * fundamental_solution(p, E, Branch::minus, x);
  if (c2 != ComplexValue{0.0, 0.0})
    acc += c2 * fundamental_solution(p, E, Branch::plus, x);
  return acc;
}

WaveTable bound_wavefunction(const PhysParams& p, double a_n,
                             const std::vector<double>& grid, double root_tol) {
  if (a_n <= kDiscardedRoot)
    throw std::invalid_argument("bound_wavefunction: requires a_n > 1/2");
  const double lhs = spectrum_lhs(a_n);
  if (std::fabs(lhs) > root_tol)
    throw std::invalid_argument("bound_wavefunction: a_n is not a spectral root");
  const double E = energy_of_a(p, a_n);
  WaveTable table;
  table.provenance = WaveProvenance::analytic;
  table.samples.reserve(grid.size());
  double prev = 0.0;
  bool first = true;
  for (double x : grid) {
    if (!first && x <= prev)
      throw std::invalid_argument("bound_wavefunction: grid must be strictly increasing");
    if (x <= 0.0) throw std::invalid_argument("bound_wavefunction: grid points must be > 0");
    table.samples.push_back({x, fundamental_solution(p, E, Branch::minus, x)});
    prev = x;
    first = false;
  }
  return table;
}

WaveTable normalize(const WaveTable& w, double decay_tol) {
  if (w.samples.size() < 2)
    throw std::invalid_argument("normalize: need at least 2 samples");
  double peak = 0.0;
  for (const auto& s : w.samples) peak = std::max(peak, std::abs(s.psi));
  if (peak == 0.0) throw std::invalid_argument("normalize: identically zero table");
  if (std::abs(w.samples.front().psi) > decay_tol * peak ||
      std::abs(w.samples.back().psi) > decay_tol * peak)
    throw std::runtime_error("normalize: tails not decayed below threshold");
  const double norm = std::sqrt(trapezoid_norm2(w));
  WaveTable out = w;
  for (auto& s : out.samples) s.psi /= norm;
  out.normalized = true;
  out.norm = norm;
  return out;
}

double schrodinger_residual(const PhysParams& p, double E, const WaveTable& w) {
  if (w.samples.size() < 5)
    throw std::invalid_argument("schrodinger_residual: grid too coarse (< 5 points)");
  double peak = 0.0;
  for (const auto& s : w.samples) peak = std::max(peak, std::abs(s.psi));
  if (peak == 0.0) return 0.0;  // degenerate table, documented behavior
  const double k2 = 2.0 * p.m / (p.hbar * p.hbar);
  // global equation scale: pointwise normalization is singular at the nodes
  // of psi (both |psi''| and |(E - V) psi| vanish there), so the defect is
  // measured against the largest term magnitude anywhere on the grid
  double worst_defect = 0.0;
  double scale = 0.0;
  for (std::size_t i = 1; i + 1 < w.samples.size(); ++i) {
    const double h1 = w.samples[i].x - w.samples[i - 1].x;
    const double h2 = w.samples[i + 1].x - w.samples[i].x;
    const ComplexValue d2 =
        2.0 * (w.samples[i - 1].psi * h2 - w.samples[i].psi * (h1 + h2) +
               w.samples[i + 1].psi * h1) /
        (h1 * h2 * (h1 + h2));
    const ComplexValue pot_term =
        k2 * (E - potential(p, w.samples[i].x)) * w.samples[i].psi;
    scale = std::max({scale, std::abs(d2), std::abs(pot_term)});
    worst_defect = std::max(worst_defect, std::abs(d2 + pot_term));
  }
  if (scale == 0.0) return 0.0;
  return worst_defect / scale;
}

double overlap(const WaveTable& w1, const WaveTable& w2) {
  if (w1.samples.size() != w2.samples.size())
    throw std::invalid_argument("overlap: tables must share the grid");
  double dot = 0.0, n1 = 0.0, n2 = 0.0;
  for (std::size_t i = 1; i < w1.samples.size(); ++i) {
    if (std::fabs(w1.samples[i].x - w2.samples[i].x) > 1e-12)
      throw std::invalid_argument("overlap: tables must share the grid");
    const double dx = w1.samples[i].x - w1.samples[i - 1].x;
    const auto f = [&](std::size_t j) {
      return (std::conj(w1.samples[j].psi) * w2.samples[j].psi).real();
    };
    dot += 0.5 * (f(i - 1) + f(i)) * dx;
    n1 += 0.5 * (std::norm(w1.samples[i - 1].psi) + std::norm(w1.samples[i].psi)) * dx;
    n2 += 0.5 * (std::norm(w2.samples[i - 1].psi) + std::norm(w2.samples[i].psi)) * dx;
  }
  return std::fabs(dot) / std::sqrt(n1 * n2);
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 2 || lo >= hi) throw std::invalid_argument("uniform_grid: bad range");
  std::vector<double> g(n);
  const double h = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = lo + i * h;
  g.back() = hi;
  return g;
}

}  // namespace heunwell
