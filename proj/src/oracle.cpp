#include "heunwell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heunwell {

namespace {

struct SeriesCoefs {
  // q(x) = (2m/hbar^2)(V - E) = (5/16) x^-2 + a3 x^-3/2 + a2 x^-1
  //        + a1 x^-1/2 + a0
  double a3, a2, a1, a0;
};

SeriesCoefs q_coefs(const PhysParams& p, double E) {
  const double h2 = p.hbar * p.hbar;
  const double k2 = 2.0 * p.m / h2;
  return {k2 * p.V1, k2 * p.V2,
          k2 * 8.0 * p.m * p.V1 * (-2.0 * p.m * p.V1 * p.V1 + h2 * p.V2) / (h2 * h2),
          k2 * (p.V0 - E)};
}

double q_of(const PhysParams& p, double E, double x) {
  const double k2 = 2.0 * p.m / (p.hbar * p.hbar);
  return k2 * (potential(p, x) - E);
}

}  // namespace

BoundaryData frobenius_boundary(const PhysParams& p, double E, double x0) {
  if (x0 <= 0.0) throw std::domain_error("frobenius_boundary: requires x0 > 0");
  const SeriesCoefs c = q_coefs(p, E);
  constexpr int kMaxOrder = 240;
  std::vector<double> coef(kMaxOrder + 1, 0.0);
  coef[0] = 1.0;
  const double sx = std::sqrt(x0);
  double psi = 0.0;   // sum c_k x^{k/2}
  double dpsi = 0.0;  // sum c_k (5/4 + k/2) x^{k/2}
  double pow_half = 1.0;
  bool converged = false;
  for (int k = 0; k <= kMaxOrder; ++k) {
    if (k > 0) {
      double rhs = c.a3 * coef[k - 1];
      if (k >= 2) rhs += c.a2 * coef[k - 2];
      if (k >= 3) rhs += c.a1 * coef[k - 3];
      if (k >= 4) rhs += c.a0 * coef[k - 4];
      coef[k] = 4.0 * rhs / (static_cast<double>(k) * (k + 3));
      pow_half *= sx;
    }
    const double term = coef[k] * pow_half;
    psi += term;
    dpsi += term * (1.25 + 0.5 * k);
    if (k > 4 && std::fabs(term) < 1e-16 * std::fabs(psi)) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw std::runtime_error("frobenius_boundary: cutoff too large, series not converged");
  const double x54 = std::pow(x0, 1.25);
  return {psi * x54, dpsi * x54 / x0};
}

double potential_minimum(const PhysParams& p) {
  // coarse log scan, then ternary refinement
  double best_x = 1e-3, best_v = potential(p, 1e-3);
  for (double x = 1e-3; x < 1e4; x *= 1.02) {
    const double v = potential(p, x);
    if (v < best_v) {
      best_v = v;
      best_x = x;
    }
  }
  double lo = best_x / 1.02, hi = best_x * 1.02;
  for (int i = 0; i < 200; ++i) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (potential(p, m1) < potential(p, m2))
      hi = m2;
    else
      lo = m1;
  }
  return 0.5 * (lo + hi);
}

double outer_turning_point(const PhysParams& p, double E) {
  if (E >= p.V0) throw std::domain_error("outer_turning_point: requires E < V0");
  double lo = potential_minimum(p);
  if (potential(p, lo) >= E)
    throw std::domain_error("outer_turning_point: E at or below the potential minimum");
  double hi = lo * 2.0;
  int guard = 0;
  while (potential(p, hi) < E) {
    hi *= 2.0;
    if (++guard > 200)
      throw std::runtime_error("outer_turning_point: no crossing found");
  }
  for (int i = 0; i < 200 && (hi - lo) > 1e-13 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (potential(p, mid) < E)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

IntegrationResult integrate_outward(const PhysParams& p, double E,
                                    const ShootingConfig& cfg) {
  if (E >= p.V0) throw std::domain_error("integrate_outward: requires E < V0");
  if (cfg.steps < 10000)
    throw std::invalid_argument("integrate_outward: steps must be >= 1e4");
  const double x_end = cfg.x_end > 0.0 ? cfg.x_end : 3.0 * outer_turning_point(p, E);
  if (x_end <= cfg.x_start)
    throw std::invalid_argument("integrate_outward: x_end must exceed x_start");
  const int n = cfg.steps;
  const double h = (x_end - cfg.x_start) / n;
  const double h2_12 = h * h / 12.0;

  const BoundaryData b0 = frobenius_boundary(p, E, cfg.x_start);
  const BoundaryData b1 = frobenius_boundary(p, E, cfg.x_start + h);
  double psi_prev = b0.psi;
  double psi_cur = b1.psi;
  double t_prev = h2_12 * q_of(p, E, cfg.x_start);
  double t_cur = h2_12 * q_of(p, E, cfg.x_start + h);
  int nodes = (psi_prev != 0.0 && psi_cur != 0.0 && (psi_prev < 0.0) != (psi_cur < 0.0)) ? 1 : 0;

  // one extra step past x_end for the central-difference derivative
  double psi_before_end = psi_prev;
  for (int i = 1; i <= n; ++i) {
    const double x_next = cfg.x_start + (i + 1) * h;
    const double t_next = h2_12 * q_of(p, E, x_next);
    double psi_next =
        ((2.0 + 10.0 * t_cur) * psi_cur - (1.0 - t_prev) * psi_prev) / (1.0 - t_next);
    if (!std::isfinite(psi_next))
      throw std::runtime_error("integrate_outward: overflow unrecoverable");
    if (i < n && psi_cur != 0.0 && psi_next != 0.0 && (psi_cur < 0.0) != (psi_next < 0.0))
      ++nodes;
    psi_prev = psi_cur;
    psi_cur = psi_next;
    t_prev = t_cur;
    t_cur = t_next;
    if (std::fabs(psi_cur) > 1e150) {
      const double scale = std::fabs(psi_cur);
      psi_prev /= scale;
      psi_cur /= scale;
      psi_before_end /= scale;
    }
    if (i == n - 1) psi_before_end = psi_prev;  // psi(x_end - h)
  }
  const double dpsi_end = (psi_cur - psi_before_end) / (2.0 * h);
  IntegrationResult r;
  r.node_count = nodes;
  r.psi_end = psi_prev;
  r.dpsi_end = dpsi_end;
  r.log_derivative = dpsi_end / psi_prev;
  return r;
}

namespace {

// decay mismatch psi' + k_WKB psi at x_end; vanishes at an eigenvalue
double shoot(const PhysParams& p, double E, const ShootingConfig& cfg) {
  const IntegrationResult r = integrate_outward(p, E, cfg);
  const double k = std::sqrt(2.0 * p.m * (potential(p, cfg.x_end) - E)) / p.hbar;
  return r.dpsi_end + k * r.psi_end;
}

int nodes_at(const PhysParams& p, double E, const ShootingConfig& cfg) {
  return integrate_outward(p, E, cfg).node_count;
}

}  // namespace

std::vector<Level> eigenvalues_numeric(const PhysParams& p, int n_max,
                                       const ShootingConfig& cfg) {
  if (p.V1 <= 0.0) throw std::domain_error("eigenvalues_numeric: requires V1 > 0");
  if (n_max < 1) throw std::domain_error("eigenvalues_numeric: requires n_max >= 1");
  const double x_min = potential_minimum(p);
  const double v_min = potential(p, x_min);
  const double span = p.V0 - v_min;
  const double e_floor = v_min + 1e-9 * span;

  // march toward V0 until n_max states fit
  double e_top = e_floor;
  int top_nodes = 0;
  for (int k = 1; k <= 120 && top_nodes < n_max; ++k) {
    e_top = p.V0 - span * std::pow(0.75, k);
    top_nodes = nodes_at(p, e_top, cfg);
  }
  if (top_nodes < n_max)
    throw std::runtime_error("eigenvalues_numeric: bracket failure, domain too small");

  std::vector<Level> levels;
  double lo_floor = e_floor;
  for (int n = 1; n <= n_max; ++n) {
    double lo = lo_floor, hi = e_top;
    // node-count bisection: N(lo) < n <= N(hi)
    while (hi - lo > 1e5 * cfg.energy_tol * std::max(std::fabs(lo), std::fabs(hi))) {
      const double mid = 0.5 * (lo + hi);
      if (nodes_at(p, mid, cfg) >= n)
        hi = mid;
      else
        lo = mid;
    }
    // refine on the decay mismatch with a fixed grid
    ShootingConfig fixed = cfg;
    if (fixed.x_end <= 0.0) fixed.x_end = 3.0 * outer_turning_point(p, hi);
    double slo = shoot(p, lo, fixed);
    double shi = shoot(p, hi, fixed);
    double e_n;
    if ((slo < 0.0) != (shi < 0.0)) {
      int it = 0;
      while (hi - lo > cfg.energy_tol * std::max(std::fabs(lo), std::fabs(hi)) &&
             it++ < cfg.max_bisections) {
        const double mid = 0.5 * (lo + hi);
        const double sm = shoot(p, mid, fixed);
        if ((slo < 0.0) == (sm < 0.0)) {
          lo = mid;
          slo = sm;
        } else {
          hi = mid;
          shi = sm;
        }
      }
      e_n = 0.5 * (lo + hi);
    } else {
      // mismatch did not change sign across the tiny node bracket; fall back
      // to node-count bisection down to tolerance
      while (hi - lo > cfg.energy_tol * std::max(std::fabs(lo), std::fabs(hi))) {
        const double mid = 0.5 * (lo + hi);
        if (nodes_at(p, mid, fixed) >= n)
          hi = mid;
        else
          lo = mid;
      }
      e_n = 0.5 * (lo + hi);
    }
    levels.push_back({n, 0.0, e_n, Provenance::oracle});
    lo_floor = e_n + 10.0 * cfg.energy_tol * std::fabs(e_n);
  }
  return levels;
}

WaveTable wavefunction_numeric(const PhysParams& p, double E_n,
                               const ShootingConfig& cfg) {
  const double x_end = cfg.x_end > 0.0 ? cfg.x_end : 3.0 * outer_turning_point(p, E_n);
  const int n = cfg.steps;
  const double h = (x_end - cfg.x_start) / n;
  const double h2_12 = h * h / 12.0;

  std::vector<double> psi(n + 1);
  psi[0] = frobenius_boundary(p, E_n, cfg.x_start).psi;
  psi[1] = frobenius_boundary(p, E_n, cfg.x_start + h).psi;
  double t_prev = h2_12 * q_of(p, E_n, cfg.x_start);
  double t_cur = h2_12 * q_of(p, E_n, cfg.x_start + h);
  for (int i = 1; i < n; ++i) {
    const double t_next = h2_12 * q_of(p, E_n, cfg.x_start + (i + 1) * h);
    psi[i + 1] = ((2.0 + 10.0 * t_cur) * psi[i] - (1.0 - t_prev) * psi[i - 1]) /
                 (1.0 - t_next);
    if (!std::isfinite(psi[i + 1]) || std::fabs(psi[i + 1]) > 1e200)
      throw std::runtime_error("wavefunction_numeric: tail overflow, E_n not converged");
    t_prev = t_cur;
    t_cur = t_next;
  }

  // clip the amplified tail: past the turning point the converged state decays
  // until integration noise takes over and grows again; cut at the minimum
  const double x_turn = outer_turning_point(p, E_n);
  int i_turn = std::min<int>(n, static_cast<int>((x_turn - cfg.x_start) / h) + 1);
  int i_cut = n;
  double best = std::fabs(psi[i_turn]);
  for (int i = i_turn; i <= n; ++i) {
    if (std::fabs(psi[i]) < best) {
      best = std::fabs(psi[i]);
      i_cut = i;
    }
  }
  WaveTable table;
  table.provenance = WaveProvenance::oracle;
  table.samples.reserve(n + 1);
  for (int i = 0; i <= n; ++i)
    table.samples.push_back({cfg.x_start + i * h, {i <= i_cut ? psi[i] : 0.0, 0.0}});
  return normalize(table);
}

}  // namespace heunwell
