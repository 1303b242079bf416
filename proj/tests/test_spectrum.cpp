#include "heunwell/spectrum.hpp"

#include <cmath>

#include "doctest.h"
#include "heunwell/specfun.hpp"

using namespace heunwell;

// Frozen references from tests/oracle/reference_values.py (mpmath, 40 dps).
namespace ref {
constexpr double lhs_15 = -0.1601676461038082290601136487157707727;
constexpr double lhs_25 = 1.177208973215053678034433810810893899;
constexpr double lhs_35 = -9.009451241010746758475225645253963593;
constexpr double a1 = 1.5038224781380439803;
constexpr double a2 = 2.5049043425418291262;
constexpr double a5 = 5.506041567281121928;
constexpr double a10 = 10.506640843682602727;
constexpr double e1_exact = -15.357915243208160437;
constexpr double trig_offset = 0.5078058074671744413821356780271671344;
constexpr double relerr_1 = 1.6981584e-3;
constexpr double relerr_10 = 4.2159644e-4;
}  // namespace ref

namespace {
const PhysParams unit{1.0, 1.0, 0.0, 1.0, 0.0};
}

TEST_CASE("spectrum_lhs: the discarded root a0 = 1/2") {
  CHECK(std::fabs(spectrum_lhs(kDiscardedRoot)) <= 1e-12);
}

TEST_CASE("spectrum_lhs: half-integer samples, frozen polynomial arithmetic") {
  CHECK(spectrum_lhs(1.5) == doctest::Approx(ref::lhs_15).epsilon(1e-9));
  CHECK(spectrum_lhs(2.5) == doctest::Approx(ref::lhs_25).epsilon(1e-9));
  CHECK(spectrum_lhs(3.5) == doctest::Approx(ref::lhs_35).epsilon(1e-9));
  // alternating signs drive the bracketing
  double prev = spectrum_lhs(1.5);
  for (double a = 2.5; a <= 8.5; a += 1.0) {
    const double cur = spectrum_lhs(a);
    CHECK(prev * cur < 0.0);
    prev = cur;
  }
  CHECK_THROWS_AS(spectrum_lhs(0.0), std::domain_error);
}

TEST_CASE("find_roots: location, exclusion and determinism") {
  const auto one = find_roots(2.0);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == doctest::Approx(ref::a1).epsilon(1e-10));

  const auto roots = find_roots(11.0);
  REQUIRE(roots.size() == 10);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    CHECK(roots[i] > kDiscardedRoot);
    CHECK(std::fabs(roots[i] - (i + 1.5)) <= 0.05);
  }
  CHECK(roots[1] == doctest::Approx(ref::a2).epsilon(1e-10));
  CHECK(roots[4] == doctest::Approx(ref::a5).epsilon(1e-10));
  CHECK(roots[9] == doctest::Approx(ref::a10).epsilon(1e-10));

  const auto again = find_roots(11.0);
  REQUIRE(again.size() == roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) CHECK(again[i] == roots[i]);

  CHECK(find_roots(1.2).empty());
  CHECK_THROWS_AS(find_roots(0.9), std::domain_error);
  CHECK_THROWS_AS(find_roots(5.0, 0.5), std::domain_error);
}

TEST_CASE("exact_levels") {
  const auto levels = exact_levels(unit, 6);
  REQUIRE(levels.size() == 6);
  CHECK(levels[0].E_n == doctest::Approx(ref::e1_exact).epsilon(1e-9));
  CHECK(levels[0].n == 1);
  for (std::size_t i = 1; i < levels.size(); ++i) {
    CHECK(levels[i].E_n > levels[i - 1].E_n);
    CHECK(levels[i].E_n < unit.V0);
    CHECK(levels[i].provenance == Provenance::exact);
  }
}

TEST_CASE("exact_levels: E_n scales as V1^4, roots are universal") {
  PhysParams scaled = unit;
  scaled.V1 = 2.0;
  const auto base = exact_levels(unit, 3);
  const auto big = exact_levels(scaled, 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(big[i].a_n == doctest::Approx(base[i].a_n).epsilon(1e-13));
    CHECK(big[i].E_n == doctest::Approx(16.0 * base[i].E_n).epsilon(1e-12));
  }
}

TEST_CASE("f_ratio: anchors and identity with the sum form") {
  CHECK(std::fabs(f_ratio(kDiscardedRoot)) <= 1e-12);
  CHECK(f_ratio(1.5) == doctest::Approx(ref::lhs_15 / 10.0).epsilon(1e-9));
  for (double a = 0.6; a < 8.0; a += 0.0703) {
    const double h_hi = hermite_h_real(a + 0.5, -std::sqrt(2.0 * a));
    if (std::fabs(h_hi) < 1e-3) continue;  // near a pole of the ratio form
    CHECK(f_ratio(a) * h_hi == doctest::Approx(spectrum_lhs(a)).epsilon(1e-9));
  }
}

TEST_CASE("f_ratio_approx: sign agreement with the exact ratio on [1, 6]") {
  for (double a = 1.0; a <= 6.0; a += 0.01) {
    const double h_hi = hermite_h_real(a + 0.5, -std::sqrt(2.0 * a));
    if (std::fabs(h_hi) < 0.05) continue;  // pole of F
    const double exact = f_ratio(a);
    const double approx = f_ratio_approx(a);
    if (std::fabs(exact) < 0.02 || std::fabs(approx) < 0.02) continue;  // near roots
    if (std::fabs(exact) > 50.0 || std::fabs(approx) > 50.0) continue;  // near poles
    CHECK(exact * approx > 0.0);
  }
}

TEST_CASE("trig_roots: arctan closed form, degenerate kappa and spacing") {
  const auto roots = trig_roots(8);
  REQUIRE(roots.size() == 8);
  for (int n = 1; n <= 8; ++n) {
    CHECK(roots[n - 1] == doctest::Approx(n + ref::trig_offset).epsilon(1e-12));
    CHECK(std::fabs(roots[n - 1] - (n + 0.5)) < 0.01);
  }
  for (std::size_t i = 1; i < roots.size(); ++i)
    CHECK(roots[i] - roots[i - 1] == doctest::Approx(1.0).epsilon(1e-14));
  // kappa -> 1: -sqrt(3) cos(pi a) = 0, roots exactly at half-integers
  const auto degenerate = trig_roots(5, 1.0);
  for (int n = 1; n <= 5; ++n) CHECK(degenerate[n - 1] == n + 0.5);

  // cross-check the closed form against direct bisection of the trig equation
  const double kappa = 6.0 * b0_constant() * std::pow(2.0, -1.0 / 3.0);
  const auto f = [kappa](double a) {
    return std::sin(M_PI * a - M_PI / 3.0) - kappa * std::sin(M_PI * a + M_PI / 3.0);
  };
  double lo = 1.1, hi = 1.9;
  REQUIRE(f(lo) * f(hi) < 0.0);
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (f(lo) * f(mid) <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  CHECK(roots[0] == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-11));
}

TEST_CASE("closed_form_levels") {
  const auto levels = closed_form_levels(unit, 12);
  CHECK(levels[0].E_n ==
        doctest::Approx(-32.0 * std::pow(3.0, -2.0 / 3.0)).epsilon(1e-13));
  CHECK(levels[1].E_n ==
        doctest::Approx(-32.0 * std::pow(5.0, -2.0 / 3.0)).epsilon(1e-13));
  for (std::size_t i = 1; i < levels.size(); ++i) CHECK(levels[i].E_n > levels[i - 1].E_n);
  CHECK(levels.back().E_n < unit.V0);
  // consistency with the spectral-parameter map at half-integer a
  CHECK(energy_of_a(unit, 2.5) == doctest::Approx(levels[1].E_n).epsilon(1e-13));
}

TEST_CASE("error_report: ground-state accuracy and monotone decay") {
  const auto report = error_report(unit, 10);
  REQUIRE(report.size() == 10);
  CHECK(report[0].second == doctest::Approx(ref::relerr_1).epsilon(1e-5));
  CHECK(report[0].second <= 5e-3);
  for (std::size_t i = 1; i < report.size(); ++i)
    CHECK(report[i].second < report[i - 1].second);
  CHECK(report[9].second == doctest::Approx(ref::relerr_10).epsilon(1e-4));
}
