#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "ringmap/error.hpp"
#include "ringmap/hopf.hpp"
#include "ringmap/reference.hpp"
#include "support/oracles.hpp"

using namespace ringmap;
using oracles::make_map;
using oracles::tau;

namespace {

HarmonicMap nits_fig1() { return nitsche_minimizer(AnnulusPair(0.5, 2.0 / 3.0)); }

} // namespace

TEST_CASE("hopf_field values") {
  const auto id = make_map(0.5, 0.0, 0.0, {{1, 1.0}}, {});
  for (const Complex z : {Complex(0.9, 0.0), Complex(0.0, -0.6)})
    CHECK(std::abs(hopf_field(id, z)) < 1e-15);

  // z^2 phi = c with c = -8/81 for the closed-form minimizer.
  const auto nits = nits_fig1();
  const Complex at_08 = hopf_field(nits, Complex(0.8, 0.0));
  CHECK(at_08.real() == doctest::Approx(-(8.0 / 81.0) / 0.64).epsilon(1e-13));
  CHECK(std::abs(at_08.imag()) < 1e-15);

  // Critical map: c = -r^2/(1+r^2)^2 = -4/25 at r = 1/2.
  const auto crit = critical_map(0.5);
  for (const Complex z : {Complex(0.7, 0.1), Complex(-0.2, 0.8)})
    CHECK(std::abs(z * z * hopf_field(crit, z) - Complex(-4.0 / 25.0, 0.0)) < 1e-14);
}

TEST_CASE("fit_hopf_constant: exact maps and a non-stationary fixture") {
  const auto fit = fit_hopf_constant(nits_fig1());
  CHECK(fit.c_fit == doctest::Approx(-8.0 / 81.0).epsilon(1e-13));
  CHECK(std::abs(fit.c_imag) < 1e-14);
  CHECK(fit.residual_max < 1e-12);
  CHECK(fit.boundary_reality_max < 1e-14);

  const auto id = make_map(0.5, 0.0, 0.0, {{1, 1.0}}, {});
  CHECK(std::abs(fit_hopf_constant(id).c_fit) < 1e-15);

  // a1 = 1, b1 = 0.1 gives phi = 0.1 constant, so z^2 phi varies with z:
  // the oracle is direct evaluation at two radii.
  const auto off = make_map(0.5, 0.0, 0.0, {{1, 1.0}}, {{1, 0.1}});
  const Complex v1 = Complex(0.25, 0.0) * hopf_field(off, Complex(0.5, 0.0));
  const Complex v2 = Complex(1.0, 0.0) * hopf_field(off, Complex(1.0, 0.0));
  CHECK(std::abs(v1 - v2) > 0.05); // z^2 phi is genuinely non-constant
  CHECK(fit_hopf_constant(off).residual_max > 1e-3);
}

TEST_CASE("classify_sign trichotomy") {
  const auto neg = classify_sign(-8.0 / 81.0, 2.0, 1.5, 1e-4);
  CHECK(neg.sign_class == SignClass::negative);
  CHECK(neg.consistent);

  const auto pos = classify_sign(6.0 / 25.0, 1.5, 2.0, 1e-4);
  CHECK(pos.sign_class == SignClass::positive);
  CHECK(pos.consistent);

  const auto zero = classify_sign(0.0, 2.0, 2.0, 1e-4);
  CHECK(zero.sign_class == SignClass::zero);
  CHECK(zero.consistent);

  // Mismatched combination must be flagged inconsistent.
  const auto bad = classify_sign(0.2, 2.0, 1.5, 1e-4);
  CHECK(bad.sign_class == SignClass::positive);
  CHECK_FALSE(bad.consistent);

  CHECK_THROWS_AS((void)classify_sign(0.1, 0.9, 2.0, 1e-4), Error);
}

TEST_CASE("kkprime_audit slack") {
  // Conformal identity: ||Df||^2 = 2J exactly, so the slack is K' = 0.
  const auto id = make_map(0.5, 0.0, 0.0, {{1, 1.0}}, {});
  CHECK(kkprime_audit(id, 0.0) == doctest::Approx(0.0).epsilon(1e-14));

  // Closed-form minimizer: slack = K' - 4 |f_zbar|^2 >= 0 with equality at
  // the inner boundary, where |f_zbar| = (1/9)/rho^2.
  const auto nits = nits_fig1();
  const double slack_nits = kkprime_audit(nits, -8.0 / 81.0);
  CHECK(slack_nits >= -1e-14);
  CHECK(slack_nits < 1e-12); // grid includes the inner ring, so equality is hit

  // Critical map: the Beltrami ratio reaches 1 at the inner circle, so
  // ||Dw||^2 - 2J peaks at 4|c|/rho^2 there, twice the audited constant:
  // the 2|c|/rho^2 form yields slack exactly -2/(1+r^2)^2, while the sharp
  // constant 4|c|/rho^2 gives equality.
  const auto crit = critical_map(0.5);
  const double slack_crit = kkprime_audit(crit, -4.0 / 25.0);
  CHECK(slack_crit == doctest::Approx(-2.0 / (1.25 * 1.25)).epsilon(1e-12));
  const double sharp = quasiconformal_slack(crit, 1.0, 4.0 * (4.0 / 25.0) / 0.25);
  CHECK(sharp >= -1e-14);
  CHECK(sharp < 1e-12);
}

TEST_CASE("energy_bound_check slacks") {
  const auto id = make_map(0.5, 0.0, 0.0, {{1, 1.0}}, {});
  CHECK(energy_bound_check(id, 0.75 * std::numbers::pi) ==
        doctest::Approx(0.0).epsilon(1e-13));

  CHECK(energy_bound_check(nits_fig1(), 5.0 * std::numbers::pi / 9.0) ==
        doctest::Approx(4.0 * std::numbers::pi / 27.0).epsilon(1e-13));

  // Critical pair r = 1/2, R = 4/5: E = 6 pi/5, area = 9 pi/25.
  const double slack = energy_bound_check(critical_map(0.5), 9.0 * std::numbers::pi / 25.0);
  CHECK(slack == doctest::Approx(12.0 * std::numbers::pi / 25.0).epsilon(1e-13));
  CHECK(slack >= 0.0);
}

TEST_CASE("boundary reality is controlled by global constancy") {
  // Random perturbations of the closed-form minimizer: the boundary defect
  // never exceeds the interior residual by more than a fixed factor.
  for (const unsigned seed : {71u, 72u, 73u, 74u}) {
    const auto base = oracles::random_map(seed, 4, 0.4, 0.7);
    const auto fit = fit_hopf_constant(base);
    CHECK(fit.boundary_reality_max <= 10.0 * fit.residual_max + 1e-12);
  }
}

TEST_CASE("make_hopf_report composes the audits") {
  const auto report = make_hopf_report(nits_fig1(), 2.0, 1.5, 5.0 * std::numbers::pi / 9.0);
  CHECK(report.sign_class == SignClass::negative);
  CHECK(report.consistent);
  CHECK(report.kkprime_slack_min >= -1e-12);
  CHECK(report.energy_bound_slack ==
        doctest::Approx(4.0 * std::numbers::pi / 27.0).epsilon(1e-12));
}
