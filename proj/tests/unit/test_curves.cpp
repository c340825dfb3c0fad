#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "ringmap/curve.hpp"
#include "ringmap/defaults.hpp"
#include "ringmap/error.hpp"
#include "support/oracles.hpp"

using namespace ringmap;
using oracles::tau;

namespace {

std::vector<Complex> sample_loop(int n, auto&& gamma) {
  std::vector<Complex> pts(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) pts[static_cast<size_t>(j)] = gamma(tau * j / n);
  return pts;
}

JordanCurve ellipse_2_1() {
  // x = 2 cos t, y = sin t  <=>  c_1 = 3/2, c_{-1} = 1/2.
  std::vector<Complex> modes(3, Complex(0.0, 0.0));
  modes[2] = Complex(1.5, 0.0);
  modes[0] = Complex(0.5, 0.0);
  return JordanCurve::from_modes(std::move(modes));
}

/// Trapezoid arc length of a smooth closed curve (spectrally accurate).
double arclength_by_quadrature(const JordanCurve& curve, int n = 1 << 15) {
  double acc = 0.0;
  for (int j = 0; j < n; ++j) acc += curve.speed(tau * j / n);
  return acc * tau / n;
}

} // namespace

TEST_CASE("curve_from_points: circles and the ellipse") {
  const auto unit = curve_from_points(sample_loop(64, [](double t) { return std::polar(1.0, t); }), 4);
  CHECK(std::abs(unit.coeff(1) - Complex(1.0, 0.0)) < 1e-12);
  for (const int m : {-4, -3, -2, -1, 0, 2, 3, 4})
    CHECK(std::abs(unit.coeff(m)) < 1e-12);

  const auto scaled =
      curve_from_points(sample_loop(64, [](double t) { return (2.0 / 3.0) * std::polar(1.0, t); }), 4);
  CHECK(std::abs(scaled.coeff(1) - Complex(2.0 / 3.0, 0.0)) < 1e-12);

  const auto ell = curve_from_points(
      sample_loop(64, [](double t) { return Complex(2.0 * std::cos(t), std::sin(t)); }), 4);
  CHECK(std::abs(ell.coeff(1) - Complex(1.5, 0.0)) < 1e-12);
  CHECK(std::abs(ell.coeff(-1) - Complex(0.5, 0.0)) < 1e-12);
}

TEST_CASE("curve_from_points rejects bad input") {
  // Too few samples for the requested band.
  const auto few = sample_loop(7, [](double t) { return std::polar(1.0, t); });
  CHECK_THROWS_AS((void)curve_from_points(few, 4), Error);

  // Degenerate fit: all samples coincide, so the curve cannot be regular.
  const std::vector<Complex> flat(32, Complex(1.0, 1.0));
  CHECK_THROWS_AS((void)curve_from_points(flat, 2), Error);

  // Self-intersecting figure-eight.
  const auto eight = sample_loop(64, [](double t) {
    return Complex(std::sin(2.0 * t), std::sin(t));
  });
  CHECK_THROWS_AS((void)curve_from_points(eight, 4), Error);
}

TEST_CASE("orientation is normalized to positive") {
  const auto clockwise = sample_loop(32, [](double t) { return std::polar(1.0, -t); });
  const auto curve = curve_from_points(clockwise, 2);
  CHECK(enclosed_area(curve) > 0.0);
  CHECK(std::abs(curve.coeff(1) - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("arc_length totals") {
  const auto unit = JordanCurve::circle({0.0, 0.0}, 1.0);
  CHECK(arc_length(unit, 512).total_length == doctest::Approx(tau).epsilon(1e-12));

  const auto small = JordanCurve::circle({0.0, 0.0}, 2.0 / 3.0);
  CHECK(arc_length(small, 512).total_length ==
        doctest::Approx(2.0 * tau / 3.0).epsilon(1e-12));

  const auto ell = ellipse_2_1();
  const double oracle = arclength_by_quadrature(ell);
  CHECK(oracle == doctest::Approx(9.68844822054768).epsilon(1e-10)); // frozen from the quadrature
  CHECK(arc_length(ell, 4096).total_length == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("arc-length inverse round trip") {
  const auto ell = ellipse_2_1();
  const auto table = arc_length(ell, defaults::arc_length_grid);
  for (size_t i = 0; i < table.knots.size(); i += 97) {
    const double s = table.s[i];
    const double t = parameter_at_arc_length(ell, table, s);
    CHECK(std::abs(table.s_of_t(t) - s) < 1e-8);
  }
  // Newton-refined inverse against a test-side partial arc length
  // (composite Simpson from 0 to t, independent of the table).
  auto partial_length = [&](double t) {
    const int n = 1 << 16;
    const double h = t / n;
    double acc = ell.speed(0.0) + ell.speed(t);
    for (int i = 1; i < n; ++i) acc += ell.speed(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * h / 3.0;
  };
  const double L = table.total_length;
  for (const double frac : {0.1, 0.37, 0.5, 0.9}) {
    const double t = parameter_at_arc_length(ell, table, frac * L);
    CHECK(partial_length(t) == doctest::Approx(frac * L).epsilon(1e-9));
  }
}

TEST_CASE("enclosed_area closed forms") {
  CHECK(enclosed_area(JordanCurve::circle({0.0, 0.0}, 1.0)) ==
        doctest::Approx(std::numbers::pi).epsilon(1e-12));
  CHECK(enclosed_area(JordanCurve::circle({0.3, -0.2}, 2.0 / 3.0)) ==
        doctest::Approx(4.0 * std::numbers::pi / 9.0).epsilon(1e-12));
  CHECK(enclosed_area(ellipse_2_1()) == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-12));
  for (const double R : {0.5, 1.0, 2.0})
    CHECK(std::abs(enclosed_area(JordanCurve::circle({0.0, 0.0}, R)) -
                   std::numbers::pi * R * R) < 1e-10);
}

TEST_CASE("chord_arc_constant: circles hit pi/2, similarity invariance") {
  const double circle_value = std::numbers::pi / 2.0; // arc/chord maximized at antipodes
  CHECK(chord_arc_constant(JordanCurve::circle({0.0, 0.0}, 1.0), 512) ==
        doctest::Approx(circle_value).epsilon(1e-9));
  CHECK(chord_arc_constant(JordanCurve::circle({5.0, 2.0}, 0.125), 512) ==
        doctest::Approx(circle_value).epsilon(1e-9));

  const auto ell = ellipse_2_1();
  const double base = chord_arc_constant(ell, 512);
  CHECK(base >= circle_value - 1e-9);

  // Rotated, translated, scaled copy of the ellipse.
  const Complex spin = std::polar(1.0, 0.83);
  std::vector<Complex> modes(3, Complex(0.0, 0.0));
  modes[2] = 3.0 * spin * Complex(1.5, 0.0);
  modes[0] = 3.0 * spin * Complex(0.5, 0.0);
  modes[1] = Complex(-7.0, 11.0);
  const auto moved = JordanCurve::from_modes(std::move(modes));
  CHECK(chord_arc_constant(moved, 512) == doctest::Approx(base).epsilon(1e-6));
}

TEST_CASE("holder_exponent_beta") {
  CHECK(holder_exponent_beta(1.0, 1.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  const double b = std::numbers::pi / 2.0;
  CHECK(holder_exponent_beta(1.0, b) ==
        doctest::Approx(1.0 / ((1.0 + std::numbers::pi) * (1.0 + std::numbers::pi)))
            .epsilon(1e-12));
  CHECK(holder_exponent_beta(2.0, 1.0) == doctest::Approx(1.0 / 18.0).epsilon(1e-15));
  CHECK_THROWS_AS((void)holder_exponent_beta(0.5, 1.0), Error);
  CHECK_THROWS_AS((void)holder_exponent_beta(1.0, 0.2), Error);
}
