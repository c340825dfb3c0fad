#include "ringmap/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ringmap/defaults.hpp"
#include "ringmap/error.hpp"

namespace ringmap {

namespace {

constexpr double tau = 2.0 * std::numbers::pi;

double wrap_positive(double x, double period) {
  double y = std::fmod(x, period);
  if (y < 0.0) y += period;
  return y;
}

double signed_area_from_modes(std::span<const Complex> coeffs, int max_mode) {
  // (1/2) Im oint conj(gamma) gamma' dt = pi sum_m m |c_m|^2.
  double area = 0.0;
  for (int m = -max_mode; m <= max_mode; ++m)
    area += m * std::norm(coeffs[static_cast<size_t>(m + max_mode)]);
  return std::numbers::pi * area;
}

// Winding number of gamma about p, by accumulated argument on a dense grid.
int winding_number(const JordanCurve& curve, Complex p, int grid) {
  double total = 0.0;
  Complex prev = curve.point(0.0) - p;
  for (int j = 1; j <= grid; ++j) {
    const Complex cur = curve.point(tau * j / grid) - p;
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / tau));
}

void validate_curve(const JordanCurve& curve) {
  const int grid = defaults::curve_validation_grid;

  double max_speed = 0.0, min_speed = std::numeric_limits<double>::infinity();
  double diameter = 0.0;
  std::vector<Complex> pts(static_cast<size_t>(grid));
  for (int j = 0; j < grid; ++j) {
    const double t = tau * j / grid;
    pts[static_cast<size_t>(j)] = curve.point(t);
    const double sp = curve.speed(t);
    max_speed = std::max(max_speed, sp);
    min_speed = std::min(min_speed, sp);
  }
  if (!(max_speed > 0.0) || min_speed < defaults::curve_regularity_floor * max_speed)
    fail(ErrorCode::invalid_curve, "curve is not regular: |gamma'| vanishes on the sample grid");

  for (int j = 0; j < grid; ++j)
    diameter = std::max(diameter, std::abs(pts[static_cast<size_t>(j)] - pts[0]));
  (void)diameter;

  // Simplicity: the N-gon through the samples must not self-intersect.
  // Non-adjacent segment pairs are tested with the standard orientation
  // predicate; adjacent segments share an endpoint and are skipped.
  const int n = 512;
  const int stride = grid / n;
  auto sample = [&](int i) { return pts[static_cast<size_t>(((i % n) + n) % n * stride)]; };
  auto orient = [](Complex a, Complex b, Complex c) {
    const double v = (b.real() - a.real()) * (c.imag() - a.imag()) -
                     (b.imag() - a.imag()) * (c.real() - a.real());
    return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
  };
  auto segments_cross = [&](Complex a, Complex b, Complex c, Complex d) {
    const int o1 = orient(a, b, c), o2 = orient(a, b, d);
    const int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue; // wrap-adjacent
      if (segments_cross(sample(i), sample(i + 1), sample(j), sample(j + 1)))
        fail(ErrorCode::invalid_curve, "curve is not simple: sampled segments intersect");
    }
  }

  if (winding_number(curve, curve.coeff(0), grid) != 1)
    fail(ErrorCode::invalid_curve, "curve does not wind once around its coefficient mean");
}

} // namespace

JordanCurve JordanCurve::from_modes(std::vector<Complex> coeffs) {
  if (coeffs.empty() || coeffs.size() % 2 == 0)
    fail(ErrorCode::invalid_curve, "curve coefficients must have odd size 2M+1");
  int max_mode = (static_cast<int>(coeffs.size()) - 1) / 2;

  Orientation detected = signed_area_from_modes(coeffs, max_mode) >= 0.0
                             ? Orientation::positive
                             : Orientation::negative;
  if (detected == Orientation::negative) {
    // Reverse the parameter: gamma(t) -> gamma(-t) swaps c_m and c_{-m}.
    for (int m = 1; m <= max_mode; ++m)
      std::swap(coeffs[static_cast<size_t>(max_mode + m)], coeffs[static_cast<size_t>(max_mode - m)]);
  }

  JordanCurve curve(std::move(coeffs), max_mode, Orientation::positive);
  validate_curve(curve);
  return curve;
}

JordanCurve JordanCurve::circle(Complex center, double radius) {
  if (!(radius > 0.0)) fail(ErrorCode::invalid_curve, "circle radius must be positive");
  std::vector<Complex> coeffs(3, Complex(0.0, 0.0));
  coeffs[1] = center;
  coeffs[2] = Complex(radius, 0.0);
  return JordanCurve(std::move(coeffs), 1, Orientation::positive);
}

Complex JordanCurve::coeff(int m) const {
  if (std::abs(m) > max_mode_) return Complex(0.0, 0.0);
  return coeffs_[static_cast<size_t>(m + max_mode_)];
}

Complex JordanCurve::point(double t) const { return eval_band(coeffs_, max_mode_, t); }

Complex JordanCurve::derivative(double t) const {
  return eval_band_derivative(coeffs_, max_mode_, t);
}

double JordanCurve::speed(double t) const { return std::abs(derivative(t)); }

JordanCurve curve_from_points(std::span<const Complex> samples, int num_modes) {
  if (num_modes < 1) fail(ErrorCode::invalid_argument, "curve_from_points: num_modes must be >= 1");
  if (static_cast<int>(samples.size()) < 2 * num_modes + 1)
    fail(ErrorCode::invalid_argument,
         "curve_from_points: need at least " + std::to_string(2 * num_modes + 1) + " samples");
  std::vector<Complex> coeffs = band_spectrum(samples, num_modes);
  return JordanCurve::from_modes(std::move(coeffs));
}

double ArcLengthTable::s_of_t(double t) const {
  const double tw = wrap_positive(t, tau);
  const int n = static_cast<int>(knots.size()) - 1;
  const double h = tau / n;
  int i = std::min(static_cast<int>(tw / h), n - 1);
  const double w = (tw - knots[static_cast<size_t>(i)]) / h;
  return s[static_cast<size_t>(i)] + w * (s[static_cast<size_t>(i + 1)] - s[static_cast<size_t>(i)]);
}

double ArcLengthTable::t_of_s(double arc) const {
  const double sw = wrap_positive(arc, total_length);
  const auto it = std::upper_bound(s.begin(), s.end(), sw);
  int i = static_cast<int>(it - s.begin()) - 1;
  i = std::clamp(i, 0, static_cast<int>(s.size()) - 2);
  const double seg = s[static_cast<size_t>(i + 1)] - s[static_cast<size_t>(i)];
  const double w = seg > 0.0 ? (sw - s[static_cast<size_t>(i)]) / seg : 0.0;
  return knots[static_cast<size_t>(i)] + w * (knots[static_cast<size_t>(i + 1)] - knots[static_cast<size_t>(i)]);
}

ArcLengthTable arc_length(const JordanCurve& curve, int grid_size) {
  if (grid_size < 8) fail(ErrorCode::invalid_argument, "arc_length: grid too small");

  ArcLengthTable table;
  table.knots.resize(static_cast<size_t>(grid_size) + 1);
  table.s.resize(static_cast<size_t>(grid_size) + 1);
  const double h = tau / grid_size;

  double max_speed = 0.0, min_speed = std::numeric_limits<double>::infinity();

  // Cumulative composite quadrature: per-cell 4-point Gauss-Legendre, which
  // keeps the knots accurate to machine precision for smooth curves.
  static const double gl_x[4] = {-0.8611363115940526, -0.3399810435848563,
                                 0.3399810435848563, 0.8611363115940526};
  static const double gl_w[4] = {0.3478548451374538, 0.6521451548625461,
                                 0.6521451548625461, 0.3478548451374538};
  table.knots[0] = 0.0;
  table.s[0] = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    const double t0 = h * i;
    double cell = 0.0;
    for (int q = 0; q < 4; ++q) {
      const double t = t0 + 0.5 * h * (1.0 + gl_x[q]);
      const double sp = curve.speed(t);
      cell += gl_w[q] * sp;
      max_speed = std::max(max_speed, sp);
      min_speed = std::min(min_speed, sp);
    }
    table.knots[static_cast<size_t>(i + 1)] = t0 + h;
    table.s[static_cast<size_t>(i + 1)] = table.s[static_cast<size_t>(i)] + 0.5 * h * cell;
  }
  if (min_speed < defaults::curve_regularity_floor * max_speed)
    fail(ErrorCode::invalid_curve, "arc_length: curve is not regular on the quadrature grid");
  table.total_length = table.s.back();
  return table;
}

double parameter_at_arc_length(const JordanCurve& curve, const ArcLengthTable& table, double arc) {
  const double sw = wrap_positive(arc, table.total_length);
  double t = table.t_of_s(sw);

  // Newton refinement of s(t) = sw. The residual integrates |gamma'| from the
  // nearest lower knot with 4-point Gauss-Legendre, so the only error left is
  // the quadrature of a smooth function over a fraction of one cell.
  static const double gl_x[4] = {-0.8611363115940526, -0.3399810435848563,
                                 0.3399810435848563, 0.8611363115940526};
  static const double gl_w[4] = {0.3478548451374538, 0.6521451548625461,
                                 0.6521451548625461, 0.3478548451374538};
  const int n = static_cast<int>(table.knots.size()) - 1;
  const double h = tau / n;
  for (int iter = 0; iter < 3; ++iter) {
    int i = std::clamp(static_cast<int>(t / h), 0, n - 1);
    const double t0 = table.knots[static_cast<size_t>(i)];
    double partial = 0.0;
    const double len = t - t0;
    for (int q = 0; q < 4; ++q)
      partial += gl_w[q] * curve.speed(t0 + 0.5 * len * (1.0 + gl_x[q]));
    partial *= 0.5 * len;
    const double resid = table.s[static_cast<size_t>(i)] + partial - sw;
    t -= resid / std::max(curve.speed(t), 1e-300);
  }
  return t;
}

double enclosed_area(const JordanCurve& curve) {
  return signed_area_from_modes(curve.coeffs(), curve.max_mode());
}

double chord_arc_constant(const JordanCurve& curve, int pair_grid) {
  if (pair_grid < 4) fail(ErrorCode::invalid_argument, "chord_arc_constant: pair grid too small");
  const ArcLengthTable table = arc_length(curve, defaults::arc_length_grid);
  const double L = table.total_length;

  std::vector<Complex> pts(static_cast<size_t>(pair_grid));
  std::vector<double> arcs(static_cast<size_t>(pair_grid));
  for (int j = 0; j < pair_grid; ++j) {
    const double t = tau * j / pair_grid;
    pts[static_cast<size_t>(j)] = curve.point(t);
    arcs[static_cast<size_t>(j)] = table.s_of_t(t);
  }

  double best = 1.0;
  for (int i = 0; i < pair_grid; ++i) {
    for (int j = i + 1; j < pair_grid; ++j) {
      const double chord = std::abs(pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(j)]);
      if (chord < 1e-14) continue; // coincident pair: skipped, not an error
      const double along = std::abs(arcs[static_cast<size_t>(i)] - arcs[static_cast<size_t>(j)]);
      const double d_arc = std::min(along, L - along);
      best = std::max(best, d_arc / chord);
    }
  }
  return best;
}

double holder_exponent_beta(double K, double B) {
  if (!(K >= 1.0)) fail(ErrorCode::invalid_argument, "holder_exponent_beta: K must be >= 1");
  if (!(B >= 1.0)) fail(ErrorCode::invalid_argument, "holder_exponent_beta: B must be >= 1");
  const double q = 1.0 + 2.0 * B;
  return 1.0 / (K * q * q);
}

} // namespace ringmap
