#pragma once

// Test-only oracles, independent of the library code paths they check:
// quadrature instead of closed forms, finite differences instead of series
// derivatives, Moebius transforms instead of potential solves.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "ringmap/harmonic_map.hpp"

namespace oracles {

using ringmap::Complex;
using ringmap::HarmonicMap;

inline constexpr double tau = 2.0 * std::numbers::pi;

/// Sparse coefficient helper: terms are (k, value) with k != 0.
inline HarmonicMap make_map(double rho, Complex a0, Complex b0,
                            std::vector<std::pair<int, Complex>> a_terms,
                            std::vector<std::pair<int, Complex>> b_terms, int modes = 0) {
  for (const auto& [k, v] : a_terms) modes = std::max(modes, std::abs(k));
  for (const auto& [k, v] : b_terms) modes = std::max(modes, std::abs(k));
  modes = std::max(modes, 1);
  std::vector<Complex> a(static_cast<size_t>(2 * modes + 1), Complex(0.0, 0.0));
  std::vector<Complex> b(a.size(), Complex(0.0, 0.0));
  for (const auto& [k, v] : a_terms) a[static_cast<size_t>(k + modes)] = v;
  for (const auto& [k, v] : b_terms) b[static_cast<size_t>(k + modes)] = v;
  return HarmonicMap(ringmap::AnnulusSource(rho), a0, b0, std::move(a), std::move(b));
}

/** Dirichlet energy by brute-force polar quadrature of 2(|f_z|^2 + |f_zbar|^2):
 * composite Simpson radially, trapezoid (exact for band-limited data) in the
 * angle. Independent of the coefficient-space energy formula. */
inline double energy_by_quadrature(const HarmonicMap& map, int radial = 1025, int angular = 0) {
  if (angular <= 0) angular = std::max(64, 4 * map.modes() + 4);
  if (radial % 2 == 0) ++radial;
  const double rho = map.rho();
  const double h = (1.0 - rho) / (radial - 1);

  auto ring_integral = [&](double r) {
    double acc = 0.0;
    for (int j = 0; j < angular; ++j) {
      const auto [fz, fzb] = map.wirtinger(std::polar(r, tau * j / angular));
      acc += std::norm(fz) + std::norm(fzb);
    }
    return acc * (tau / angular) * r;
  };

  double total = ring_integral(rho) + ring_integral(1.0);
  for (int i = 1; i < radial - 1; ++i)
    total += ring_integral(rho + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return 2.0 * total * h / 3.0;
}

/// Five-point finite-difference Laplacian of the series evaluation,
/// Richardson-extrapolated (h and h/2) to push truncation below roundoff.
inline Complex fd_laplacian(const HarmonicMap& map, Complex z, double h = 3e-4) {
  auto five_point = [&](double step) {
    const Complex sum = map.evaluate(z + step) + map.evaluate(z - step) +
                        map.evaluate(z + Complex(0.0, step)) +
                        map.evaluate(z - Complex(0.0, step)) - 4.0 * map.evaluate(z);
    return sum / (step * step);
  };
  return (4.0 * five_point(0.5 * h) - five_point(h)) / 3.0;
}

/// Jacobian u_x v_y - u_y v_x by central differences of the evaluation.
inline double fd_jacobian(const HarmonicMap& map, Complex z, double h = 1e-6) {
  const Complex fx = (map.evaluate(z + h) - map.evaluate(z - h)) / (2.0 * h);
  const Complex fy =
      (map.evaluate(z + Complex(0.0, h)) - map.evaluate(z - Complex(0.0, h))) / (2.0 * h);
  return fx.real() * fy.imag() - fx.imag() * fy.real();
}

/// Wirtinger pair by central differences of the evaluation.
inline ringmap::WirtingerPair fd_wirtinger(const HarmonicMap& map, Complex z, double h = 1e-6) {
  const Complex fx = (map.evaluate(z + h) - map.evaluate(z - h)) / (2.0 * h);
  const Complex fy =
      (map.evaluate(z + Complex(0.0, h)) - map.evaluate(z - Complex(0.0, h))) / (2.0 * h);
  return {0.5 * (fx - Complex(0.0, 1.0) * fy), 0.5 * (fx + Complex(0.0, 1.0) * fy)};
}

/** Modulus of the ring between the unit circle and an interior circle of
 * radius `radius` centered at real `center`: the Moebius transform
 * (z - a)/(1 - a z) with the root a in (-1,1) of d a^2 - (1 + d^2 - r^2) a + d
 * makes the circles concentric, and the modulus is the reciprocal image
 * radius. */
inline double eccentric_annulus_modulus(double center, double radius) {
  const double d = center, r = radius;
  if (std::abs(d) < 1e-15) return 1.0 / r;
  const double s = 1.0 + d * d - r * r;
  const double disc = s * s - 4.0 * d * d;
  const double a = (s - std::sqrt(disc)) / (2.0 * d);
  const std::complex<double> inner_pt(d + r, 0.0);
  const double image_radius = std::abs((inner_pt - a) / (1.0 - a * inner_pt));
  return 1.0 / image_radius;
}

/** Largest-separation scan of the modulus of continuity of periodic samples;
 * returns the log-log least-squares slope over lags with separation in
 * [2*pi/n, window]. */
inline double continuity_slope(const std::vector<Complex>& samples, double window = 0.1) {
  const int n = static_cast<int>(samples.size());
  const int max_lag = std::max(2, static_cast<int>(window * n / tau));
  std::vector<double> xs, ys;
  for (int lag = 1; lag <= max_lag; ++lag) {
    double omega = 0.0;
    for (int j = 0; j < n; ++j)
      omega = std::max(omega, std::abs(samples[static_cast<size_t>((j + lag) % n)] -
                                       samples[static_cast<size_t>(j)]));
    if (omega > 0.0) {
      xs.push_back(std::log(tau * lag / n));
      ys.push_back(std::log(omega));
    }
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double m = static_cast<double>(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

/** Random band-limited map with bounded negative-frequency growth (the
 * coefficients at -k carry a rho^k factor so the series stays O(1) on the
 * inner circle). Deterministic in the seed. */
inline HarmonicMap random_map(unsigned seed, int max_modes = 8, double rho_lo = 0.3,
                              double rho_hi = 0.8) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double rho = rho_lo + (rho_hi - rho_lo) * uni(rng);
  const int modes = 1 + static_cast<int>(uni(rng) * (max_modes - 1));
  std::vector<Complex> a(static_cast<size_t>(2 * modes + 1), Complex(0.0, 0.0));
  std::vector<Complex> b(a.size(), Complex(0.0, 0.0));
  for (int k = 1; k <= modes; ++k) {
    const double decay = std::pow(0.7, k - 1);
    a[static_cast<size_t>(modes + k)] = 0.5 * decay * Complex(gauss(rng), gauss(rng));
    b[static_cast<size_t>(modes + k)] = 0.5 * decay * Complex(gauss(rng), gauss(rng));
    const double damp = 0.5 * decay * std::pow(rho, k);
    a[static_cast<size_t>(modes - k)] = damp * Complex(gauss(rng), gauss(rng));
    b[static_cast<size_t>(modes - k)] = damp * Complex(gauss(rng), gauss(rng));
  }
  const Complex a0(0.4 * gauss(rng), 0.4 * gauss(rng));
  const Complex b0(gauss(rng), gauss(rng));
  return HarmonicMap(ringmap::AnnulusSource(rho), a0, b0, std::move(a), std::move(b));
}

} // namespace oracles
