#include "ringmap/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ringmap/error.hpp"

namespace ringmap {

namespace {

constexpr double tau = 2.0 * std::numbers::pi;

double df_norm(const HarmonicMap& map, Complex z) {
  const auto [fz, fzb] = map.wirtinger(z);
  return std::sqrt(2.0 * (std::norm(fz) + std::norm(fzb)));
}

/// Fourier coefficients of f restricted to the circle |z| = r, frequency k
/// carrying a_k r^k + conj(b_{-k}) r^{-k} (plus a0 log r + b0 at k = 0).
std::vector<Complex> circle_band(const HarmonicMap& map, double r) {
  const int N = map.modes();
  std::vector<Complex> band(static_cast<size_t>(2 * N + 1), Complex(0.0, 0.0));
  band[static_cast<size_t>(N)] = map.a0() * std::log(r) + map.b0();
  for (int k = -N; k <= N; ++k) {
    if (k == 0) continue;
    band[static_cast<size_t>(N + k)] =
        map.a(k) * std::pow(r, k) + std::conj(map.b(-k)) * std::pow(r, -k);
  }
  return band;
}

} // namespace

std::vector<double> lipschitz_levels(const HarmonicMap& map, int rings, int angular) {
  if (rings < 1 || angular < 8)
    fail(ErrorCode::invalid_argument, "lipschitz_levels: bad ring/angle counts");
  const double rho = map.rho();
  std::vector<double> levels;
  levels.reserve(static_cast<size_t>(rings));
  double sup = 0.0;
  for (int k = 1; k <= rings; ++k) {
    const double offset = 0.5 * (1.0 - rho) * std::pow(2.0, -k);
    for (const double r : {rho + offset, 1.0 - offset}) {
      for (int j = 0; j < angular; ++j)
        sup = std::max(sup, df_norm(map, std::polar(r, tau * j / angular)));
    }
    levels.push_back(sup);
  }
  return levels;
}

double lipschitz_probe(const HarmonicMap& map, int rings, int angular) {
  return lipschitz_levels(map, rings, angular).back();
}

HolderFit boundary_holder_fit(const HarmonicMap& map, BoundarySide side, int samples) {
  if (samples < 64) fail(ErrorCode::invalid_argument, "boundary_holder_fit: too few samples");
  const double r = side == BoundarySide::outer ? 1.0 : map.rho();
  const int N = map.modes();
  const auto band = circle_band(map, r);

  HolderFit fit;

  // Resolution flag: a heavy top band in the derivative spectrum means the
  // stored truncation, not the data, limits the estimate. Bands too narrow
  // to have a meaningful tail are never flagged.
  double total_energy = 0.0, tail_energy = 0.0;
  const int tail_start =
      std::max(2, static_cast<int>(std::ceil((1.0 - defaults::holder_tail_fraction) * N)));
  for (int k = 1; k <= N; ++k) {
    const double e = static_cast<double>(k) * k *
                     (std::norm(band[static_cast<size_t>(N + k)]) +
                      std::norm(band[static_cast<size_t>(N - k)]));
    total_energy += e;
    if (k >= tail_start) tail_energy += e;
  }
  fit.underresolved = tail_start <= N && total_energy > 0.0 &&
                      tail_energy > defaults::holder_tail_tol * total_energy;

  // Spectral angular derivative on the circle.
  std::vector<Complex> deriv(static_cast<size_t>(samples));
  for (int j = 0; j < samples; ++j)
    deriv[static_cast<size_t>(j)] = eval_band_derivative(band, N, tau * j / samples);

  // Modulus of continuity at separations delta = 2*pi*lag/samples, fitted as
  // log omega = beta log delta + log C over the window.
  const int max_lag =
      std::max(2, static_cast<int>(defaults::holder_window_max * samples / tau));
  std::vector<double> xs, ys;
  xs.reserve(static_cast<size_t>(max_lag));
  ys.reserve(static_cast<size_t>(max_lag));
  for (int lag = 1; lag <= max_lag; ++lag) {
    double omega = 0.0;
    for (int j = 0; j < samples; ++j) {
      const int jl = (j + lag) % samples;
      omega = std::max(omega, std::abs(deriv[static_cast<size_t>(jl)] - deriv[static_cast<size_t>(j)]));
    }
    if (omega <= 0.0) continue;
    xs.push_back(std::log(tau * lag / samples));
    ys.push_back(std::log(omega));
  }
  if (xs.size() < 2) {
    // Constant derivative: no measurable modulus of continuity.
    fit.exponent = 1.0;
    fit.constant = 0.0;
    fit.r_squared = 1.0;
    return fit;
  }

  const double n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  fit.exponent = slope;
  fit.constant = std::exp(intercept);
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (slope * xs[i] + intercept);
    ss_res += e * e;
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

double length_area_check(const HarmonicMap& map, Complex z0, double r_max, int steps,
                         double K, double Kprime, int arc_points) {
  const double rho = map.rho();
  if (steps < 2 || arc_points < 16)
    fail(ErrorCode::invalid_argument, "length_area_check: bad step counts");
  if (!(r_max > 0.0) || r_max >= 1.0 - rho)
    fail(ErrorCode::invalid_argument, "length_area_check: r_max must lie in (0, 1 - rho)");

  const double mag = std::abs(z0);
  const bool on_outer = std::abs(mag - 1.0) < 1e-9;
  const bool on_inner = std::abs(mag - rho) < 1e-9;
  if (!on_outer && !on_inner)
    fail(ErrorCode::invalid_argument, "length_area_check: z0 must lie on a boundary circle");

  // The inequality is a half-disk statement: cross-arcs at an outer-boundary
  // point subtend at most pi. Inner-boundary points are carried to the outer
  // circle by the inversion z -> rho/z first (energy- and class-preserving).
  if (on_inner) {
    return length_area_check(precompose_inversion(map), rho / z0, r_max, steps, K, Kprime,
                             arc_points);
  }

  const double sigma = std::arg(z0);
  const double dtau = r_max / steps;

  // The in-annulus cross-arc at distance t subtends
  // phi in (acos(-t/2), 2*pi - acos(-t/2)) relative to the z0 direction;
  // its width stays below pi, which is what the constants rely on.
  const auto arc_start = [](double t) { return std::acos(std::clamp(-0.5 * t, -1.0, 1.0)); };

  // Image length of the cross-arc at distance t (midpoint rule in phi).
  const auto arc_length_at = [&](double t) {
    const double phi0 = arc_start(t);
    const double width = tau - 2.0 * phi0;
    const double dphi = width / arc_points;
    double len = 0.0;
    for (int q = 0; q < arc_points; ++q) {
      const double phi = sigma + phi0 + (q + 0.5) * dphi;
      const Complex z = z0 + std::polar(t, phi);
      const auto [fz, fzb] = map.wirtinger(z);
      const Complex dz = Complex(0.0, t) * std::polar(1.0, phi); // d z / d phi
      len += std::abs(fz * dz + fzb * std::conj(dz)) * dphi;
    }
    return len;
  };

  // Image area increment of the half-ring cell (midpoint rule in t and phi).
  const auto cell_area = [&](double t) {
    const double phi0 = arc_start(t);
    const double width = tau - 2.0 * phi0;
    const double dphi = width / arc_points;
    double acc = 0.0;
    for (int q = 0; q < arc_points; ++q) {
      const double phi = sigma + phi0 + (q + 0.5) * dphi;
      const Complex z = z0 + std::polar(t, phi);
      const auto [fz, fzb] = map.wirtinger(z);
      acc += (std::norm(fz) - std::norm(fzb)) * t * dphi;
    }
    return acc * dtau;
  };

  // F by the trapezoid rule on cell edges (the integrand l^2/t vanishes
  // linearly at t = 0); the area by midpoint cells, so both totals refer to
  // the same prefix disk of radius r_j = j*dtau.
  double F = 0.0;
  double area = 0.0;
  double prev_term = 0.0;
  double slack_min = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= steps; ++j) {
    const double r_here = j * dtau;
    const double len = arc_length_at(r_here);
    const double term = len * len / r_here;
    F += 0.5 * (prev_term + term) * dtau;
    prev_term = term;
    area += cell_area((j - 0.5) * dtau);

    const double bound = std::numbers::pi * K * area +
                         0.5 * std::numbers::pi * Kprime * r_here * r_here;
    slack_min = std::min(slack_min, bound - F);
  }
  return slack_min;
}

double kellogg_prediction(double alpha, double mod_source, double mod_target) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    fail(ErrorCode::invalid_argument, "kellogg_prediction: alpha must lie in (0, 1)");
  if (!(mod_source > 1.0) || !(mod_target > 1.0))
    fail(ErrorCode::invalid_argument, "kellogg_prediction: moduli must exceed 1");
  return mod_source >= mod_target ? alpha : alpha / (2.0 + alpha);
}

} // namespace ringmap
