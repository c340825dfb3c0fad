#include "ringmap/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ringmap/error.hpp"
#include "row_scan.hpp"

namespace ringmap {

namespace {

constexpr double tau = 2.0 * std::numbers::pi;
constexpr int density_grid = 1024; // power of two: FFT path in dft()

std::vector<double> arc_positions(const BoundaryReparam& reparam, double total_length,
                                  int samples) {
  // Spectral antiderivative of the density e^psi: the integral of a smooth
  // positive periodic function is its mean times theta plus a periodic part,
  // which is summed from the (rapidly decaying) Fourier coefficients.
  std::vector<Complex> density(density_grid);
  for (int j = 0; j < density_grid; ++j)
    density[static_cast<size_t>(j)] = std::exp(reparam.eval_psi(tau * j / density_grid));
  const auto spectrum = dft(density);

  const double mean = spectrum[0].real();
  // Effective band: coefficients below the noise floor contribute nothing.
  int band = 0;
  for (int k = 1; k <= density_grid / 2 - 1; ++k) {
    const double mag = std::max(std::abs(spectrum[static_cast<size_t>(k)]),
                                std::abs(spectrum[static_cast<size_t>(density_grid - k)]));
    if (mag > 1e-16 * mean) band = k;
  }

  std::vector<double> s(static_cast<size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double theta = tau * j / samples;
    double integral = mean * theta;
    for (int k = 1; k <= band; ++k) {
      const Complex d_k = spectrum[static_cast<size_t>(k)];
      const Complex w_k = d_k / Complex(0.0, static_cast<double>(k));
      const Complex e_k = std::polar(1.0, k * theta) - 1.0;
      integral += 2.0 * (w_k * e_k).real();
    }
    s[static_cast<size_t>(j)] = reparam.offset + total_length * integral / (tau * mean);
  }
  return s;
}

std::vector<Complex> boundary_values_with_table(const BoundaryReparam& reparam,
                                                const JordanCurve& curve,
                                                const ArcLengthTable& table, int samples) {
  const auto s = arc_positions(reparam, table.total_length, samples);
  std::vector<Complex> values(static_cast<size_t>(samples));
  for (int j = 0; j < samples; ++j)
    values[static_cast<size_t>(j)] =
        curve.point(parameter_at_arc_length(curve, table, s[static_cast<size_t>(j)]));
  return values;
}

struct Workspace {
  const MinimizationProblem* problem = nullptr;
  ArcLengthTable outer_table, inner_table;
  int samples = 0;
  int psi_size = 0; // 2M+1 per boundary

  int dim() const { return 2 * psi_size + 1; }

  void unpack(const std::vector<double>& x, BoundaryReparam& outer,
              BoundaryReparam& inner) const {
    outer.psi.assign(x.begin(), x.begin() + psi_size);
    outer.offset = problem->settings.outer_offset;
    inner.psi.assign(x.begin() + psi_size, x.begin() + 2 * psi_size);
    inner.offset = x[static_cast<size_t>(2 * psi_size)];
  }

  HarmonicMap build_map(const std::vector<double>& x) const {
    BoundaryReparam outer = BoundaryReparam::uniform(0), inner = BoundaryReparam::uniform(0);
    unpack(x, outer, inner);
    const auto outer_vals =
        boundary_values_with_table(outer, problem->outer_curve, outer_table, samples);
    const auto inner_vals =
        boundary_values_with_table(inner, problem->inner_curve, inner_table, samples);
    return extend_from_boundary(outer_vals, inner_vals, problem->source, problem->num_modes);
  }

  double energy(const std::vector<double>& x) const {
    const double e = build_map(x).dirichlet_energy();
    if (!std::isfinite(e))
      fail(ErrorCode::numeric_failure, "minimize: non-finite energy (invalid curve data)");
    return e;
  }

  std::vector<double> gradient(const std::vector<double>& x) const {
    const double h = problem->settings.fd_step;
    const int n = dim();
    const auto parts = detail::map_rows<double>(2 * n, [&](int slot) {
      std::vector<double> probe = x;
      const int i = slot / 2;
      probe[static_cast<size_t>(i)] += (slot % 2 == 0 ? h : -h);
      return energy(probe);
    });
    std::vector<double> g(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      g[static_cast<size_t>(i)] =
          (parts[static_cast<size_t>(2 * i)] - parts[static_cast<size_t>(2 * i + 1)]) / (2.0 * h);
    return g;
  }
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

/// Dense BFGS inverse-Hessian update: H <- (I - r s y')H(I - r y s') + r s s'.
void bfgs_update(std::vector<double>& H, const std::vector<double>& s,
                 const std::vector<double>& y, int n) {
  const double sy = dot(s, y);
  const double r = 1.0 / sy;
  std::vector<double> Hy(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      Hy[static_cast<size_t>(i)] += H[static_cast<size_t>(i * n + j)] * y[static_cast<size_t>(j)];
  const double yHy = dot(y, Hy);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = H[static_cast<size_t>(i * n + j)];
      v -= r * (s[static_cast<size_t>(i)] * Hy[static_cast<size_t>(j)] +
                Hy[static_cast<size_t>(i)] * s[static_cast<size_t>(j)]);
      v += r * r * yHy * s[static_cast<size_t>(i)] * s[static_cast<size_t>(j)];
      v += r * s[static_cast<size_t>(i)] * s[static_cast<size_t>(j)];
      H[static_cast<size_t>(i * n + j)] = v;
    }
  }
}

struct DescentOutcome {
  std::vector<double> x;
  double energy = 0.0;
  std::vector<double> history;
  bool converged = false;
  int iterations = 0;
};

DescentOutcome descend(const Workspace& ws, std::vector<double> x) {
  const OptimizerSettings& opt = ws.problem->settings;
  const int n = ws.dim();

  DescentOutcome out;
  double energy = ws.energy(x);
  out.history.push_back(energy);

  std::vector<double> H(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) H[static_cast<size_t>(i * n + i)] = 1.0;

  std::vector<double> g = ws.gradient(x);

  for (int iter = 1; iter <= opt.max_iter; ++iter) {
    out.iterations = iter;
    const double stationary_tol = 1e-9 * (1.0 + std::abs(energy));
    if (norm2(g) < stationary_tol) {
      out.converged = true;
      break;
    }

    std::vector<double> d(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[static_cast<size_t>(i)] -= H[static_cast<size_t>(i * n + j)] * g[static_cast<size_t>(j)];
    double slope = dot(d, g);
    if (!(slope < 0.0)) { // curvature breakdown: fall back to steepest descent
      for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = -g[static_cast<size_t>(i)];
      slope = dot(d, g);
    }

    // Armijo backtracking line search.
    double step = 1.0;
    double trial_energy = energy;
    std::vector<double> trial = x;
    bool accepted = false;
    for (int bt = 0; bt < opt.max_backtracks; ++bt) {
      for (int i = 0; i < n; ++i)
        trial[static_cast<size_t>(i)] = x[static_cast<size_t>(i)] + step * d[static_cast<size_t>(i)];
      trial_energy = ws.energy(trial);
      if (trial_energy <= energy + opt.armijo_c1 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // No decrease along a descent direction at any representable step:
      // the iterate is stationary to working precision.
      out.converged = norm2(g) < 1e-6 * (1.0 + std::abs(energy));
      break;
    }

    std::vector<double> g_new = ws.gradient(trial);
    std::vector<double> s(static_cast<size_t>(n)), y(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      s[static_cast<size_t>(i)] = trial[static_cast<size_t>(i)] - x[static_cast<size_t>(i)];
      y[static_cast<size_t>(i)] = g_new[static_cast<size_t>(i)] - g[static_cast<size_t>(i)];
    }
    if (dot(s, y) > 1e-12 * norm2(s) * norm2(y)) bfgs_update(H, s, y, n);

    x = trial;
    energy = trial_energy;
    g = std::move(g_new);
    out.history.push_back(energy);

    const int w = opt.window;
    if (static_cast<int>(out.history.size()) > w) {
      const double before = out.history[out.history.size() - 1 - static_cast<size_t>(w)];
      if (before - energy <= opt.tol * std::max(1.0, std::abs(energy))) {
        out.converged = true;
        break;
      }
    }
  }

  out.x = std::move(x);
  out.energy = energy;
  return out;
}

} // namespace

BoundaryReparam BoundaryReparam::uniform(int degree) {
  if (degree < 0) fail(ErrorCode::invalid_argument, "reparam degree must be nonnegative");
  BoundaryReparam rep;
  rep.psi.assign(static_cast<size_t>(2 * degree + 1), 0.0);
  rep.offset = 0.0;
  return rep;
}

double BoundaryReparam::eval_psi(double t) const {
  double v = psi.empty() ? 0.0 : psi[0];
  const int M = degree();
  for (int m = 1; m <= M; ++m)
    v += psi[static_cast<size_t>(2 * m - 1)] * std::cos(m * t) +
         psi[static_cast<size_t>(2 * m)] * std::sin(m * t);
  return v;
}

std::vector<Complex> boundary_values(const BoundaryReparam& reparam, const JordanCurve& curve,
                                     int samples) {
  if (samples < 4) fail(ErrorCode::invalid_argument, "boundary_values: too few samples");
  if (reparam.psi.empty() || reparam.psi.size() % 2 == 0)
    fail(ErrorCode::invalid_argument, "boundary_values: psi must have odd size 2M+1");
  const ArcLengthTable table = arc_length(curve, defaults::arc_length_grid);
  return boundary_values_with_table(reparam, curve, table, samples);
}

MinimizationResult minimize(const MinimizationProblem& problem) {
  if (problem.num_modes < 1 || problem.reparam_degree < 0)
    fail(ErrorCode::invalid_argument, "minimize: bad mode or degree counts");

  Workspace ws;
  ws.problem = &problem;
  ws.outer_table = arc_length(problem.outer_curve, defaults::arc_length_grid);
  ws.inner_table = arc_length(problem.inner_curve, defaults::arc_length_grid);
  ws.samples = std::max(4 * problem.num_modes, 2 * problem.num_modes + 2);
  ws.psi_size = 2 * problem.reparam_degree + 1;

  // Uniform-speed start: exact for round-annulus targets, a sound initial
  // guess for star-shaped ones.
  std::vector<double> x0(static_cast<size_t>(ws.dim()), 0.0);
  DescentOutcome best = descend(ws, x0);

  if (problem.settings.multistart > 0) {
    std::mt19937 rng(problem.settings.seed);
    std::normal_distribution<double> bump(0.0, 0.1);
    for (int attempt = 0; attempt < problem.settings.multistart; ++attempt) {
      std::vector<double> x(static_cast<size_t>(ws.dim()));
      for (auto& v : x) v = bump(rng);
      DescentOutcome candidate = descend(ws, x);
      if (candidate.energy < best.energy) best = std::move(candidate);
    }
  }

  MinimizationResult result{.map = ws.build_map(best.x)};
  result.energy = result.map.dirichlet_energy();
  result.energy_history = std::move(best.history);
  ws.unpack(best.x, result.outer_reparam, result.inner_reparam);
  result.converged = best.converged;
  result.iterations = best.iterations;
  result.jacobian_min = jacobian_scan(result.map, defaults::jacobian_grid_radial,
                                      defaults::jacobian_grid_angular);
  return result;
}

double jacobian_scan(const HarmonicMap& map, int radial, int angular) {
  if (radial < 2 || angular < 4) fail(ErrorCode::invalid_argument, "jacobian_scan: grid too small");
  const double rho = map.rho();
  const auto rows = detail::map_rows<double>(radial, [&](int i) {
    const double r = rho + (1.0 - rho) * i / (radial - 1);
    double worst = std::numeric_limits<double>::infinity();
    for (int j = 0; j < angular; ++j)
      worst = std::min(worst, jacobian(map, std::polar(r, tau * j / angular)));
    return worst;
  });
  return *std::min_element(rows.begin(), rows.end());
}

} // namespace ringmap
