#pragma once

#include <optional>
#include <vector>

#include "ringmap/curve.hpp"
#include "ringmap/defaults.hpp"
#include "ringmap/harmonic_map.hpp"

namespace ringmap {

/** Monotone degree-one circle-to-curve correspondence, parameterized through
 * a density exponent: with psi a real trigonometric polynomial of degree M,
 *
 *   s(theta) = offset + L * (int_0^theta e^psi) / (int_0^{2pi} e^psi)
 *
 * maps angles to arc-length positions on the target curve. The density
 * e^psi is strictly positive, so s is strictly increasing and satisfies
 * s(theta + 2pi) = s(theta) + L for free. */
struct BoundaryReparam {
  /// [p0, c1, s1, c2, s2, ...]: psi(t) = p0 + sum_m (c_m cos(mt) + s_m sin(mt)).
  std::vector<double> psi;
  double offset = 0.0;

  static BoundaryReparam uniform(int degree);
  int degree() const { return (static_cast<int>(psi.size()) - 1) / 2; }
  double eval_psi(double t) const;
};

/// gamma(s(theta_j)) on the uniform angular grid theta_j = 2*pi*j/samples.
std::vector<Complex> boundary_values(const BoundaryReparam& reparam,
                                     const JordanCurve& curve, int samples);

struct OptimizerSettings {
  double tol = defaults::minimize_tol;    ///< windowed relative energy decrease
  int max_iter = defaults::minimize_max_iter;
  double fd_step = defaults::fd_step;     ///< central-difference step
  int window = defaults::minimize_window;
  double armijo_c1 = defaults::armijo_c1;
  int max_backtracks = defaults::max_backtracks;
  double outer_offset = 0.0; ///< gauge pin for the rotational freedom
  int multistart = 0;        ///< extra seeded starts (0 = deterministic single start)
  unsigned seed = 12345;
};

struct MinimizationProblem {
  AnnulusSource source;
  JordanCurve outer_curve;
  JordanCurve inner_curve;
  int num_modes = defaults::num_modes;
  int reparam_degree = defaults::reparam_degree;
  OptimizerSettings settings;
};

struct MinimizationResult {
  HarmonicMap map;
  double energy = 0.0;
  std::vector<double> energy_history; ///< best-so-far energies, non-increasing
  BoundaryReparam outer_reparam;
  BoundaryReparam inner_reparam;
  bool converged = false;
  int iterations = 0;
  double jacobian_min = 0.0; ///< grid scan of |f_z|^2 - |f_zbar|^2
};

/** Quasi-Newton (BFGS) descent over the boundary correspondences. The
 * decision variables are the two density exponents plus the inner offset;
 * the outer offset is pinned (settings.outer_offset) to remove the
 * rotational gauge freedom. Each iterate harmonically extends the boundary
 * values and evaluates the closed-form energy; gradients are central finite
 * differences. Iteration stops when the relative energy decrease over a
 * sliding window falls below tol (converged), at a stationary start, or at
 * the iteration cap (converged = false, best iterate still returned).
 *
 * The diffeomorphism property is not enforced during iteration; the
 * a-posteriori Jacobian scan in the result certifies it on a grid. */
MinimizationResult minimize(const MinimizationProblem& problem);

/// Minimum of |f_z|^2 - |f_zbar|^2 over a polar grid including both boundary rings.
double jacobian_scan(const HarmonicMap& map, int radial, int angular);

} // namespace ringmap
