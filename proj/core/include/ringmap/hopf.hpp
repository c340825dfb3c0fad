#pragma once

#include "ringmap/defaults.hpp"
#include "ringmap/harmonic_map.hpp"

namespace ringmap {

/** Scan grid for Hopf-differential and quasiconformality audits. Radii are
 * Chebyshev-clustered toward both boundary circles, where the residuals of
 * truncated minimizers concentrate. */
struct HopfGrid {
  int radial = defaults::hopf_grid_radial;
  int angular = defaults::hopf_grid_angular;
};

/// Hopf differential phi(z) = f_z * conj(f_zbar) = g'(z) h'(z).
Complex hopf_field(const HarmonicMap& map, Complex z);

/** Least-squares constant of z^2 * phi(z) over the grid. For a stationary
 * (Noether-harmonic) map on the annulus, z^2 phi is a real constant c, so
 * residual_max and the boundary reality defect both vanish. */
struct HopfFit {
  double c_fit = 0.0;               ///< mean of Re(z^2 phi) over the grid
  double c_imag = 0.0;              ///< mean of Im(z^2 phi); reported, not discarded
  double residual_max = 0.0;        ///< max |z^2 phi - c_fit|
  double boundary_reality_max = 0.0; ///< max |Im(z^2 phi)| on both boundary circles
};

HopfFit fit_hopf_constant(const HarmonicMap& map, HopfGrid grid = {});

enum class SignClass { negative, zero, positive };

const char* sign_class_name(SignClass s) noexcept;

/// Zero band used by default: |c| < zero_tol_scale * (1 + |c|).
double default_zero_tol(double c_fit);

struct SignClassification {
  SignClass sign_class = SignClass::zero;
  bool consistent = false; ///< trichotomy against the modulus comparison holds
};

/** Sign of c against the modulus trichotomy: c > 0 iff Mod(source) < Mod(target),
 * c = 0 iff equal, c < 0 iff Mod(source) > Mod(target). Moduli compare within
 * zero_tol as well. */
SignClassification classify_sign(double c_fit, double mod_source, double mod_target,
                                 double zero_tol);

/** Pointwise slack of a (K,K') quasiconformality bound: min over the grid of
 * 2 K J(z) + Kprime - ||Df||^2. Nonnegative slack certifies the bound. */
double quasiconformal_slack(const HarmonicMap& map, double K, double Kprime,
                            HopfGrid grid = {});

/** Audit of the bound with K = 1 and K' = 2|c|/rho^2, where the slack
 * collapses to K' - 4 |f_zbar|^2 and is tightest at the inner boundary.
 * Note the sharp constant valid for every sense-preserving map with Hopf
 * differential c/z^2 is 4|c|/rho^2 (equality for the critical map, whose
 * Beltrami ratio reaches 1 at the inner circle); the 2|c|/rho^2 form audited
 * here is the tighter convention, exact for minimizers whose inner Beltrami
 * ratio stays below 1/2. */
double kkprime_audit(const HarmonicMap& map, double c, HopfGrid grid = {});

/// Signed slack of the energy lower bound: E - 2*|target area|.
double energy_bound_check(const HarmonicMap& map, double target_area);

struct HopfReport {
  HopfFit fit;
  SignClass sign_class = SignClass::zero;
  bool consistent = false;
  double mod_source = 0.0;
  double mod_target = 0.0;
  double kkprime_slack_min = 0.0;
  double energy_bound_slack = 0.0;
};

/// Assembles the full report from a map plus externally computed target data.
HopfReport make_hopf_report(const HarmonicMap& map, double mod_source,
                            double mod_target, double target_area,
                            HopfGrid grid = {});

} // namespace ringmap
