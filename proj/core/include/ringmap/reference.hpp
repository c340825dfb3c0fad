#pragma once

#include "ringmap/harmonic_map.hpp"

namespace ringmap {

/// Source inner radius r and target inner radius R of a round-annulus pair
/// A_r -> A_R (outer radii both 1).
struct AnnulusPair {
  double r;
  double R;

  AnnulusPair(double r_, double R_);
};

/** The closed-form energy minimizer between round annuli,
 *   f(z) = (1 - rR)/(1 - r^2) z + r(R - r)/(1 - r^2) 1/zbar,
 * i.e. a1 = (1-rR)/(1-r^2), b_{-1} = r(R-r)/(1-r^2) on source A_r. Maps the
 * unit circle onto the unit circle and |z| = r onto |w| = R. */
HarmonicMap nitsche_minimizer(const AnnulusPair& pair);

/// Hopf constant of nitsche_minimizer: c = -r(R-r)(1-rR)/(1-r^2)^2.
double nitsche_c(const AnnulusPair& pair);

/// Dirichlet energy of nitsche_minimizer: E = 2*pi*((1-rR)^2 + (R-r)^2)/(1-r^2).
double nitsche_energy(const AnnulusPair& pair);

/** The sharp existence condition R <= 2r/(1+r^2) for a harmonic
 * diffeomorphism A_r -> A_R (Nitsche bound). */
struct NitscheBound {
  bool diffeomorphic_minimizer_exists = false; ///< R <= 2r/(1+r^2)
  bool critical = false;                       ///< equality within 1e-12
  double threshold = 0.0;                      ///< 2r/(1+r^2)
};

NitscheBound nitsche_bound(const AnnulusPair& pair);

/** Critical harmonic minimizer at the Nitsche bound,
 *   w(z) = (r^2 + |z|^2) / (zbar (1 + r^2)),
 * with a1 = 1/(1+r^2), b_{-1} = r^2/(1+r^2). On |z| = r it satisfies
 * |w_z| = |w_zbar| = 1/(1+r^2), so the Jacobian degenerates there and w is
 * not bi-Lipschitz. */
HarmonicMap critical_map(double r);

} // namespace ringmap
