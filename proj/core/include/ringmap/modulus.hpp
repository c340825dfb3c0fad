#pragma once

#include "ringmap/curve.hpp"
#include "ringmap/defaults.hpp"

namespace ringmap {

struct ModulusOptions {
  int charges_per_curve = defaults::modulus_charges;
  int collocation_per_curve = defaults::modulus_collocation;
  double interior_scale = defaults::modulus_interior_scale;
  double exterior_scale = defaults::modulus_exterior_scale;
  double svd_cutoff = defaults::modulus_svd_cutoff;
  double residual_tol = defaults::modulus_residual_tol;
};

struct ModulusEstimate {
  double modulus = 0.0; ///< normalized as the radii ratio R/r of the round model
  double flux = 0.0;    ///< boundary flux of the potential, 2*pi*A
  double boundary_residual_max = 0.0;
  int charge_count = 0;
  bool flagged = false; ///< boundary residual exceeded the tolerance
};

/** Conformal modulus of the ring domain between two Jordan curves by the
 * method of fundamental solutions: the potential u (0 on the inner curve,
 * 1 on the outer) is written as a combination of logarithmic point sources
 * placed on a shrunk copy of the inner curve and a grown copy of the outer
 * curve, fitted at collocation points by truncated-SVD least squares. If A
 * is the summed strength of the sources enclosed by the inner curve, the
 * flux of u is 2*pi*A and the modulus is exp(1/A). No meshing; spectral
 * accuracy for analytic curves. */
ModulusEstimate compute_modulus(const JordanCurve& outer, const JordanCurve& inner,
                                const ModulusOptions& options = {});

ModulusEstimate compute_modulus(const JordanCurve& outer, const JordanCurve& inner,
                                int charges_per_curve, int collocation_per_curve);

} // namespace ringmap
