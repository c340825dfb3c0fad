#pragma once

#include <vector>

#include "ringmap/defaults.hpp"
#include "ringmap/harmonic_map.hpp"

namespace ringmap {

enum class BoundarySide { outer, inner };

/** Sup of ||Df|| = sqrt(2(|f_z|^2 + |f_zbar|^2)) over rings that approach
 * both boundary circles geometrically (offset (1-rho)/2^(k+1) at level k).
 * Returns the running sup after each refinement level; a stabilizing tail
 * is the desk-scale signature of Lipschitz continuity up to the boundary. */
std::vector<double> lipschitz_levels(const HarmonicMap& map, int rings,
                                     int angular = defaults::lipschitz_angular);

/// Final value of lipschitz_levels.
double lipschitz_probe(const HarmonicMap& map, int rings,
                       int angular = defaults::lipschitz_angular);

struct HolderFit {
  double exponent = 0.0;  ///< log-log slope of the modulus of continuity
  double constant = 0.0;  ///< exp(intercept)
  double r_squared = 0.0; ///< quality of the linear fit
  bool underresolved = false; ///< derivative spectrum tail carried > 1% of the energy
};

/** Estimated boundary Holder exponent of the angular derivative d/dtheta f on
 * the chosen boundary circle. The derivative is spectral (exact for the
 * stored band); the modulus of continuity is scanned over separations in
 * [2*pi/samples, holder_window_max] and fitted by least squares in log-log
 * coordinates. Estimates are one-sided evidence, not certificates. */
HolderFit boundary_holder_fit(const HarmonicMap& map, BoundarySide side,
                              int samples = defaults::holder_samples);

/** Discrete length-area audit at a boundary point z0: with l_tau the image
 * length of the cross-arc {|z - z0| = tau} inside the annulus and A(r) the
 * image area of the corresponding partial disk,
 *
 *   F(r) = int_0^r l_tau^2 / tau dtau  <=  pi K A(r) + (pi/2) K' r^2
 *
 * must hold for (K,K')-quasiconformal maps. Returns the minimum slack of the
 * right side minus F over the r-steps. The principle is a half-disk
 * statement, so inner-boundary points are first carried to the outer circle
 * by the energy-preserving inversion z -> rho/z, exactly as in the classical
 * reduction. r_max must stay below 1 - rho. */
double length_area_check(const HarmonicMap& map, Complex z0, double r_max, int steps,
                         double K, double Kprime,
                         int arc_points = defaults::length_area_arc_points);

/** Boundary exponent predicted for an energy-minimizing diffeomorphism with
 * C^{1,alpha} boundary data: alpha when Mod(source) >= Mod(target), else
 * alpha/(2+alpha). */
double kellogg_prediction(double alpha, double mod_source, double mod_target);

struct RegularityReport {
  double lipschitz_sup = 0.0;
  double lipschitz_final_increment = 0.0;
  HolderFit outer_fit;
  HolderFit inner_fit;
  double predicted_exponent = 0.0;
  double length_area_slack_min = 0.0;
};

} // namespace ringmap
