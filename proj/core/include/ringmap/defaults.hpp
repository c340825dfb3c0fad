#pragma once

/** Central table of numeric defaults shared by the library, the CLI and the
 * test suites. Every knob that appears in a public interface is listed here
 * so a run can be reproduced from its config echo alone. */
namespace ringmap::defaults {

// curves
inline constexpr int    curve_validation_grid  = 1024; ///< samples for regularity/simplicity checks
inline constexpr double curve_regularity_floor = 1e-8; ///< min |gamma'| relative to max |gamma'|
inline constexpr int    arc_length_grid        = 4096; ///< arc-length table knots
inline constexpr int    chord_arc_pair_grid    = 512;  ///< sample-pair grid per axis

// harmonic field / minimizer
inline constexpr int    num_modes         = 64;   ///< harmonic truncation N
inline constexpr int    reparam_degree    = 8;    ///< boundary density degree M
inline constexpr double minimize_tol      = 1e-9; ///< windowed relative energy decrease
inline constexpr int    minimize_max_iter = 200;
inline constexpr int    minimize_window   = 5;    ///< sliding window for the convergence test
inline constexpr double fd_step           = 1e-5; ///< central-difference step on reparam parameters
inline constexpr double armijo_c1         = 1e-4;
inline constexpr int    max_backtracks    = 40;

// hopf analysis
inline constexpr int    hopf_grid_radial     = 64;  ///< Chebyshev-clustered radii
inline constexpr int    hopf_grid_angular    = 256;
inline constexpr int    jacobian_grid_radial = 64;
inline constexpr int    jacobian_grid_angular = 256;
inline constexpr double zero_tol_scale       = 1e-4; ///< sign zero-band |c| < scale*(1+|c|)

// modulus solver
inline constexpr int    modulus_charges        = 96;   ///< point sources per curve
inline constexpr int    modulus_collocation    = 384;  ///< collocation points per curve
inline constexpr double modulus_interior_scale = 0.5;  ///< source curve scale inside the inner boundary
inline constexpr double modulus_exterior_scale = 1.5;  ///< source curve scale outside the outer boundary
inline constexpr double modulus_svd_cutoff     = 1e-12; ///< relative singular-value cutoff
inline constexpr double modulus_residual_tol   = 1e-6; ///< boundary residual above this flags the estimate

// surface lift
inline constexpr int    lift_radial       = 64;
inline constexpr int    lift_angular      = 256;
inline constexpr double planar_band_scale = 1e-6; ///< |c| < scale*(1+energy) selects the planar kind

// regularity diagnostics
inline constexpr int    lipschitz_rings       = 16;
inline constexpr int    lipschitz_angular     = 1024;
inline constexpr int    holder_samples        = 2048;
inline constexpr double holder_window_max     = 0.1; ///< largest separation used in the log-log fit
inline constexpr double holder_tail_fraction  = 0.25; ///< top band checked by the resolution flag
inline constexpr double holder_tail_tol       = 0.01; ///< tail energy fraction above this flags the fit
inline constexpr int    length_area_arc_points = 512;
inline constexpr int    length_area_steps      = 64;
inline constexpr double default_alpha          = 0.5;

} // namespace ringmap::defaults
