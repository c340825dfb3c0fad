#pragma once

#include <span>
#include <vector>

#include "ringmap/defaults.hpp"
#include "ringmap/fourier.hpp"

namespace ringmap {

enum class Orientation { positive, negative };

/** Closed plane curve stored as a finite Fourier descriptor
 *
 *   gamma(t) = sum_{|m| <= M} c_m exp(i m t),   t in [0, 2*pi).
 *
 * Trigonometric polynomials are smooth, so every representable curve has a
 * well-defined tangent everywhere. Construction validates that the curve is
 * regular (gamma' never vanishes on a dense grid), simple (sample-pair
 * proximity check), and winds once around its coefficient mean; orientation
 * is normalized to positive (counterclockwise) by reversing the parameter if
 * needed. */
class JordanCurve {
public:
  /// coeffs has size 2M+1 and is indexed by m+M. Throws Error on validation failure.
  static JordanCurve from_modes(std::vector<Complex> coeffs);

  static JordanCurve circle(Complex center, double radius);

  int max_mode() const { return max_mode_; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex coeff(int m) const;
  Orientation orientation() const { return orientation_; }

  Complex point(double t) const;
  Complex derivative(double t) const;
  double speed(double t) const;

private:
  JordanCurve(std::vector<Complex> coeffs, int max_mode, Orientation orientation)
      : coeffs_(std::move(coeffs)), max_mode_(max_mode), orientation_(orientation) {}

  std::vector<Complex> coeffs_; // index m + max_mode_
  int max_mode_ = 0;
  Orientation orientation_ = Orientation::positive;
};

/** Fits a trigonometric polynomial of degree num_modes through closed-loop
 * samples taken at uniform parameter values (least-squares Fourier
 * projection). Requires at least 2*num_modes+1 samples; rejects degenerate or
 * self-intersecting fits. */
JordanCurve curve_from_points(std::span<const Complex> samples, int num_modes);

/** Cumulative arc length on a uniform parameter grid. s is strictly
 * increasing with s.front() == 0 and s.back() == total_length. */
struct ArcLengthTable {
  std::vector<double> knots; ///< parameter values, uniform on [0, 2*pi]
  std::vector<double> s;     ///< cumulative arc length at the knots
  double total_length = 0.0;

  /// Piecewise-linear interpolation of s(t); t taken mod 2*pi.
  double s_of_t(double t) const;
  /// Piecewise-linear inverse t(s); s taken mod total_length.
  double t_of_s(double arc) const;
};

/// Builds the table by composite quadrature of |gamma'|. Throws on non-regular curves.
ArcLengthTable arc_length(const JordanCurve& curve,
                          int grid_size = defaults::arc_length_grid);

/** Inverts s -> t to near machine precision: table seed plus Newton steps
 * with local Gauss-Legendre correction of the cumulative integral. */
double parameter_at_arc_length(const JordanCurve& curve, const ArcLengthTable& table,
                               double arc);

/// Signed area by the residue form of Green's theorem: pi * sum_m m |c_m|^2.
double enclosed_area(const JordanCurve& curve);

/** Largest ratio of arc-length distance to chord length over a pair grid.
 * The arc distance between parameters is min(|s1-s2|, L-|s1-s2|). Always
 * >= 1 for closed curves; pi/2 for circles (antipodal pairs). */
double chord_arc_constant(const JordanCurve& curve,
                          int pair_grid = defaults::chord_arc_pair_grid);

/** Boundary Holder exponent beta = 1/(K*(1+2B)^2) guaranteed for a
 * (K,K')-quasiconformal map onto a domain whose boundary satisfies a
 * B-chord-arc condition. (A variant derivation yields 2/(K*(1+2B)^2) before
 * a sqrt(2) subdivision rescaling; the conservative constant is used.)
 * Requires K >= 1 and B >= 1, so beta <= 1/9. */
double holder_exponent_beta(double K, double B);

} // namespace ringmap
