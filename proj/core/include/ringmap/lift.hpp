#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "ringmap/defaults.hpp"
#include "ringmap/harmonic_map.hpp"

namespace ringmap {

enum class LiftKind { catenoidal, helicoidal, planar };

const char* lift_kind_name(LiftKind k) noexcept;

/// Kind selection with a zero band: |c| < planar_band_scale*(1+energy) -> planar.
LiftKind classify_lift_kind(double c, double energy);

/** Isothermal minimal-surface lift of a harmonic map whose Hopf differential
 * is c/z^2. The third coordinate is
 *   X3 = 2 sqrt(-c) log(1/|z|)   (catenoidal, c < 0),
 *   X3 = 2 sqrt(c) Arg z         (helicoidal, c > 0, Arg in [0, 2pi)),
 *   X3 = 0                       (planar, c in the zero band).
 * Helicoidal meshes keep an open seam at theta = 0 (the Arg branch cut):
 * the seam column is duplicated and never glued, so the mesh is one
 * fundamental sheet of the helicoid. */
struct LiftedSurface {
  int radial_res = 0;
  int angular_res = 0;
  LiftKind kind = LiftKind::planar;
  double c = 0.0;
  bool has_seam = false;
  std::vector<std::array<double, 3>> vertices; ///< row-major: radius index outer loop
  std::vector<std::array<int, 3>> faces;       ///< 0-based, counterclockwise
  std::vector<double> per_vertex_null_residual; ///< |k1^2 + k2^2 + k3^2| samples
};

LiftedSurface lift(const HarmonicMap& map, double c,
                   int radial_res = defaults::lift_radial,
                   int angular_res = defaults::lift_angular);

/** Weierstrass data on a uniform polar grid. With the splitting f = g + conj(h),
 *   k1 = g' + h',  k2 = i (h' - g'),  k3 = 2 i sqrt(h' g'),
 * and the conformal factor is lambda = (|g'| + |h'|)^2. The k3 branch is the
 * closed form 2i sqrt(c)/z (c > 0) or -2 sqrt(-c)/z (c < 0) whenever h'g'
 * matches c/z^2 on the grid; otherwise the square root is propagated for
 * continuity along radial rays (diagnostic inputs). The lift is isothermal
 * exactly when the null identity k1^2 + k2^2 + k3^2 = 0 holds. */
struct WeierstrassData {
  int radial_res = 0;
  int angular_res = 0;
  std::vector<Complex> grid_z;
  std::vector<Complex> k1, k2, k3;
  std::vector<double> lambda;
};

WeierstrassData weierstrass(const HarmonicMap& map, double c,
                            int radial_res = defaults::lift_radial,
                            int angular_res = defaults::lift_angular);

/// max over the grid of |k1^2 + k2^2 + k3^2| / (1 + lambda).
double null_residual(const WeierstrassData& data);

/// Plain-text OBJ (v/f records, LF line endings, counterclockwise faces).
void export_obj(const LiftedSurface& surface, std::ostream& out);
void export_obj(const LiftedSurface& surface, const std::filesystem::path& path);

} // namespace ringmap
