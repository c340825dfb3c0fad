#include "ringmap/lift.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <string>

#include "ringmap/error.hpp"

namespace ringmap {

namespace {

constexpr double tau = 2.0 * std::numbers::pi;

std::vector<double> uniform_radii(double rho, int n) {
  std::vector<double> r(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    r[static_cast<size_t>(i)] = rho + (1.0 - rho) * i / (n - 1);
  return r;
}

} // namespace

const char* lift_kind_name(LiftKind k) noexcept {
  switch (k) {
    case LiftKind::catenoidal: return "catenoidal";
    case LiftKind::helicoidal: return "helicoidal";
    case LiftKind::planar: return "planar";
  }
  return "unknown";
}

LiftKind classify_lift_kind(double c, double energy) {
  if (std::abs(c) < defaults::planar_band_scale * (1.0 + energy)) return LiftKind::planar;
  return c < 0.0 ? LiftKind::catenoidal : LiftKind::helicoidal;
}

WeierstrassData weierstrass(const HarmonicMap& map, double c, int radial_res, int angular_res) {
  if (radial_res < 2 || angular_res < 2)
    fail(ErrorCode::invalid_argument, "weierstrass: resolutions must be at least 2");

  WeierstrassData data;
  data.radial_res = radial_res;
  data.angular_res = angular_res;
  const size_t total = static_cast<size_t>(radial_res) * static_cast<size_t>(angular_res);
  data.grid_z.resize(total);
  data.k1.resize(total);
  data.k2.resize(total);
  data.k3.resize(total);
  data.lambda.resize(total);

  const auto radii = uniform_radii(map.rho(), radial_res);

  // k3 is the closed form 2i sqrt(c)/z (c >= 0) or -2 sqrt(-c)/z (c < 0),
  // i.e. the gradient field of the lift's third coordinate: it squares to
  // -4c/z^2, is continuous off the helical seam, and makes the null sum
  //   k1^2 + k2^2 + k3^2 = 4 (z^2 g'h' - c)/z^2
  // an exact measure of the Hopf defect. (A pointwise square root of h'g'
  // would cancel the sum identically and detect nothing.)
  const double root = std::sqrt(std::abs(c));
  for (int i = 0; i < radial_res; ++i) {
    for (int j = 0; j < angular_res; ++j) {
      const size_t idx = static_cast<size_t>(i) * angular_res + static_cast<size_t>(j);
      const Complex z = std::polar(radii[static_cast<size_t>(i)], tau * j / angular_res);
      const auto [fz, fzb] = map.wirtinger(z);
      const Complex gp = fz;
      const Complex hp = std::conj(fzb);
      if (std::abs(gp) == 0.0)
        fail(ErrorCode::numeric_failure,
             "weierstrass: g' vanishes at grid sample (" + std::to_string(i) + ", " +
                 std::to_string(j) + "); Weierstrass data is degenerate there");
      data.grid_z[idx] = z;
      data.k1[idx] = gp + hp;
      data.k2[idx] = Complex(0.0, 1.0) * (hp - gp);
      data.k3[idx] = c >= 0.0 ? Complex(0.0, 2.0 * root) / z : Complex(-2.0 * root, 0.0) / z;
      const double mg = std::abs(gp), mh = std::abs(hp);
      data.lambda[idx] = (mg + mh) * (mg + mh);
    }
  }
  return data;
}

double null_residual(const WeierstrassData& data) {
  double worst = 0.0;
  for (size_t idx = 0; idx < data.k1.size(); ++idx) {
    const Complex sum = data.k1[idx] * data.k1[idx] + data.k2[idx] * data.k2[idx] +
                        data.k3[idx] * data.k3[idx];
    worst = std::max(worst, std::abs(sum) / (1.0 + data.lambda[idx]));
  }
  return worst;
}

LiftedSurface lift(const HarmonicMap& map, double c, int radial_res, int angular_res) {
  if (radial_res < 2 || angular_res < 2)
    fail(ErrorCode::invalid_argument, "lift: resolutions must be at least 2");

  LiftedSurface surface;
  surface.radial_res = radial_res;
  surface.angular_res = angular_res;
  surface.c = c;
  surface.kind = classify_lift_kind(c, map.dirichlet_energy());
  surface.has_seam = surface.kind == LiftKind::helicoidal;

  // Helicoidal meshes duplicate the theta = 0 column at theta = 2*pi so the
  // two sides of the Arg branch cut stay separate.
  const int cols = angular_res + (surface.has_seam ? 1 : 0);
  const auto radii = uniform_radii(map.rho(), radial_res);

  surface.vertices.reserve(static_cast<size_t>(radial_res) * static_cast<size_t>(cols));
  for (int i = 0; i < radial_res; ++i) {
    const double r = radii[static_cast<size_t>(i)];
    for (int j = 0; j < cols; ++j) {
      const double theta = tau * j / angular_res; // reaches 2*pi on the seam copy
      const Complex z = std::polar(r, theta);
      const Complex w = map.evaluate(z);
      double x3 = 0.0;
      switch (surface.kind) {
        case LiftKind::catenoidal: x3 = 2.0 * std::sqrt(-c) * std::log(1.0 / r); break;
        case LiftKind::helicoidal: x3 = 2.0 * std::sqrt(c) * theta; break;
        case LiftKind::planar: x3 = 0.0; break;
      }
      surface.vertices.push_back({w.real(), w.imag(), x3});
    }
  }

  // Counterclockwise quads split into two triangles; wraps in theta unless
  // the seam is open.
  for (int i = 0; i + 1 < radial_res; ++i) {
    for (int j = 0; j < angular_res; ++j) {
      const int jn = surface.has_seam ? j + 1 : (j + 1) % angular_res;
      const int v00 = i * cols + j;
      const int v01 = i * cols + jn;
      const int v10 = (i + 1) * cols + j;
      const int v11 = (i + 1) * cols + jn;
      surface.faces.push_back({v00, v01, v11});
      surface.faces.push_back({v00, v11, v10});
    }
  }

  // Per-vertex conformality defect from the Weierstrass data on the closed
  // grid; the seam copy repeats the first column.
  const WeierstrassData data = weierstrass(map, c, radial_res, angular_res);
  surface.per_vertex_null_residual.reserve(surface.vertices.size());
  for (int i = 0; i < radial_res; ++i) {
    for (int j = 0; j < cols; ++j) {
      const size_t idx =
          static_cast<size_t>(i) * angular_res + static_cast<size_t>(j % angular_res);
      const Complex sum = data.k1[idx] * data.k1[idx] + data.k2[idx] * data.k2[idx] +
                          data.k3[idx] * data.k3[idx];
      surface.per_vertex_null_residual.push_back(std::abs(sum));
    }
  }
  return surface;
}

void export_obj(const LiftedSurface& surface, std::ostream& out) {
  out << "# ring-domain minimal surface lift (" << lift_kind_name(surface.kind) << ")\n";
  out << "# vertices " << surface.vertices.size() << " faces " << surface.faces.size() << "\n";
  char line[128];
  for (const auto& v : surface.vertices) {
    std::snprintf(line, sizeof line, "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
    out << line;
  }
  for (const auto& f : surface.faces) {
    std::snprintf(line, sizeof line, "f %d %d %d\n", f[0] + 1, f[1] + 1, f[2] + 1);
    out << line;
  }
}

void export_obj(const LiftedSurface& surface, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary); // binary: keep LF endings everywhere
  if (!out) fail(ErrorCode::io_failure, "cannot open '" + path.string() + "' for writing");
  export_obj(surface, out);
  out.flush();
  if (!out) fail(ErrorCode::io_failure, "failed writing '" + path.string() + "'");
}

} // namespace ringmap
