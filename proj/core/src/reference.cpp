#include "ringmap/reference.hpp"

#include <cmath>
#include <numbers>

#include "ringmap/error.hpp"

namespace ringmap {

AnnulusPair::AnnulusPair(double r_, double R_) : r(r_), R(R_) {
  if (!(r > 0.0) || !(r < 1.0) || !(R > 0.0) || !(R < 1.0))
    fail(ErrorCode::invalid_argument, "annulus pair radii must lie in (0, 1)");
}

namespace {

HarmonicMap degree_one_map(double rho, double a1, double b_minus_1) {
  std::vector<Complex> a(3, Complex(0.0, 0.0));
  std::vector<Complex> b(3, Complex(0.0, 0.0));
  a[2] = Complex(a1, 0.0);        // k = +1
  b[0] = Complex(b_minus_1, 0.0); // k = -1
  return HarmonicMap(AnnulusSource(rho), Complex(0.0, 0.0), Complex(0.0, 0.0),
                     std::move(a), std::move(b));
}

} // namespace

HarmonicMap nitsche_minimizer(const AnnulusPair& pair) {
  const double denom = 1.0 - pair.r * pair.r;
  const double a1 = (1.0 - pair.r * pair.R) / denom;
  const double b_minus_1 = pair.r * (pair.R - pair.r) / denom;
  return degree_one_map(pair.r, a1, b_minus_1);
}

double nitsche_c(const AnnulusPair& pair) {
  const double denom = 1.0 - pair.r * pair.r;
  return -pair.r * (pair.R - pair.r) * (1.0 - pair.r * pair.R) / (denom * denom);
}

double nitsche_energy(const AnnulusPair& pair) {
  const double p = 1.0 - pair.r * pair.R;
  const double q = pair.R - pair.r;
  return 2.0 * std::numbers::pi * (p * p + q * q) / (1.0 - pair.r * pair.r);
}

NitscheBound nitsche_bound(const AnnulusPair& pair) {
  NitscheBound out;
  out.threshold = 2.0 * pair.r / (1.0 + pair.r * pair.r);
  out.critical = std::abs(pair.R - out.threshold) < 1e-12;
  out.diffeomorphic_minimizer_exists = pair.R <= out.threshold || out.critical;
  return out;
}

HarmonicMap critical_map(double r) {
  if (!(r > 0.0) || !(r < 1.0))
    fail(ErrorCode::invalid_argument, "critical_map: r must lie in (0, 1)");
  const double denom = 1.0 + r * r;
  return degree_one_map(r, 1.0 / denom, r * r / denom);
}

} // namespace ringmap
