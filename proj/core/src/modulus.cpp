#include "ringmap/modulus.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>

#include "ringmap/error.hpp"

namespace ringmap {

namespace {

constexpr double tau = 2.0 * std::numbers::pi;

std::vector<Complex> scaled_copy(const JordanCurve& curve, double scale, int n) {
  // Copy of the curve scaled about its coefficient mean.
  const Complex center = curve.coeff(0);
  std::vector<Complex> pts(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    pts[static_cast<size_t>(j)] = center + scale * (curve.point(tau * j / n) - center);
  return pts;
}

int winding_about(std::span<const Complex> loop, Complex p) {
  double total = 0.0;
  Complex prev = loop.back() - p;
  for (const Complex q : loop) {
    const Complex cur = q - p;
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / tau));
}

void check_nested(const JordanCurve& outer, const JordanCurve& inner) {
  const int n = 256;
  std::vector<Complex> outer_pts(static_cast<size_t>(n)), inner_pts(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    outer_pts[static_cast<size_t>(j)] = outer.point(tau * j / n);
    inner_pts[static_cast<size_t>(j)] = inner.point(tau * j / n);
  }
  for (const Complex p : inner_pts)
    if (winding_about(outer_pts, p) != 1)
      fail(ErrorCode::invalid_argument, "compute_modulus: inner curve is not strictly inside the outer curve");
  for (const Complex p : outer_pts)
    if (winding_about(inner_pts, p) != 0)
      fail(ErrorCode::invalid_argument, "compute_modulus: boundary curves are not disjoint");
}

} // namespace

ModulusEstimate compute_modulus(const JordanCurve& outer, const JordanCurve& inner,
                                const ModulusOptions& options) {
  if (options.charges_per_curve < 4 || options.collocation_per_curve < 8)
    fail(ErrorCode::invalid_argument, "compute_modulus: too few charges or collocation points");
  if (options.collocation_per_curve < options.charges_per_curve)
    fail(ErrorCode::invalid_argument,
         "compute_modulus: collocation must be at least the charge count");

  check_nested(outer, inner);

  const int nc = options.charges_per_curve;
  const int np = options.collocation_per_curve;

  // Harmonic potential u = 0 on the inner curve, u = 1 on the outer, written
  // as a combination of logarithmic point sources placed on a shrunk copy of
  // the inner curve and a grown copy of the outer one, plus a free constant.
  const auto interior_sources = scaled_copy(inner, options.interior_scale, nc);
  const auto exterior_sources = scaled_copy(outer, options.exterior_scale, nc);

  std::vector<Complex> colloc;
  std::vector<double> target;
  colloc.reserve(static_cast<size_t>(2 * np));
  target.reserve(static_cast<size_t>(2 * np));
  for (int j = 0; j < np; ++j) {
    colloc.push_back(inner.point(tau * j / np));
    target.push_back(0.0);
  }
  for (int j = 0; j < np; ++j) {
    colloc.push_back(outer.point(tau * j / np));
    target.push_back(1.0);
  }

  const int rows = 2 * np;
  const int cols = 2 * nc + 1;
  Eigen::MatrixXd A(rows, cols);
  Eigen::VectorXd rhs(rows);
  for (int i = 0; i < rows; ++i) {
    const Complex p = colloc[static_cast<size_t>(i)];
    for (int j = 0; j < nc; ++j) {
      A(i, j) = std::log(std::abs(p - interior_sources[static_cast<size_t>(j)]));
      A(i, nc + j) = std::log(std::abs(p - exterior_sources[static_cast<size_t>(j)]));
    }
    A(i, 2 * nc) = 1.0;
    rhs(i) = target[static_cast<size_t>(i)];
  }
  if (!A.allFinite())
    fail(ErrorCode::numeric_failure,
         "compute_modulus: singular source placement (a source touches a boundary); "
         "adjust the interior/exterior scales");

  // The fundamental-solution basis is severely ill-conditioned by design;
  // a truncated SVD keeps only the numerically meaningful directions.
  Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff = options.svd_cutoff * sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  if (rank < 4)
    fail(ErrorCode::numeric_failure,
         "compute_modulus: least-squares system is numerically rank deficient (rank " +
             std::to_string(rank) + "); use more or better-placed charges");
  svd.setThreshold(options.svd_cutoff);
  const Eigen::VectorXd x = svd.solve(rhs);

  ModulusEstimate estimate;
  estimate.charge_count = 2 * nc;
  estimate.boundary_residual_max = (A * x - rhs).cwiseAbs().maxCoeff();
  estimate.flagged = estimate.boundary_residual_max > options.residual_tol;

  // The flux of u through any cycle separating the boundary curves is
  // 2*pi*(summed strength of the enclosed sources); the round model with the
  // same flux and unit potential jump has radii ratio exp(1/A).
  double enclosed_strength = 0.0;
  for (int j = 0; j < nc; ++j) enclosed_strength += x(j);
  if (!(enclosed_strength > 0.0))
    fail(ErrorCode::numeric_failure, "compute_modulus: nonpositive flux; domain is not a ring");
  estimate.flux = tau * enclosed_strength;
  estimate.modulus = std::exp(1.0 / enclosed_strength);
  return estimate;
}

ModulusEstimate compute_modulus(const JordanCurve& outer, const JordanCurve& inner,
                                int charges_per_curve, int collocation_per_curve) {
  ModulusOptions options;
  options.charges_per_curve = charges_per_curve;
  options.collocation_per_curve = collocation_per_curve;
  return compute_modulus(outer, inner, options);
}

} // namespace ringmap
