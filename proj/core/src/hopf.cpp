#include "ringmap/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ringmap/error.hpp"
#include "row_scan.hpp"

namespace ringmap {

namespace {

constexpr double tau = 2.0 * std::numbers::pi;

/// Radii clustered toward both boundaries (Chebyshev points of [rho, 1]).
std::vector<double> chebyshev_radii(double rho, int n) {
  std::vector<double> r(static_cast<size_t>(n));
  const double mid = 0.5 * (1.0 + rho), half = 0.5 * (1.0 - rho);
  for (int i = 0; i < n; ++i)
    r[static_cast<size_t>(i)] = mid - half * std::cos(std::numbers::pi * i / (n - 1));
  return r;
}

void check_grid(const HopfGrid& grid) {
  if (grid.radial < 2 || grid.angular < 4)
    fail(ErrorCode::invalid_argument, "scan grid too small");
}

} // namespace

Complex hopf_field(const HarmonicMap& map, Complex z) {
  const auto [fz, fzb] = map.wirtinger(z);
  return fz * std::conj(fzb);
}

HopfFit fit_hopf_constant(const HarmonicMap& map, HopfGrid grid) {
  check_grid(grid);
  const auto radii = chebyshev_radii(map.rho(), grid.radial);

  struct Row {
    double re_sum = 0.0, im_sum = 0.0;
  };
  const auto rows = detail::map_rows<Row>(grid.radial, [&](int i) {
    Row row;
    const double r = radii[static_cast<size_t>(i)];
    for (int j = 0; j < grid.angular; ++j) {
      const double t = tau * j / grid.angular;
      const Complex z = std::polar(r, t);
      const Complex v = z * z * hopf_field(map, z);
      row.re_sum += v.real();
      row.im_sum += v.imag();
    }
    return row;
  });

  const double count = static_cast<double>(grid.radial) * grid.angular;
  HopfFit fit;
  for (const auto& row : rows) {
    fit.c_fit += row.re_sum;
    fit.c_imag += row.im_sum;
  }
  fit.c_fit /= count;
  fit.c_imag /= count;

  const double c = fit.c_fit;
  const auto residual_rows = detail::map_rows<double>(grid.radial, [&](int i) {
    double worst = 0.0;
    const double r = radii[static_cast<size_t>(i)];
    for (int j = 0; j < grid.angular; ++j) {
      const double t = tau * j / grid.angular;
      const Complex z = std::polar(r, t);
      worst = std::max(worst, std::abs(z * z * hopf_field(map, z) - c));
    }
    return worst;
  });
  fit.residual_max = *std::max_element(residual_rows.begin(), residual_rows.end());

  for (const double r : {map.rho(), 1.0}) {
    for (int j = 0; j < grid.angular; ++j) {
      const double t = tau * j / grid.angular;
      const Complex z = std::polar(r, t);
      fit.boundary_reality_max =
          std::max(fit.boundary_reality_max, std::abs((z * z * hopf_field(map, z)).imag()));
    }
  }
  return fit;
}

const char* sign_class_name(SignClass s) noexcept {
  switch (s) {
    case SignClass::negative: return "negative";
    case SignClass::zero: return "zero";
    case SignClass::positive: return "positive";
  }
  return "unknown";
}

double default_zero_tol(double c_fit) {
  return defaults::zero_tol_scale * (1.0 + std::abs(c_fit));
}

SignClassification classify_sign(double c_fit, double mod_source, double mod_target,
                                 double zero_tol) {
  if (!(mod_source > 1.0) || !(mod_target > 1.0))
    fail(ErrorCode::invalid_argument, "classify_sign: moduli must exceed 1");
  SignClassification out;
  if (std::abs(c_fit) < zero_tol)
    out.sign_class = SignClass::zero;
  else
    out.sign_class = c_fit > 0.0 ? SignClass::positive : SignClass::negative;

  const double gap = mod_source - mod_target;
  switch (out.sign_class) {
    case SignClass::positive: out.consistent = gap < zero_tol; break;
    case SignClass::negative: out.consistent = gap > -zero_tol; break;
    case SignClass::zero: out.consistent = std::abs(gap) < zero_tol; break;
  }
  return out;
}

double quasiconformal_slack(const HarmonicMap& map, double K, double Kprime, HopfGrid grid) {
  check_grid(grid);
  const auto radii = chebyshev_radii(map.rho(), grid.radial);
  const auto rows = detail::map_rows<double>(grid.radial, [&](int i) {
    double worst = std::numeric_limits<double>::infinity();
    const double r = radii[static_cast<size_t>(i)];
    for (int j = 0; j < grid.angular; ++j) {
      const double t = tau * j / grid.angular;
      const auto [fz, fzb] = map.wirtinger(std::polar(r, t));
      const double jac = std::norm(fz) - std::norm(fzb);
      const double df2 = 2.0 * (std::norm(fz) + std::norm(fzb));
      worst = std::min(worst, 2.0 * K * jac + Kprime - df2);
    }
    return worst;
  });
  return *std::min_element(rows.begin(), rows.end());
}

double kkprime_audit(const HarmonicMap& map, double c, HopfGrid grid) {
  return quasiconformal_slack(map, 1.0, 2.0 * std::abs(c) / (map.rho() * map.rho()), grid);
}

double energy_bound_check(const HarmonicMap& map, double target_area) {
  return map.dirichlet_energy() - 2.0 * target_area;
}

HopfReport make_hopf_report(const HarmonicMap& map, double mod_source, double mod_target,
                            double target_area, HopfGrid grid) {
  HopfReport report;
  report.fit = fit_hopf_constant(map, grid);
  const auto cls =
      classify_sign(report.fit.c_fit, mod_source, mod_target, default_zero_tol(report.fit.c_fit));
  report.sign_class = cls.sign_class;
  report.consistent = cls.consistent;
  report.mod_source = mod_source;
  report.mod_target = mod_target;
  report.kkprime_slack_min = kkprime_audit(map, report.fit.c_fit, grid);
  report.energy_bound_slack = energy_bound_check(map, target_area);
  return report;
}

} // namespace ringmap
