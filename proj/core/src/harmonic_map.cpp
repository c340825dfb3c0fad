#include "ringmap/harmonic_map.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ringmap/error.hpp"

namespace ringmap {

namespace {

constexpr double boundary_slack = 1e-9;

void check_in_annulus(double rho, Complex z) {
  const double r = std::abs(z);
  if (r < rho * (1.0 - boundary_slack) || r > 1.0 + boundary_slack)
    fail(ErrorCode::invalid_argument,
         "point with |z| = " + std::to_string(r) + " lies outside the closed annulus [" +
             std::to_string(rho) + ", 1]");
}

} // namespace

AnnulusSource::AnnulusSource(double rho_) : rho(rho_) {
  if (!(rho > 0.0) || !(rho < 1.0))
    fail(ErrorCode::invalid_argument, "annulus inner radius must satisfy 0 < rho < 1");
}

HarmonicMap::HarmonicMap(AnnulusSource source, Complex a0, Complex b0,
                         std::vector<Complex> a, std::vector<Complex> b)
    : source_(source), a0_(a0), b0_(b0), a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size() || a_.empty() || a_.size() % 2 == 0)
    fail(ErrorCode::invalid_argument, "coefficient bands must share an odd size 2N+1");
  modes_ = (static_cast<int>(a_.size()) - 1) / 2;
  const size_t mid = static_cast<size_t>(modes_);
  if (std::abs(a_[mid]) != 0.0 || std::abs(b_[mid]) != 0.0)
    fail(ErrorCode::invalid_argument,
         "k = 0 band slots must be zero; use a0/b0 for the log and constant terms");
}

HarmonicMap HarmonicMap::zero(AnnulusSource source, int modes) {
  if (modes < 0) fail(ErrorCode::invalid_argument, "mode count must be nonnegative");
  std::vector<Complex> band(static_cast<size_t>(2 * modes + 1), Complex(0.0, 0.0));
  return HarmonicMap(source, Complex(0.0, 0.0), Complex(0.0, 0.0), band, band);
}

Complex HarmonicMap::a(int k) const {
  if (k == 0 || std::abs(k) > modes_) return Complex(0.0, 0.0);
  return a_[static_cast<size_t>(k + modes_)];
}

Complex HarmonicMap::b(int k) const {
  if (k == 0 || std::abs(k) > modes_) return Complex(0.0, 0.0);
  return b_[static_cast<size_t>(k + modes_)];
}

Complex HarmonicMap::evaluate(Complex z) const {
  check_in_annulus(source_.rho, z);
  Complex acc = a0_ * std::log(std::abs(z)) + b0_;
  const Complex zb = std::conj(z);
  // Powers accumulated incrementally: z^k and zbar^k for k > 0, and the
  // reciprocal pair for k < 0.
  Complex zp = 1.0, zbp = 1.0;
  const Complex zi = 1.0 / z, zbi = std::conj(zi);
  Complex zn = 1.0, zbn = 1.0;
  for (int k = 1; k <= modes_; ++k) {
    zp *= z;
    zbp *= zb;
    zn *= zi;
    zbn *= zbi;
    acc += a_[static_cast<size_t>(modes_ + k)] * zp;
    acc += std::conj(b_[static_cast<size_t>(modes_ + k)]) * zbp;
    acc += a_[static_cast<size_t>(modes_ - k)] * zn;
    acc += std::conj(b_[static_cast<size_t>(modes_ - k)]) * zbn;
  }
  return acc;
}

WirtingerPair HarmonicMap::wirtinger(Complex z) const {
  check_in_annulus(source_.rho, z);
  const Complex zb = std::conj(z);
  Complex fz = a0_ / (2.0 * z);
  Complex fzb = a0_ / (2.0 * zb);
  const Complex zi = 1.0 / z, zbi = std::conj(zi);
  // z^{k-1} for k >= 1 starts at 1; z^{k-1} for k <= -1 starts at z^{-2}.
  Complex zp = 1.0, zbp = 1.0;
  Complex zn = zi * zi, zbn = zbi * zbi;
  for (int k = 1; k <= modes_; ++k) {
    fz += static_cast<double>(k) * a_[static_cast<size_t>(modes_ + k)] * zp;
    fzb += static_cast<double>(k) * std::conj(b_[static_cast<size_t>(modes_ + k)]) * zbp;
    fz += static_cast<double>(-k) * a_[static_cast<size_t>(modes_ - k)] * zn;
    fzb += static_cast<double>(-k) * std::conj(b_[static_cast<size_t>(modes_ - k)]) * zbn;
    zp *= z;
    zbp *= zb;
    zn *= zi;
    zbn *= zbi;
  }
  return {fz, fzb};
}

Complex HarmonicMap::h_prime(Complex z) const { return std::conj(wirtinger(z).fzb); }

double HarmonicMap::dirichlet_energy() const {
  const double rho = source_.rho;
  double total = std::norm(a0_) * std::log(1.0 / rho);
  for (int k = 1; k <= modes_; ++k) {
    const double u2 = std::pow(rho, 2 * k);
    const double w = std::norm(a_[static_cast<size_t>(modes_ + k)]) +
                     std::norm(b_[static_cast<size_t>(modes_ + k)]);
    total += k * (1.0 - u2) * w;
    // Negative frequencies: m (rho^{-2m} - 1) |c|^2 = m (1 - rho^{2m}) |c rho^{-m}|^2,
    // which keeps the large factor attached to the exponentially small coefficient.
    const double rm = std::pow(rho, -k);
    const double wn = std::norm(a_[static_cast<size_t>(modes_ - k)] * rm) +
                      std::norm(b_[static_cast<size_t>(modes_ - k)] * rm);
    total += k * (1.0 - u2) * wn;
  }
  return 2.0 * std::numbers::pi * total;
}

double jacobian(const HarmonicMap& map, Complex z) {
  const auto [fz, fzb] = map.wirtinger(z);
  return std::norm(fz) - std::norm(fzb);
}

HarmonicMap extend_from_boundary(std::span<const Complex> outer_values,
                                 std::span<const Complex> inner_values,
                                 AnnulusSource source, int num_modes) {
  if (outer_values.size() != inner_values.size())
    fail(ErrorCode::invalid_argument, "extend_from_boundary: sample counts differ (" +
                                          std::to_string(outer_values.size()) + " vs " +
                                          std::to_string(inner_values.size()) + ")");
  if (num_modes < 1)
    fail(ErrorCode::invalid_argument, "extend_from_boundary: num_modes must be >= 1");
  const auto out_hat = band_spectrum(outer_values, num_modes);
  const auto in_hat = band_spectrum(inner_values, num_modes);

  const double rho = source.rho;
  const int N = num_modes;
  std::vector<Complex> a(static_cast<size_t>(2 * N + 1), Complex(0.0, 0.0));
  std::vector<Complex> b(static_cast<size_t>(2 * N + 1), Complex(0.0, 0.0));

  const Complex b0 = out_hat[static_cast<size_t>(N)];
  const Complex a0 = (in_hat[static_cast<size_t>(N)] - b0) / std::log(rho);

  // Frequency k on the circle |z| = r carries a_k r^k + conj(b_{-k}) r^{-k}.
  // Both unknowns are recovered in a cancellation-free form: the coefficient
  // that must be exponentially small carries its rho^{|k|} factor explicitly.
  for (int k = 1; k <= N; ++k) {
    const double u = std::pow(rho, k);
    const double det = 1.0 - u * u;
    {
      const Complex out_k = out_hat[static_cast<size_t>(N + k)];
      const Complex in_k = in_hat[static_cast<size_t>(N + k)];
      const Complex ak = (out_k - in_k * u) / det;
      const Complex b_minus_k_conj = u * (in_k - out_k * u) / det;
      a[static_cast<size_t>(N + k)] = ak;
      b[static_cast<size_t>(N - k)] = std::conj(b_minus_k_conj);
    }
    {
      const Complex out_k = out_hat[static_cast<size_t>(N - k)];
      const Complex in_k = in_hat[static_cast<size_t>(N - k)];
      const Complex ak = u * (in_k - out_k * u) / det;
      const Complex b_minus_k_conj = (out_k - in_k * u) / det;
      a[static_cast<size_t>(N - k)] = ak;
      b[static_cast<size_t>(N + k)] = std::conj(b_minus_k_conj);
    }
  }
  return HarmonicMap(source, a0, b0, std::move(a), std::move(b));
}

HarmonicMap precompose_inversion(const HarmonicMap& map) {
  const double rho = map.rho();
  const int N = map.modes();
  std::vector<Complex> a(static_cast<size_t>(2 * N + 1), Complex(0.0, 0.0));
  std::vector<Complex> b(static_cast<size_t>(2 * N + 1), Complex(0.0, 0.0));
  for (int m = -N; m <= N; ++m) {
    if (m == 0) continue;
    const double scale = std::pow(rho, -m);
    a[static_cast<size_t>(N + m)] = map.a(-m) * scale;
    b[static_cast<size_t>(N + m)] = map.b(-m) * scale;
  }
  const Complex a0 = -map.a0();
  const Complex b0 = map.b0() + map.a0() * std::log(rho);
  return HarmonicMap(map.source(), a0, b0, std::move(a), std::move(b));
}

} // namespace ringmap
