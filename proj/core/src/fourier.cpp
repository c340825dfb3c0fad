#include "ringmap/fourier.hpp"

#include <bit>
#include <cstdlib>
#include <numbers>
#include <string>

#include "ringmap/error.hpp"
#include "row_scan.hpp"

namespace ringmap {

namespace detail {

int scan_threads() {
  static const int value = [] {
    if (const char* env = std::getenv("RINGMAP_THREADS")) {
      const int n = std::atoi(env);
      if (n >= 1) return n < 64 ? n : 64;
    }
    return 1;
  }();
  return value;
}

} // namespace detail

namespace {

constexpr double tau = 2.0 * std::numbers::pi;

// In-place iterative radix-2 FFT, sign = -1 forward / +1 inverse (unscaled).
void fft_pow2(std::vector<Complex>& data, int sign) {
  const size_t n = data.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * tau / static_cast<double>(len);
    const Complex wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        const Complex u = data[i + k];
        const Complex v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

} // namespace

std::vector<double> uniform_angles(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "uniform_angles: n must be positive");
  std::vector<double> t(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) t[static_cast<size_t>(j)] = tau * j / n;
  return t;
}

std::vector<Complex> band_spectrum(std::span<const Complex> samples, int modes) {
  const int n = static_cast<int>(samples.size());
  if (modes < 0) fail(ErrorCode::invalid_argument, "band_spectrum: negative mode count");
  if (n < 2 * modes + 1)
    fail(ErrorCode::invalid_argument,
         "band_spectrum: need at least " + std::to_string(2 * modes + 1) + " samples, got " +
             std::to_string(n));
  std::vector<Complex> out(static_cast<size_t>(2 * modes + 1));
  for (int k = -modes; k <= modes; ++k) {
    // exp(-ik t_j) accumulated by rotation; the recurrence is stable at these sizes.
    const double ang = -tau * k / n;
    const Complex step(std::cos(ang), std::sin(ang));
    Complex w(1.0, 0.0);
    Complex acc(0.0, 0.0);
    for (int j = 0; j < n; ++j) {
      acc += samples[static_cast<size_t>(j)] * w;
      w *= step;
    }
    out[static_cast<size_t>(k + modes)] = acc / static_cast<double>(n);
  }
  return out;
}

Complex eval_band(std::span<const Complex> coeffs, int modes, double t) {
  const Complex rot(std::cos(t), std::sin(t));
  // Horner over positive and negative powers separately.
  Complex pos(0.0, 0.0);
  for (int k = modes; k >= 1; --k) pos = (pos + coeffs[static_cast<size_t>(k + modes)]) * rot;
  Complex neg(0.0, 0.0);
  const Complex roti = std::conj(rot);
  for (int k = -modes; k <= -1; ++k) neg = (neg + coeffs[static_cast<size_t>(k + modes)]) * roti;
  return pos + neg + coeffs[static_cast<size_t>(modes)];
}

Complex eval_band_derivative(std::span<const Complex> coeffs, int modes, double t) {
  const Complex rot(std::cos(t), std::sin(t));
  Complex acc(0.0, 0.0);
  Complex wp = rot;
  Complex wn = std::conj(rot);
  for (int k = 1; k <= modes; ++k) {
    const Complex ik(0.0, static_cast<double>(k));
    acc += ik * coeffs[static_cast<size_t>(k + modes)] * wp;
    acc -= ik * coeffs[static_cast<size_t>(-k + modes)] * wn;
    wp *= rot;
    wn *= std::conj(rot);
  }
  return acc;
}

std::vector<Complex> dft(std::span<const Complex> samples) {
  const size_t n = samples.size();
  if (n == 0) fail(ErrorCode::invalid_argument, "dft: empty input");
  std::vector<Complex> out(samples.begin(), samples.end());
  if (std::has_single_bit(n)) {
    fft_pow2(out, -1);
    for (auto& c : out) c /= static_cast<double>(n);
    return out;
  }
  std::vector<Complex> direct(n);
  for (size_t k = 0; k < n; ++k) {
    const double ang = -tau * static_cast<double>(k) / static_cast<double>(n);
    const Complex step(std::cos(ang), std::sin(ang));
    Complex w(1.0, 0.0);
    Complex acc(0.0, 0.0);
    for (size_t j = 0; j < n; ++j) {
      acc += samples[j] * w;
      w *= step;
    }
    direct[k] = acc / static_cast<double>(n);
  }
  return direct;
}

std::vector<Complex> idft(std::span<const Complex> coeffs) {
  const size_t n = coeffs.size();
  if (n == 0) fail(ErrorCode::invalid_argument, "idft: empty input");
  std::vector<Complex> out(coeffs.begin(), coeffs.end());
  if (std::has_single_bit(n)) {
    fft_pow2(out, +1);
    return out;
  }
  std::vector<Complex> direct(n);
  for (size_t j = 0; j < n; ++j) {
    const double ang = tau * static_cast<double>(j) / static_cast<double>(n);
    const Complex step(std::cos(ang), std::sin(ang));
    Complex w(1.0, 0.0);
    Complex acc(0.0, 0.0);
    for (size_t k = 0; k < n; ++k) {
      acc += coeffs[k] * w;
      w *= step;
    }
    direct[j] = acc;
  }
  return direct;
}

} // namespace ringmap
