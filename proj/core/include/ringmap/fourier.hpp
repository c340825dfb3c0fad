#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ringmap {

using Complex = std::complex<double>;

/// Uniform angular grid t_j = 2*pi*j/n, j = 0..n-1.
std::vector<double> uniform_angles(int n);

/** Fourier band c_k, |k| <= modes, of uniformly sampled periodic data:
 * c_k = (1/n) sum_j samples[j] exp(-i k t_j). Exact for data band-limited to
 * |k| <= modes whenever n >= 2*modes+1. The result has size 2*modes+1 and is
 * indexed by k+modes. */
std::vector<Complex> band_spectrum(std::span<const Complex> samples, int modes);

/// sum_k coeffs[k+modes] exp(i k t).
Complex eval_band(std::span<const Complex> coeffs, int modes, double t);

/// sum_k (i k) coeffs[k+modes] exp(i k t).
Complex eval_band_derivative(std::span<const Complex> coeffs, int modes, double t);

/** Full DFT spectrum c_k = (1/n) sum_j samples[j] exp(-2*pi*i*j*k/n) for
 * k = 0..n-1. Radix-2 FFT when n is a power of two, direct sum otherwise. */
std::vector<Complex> dft(std::span<const Complex> samples);

/// Inverse of dft(): samples_j = sum_k coeffs[k] exp(+2*pi*i*j*k/n).
std::vector<Complex> idft(std::span<const Complex> coeffs);

} // namespace ringmap
