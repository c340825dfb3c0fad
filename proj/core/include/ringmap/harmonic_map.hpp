#pragma once

#include <span>
#include <vector>

#include "ringmap/fourier.hpp"

namespace ringmap {

/// Round annulus A_rho = { rho < |z| < 1 }. Its conformal modulus is 1/rho.
struct AnnulusSource {
  double rho;

  explicit AnnulusSource(double rho_);
  double modulus() const { return 1.0 / rho; }
};

struct WirtingerPair {
  Complex fz;  ///< d/dz
  Complex fzb; ///< d/dzbar
};

/** Harmonic map on the annulus A_rho, stored by the coefficients of
 *
 *   f(z) = a0 log|z| + b0 + sum_{0 < |k| <= N} (a_k z^k + conj(b_k) zbar^k).
 *
 * Every harmonic function on an annulus has this form, so the class carries
 * the full desk-scale state: evaluation, Wirtinger derivatives and Dirichlet
 * energy are all closed-form in the coefficients. Instances are immutable and
 * safe to share across threads. */
class HarmonicMap {
public:
  /** a and b have size 2N+1, indexed by k+N; the k = 0 slots must be zero
   * (the constant and logarithmic terms live in b0 and a0). */
  HarmonicMap(AnnulusSource source, Complex a0, Complex b0,
              std::vector<Complex> a, std::vector<Complex> b);

  /// Map with all band coefficients zero.
  static HarmonicMap zero(AnnulusSource source, int modes);

  double rho() const { return source_.rho; }
  const AnnulusSource& source() const { return source_; }
  int modes() const { return modes_; }
  Complex a0() const { return a0_; }
  Complex b0() const { return b0_; }
  Complex a(int k) const;
  Complex b(int k) const;
  std::span<const Complex> a_band() const { return a_; }
  std::span<const Complex> b_band() const { return b_; }

  /// Series value. z must lie in the closed annulus (throws otherwise).
  Complex evaluate(Complex z) const;

  /** f_z = a0/(2z) + sum k a_k z^{k-1},
   *  f_zbar = a0/(2 zbar) + sum k conj(b_k) zbar^{k-1}. */
  WirtingerPair wirtinger(Complex z) const;

  /// Holomorphic part derivative g' = f_z of the splitting f = g + conj(h).
  Complex g_prime(Complex z) const { return wirtinger(z).fz; }
  /// h' = conj(f_zbar); holomorphic because f is harmonic.
  Complex h_prime(Complex z) const;

  /** Closed-form Dirichlet energy
   *  E = 2*pi*|a0|^2 log(1/rho) + 2*pi sum_{k != 0} k (1 - rho^{2k}) (|a_k|^2 + |b_k|^2).
   * Every summand is nonnegative. */
  double dirichlet_energy() const;

private:
  AnnulusSource source_;
  Complex a0_, b0_;
  std::vector<Complex> a_, b_; // index k + modes_
  int modes_ = 0;
};

/// Jacobian J(z) = |f_z|^2 - |f_zbar|^2; positive where f preserves orientation.
double jacobian(const HarmonicMap& map, Complex z);

/** Harmonic extension of two-circle boundary data given as uniform angular
 * samples on |z| = 1 (outer) and |z| = rho (inner). Sample counts must match
 * and be at least 2*num_modes+1. For each frequency the 2x2 interpolation
 * system is solved in a cancellation-free form, so coefficients that must be
 * exponentially small come out with full relative accuracy. */
HarmonicMap extend_from_boundary(std::span<const Complex> outer_values,
                                 std::span<const Complex> inner_values,
                                 AnnulusSource source, int num_modes);

/** Precomposition with the annulus automorphism z -> rho/z, which exchanges
 * the boundary circles. Exact on coefficients:
 * a0 -> -a0, b0 -> b0 + a0 log(rho), a_m -> a_{-m} rho^{-m}, b_m -> b_{-m} rho^{-m}.
 * Preserves harmonicity and Dirichlet energy. */
HarmonicMap precompose_inversion(const HarmonicMap& map);

} // namespace ringmap
