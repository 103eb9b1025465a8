#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rkdisc/disc.hpp"

namespace rkdisc {

enum class KernelFamily { dirichlet, hardy, appendix_a, weighted_ds };

std::string to_string(KernelFamily family);

/// A diagonal (circularly invariant) reproducing kernel on the disc,
///   K(z, w) = sum_n c_n (z conj(w))^n,   c_0 = 1.
///
/// Families and coefficient rules:
///   dirichlet    c_n = 1/(n+1)                    K = -log(1 - x)/x
///   hardy        c_n = 1                          K = 1/(1 - x)
///   appendix_a   c_0 = 1, c_1 = a,
///                c_n = a c_{n-1} + (1-a) c_{n-2}  K = 1/(1 - a x - (1-a) x^2)
///   weighted_ds  c_n = 1/(1 + n^2 B(n, s+1))      (series only)
///
/// where x = z conj(w) and B is the Beta function. The weighted_ds rule is
/// the reciprocal monomial norm of the space with
/// ||f||^2 = ||f||_{H^2}^2 + int |f'|^2 (1-|z|^2)^s dA.
class DiagonalKernel {
public:
  static DiagonalKernel dirichlet() { return DiagonalKernel(KernelFamily::dirichlet, 0.0); }
  static DiagonalKernel hardy() { return DiagonalKernel(KernelFamily::hardy, 0.0); }
  static DiagonalKernel appendix_a(double a);
  static DiagonalKernel weighted_ds(double s);

  KernelFamily family() const { return family_; }
  double parameter() const { return param_; }
  bool has_closed_form() const { return family_ != KernelFamily::weighted_ds; }

  /// c_n.
  double coefficient(std::size_t n) const;
  /// c_0 .. c_N.
  std::vector<double> coefficients(std::size_t n_max) const;

  /// K(z, w).
  Complex eval(UnitDiscPoint z, UnitDiscPoint w) const;
  /// K(zeta, w) with zeta on the circle; requires |w| < 1 strictly.
  Complex eval_boundary(CirclePoint zeta, UnitDiscPoint w) const;

  /// Mixed derivative d_z^i d_wbar^j K(z, w)
  ///   = sum_n c_n n!/(n-i)! n!/(n-j)! z^{n-i} conj(w)^{n-j}.
  Complex deriv(int i, int j, UnitDiscPoint z, UnitDiscPoint w) const;
  Complex deriv_boundary(int i, int j, CirclePoint zeta, UnitDiscPoint w) const;

  friend bool operator==(const DiagonalKernel& a, const DiagonalKernel& b) {
    return a.family_ == b.family_ && a.param_ == b.param_;
  }

private:
  DiagonalKernel(KernelFamily family, double param) : family_(family), param_(param) {}

  Complex eval_closed(Complex x) const;
  Complex series_sum(Complex x) const;
  Complex deriv_series(int i, int j, Complex z, Complex w) const;

  KernelFamily family_;
  double param_;
};

}  // namespace rkdisc
