#include "rkdisc/kernels.hpp"

#include <cmath>

#include "rkdisc/errors.hpp"
#include "rkdisc/numerics.hpp"

namespace rkdisc {

namespace {

constexpr std::size_t max_series_terms = 1'000'000;
constexpr double series_rel_tol = 1e-15;

/// log B(n, s+1) via log-Gamma; avoids overflow for large n.
double log_beta(double n, double s_plus_1) {
  return std::lgamma(n) + std::lgamma(s_plus_1) - std::lgamma(n + s_plus_1);
}

/// Integer power by repeated multiplication; std::pow(Complex(0), 0.0) is NaN.
Complex ipow(Complex base, int e) {
  Complex r = 1.0;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

}  // namespace

std::string to_string(KernelFamily family) {
  switch (family) {
    case KernelFamily::dirichlet: return "dirichlet";
    case KernelFamily::hardy: return "hardy";
    case KernelFamily::appendix_a: return "appendix_a";
    case KernelFamily::weighted_ds: return "weighted_ds";
  }
  return "?";
}

DiagonalKernel DiagonalKernel::appendix_a(double a) {
  if (!(a >= 0.0 && a < 1.0))
    throw DomainError("DiagonalKernel::appendix_a: need a in [0, 1)");
  return DiagonalKernel(KernelFamily::appendix_a, a);
}

DiagonalKernel DiagonalKernel::weighted_ds(double s) {
  if (!(s > 0.0 && s < 1.0))
    throw DomainError("DiagonalKernel::weighted_ds: need s in (0, 1)");
  return DiagonalKernel(KernelFamily::weighted_ds, s);
}

double DiagonalKernel::coefficient(std::size_t n) const {
  switch (family_) {
    case KernelFamily::dirichlet:
      return 1.0 / (n + 1.0);
    case KernelFamily::hardy:
      return 1.0;
    case KernelFamily::appendix_a: {
      if (n == 0) return 1.0;
      if (n == 1) return param_;
      // c_n = [1 + (-1)^n (1-a)^{n+1}] / (2-a), the solved two-term recurrence.
      const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
      return (1.0 + sgn * std::pow(1.0 - param_, static_cast<double>(n + 1))) / (2.0 - param_);
    }
    case KernelFamily::weighted_ds: {
      if (n == 0) return 1.0;
      const double nn = static_cast<double>(n);
      return 1.0 / (1.0 + nn * nn * std::exp(log_beta(nn, param_ + 1.0)));
    }
  }
  return 0.0;
}

std::vector<double> DiagonalKernel::coefficients(std::size_t n_max) const {
  std::vector<double> c(n_max + 1);
  if (family_ == KernelFamily::appendix_a) {
    // Two-term recurrence, exact per the kernel's rational form.
    c[0] = 1.0;
    if (n_max >= 1) c[1] = param_;
    for (std::size_t n = 2; n <= n_max; ++n)
      c[n] = param_ * c[n - 1] + (1.0 - param_) * c[n - 2];
    return c;
  }
  for (std::size_t n = 0; n <= n_max; ++n) c[n] = coefficient(n);
  return c;
}

Complex DiagonalKernel::eval_closed(Complex x) const {
  switch (family_) {
    case KernelFamily::dirichlet:
      // -log(1-x)/x loses digits near the removable singularity x = 0.
      if (std::abs(x) < 1e-3) return series_sum(x);
      return -std::log(1.0 - x) / x;
    case KernelFamily::hardy:
      return 1.0 / (1.0 - x);
    case KernelFamily::appendix_a:
      return 1.0 / (1.0 - param_ * x - (1.0 - param_) * x * x);
    case KernelFamily::weighted_ds:
      return series_sum(x);
  }
  return {};
}

Complex DiagonalKernel::series_sum(Complex x) const {
  const double q = std::abs(x);
  if (q >= 1.0) throw DomainError("DiagonalKernel: series requires |z conj(w)| < 1");
  CompensatedSumComplex acc;
  Complex pw = 1.0;
  for (std::size_t n = 0; n < max_series_terms; ++n) {
    const double c = coefficient(n);
    acc.add(c * pw);
    pw *= x;
    // c_n <= 1 for every family except appendix_a where c_n <= 2/(2-a) <= 2,
    // so the tail is bounded by 2 q^{n+1}/(1-q).
    const double tail = 2.0 * std::pow(q, static_cast<double>(n + 1)) / (1.0 - q);
    if (tail < series_rel_tol * (std::abs(acc.value()) + 1.0)) return acc.value();
  }
  throw TruncationError("DiagonalKernel: series tail bound not met within term cap");
}

Complex DiagonalKernel::eval(UnitDiscPoint z, UnitDiscPoint w) const {
  return eval_closed(z.value() * std::conj(w.value()));
}

Complex DiagonalKernel::eval_boundary(CirclePoint zeta, UnitDiscPoint w) const {
  if (!(w.abs_sq() < 1.0)) throw DomainError("eval_boundary: need |w| < 1");
  return eval_closed(zeta.value() * std::conj(w.value()));
}

Complex DiagonalKernel::deriv_series(int i, int j, Complex z, Complex w) const {
  if (i < 0 || j < 0) throw DomainError("DiagonalKernel::deriv: orders must be >= 0");
  if (i == 0 && j == 0) return eval_closed(z * std::conj(w));

  const double q = std::abs(z) * std::abs(w);
  if (q >= 1.0) throw DomainError("DiagonalKernel::deriv: need |z||w| < 1");

  const int n0 = std::max(i, j);
  const Complex wbar = std::conj(w);
  // Running term t_n = c_n * n!/(n-i)! * n!/(n-j)! * z^{n-i} * wbar^{n-j},
  // accumulated with compensation (derivative Gramians are the ill
  // conditioned consumers of this series).
  CompensatedSumComplex acc;
  double fall_i = 1.0, fall_j = 1.0;
  for (int k = 0; k < i; ++k) fall_i *= static_cast<double>(n0 - k);
  for (int k = 0; k < j; ++k) fall_j *= static_cast<double>(n0 - k);
  Complex pz = ipow(z, n0 - i);
  Complex pw = ipow(wbar, n0 - j);

  double prev_abs = 0.0;
  for (std::size_t n = static_cast<std::size_t>(n0); n < max_series_terms; ++n) {
    const double c = coefficient(n);
    const Complex term = (c * fall_i * fall_j) * pz * pw;
    acc.add(term);

    const double nn = static_cast<double>(n);
    // next-term ratio bound: q * ((n+1)/(n+1-i)) * ((n+1)/(n+1-j)). The tail
    // gauge uses the last two terms: appendix_a(0) has vanishing odd
    // coefficients, so a single zero term must not end the series.
    const double ratio = q * ((nn + 1.0) / (nn + 1.0 - i)) * ((nn + 1.0) / (nn + 1.0 - j));
    if (n > static_cast<std::size_t>(n0) + 8 && ratio < 1.0) {
      const double gauge = std::max(std::abs(term), prev_abs * ratio);
      const double tail = 2.0 * gauge * ratio / (1.0 - ratio);
      if (tail < series_rel_tol * (std::abs(acc.value()) + 1.0)) return acc.value();
    }
    prev_abs = std::abs(term);

    fall_i *= (nn + 1.0) / (nn + 1.0 - i);
    fall_j *= (nn + 1.0) / (nn + 1.0 - j);
    pz *= z;
    pw *= wbar;
  }
  throw TruncationError("DiagonalKernel::deriv: series tail bound not met within term cap");
}

Complex DiagonalKernel::deriv(int i, int j, UnitDiscPoint z, UnitDiscPoint w) const {
  return deriv_series(i, j, z.value(), w.value());
}

Complex DiagonalKernel::deriv_boundary(int i, int j, CirclePoint zeta, UnitDiscPoint w) const {
  if (!(w.abs_sq() < 1.0)) throw DomainError("deriv_boundary: need |w| < 1");
  return deriv_series(i, j, zeta.value(), w.value());
}

}  // namespace rkdisc
