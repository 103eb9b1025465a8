#include "rkdisc/atomic_extremal.hpp"

#include <cmath>

#include "rkdisc/errors.hpp"
#include "rkdisc/inner.hpp"
#include "rkdisc/numerics.hpp"

namespace rkdisc {

namespace {

void require_positive_a(double a) {
  if (!(a > 0.0)) throw DomainError("atomic extremal: need a > 0");
}

double h_integrand(double a, double t) {
  if (t >= 1.0) return 0.0;
  return std::exp(-a * (1.0 + t) / (1.0 - t)) / (1.0 - t);
}

QuadratureSpec tight_spec() {
  QuadratureSpec spec;
  spec.abs_tol = 1e-15;
  spec.rel_tol = 1e-13;
  spec.max_panels = 1 << 15;
  return spec;
}

}  // namespace

double one_minus_A(double a) {
  require_positive_a(a);
  const double e1 = exp_integral_e1(2.0 * a);
  return (std::exp(-2.0 * a) - 2.0 * a * e1) / e1;
}

double compute_A(double a, AtomicMethod method) {
  require_positive_a(a);
  if (method == AtomicMethod::e1_substitution) return 1.0 - one_minus_A(a);
  const auto spec = tight_spec();
  const double num =
      integrate_interval([a](double t) { return t * h_integrand(a, t); }, 0.0, 1.0, spec).value;
  const double den =
      integrate_interval([a](double t) { return h_integrand(a, t); }, 0.0, 1.0, spec).value;
  return num / den;
}

double gamma_atomic(double a) {
  return 1.0 - one_minus_gamma_atomic(a);
}

double one_minus_gamma_atomic(double a) {
  require_positive_a(a);
  const double om = one_minus_A(a);
  const double A = 1.0 - om;
  return -std::expm1(-a) + std::exp(-a) * om / (1.0 + std::sqrt(A));
}

double one_minus_gamma_atomic_log(double log_inv_a) {
  if (!(log_inv_a > 0.0))
    throw DomainError("one_minus_gamma_atomic_log: need log(1/a) > 0");
  if (log_inv_a < 690.0) return one_minus_gamma_atomic(std::exp(-log_inv_a));
  // Below the representable range of a: E1(2a) = log(1/a) - log 2 - gamma_EM
  // up to O(a), and the e^{-a} factors are 1 to machine precision.
  constexpr double euler_mascheroni = 0.57721566490153286060651209;
  const double e1 = log_inv_a - std::log(2.0) - euler_mascheroni;
  const double om = 1.0 / e1;
  return om / (1.0 + std::sqrt(1.0 - om));
}

AtomicExtremalResult atomic_extremal(double a, AtomicMethod method) {
  AtomicExtremalResult result;
  result.a = a;
  result.method = method;
  result.A = compute_A(a, method);
  result.gamma = std::sqrt(result.A) * std::exp(-a);
  return result;
}

Complex extremal_derivative_eval(double a, UnitDiscPoint z) {
  require_positive_a(a);
  const double A = compute_A(a);
  const Complex zc = z.value();
  return (A - zc) / ((1.0 - zc) * std::sqrt(A)) *
         std::exp(-a * (1.0 + zc) / (1.0 - zc));
}

Complex extremal_eval_atomic(double a, UnitDiscPoint z) {
  require_positive_a(a);
  const double A = compute_A(a);
  const double sqrtA = std::sqrt(A);
  const Complex zc = z.value();
  auto derivative_along_ray = [&](double t) -> Complex {
    const Complex w = t * zc;
    return (A - w) / ((1.0 - w) * sqrtA) * std::exp(-a * (1.0 + w) / (1.0 - w));
  };
  QuadratureSpec spec;
  spec.abs_tol = 1e-13;
  spec.rel_tol = 1e-11;
  return integrate_interval_complex(derivative_along_ray, 0.0, 1.0, spec).value;
}

double blaschke_approx_h(double a, int n, double t) {
  const double r = 1.0 - a / n;
  if (t >= 1.0) return 0.0;
  const double base = (1.0 - t) / (1.0 - r * r * t);
  return std::pow(r, n - 1) * std::pow(base, n - 1) / (1.0 - r * r * t);
}

BlaschkeApproxResult gamma_blaschke_approx(double a, int n) {
  require_positive_a(a);
  if (n < 1) throw DomainError("gamma_blaschke_approx: need n >= 1");
  if (!(1.0 - a / n > 0.0)) throw DomainError("gamma_blaschke_approx: need a < n");
  BlaschkeApproxResult result;
  result.r = 1.0 - a / n;
  const auto spec = tight_spec();
  const double num = integrate_interval(
      [&](double t) { return t * blaschke_approx_h(a, n, t); }, 0.0, 1.0, spec).value;
  const double den = integrate_interval(
      [&](double t) { return blaschke_approx_h(a, n, t); }, 0.0, 1.0, spec).value;
  result.A_n = result.r * num / den;
  result.gamma_n = std::sqrt(result.A_n * std::pow(result.r, 2 * n - 1));
  return result;
}

double gamma_weighted_lower(double a, double s) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("gamma_weighted_lower: need a in (0, 1)");
  if (!(s > 0.0 && s < 1.0)) throw DomainError("gamma_weighted_lower: need s in (0, 1)");
  const double r = 1.0 - a;

  // ||f||_{H^2}^2: |f| = |(1-z)/(1-rz)| a.e. on the circle (|S_a| = 1 there).
  // The integrand transitions on the angular scale a near zeta = 1.
  auto boundary_density = [&](CirclePoint zeta) {
    const Complex zc = zeta.value();
    return std::norm(1.0 - zc) / std::norm(1.0 - r * zc);
  };
  RefinedResult h2 = integrate_circle_refined(boundary_density, {0.0}, 2048);
  if (h2.diverged) throw NonConvergence("gamma_weighted_lower: boundary quadrature diverged");

  // int |f'|^2 (1-|z|^2)^s dA with
  //   f'(z) = S_a(z) [ -2a/((1-z)(1-rz)) - (1-r)/(1-rz)^2 ].
  auto weighted_density = [&](UnitDiscPoint z) {
    const double rho = z.abs();
    const double theta = std::atan2(z.im, z.re);
    const Complex sa = atomic_inner_polar(a, rho, theta);
    const Complex zc = z.value();
    const Complex one_z = 1.0 - zc;
    const Complex one_rz = 1.0 - r * zc;
    const Complex fp = sa * (-2.0 * a / (one_z * one_rz) - (1.0 - r) / (one_rz * one_rz));
    const double weight = std::pow((1.0 - rho) * (1.0 + rho), s);
    return std::norm(fp) * weight;
  };
  const double disc_term = integrate_disc_refined(weighted_density, {0.0});

  const double norm_sq = h2.value + disc_term;
  return std::exp(-a) / std::sqrt(norm_sq);
}

}  // namespace rkdisc
