#pragma once

#include "rkdisc/disc.hpp"

namespace rkdisc {

/// Method used for the constant A of the one-atom extremal problem.
enum class AtomicMethod { direct_integral, e1_substitution };

struct AtomicExtremalResult {
  double a = 0.0;
  double A = 0.0;
  double gamma = 0.0;
  AtomicMethod method = AtomicMethod::e1_substitution;
};

/// A = int_0^1 t h(t) dt / int_0^1 h(t) dt with h(t) = e^{-a(1+t)/(1-t)}/(1-t).
///
/// The e1 route evaluates the substituted form
///   1 - A = (e^{-2a} - 2a E1(2a)) / E1(2a)
/// (substitution s = a/(1-t) plus one integration by parts); the direct
/// route integrates h on (0,1) adaptively and is kept as a cross-check.
double compute_A(double a, AtomicMethod method = AtomicMethod::e1_substitution);

/// 1 - A without forming A; the well-conditioned quantity for small a,
/// where 1 - A ~ 1/log(1/a).
double one_minus_A(double a);

/// gamma(S_a H^2 cap D) = sqrt(A) e^{-a}.
double gamma_atomic(double a);

/// 1 - gamma_atomic(a), computed without cancellation:
///   1 - sqrt(A) e^{-a} = -expm1(-a) + e^{-a} (1-A)/(1 + sqrt(A)).
double one_minus_gamma_atomic(double a);

/// Same quantity parametrized by L = log(1/a), usable far below the double
/// underflow threshold of a itself (masses like e^{-n^2} at large n).
double one_minus_gamma_atomic_log(double log_inv_a);

AtomicExtremalResult atomic_extremal(double a, AtomicMethod method = AtomicMethod::e1_substitution);

/// (z phi)'(z) = A^{-1/2} (A - z)/(1 - z) e^{-a(1+z)/(1-z)}, the closed form
/// of the derivative of z times the extremal function.
Complex extremal_derivative_eval(double a, UnitDiscPoint z);

/// phi(z) recovered from its radial primitive, phi(z) = int_0^1 (w phi)'(t z) dt,
/// by adaptive quadrature along [0, z].
Complex extremal_eval_atomic(double a, UnitDiscPoint z);

/// The finite Blaschke approximants B_n(z) = ((r-z)/(1-rz))^n, r = 1 - a/n:
///   A_n = r int_0^1 t h_n / int_0^1 h_n,
///   h_n(t) = r^{n-1}/(1-r^2 t) ((1-t)/(1-r^2 t))^{n-1},
///   gamma_n = sqrt(A_n r^{2n-1}).
struct BlaschkeApproxResult {
  double gamma_n = 0.0;
  double A_n = 0.0;
  double r = 0.0;
};
BlaschkeApproxResult gamma_blaschke_approx(double a, int n);

/// h_n(t) itself (exposed for the uniform-bound / pointwise-limit checks).
double blaschke_approx_h(double a, int n, double t);

/// Lower bound for gamma in the weighted space D_s via the test function
/// f(z) = S_a(z) (1-z)/(1-rz) with r = 1-a:
///   gamma_s >= e^{-a} / ||f||_s,
///   ||f||_s^2 = ||f||_{H^2}^2 + int |f'|^2 (1-|z|^2)^s dA,
/// both terms by quadrature (boundary values of |f| equal |(1-z)/(1-rz)|).
double gamma_weighted_lower(double a, double s);

}  // namespace rkdisc
