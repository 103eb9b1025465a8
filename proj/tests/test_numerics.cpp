#include <doctest.h>

#include <cmath>

#include "rkdisc/numerics.hpp"
#include "rkdisc/rng.hpp"

using namespace rkdisc;

TEST_SUITE("numerics") {

TEST_CASE("interval quadrature: constant integrand") {
  auto result = integrate_interval([](double) { return 1.0; }, 0.0, 1.0);
  CHECK(result.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(result.error_estimate >= 0.0);
}

TEST_CASE("interval quadrature: rational integrand against hand antiderivative") {
  // int_0^1 1/(1 - 0.25 t) dt = 4 log(4/3)
  auto result = integrate_interval([](double t) { return 1.0 / (1.0 - 0.25 * t); }, 0.0, 1.0);
  CHECK(std::abs(result.value - 4.0 * std::log(4.0 / 3.0)) < 1e-12);
}

TEST_CASE("interval quadrature: endpoint-singular weight vs E1 substitution") {
  // int_0^1 e^{-a(1+t)/(1-t)}/(1-t) dt = e^a E1(2a) via s = a/(1-t)
  const double a = 0.5;
  auto h = [a](double t) {
    if (t >= 1.0) return 0.0;
    return std::exp(-a * (1.0 + t) / (1.0 - t)) / (1.0 - t);
  };
  auto result = integrate_interval(h, 0.0, 1.0);
  const double oracle = std::exp(a) * exp_integral_e1(2.0 * a);
  CHECK(std::abs(result.value - oracle) < 1e-10);
}

TEST_CASE("interval quadrature: Gauss panels are exact on polynomials") {
  // nodes_per_panel = 8 integrates degree <= 15 exactly
  Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    double coeff[16];
    for (double& c : coeff) c = rng.uniform(-1.0, 1.0);
    auto poly = [&](double x) {
      double v = 0.0;
      for (int k = 15; k >= 0; --k) v = v * x + coeff[k];
      return v;
    };
    double exact = 0.0;
    for (int k = 0; k <= 15; ++k) exact += coeff[k] / (k + 1);

    QuadratureSpec spec;
    spec.nodes_per_panel = 8;
    auto result = integrate_interval(poly, 0.0, 1.0, spec);
    CHECK(std::abs(result.value - exact) < 1e-14);
  }
}

TEST_CASE("interval quadrature: error paths") {
  CHECK_THROWS_AS(integrate_interval([](double) { return 1.0; }, 1.0, 0.0), DomainError);
  QuadratureSpec tiny_budget;
  tiny_budget.max_panels = 8;
  CHECK_THROWS_AS(
      integrate_interval([](double t) { return 1.0 / t; }, 0.0, 1.0, tiny_budget),
      NonConvergence);
  QuadratureSpec bad;
  bad.nodes_per_panel = 1;
  CHECK_THROWS_AS(integrate_interval([](double) { return 1.0; }, 0.0, 1.0, bad), DomainError);
}

TEST_CASE("interval quadrature: trapezoid method") {
  QuadratureSpec spec;
  spec.method = QuadratureSpec::Method::trapezoid;
  spec.nodes_per_panel = 32;
  // exact on linear integrands
  auto linear = integrate_interval([](double t) { return 2.0 * t + 1.0; }, 0.0, 1.0, spec);
  CHECK(std::abs(linear.value - 2.0) < 1e-14);
  // adaptive bisection still reaches tolerance on smooth integrands
  spec.abs_tol = 1e-11;
  spec.rel_tol = 1e-11;
  auto smooth = integrate_interval([](double t) { return std::exp(t); }, 0.0, 1.0, spec);
  CHECK(std::abs(smooth.value - (std::exp(1.0) - 1.0)) < 1e-9);
}

TEST_CASE("interval quadrature: deterministic") {
  auto f = [](double t) { return std::exp(-t * t) / (1.0 + t); };
  auto r1 = integrate_interval(f, 0.0, 3.0);
  auto r2 = integrate_interval(f, 0.0, 3.0);
  CHECK(r1.value == r2.value);
  CHECK(r1.error_estimate == r2.error_estimate);
}

TEST_CASE("circle quadrature: constants and known means") {
  CHECK(integrate_circle([](CirclePoint) { return 1.0; }, 64) == doctest::Approx(1.0).epsilon(1e-15));

  // |zeta - 0.5|^2 = 1.25 - cos(theta), mean 1.25
  auto F = [](CirclePoint zeta) { return std::norm(zeta.value() - Complex(0.5, 0.0)); };
  CHECK(std::abs(integrate_circle(F, 256) - 1.25) < 1e-13);

  // Poisson kernel has unit mean
  auto P = [](CirclePoint zeta) {
    return (1.0 - 0.09) / std::norm(zeta.value() - Complex(0.3, 0.0));
  };
  CHECK(std::abs(integrate_circle(P, 4096) - 1.0) < 1e-12);
}

TEST_CASE("circle quadrature: spectral once converged") {
  auto F = [](CirclePoint zeta) { return std::exp(std::cos(zeta.theta)); };
  const double v1 = integrate_circle(F, 64);
  const double v2 = integrate_circle(F, 128);
  CHECK(std::abs(v2 - v1) < 1e-12 * std::abs(v2));
}

TEST_CASE("disc quadrature: normalized measure and radial weights") {
  CHECK(std::abs(integrate_disc([](UnitDiscPoint) { return 1.0; }, 64, 64) - 1.0) < 1e-13);

  // |f'|^2 with f = z
  CHECK(std::abs(integrate_disc([](UnitDiscPoint) { return 1.0; }) - 1.0) < 1e-13);

  // int (1-|z|^2)^{1/2} dA = B(1, 3/2) = 2/3
  auto g = [](UnitDiscPoint z) { return std::sqrt(1.0 - z.abs_sq()); };
  CHECK(std::abs(integrate_disc(g) - 2.0 / 3.0) < 1e-11);
}

TEST_CASE("disc quadrature: non-finite nodes are an error") {
  auto g = [](UnitDiscPoint z) {
    return z.re > 0.5 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
  };
  CHECK_THROWS_AS(integrate_disc(g, 64, 64), NonFinite);
}

TEST_CASE("E1: defining-integral oracle") {
  // int_x^60 e^{-t}/t dt; the tail beyond 60 is < 1.5e-28
  auto oracle = [](double x) {
    QuadratureSpec spec;
    spec.abs_tol = 1e-15;
    spec.rel_tol = 1e-14;
    return integrate_interval([](double t) { return std::exp(-t) / t; }, x, 60.0, spec).value;
  };
  for (double x : {0.01, 0.1, 1.0, 5.0})
    CHECK(std::abs(exp_integral_e1(x) - oracle(x)) < 1e-10);

  // frozen from the quadrature oracle
  CHECK(std::abs(exp_integral_e1(1.0) - 0.21938393439552026) < 1e-12);
  CHECK(std::abs(exp_integral_e1(10.0) - oracle(10.0)) < 1e-11 * exp_integral_e1(10.0));
}

TEST_CASE("E1: small-x series limit") {
  constexpr double euler_mascheroni = 0.57721566490153286;
  const double x = 1e-8;
  CHECK(std::abs(exp_integral_e1(x) + std::log(x) + euler_mascheroni) < 1e-7);
  CHECK_THROWS_AS(exp_integral_e1(0.0), DomainError);
  CHECK_THROWS_AS(exp_integral_e1(-1.0), DomainError);
}

TEST_CASE("refined circle quadrature: log singularity converges, pole diverges") {
  // log(1/|zeta-1|): integrable, mean value 0
  auto log_integrand = [](CirclePoint zeta) {
    return -0.5 * std::log(std::norm(zeta.value() - 1.0));
  };
  auto r1 = integrate_circle_refined(log_integrand, {0.0});
  CHECK(!r1.diverged);
  CHECK(std::abs(r1.value) < 1e-7);

  // 1/|zeta-1|^2: not integrable
  auto pole = [](CirclePoint zeta) { return 1.0 / std::norm(zeta.value() - 1.0); };
  auto r2 = integrate_circle_refined(pole, {0.0});
  CHECK(r2.diverged);

  // smooth integrand with a focus angle still matches the plain rule
  auto smooth = [](CirclePoint zeta) { return std::exp(std::cos(zeta.theta)); };
  auto r3 = integrate_circle_refined(smooth, {1.0});
  CHECK(std::abs(r3.value - integrate_circle(smooth, 4096)) < 1e-10);
}

TEST_CASE("refined disc quadrature: boundary weight against Beta integral") {
  auto g = [](UnitDiscPoint z) { return std::sqrt(1.0 - z.abs_sq()); };
  CHECK(std::abs(integrate_disc_refined(g, {0.0}) - 2.0 / 3.0) < 1e-10);
}

}  // TEST_SUITE
