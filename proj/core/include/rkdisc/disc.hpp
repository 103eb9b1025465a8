#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "rkdisc/errors.hpp"

namespace rkdisc {

using Complex = std::complex<double>;

constexpr double two_pi = 2.0 * std::numbers::pi;

/// A point z with |z| < 1, the domain of every kernel and inner-function
/// evaluation.
struct UnitDiscPoint {
  double re = 0.0;
  double im = 0.0;

  UnitDiscPoint() = default;
  UnitDiscPoint(double re_, double im_) : re(re_), im(im_) {
    if (!(re * re + im * im < 1.0))
      throw DomainError("UnitDiscPoint: |z| must be < 1");
  }
  explicit UnitDiscPoint(Complex z) : UnitDiscPoint(z.real(), z.imag()) {}

  Complex value() const { return {re, im}; }
  double abs() const { return std::hypot(re, im); }
  double abs_sq() const { return re * re + im * im; }

  static UnitDiscPoint polar(double r, double theta) {
    return UnitDiscPoint(r * std::cos(theta), r * std::sin(theta));
  }

  friend bool operator==(const UnitDiscPoint& a, const UnitDiscPoint& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// A point e^{i theta} on the unit circle; modulus 1 by construction.
struct CirclePoint {
  double theta = 0.0;

  CirclePoint() = default;
  explicit CirclePoint(double theta_) : theta(reduce(theta_)) {}

  Complex value() const { return {std::cos(theta), std::sin(theta)}; }

  static double reduce(double t) {
    double r = std::fmod(t, two_pi);
    if (r < 0.0) r += two_pi;
    return r;
  }

  friend bool operator==(const CirclePoint& a, const CirclePoint& b) {
    return a.theta == b.theta;
  }
};

}  // namespace rkdisc
