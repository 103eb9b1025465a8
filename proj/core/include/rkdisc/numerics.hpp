#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "rkdisc/disc.hpp"
#include "rkdisc/errors.hpp"

namespace rkdisc {

/// Neumaier compensated accumulator. Used wherever long series or large
/// node counts would otherwise lose digits to cancellation.
class CompensatedSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedSumComplex {
public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

private:
  CompensatedSum re_, im_;
};

struct QuadratureSpec {
  enum class Method { gauss_legendre, trapezoid };
  Method method = Method::gauss_legendre;
  int panels = 1;
  int nodes_per_panel = 16;
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_panels = 1 << 15;

  void validate() const;
};

template <class T>
struct IntegralResult {
  T value{};
  double error_estimate = 0.0;
  int panels_used = 0;
};

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the Legendre recurrence and cached per order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_rule(int n);

inline constexpr int default_circle_nodes = 4096;
inline constexpr int default_disc_radial_nodes = 512;
inline constexpr int default_disc_angular_nodes = 1024;

/// Adaptive composite quadrature on (a, b): panels are bisected worst first
/// until the summed per-panel error estimates meet the tolerance. The default
/// Gauss-Legendre rule never evaluates endpoints (nodes are interior), so
/// integrable endpoint singularities are admissible; the trapezoid method
/// does evaluate them.
IntegralResult<double> integrate_interval(const std::function<double(double)>& f,
                                          double a, double b,
                                          const QuadratureSpec& spec = {});
IntegralResult<Complex> integrate_interval_complex(const std::function<Complex(double)>& f,
                                                   double a, double b,
                                                   const QuadratureSpec& spec = {});

/// Mean value (1/2pi) * integral of F over the circle by the periodic
/// trapezoid rule on n_nodes midpoint-offset angles. Spectrally accurate for
/// smooth F.
double integrate_circle(const std::function<double(CirclePoint)>& F, int n_nodes);

/// Integral of g over the disc against normalized area measure (A(D) = 1).
/// Radial direction: composite Gauss-Legendre with dyadic panels graded
/// toward r = 1 (so weights like (1-r^2)^s integrate to near machine
/// precision); angular direction: periodic trapezoid.
double integrate_disc(const std::function<double(UnitDiscPoint)>& g,
                      int radial_nodes = default_disc_radial_nodes,
                      int angular_nodes = default_disc_angular_nodes);

/// Exponential integral E1(x) = \int_x^\infty e^{-t}/t dt for x > 0.
/// Power series below the crossover x = 1, modified-Lentz continued fraction
/// above it.
double exp_integral_e1(double x);

/// Result of a graded quadrature near boundary singularities. `diverged`
/// marks an integrand whose dyadic panel sums grow toward a focus angle
/// (non-integrable singularity); the value is then meaningless and callers
/// report +infinity.
struct RefinedResult {
  double value = 0.0;
  bool diverged = false;
  double tail_estimate = 0.0;
  int panels_used = 0;
};

/// Mean value (1/2pi) * integral of F over the circle with dyadic panel
/// refinement toward each focus angle. Panel sums toward a focus angle that
/// fail to decay geometrically flag divergence; decaying sums are
/// extrapolated and the extrapolation recorded in tail_estimate.
RefinedResult integrate_circle_refined(const std::function<double(CirclePoint)>& F,
                                       std::vector<double> focus_angles,
                                       int base_nodes = 512,
                                       int max_levels = 46,
                                       int nodes_per_panel = 12);

/// Integral over the disc against normalized area measure with dyadic
/// radial grading toward r = 1 and dyadic angular grading toward each focus
/// angle. For integrands whose only singularities sit at boundary points
/// (atoms of a singular measure).
double integrate_disc_refined(const std::function<double(UnitDiscPoint)>& g,
                              std::vector<double> focus_angles,
                              int radial_levels = 44,
                              int angular_levels = 44,
                              int nodes_per_panel = 12,
                              int base_angular_nodes = 512);

}  // namespace rkdisc
