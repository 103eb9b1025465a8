#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "rkdisc/disc.hpp"
#include "rkdisc/kernels.hpp"

namespace rkdisc {

/// One vanishing condition f^{(order)}(point) = 0. A zero of multiplicity m
/// at z is expressed as the orders 0 .. m-1 at z together.
struct Constraint {
  UnitDiscPoint point;
  int order = 0;

  friend bool operator==(const Constraint& a, const Constraint& b) {
    return a.point == b.point && a.order == b.order;
  }
};

class ConstraintSet {
public:
  ConstraintSet() = default;
  explicit ConstraintSet(std::vector<Constraint> entries);

  /// Order-0 constraints at the given points.
  static ConstraintSet at_points(std::span<const UnitDiscPoint> points);
  /// Orders 0 .. multiplicity-1 at a single point.
  static ConstraintSet multiplicity(UnitDiscPoint point, int multiplicity);

  const std::vector<Constraint>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  ConstraintSet appended(Constraint extra) const;

private:
  std::vector<Constraint> entries_;
};

/// The solved extremal problem
///   gamma = sup{ Re f(0) : f^{(order_i)}(z_i) = 0, ||f|| <= 1 },
/// computed from the Gramian L of the constraint functionals' kernels:
/// gamma^2 = 1 - <M e, e> for any M with LML = L (here the Moore-Penrose
/// pseudo-inverse), where e_i = 1 on order-0 rows and 0 otherwise. coeffs
/// c = M e are the expansion coefficients of the projection of 1 onto the
/// span of the functionals' kernels.
struct GammaCertificate {
  double gamma = 0.0;
  Eigen::MatrixXcd gram;
  Eigen::VectorXcd coeffs;
  Eigen::VectorXd unit_vector;
  double projection_norm_sq = 0.0;  // Re <M e, e>
  int rank = 0;
  double condition_estimate = 1.0;
  bool ill_conditioned = false;  // condition_estimate > 1e12
};

/// L_ij = d^{order_i} dbar^{order_j} K evaluated at (point_i, point_j);
/// Hermitian by construction (upper triangle computed, lower mirrored).
Eigen::MatrixXcd build_gramian(const DiagonalKernel& kernel, const ConstraintSet& constraints);

GammaCertificate gamma_extremal(const DiagonalKernel& kernel, const ConstraintSet& constraints);

/// gamma for two order-0 constraints via the closed 2x2 inverse,
///   <L^{-1} 1, 1> = (K(p,p) + K(q,q) - 2 Re K(q,p)) / (K(p,p)K(q,q) - |K(q,p)|^2).
/// Throws DegenerateGramian when the determinant falls below
/// 1e-14 * K(p,p) K(q,q); the pseudo-inverse path handles that case.
double gamma_two_point(const DiagonalKernel& kernel, UnitDiscPoint p, UnitDiscPoint q);

/// The extremal function phi(z) = (1 - sum_i c_i k_i(z)) / sqrt(1 - <Me,e>),
/// where k_i is the kernel of functional i. phi(0) = gamma and phi satisfies
/// the vanishing constraints.
Complex extremal_eval(const DiagonalKernel& kernel, const GammaCertificate& cert,
                      const ConstraintSet& constraints, UnitDiscPoint z);
Complex extremal_eval_boundary(const DiagonalKernel& kernel, const GammaCertificate& cert,
                               const ConstraintSet& constraints, CirclePoint zeta);

/// Independent oracle: maximizes Re f(0) over polynomials of degree <= degree
/// with ||f||^2 = sum |a_n|^2 / c_n <= 1 under the vanishing constraints,
/// by projecting the evaluation functional onto the constraint null space.
/// Monotone nondecreasing in degree; converges to gamma_extremal.
double gamma_bruteforce_poly(const DiagonalKernel& kernel, const ConstraintSet& constraints,
                             int degree);

}  // namespace rkdisc
