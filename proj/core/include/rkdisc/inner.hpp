#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rkdisc/disc.hpp"

namespace rkdisc {

struct Atom {
  CirclePoint location;
  double mass = 0.0;
};

/// A finite positive atomic measure mu = sum_n mass_n * delta_{lambda_n} on
/// the circle; atom locations are distinct.
class AtomicMeasure {
public:
  AtomicMeasure() = default;
  explicit AtomicMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  double total_mass() const;
  std::vector<double> angles() const;

private:
  std::vector<Atom> atoms_;
};

/// Data of an inner function I = B * S_mu:
///   B(z) = z^k prod_n (|z_n|/z_n) (z_n - z)/(1 - conj(z_n) z),
///   S_mu(z) = exp(-sum_j mass_j (lambda_j + z)/(lambda_j - z)).
struct InnerSpec {
  std::vector<UnitDiscPoint> blaschke_zeros;  // nonzero zeros, with multiplicity
  int zero_order_at_origin = 0;
  AtomicMeasure singular;

  /// sum_n (1 - |z_n|), origin zeros included.
  double blaschke_sum() const;
};

Complex inner_eval(const InnerSpec& spec, UnitDiscPoint z);

/// Local Dirichlet integral of the inner function at a boundary point:
///   D_zeta(I) = sum_n (1-|z_n|^2)/|zeta - z_n|^2 + sum_j 2 mass_j /|zeta - lambda_j|^2.
/// Returns +infinity when zeta coincides with an atom location.
double local_dirichlet(const InnerSpec& spec, CirclePoint zeta);

/// ||I f||^2 = (1/2pi) int_T D_zeta(I) |f(zeta)|^2 |dzeta| + ||f||^2 where
/// f_norm_sq = ||f||^2 is supplied by the caller. Returns +infinity when the
/// boundary integrand is non-integrable at an atom (detected by diverging
/// dyadic panel sums); throws NonConvergence when refinement neither
/// stabilizes nor clearly diverges.
double carleson_norm_sq(const InnerSpec& spec,
                        const std::function<Complex(CirclePoint)>& f_boundary,
                        double f_norm_sq, int n_nodes);

/// P[F](w) = (1/2pi) int_T (1-|w|^2)/|zeta - w|^2 F(zeta) |dzeta|.
double poisson_integral(const std::function<double(CirclePoint)>& F, UnitDiscPoint w,
                        int n_nodes);

/// sup_{|zeta|=1} |zeta - lambda| / |zeta - z| = 2 |lambda - z| / (1 - |z|^2).
double poisson_sup_ratio(CirclePoint lambda, UnitDiscPoint z);

/// (I(z) - a) / (1 - conj(a) I(z)): the inner function post-composed with a
/// disc automorphism.
Complex frostman_shift_eval(const InnerSpec& spec, UnitDiscPoint a, UnitDiscPoint z);

/// S_a(z) = exp(-a (1+z)/(1-z)) for the one-atom measure a*delta_1,
/// evaluated from polar data z = r e^{i theta} with the cancellation-free
/// forms 1 - |z|^2 = (1-r)(1+r) and |1-z|^2 = (1-r)^2 + 4 r sin^2(theta/2).
/// Safe arbitrarily close to the boundary; |result| <= 1 always.
Complex atomic_inner_polar(double a, double r, double theta);

/// V_mu(zeta) = sum_j mass_j / |zeta - lambda_j|^2 (+infinity at atoms).
double v_mu(const AtomicMeasure& measure, CirclePoint zeta);

/// int_T log^+ V_mu |dzeta| (raw arclength integral). The log singularities
/// at atoms are integrable; quadrature refines dyadically toward them.
double log_plus_v_integral(const AtomicMeasure& measure, int n_nodes);

}  // namespace rkdisc
