#include "rkdisc/inner.hpp"

#include <cmath>
#include <limits>

#include "rkdisc/errors.hpp"
#include "rkdisc/numerics.hpp"

namespace rkdisc {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

}  // namespace

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (const auto& atom : atoms_) {
    if (!(atom.mass > 0.0)) throw DomainError("AtomicMeasure: masses must be positive");
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    for (std::size_t j = i + 1; j < atoms_.size(); ++j)
      if (atoms_[i].location.theta == atoms_[j].location.theta)
        throw DomainError("AtomicMeasure: atom locations must be distinct");
}

double AtomicMeasure::total_mass() const {
  CompensatedSum acc;
  for (const auto& atom : atoms_) acc.add(atom.mass);
  return acc.value();
}

std::vector<double> AtomicMeasure::angles() const {
  std::vector<double> out;
  out.reserve(atoms_.size());
  for (const auto& atom : atoms_) out.push_back(atom.location.theta);
  return out;
}

double InnerSpec::blaschke_sum() const {
  CompensatedSum acc;
  for (const auto& z : blaschke_zeros) acc.add(1.0 - z.abs());
  acc.add(static_cast<double>(zero_order_at_origin));
  return acc.value();
}

Complex inner_eval(const InnerSpec& spec, UnitDiscPoint z) {
  const Complex zc = z.value();
  Complex product = 1.0;
  for (int k = 0; k < spec.zero_order_at_origin; ++k) product *= zc;
  for (const auto& zero : spec.blaschke_zeros) {
    const Complex zn = zero.value();
    const double r = zero.abs();
    if (!(r > 0.0))
      throw DomainError("inner_eval: zeros at the origin belong in zero_order_at_origin");
    product *= (r / zn) * (zn - zc) / (1.0 - std::conj(zn) * zc);
  }
  if (!spec.singular.empty()) {
    Complex exponent = 0.0;
    for (const auto& atom : spec.singular.atoms()) {
      const Complex lambda = atom.location.value();
      exponent += atom.mass * (lambda + zc) / (lambda - zc);
    }
    product *= std::exp(-exponent);
  }
  return product;
}

double local_dirichlet(const InnerSpec& spec, CirclePoint zeta) {
  const Complex zc = zeta.value();
  CompensatedSum acc;
  acc.add(static_cast<double>(spec.zero_order_at_origin));  // (1-0)/|zeta|^2 per origin zero
  for (const auto& zero : spec.blaschke_zeros) {
    const double d2 = std::norm(zc - zero.value());
    acc.add((1.0 - zero.abs_sq()) / d2);
  }
  for (const auto& atom : spec.singular.atoms()) {
    const double d2 = std::norm(zc - atom.location.value());
    if (d2 == 0.0) return inf;
    acc.add(2.0 * atom.mass / d2);
  }
  return acc.value();
}

double carleson_norm_sq(const InnerSpec& spec,
                        const std::function<Complex(CirclePoint)>& f_boundary,
                        double f_norm_sq, int n_nodes) {
  if (f_norm_sq < 0.0) throw DomainError("carleson_norm_sq: f_norm_sq must be >= 0");

  // Refine toward true singularities (atoms) and toward the boundary
  // projections of near-boundary zeros, where D_zeta is sharply peaked.
  std::vector<double> focus = spec.singular.angles();
  for (const auto& zero : spec.blaschke_zeros)
    if (1.0 - zero.abs() < 0.05) focus.push_back(std::atan2(zero.im, zero.re));

  auto integrand = [&](CirclePoint zeta) {
    const double d = local_dirichlet(spec, zeta);
    return d * std::norm(f_boundary(zeta));
  };
  RefinedResult result = integrate_circle_refined(integrand, focus, n_nodes);
  if (result.diverged) return inf;
  if (result.tail_estimate > std::max(1e-8, 1e-6 * std::abs(result.value)))
    throw NonConvergence("carleson_norm_sq: refinement near atoms did not stabilize");
  return result.value + f_norm_sq;
}

double poisson_integral(const std::function<double(CirclePoint)>& F, UnitDiscPoint w,
                        int n_nodes) {
  const Complex wc = w.value();
  const double num = 1.0 - w.abs_sq();
  return integrate_circle(
      [&](CirclePoint zeta) { return num / std::norm(zeta.value() - wc) * F(zeta); },
      n_nodes);
}

double poisson_sup_ratio(CirclePoint lambda, UnitDiscPoint z) {
  return 2.0 * std::abs(lambda.value() - z.value()) / (1.0 - z.abs_sq());
}

Complex frostman_shift_eval(const InnerSpec& spec, UnitDiscPoint a, UnitDiscPoint z) {
  const Complex value = inner_eval(spec, z);
  return (value - a.value()) / (1.0 - std::conj(a.value()) * value);
}

Complex atomic_inner_polar(double a, double r, double theta) {
  const double s = std::sin(0.5 * theta);
  const double d2 = (1.0 - r) * (1.0 - r) + 4.0 * r * s * s;  // |1 - z|^2
  const double re = -a * (1.0 - r) * (1.0 + r) / d2;          // -a (1-|z|^2)/|1-z|^2
  const double im = -a * 2.0 * r * std::sin(theta) / d2;      // -a Im[(1+z)/(1-z)]
  return std::exp(re) * Complex(std::cos(im), std::sin(im));
}

double v_mu(const AtomicMeasure& measure, CirclePoint zeta) {
  const Complex zc = zeta.value();
  CompensatedSum acc;
  for (const auto& atom : measure.atoms()) {
    const double d2 = std::norm(zc - atom.location.value());
    if (d2 == 0.0) return inf;
    acc.add(atom.mass / d2);
  }
  return acc.value();
}

double log_plus_v_integral(const AtomicMeasure& measure, int n_nodes) {
  auto integrand = [&](CirclePoint zeta) {
    const double v = v_mu(measure, zeta);
    return (v > 1.0) ? std::log(v) : 0.0;
  };
  RefinedResult result = integrate_circle_refined(integrand, measure.angles(), n_nodes);
  if (result.diverged)
    throw NonConvergence("log_plus_v_integral: refinement diverged at an atom");
  return result.value * two_pi;  // raw |dzeta| integral
}

}  // namespace rkdisc
