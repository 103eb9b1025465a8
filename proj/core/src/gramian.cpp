#include "rkdisc/gramian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "rkdisc/errors.hpp"
#include "rkdisc/numerics.hpp"

namespace rkdisc {

namespace {

constexpr double pinv_cutoff_ratio = 1e-12;
constexpr double ill_conditioned_threshold = 1e12;
constexpr double negativity_floor = -1e-8;

}  // namespace

ConstraintSet::ConstraintSet(std::vector<Constraint> entries) : entries_(std::move(entries)) {
  for (const auto& c : entries_) {
    if (c.order < 0) throw DomainError("ConstraintSet: orders must be >= 0");
    if (c.order == 0 && c.point.re == 0.0 && c.point.im == 0.0)
      throw DomainError("ConstraintSet: order-0 constraint at the origin forces gamma = 0");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = i + 1; j < entries_.size(); ++j)
      if (entries_[i] == entries_[j])
        throw DomainError("ConstraintSet: duplicate (point, order) pair");
}

ConstraintSet ConstraintSet::at_points(std::span<const UnitDiscPoint> points) {
  std::vector<Constraint> entries;
  entries.reserve(points.size());
  for (const auto& p : points) entries.push_back({p, 0});
  return ConstraintSet(std::move(entries));
}

ConstraintSet ConstraintSet::multiplicity(UnitDiscPoint point, int m) {
  if (m < 1) throw DomainError("ConstraintSet::multiplicity: need m >= 1");
  std::vector<Constraint> entries;
  entries.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) entries.push_back({point, k});
  return ConstraintSet(std::move(entries));
}

ConstraintSet ConstraintSet::appended(Constraint extra) const {
  std::vector<Constraint> entries = entries_;
  entries.push_back(extra);
  return ConstraintSet(std::move(entries));
}

Eigen::MatrixXcd build_gramian(const DiagonalKernel& kernel, const ConstraintSet& constraints) {
  if (constraints.empty()) throw DomainError("build_gramian: constraint set is empty");
  const auto& cs = constraints.entries();
  const Eigen::Index n = static_cast<Eigen::Index>(cs.size());
  Eigen::MatrixXcd L(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const Complex v = kernel.deriv(cs[static_cast<std::size_t>(i)].order,
                                     cs[static_cast<std::size_t>(j)].order,
                                     cs[static_cast<std::size_t>(i)].point,
                                     cs[static_cast<std::size_t>(j)].point);
      if (i == j)
        L(i, i) = Complex(v.real(), 0.0);
      else {
        L(i, j) = v;
        L(j, i) = std::conj(v);
      }
    }
  }
  return L;
}

GammaCertificate gamma_extremal(const DiagonalKernel& kernel, const ConstraintSet& constraints) {
  GammaCertificate cert;
  cert.gram = build_gramian(kernel, constraints);
  const auto& cs = constraints.entries();
  const Eigen::Index n = cert.gram.rows();

  cert.unit_vector.resize(n);
  for (Eigen::Index i = 0; i < n; ++i)
    cert.unit_vector(i) = (cs[static_cast<std::size_t>(i)].order == 0) ? 1.0 : 0.0;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(cert.gram);
  if (eig.info() != Eigen::Success)
    throw NumericalNegativity("gamma_extremal: eigendecomposition failed");
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const double lambda_max = lambda.cwiseAbs().maxCoeff();
  const double cutoff = pinv_cutoff_ratio * lambda_max;

  Eigen::VectorXd inv = Eigen::VectorXd::Zero(n);
  double lambda_min_kept = lambda_max;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (lambda(i) > cutoff) {
      inv(i) = 1.0 / lambda(i);
      lambda_min_kept = std::min(lambda_min_kept, lambda(i));
      ++cert.rank;
    }
  }
  const Eigen::MatrixXcd pinv =
      eig.eigenvectors() * inv.asDiagonal() * eig.eigenvectors().adjoint();
  cert.condition_estimate = (cert.rank > 0) ? lambda_max / lambda_min_kept : 1.0;
  cert.ill_conditioned = cert.condition_estimate > ill_conditioned_threshold;

  const Eigen::VectorXcd e = cert.unit_vector.cast<Complex>();
  cert.coeffs = pinv * e;
  // one refinement pass; the residual correction matters once the Gramian
  // condition number approaches 1e8
  cert.coeffs += pinv * (e - cert.gram * cert.coeffs);
  const double s = (e.adjoint() * cert.coeffs)(0).real();
  cert.projection_norm_sq = s;

  const double gamma_sq = 1.0 - s;
  if (gamma_sq < negativity_floor)
    throw NumericalNegativity("gamma_extremal: 1 - <Me,e> is significantly negative");
  cert.gamma = std::sqrt(std::max(0.0, gamma_sq));
  if (cert.gamma > 1.0) {
    if (cert.gamma * cert.gamma - 1.0 > 1e-12)
      throw NumericalNegativity("gamma_extremal: gamma exceeds 1 beyond tolerance");
    cert.gamma = 1.0;
  }
  return cert;
}

double gamma_two_point(const DiagonalKernel& kernel, UnitDiscPoint p, UnitDiscPoint q) {
  const double kpp = kernel.eval(p, p).real();
  const double kqq = kernel.eval(q, q).real();
  const Complex kqp = kernel.eval(q, p);
  const double det = kpp * kqq - std::norm(kqp);
  if (!(det >= 1e-14 * kpp * kqq))
    throw DegenerateGramian("gamma_two_point: kernel columns are numerically dependent");
  const double s = (kpp + kqq - 2.0 * kqp.real()) / det;
  const double gamma_sq = 1.0 - s;
  if (gamma_sq < negativity_floor)
    throw NumericalNegativity("gamma_two_point: 1 - <L^{-1}1,1> is significantly negative");
  return std::sqrt(std::max(0.0, gamma_sq));
}

namespace {

Complex extremal_eval_impl(const GammaCertificate& cert, const ConstraintSet& constraints,
                           const std::function<Complex(const Constraint&)>& functional_kernel) {
  if (!(cert.gamma > 0.0))
    throw DegenerateExtremal("extremal_eval: gamma = 0, extremal function undefined");
  const auto& cs = constraints.entries();
  if (static_cast<Eigen::Index>(cs.size()) != cert.coeffs.size())
    throw DomainError("extremal_eval: certificate does not match constraint set");
  CompensatedSumComplex acc;
  for (std::size_t i = 0; i < cs.size(); ++i)
    acc.add(cert.coeffs(static_cast<Eigen::Index>(i)) * functional_kernel(cs[i]));
  return (1.0 - acc.value()) / std::sqrt(1.0 - cert.projection_norm_sq);
}

}  // namespace

Complex extremal_eval(const DiagonalKernel& kernel, const GammaCertificate& cert,
                      const ConstraintSet& constraints, UnitDiscPoint z) {
  return extremal_eval_impl(cert, constraints, [&](const Constraint& c) {
    return kernel.deriv(0, c.order, z, c.point);
  });
}

Complex extremal_eval_boundary(const DiagonalKernel& kernel, const GammaCertificate& cert,
                               const ConstraintSet& constraints, CirclePoint zeta) {
  return extremal_eval_impl(cert, constraints, [&](const Constraint& c) {
    return kernel.deriv_boundary(0, c.order, zeta, c.point);
  });
}

double gamma_bruteforce_poly(const DiagonalKernel& kernel, const ConstraintSet& constraints,
                             int degree) {
  const auto& cs = constraints.entries();
  if (degree < static_cast<int>(cs.size()))
    throw DomainError("gamma_bruteforce_poly: degree must be >= number of constraints");

  const Eigen::Index dim = degree + 1;
  const Eigen::Index m = static_cast<Eigen::Index>(cs.size());

  // Monomial frame b_n = a_n / sqrt(c_n) makes the norm Euclidean. Each
  // constraint is orthogonality to the column v_i below; the optimum is the
  // norm of the projection of e_0 onto the joint null space.
  Eigen::MatrixXcd v(dim, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& c = cs[static_cast<std::size_t>(i)];
    const Complex zi = c.point.value();
    for (Eigen::Index n = 0; n < dim; ++n) {
      if (n < c.order) {
        v(n, i) = 0.0;
        continue;
      }
      double fall = 1.0;
      for (int k = 0; k < c.order; ++k) fall *= static_cast<double>(n - k);
      Complex zpow = 1.0;
      for (Eigen::Index k = 0; k < n - c.order; ++k) zpow *= zi;
      v(n, i) = std::conj(std::sqrt(kernel.coefficient(static_cast<std::size_t>(n))) * fall * zpow);
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = (sv.size() > 0) ? 1e-12 * sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;

  double proj = 0.0;
  for (Eigen::Index i = 0; i < rank; ++i) proj += std::norm(svd.matrixU()(0, i));
  return std::sqrt(std::max(0.0, 1.0 - proj));
}

}  // namespace rkdisc
