#include "rkdisc/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "rkdisc/errors.hpp"
#include "rkdisc/gramian.hpp"
#include "rkdisc/inner.hpp"
#include "rkdisc/numerics.hpp"

namespace rkdisc {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

double condition_term(double a) {
  if (a == 0.0) return 0.0;
  if (std::isinf(a)) return inf;
  return 1.0 / std::log1p(1.0 / a);
}

CirclePoint mean_direction(std::span<const UnitDiscPoint> points) {
  Complex sum = 0.0;
  for (const auto& z : points) {
    const double r = z.abs();
    if (!(r > 0.0)) throw DomainError("greedy_partition: points must be nonzero");
    sum += z.value() / r;
  }
  if (std::abs(sum) < 1e-12) {
    const auto& z = points.front();
    return CirclePoint(std::atan2(z.im, z.re));
  }
  return CirclePoint(std::atan2(sum.imag(), sum.real()));
}

}  // namespace

bool stolz_contains(const StolzAngle& angle, UnitDiscPoint z) {
  if (!(angle.aperture > 1.0)) throw DomainError("StolzAngle: aperture must be > 1");
  return std::abs(angle.vertex.value() - z.value()) <= angle.aperture * (1.0 - z.abs());
}

double cluster_weight(std::span<const UnitDiscPoint> points, CirclePoint vertex) {
  const Complex lambda = vertex.value();
  CompensatedSum acc;
  for (const auto& z : points)
    acc.add(std::norm(lambda - z.value()) / (1.0 - z.abs_sq()));
  return 2.0 * acc.value();
}

ClusterDecomposition::ClusterDecomposition(std::vector<Cluster> clusters)
    : clusters_(std::move(clusters)) {
  CompensatedSum acc;
  for (auto& cluster : clusters_) {
    cluster.weight = cluster_weight(cluster.points, cluster.vertex);
    acc.add(condition_term(cluster.weight));
  }
  condition_sum_ = acc.value();
}

std::vector<UnitDiscPoint> ClusterDecomposition::all_points() const {
  std::vector<UnitDiscPoint> out;
  for (const auto& cluster : clusters_)
    out.insert(out.end(), cluster.points.begin(), cluster.points.end());
  return out;
}

DominationResult domination_check(const ClusterDecomposition& decomp, int n_grid) {
  if (n_grid < 16) throw DomainError("domination_check: need n_grid >= 16");
  DominationResult result;
  const auto points = decomp.all_points();
  if (points.empty()) return result;

  // Half-step offset; nudge again if a vertex still lands on a node.
  const double step = two_pi / n_grid;
  double offset = 0.5 * step;
  for (bool clash = true; clash;) {
    clash = false;
    for (const auto& cluster : decomp.clusters()) {
      const double pos = std::fmod(cluster.vertex.theta - offset, step);
      if (std::abs(pos) < 1e-9 * step || std::abs(pos - step) < 1e-9 * step ||
          std::abs(pos + step) < 1e-9 * step) {
        offset += 0.25 * step;
        clash = true;
        break;
      }
    }
  }

  result.max_violation = -inf;
  for (int k = 0; k < n_grid; ++k) {
    const Complex zeta = CirclePoint(k * step + offset).value();
    CompensatedSum lhs;
    for (const auto& z : points)
      lhs.add((1.0 - z.abs_sq()) / std::norm(zeta - z.value()));
    CompensatedSum rhs;
    for (const auto& cluster : decomp.clusters())
      rhs.add(2.0 * cluster.weight / std::norm(zeta - cluster.vertex.value()));
    result.max_violation = std::max(result.max_violation, lhs.value() - rhs.value());
    result.max_rhs = std::max(result.max_rhs, rhs.value());
  }
  return result;
}

DecompCertificate decomp_certificate(const ClusterDecomposition& decomp, int n_grid) {
  DecompCertificate cert;
  cert.condition_sum = decomp.condition_sum();
  CompensatedSum pushed;
  for (const auto& cluster : decomp.clusters()) {
    ClusterReport report;
    report.weight = cluster.weight;
    report.condition_term = condition_term(cluster.weight);
    report.pushout_weight = pushout_weights(cluster.points, cluster.vertex);
    report.size = cluster.points.size();
    report.vertex_theta = cluster.vertex.theta;
    pushed.add(condition_term(report.pushout_weight));
    cert.per_cluster.push_back(report);
  }
  cert.pushout_condition_sum = pushed.value();
  const auto dom = domination_check(decomp, n_grid);
  cert.max_violation = dom.max_violation;
  cert.domination_scale = dom.max_rhs;
  cert.dominated = dom.max_violation <= 1e-10 * std::max(dom.max_rhs, 1.0);
  return cert;
}

double radial_distance_ratio(double r, double t) {
  return (1.0 - 2.0 * r * std::cos(t) + r * r) / (1.0 - r * r);
}

double pushout_weights(std::span<const UnitDiscPoint> points, CirclePoint vertex) {
  const Complex rotate = std::conj(vertex.value());
  CompensatedSum acc;
  for (const auto& z : points) {
    const Complex zr = z.value() * rotate;
    const double r = std::abs(zr);
    const double t = std::atan2(zr.imag(), zr.real());
    const bool in_sector = t > -std::numbers::pi / 2.0 && t < std::numbers::pi / 2.0;
    const double s = std::abs(std::sin(t));
    if (in_sector && r > std::cos(t) / (1.0 + s)) {
      acc.add(2.0 * s);
    } else {
      acc.add(2.0 * std::norm(1.0 - zr) / (1.0 - r * r));
    }
  }
  return acc.value();
}

ShapiroShieldsSums shapiro_shields_sums(std::span<const double> moduli) {
  ShapiroShieldsSums sums;
  CompensatedSum blaschke, ss;
  bool infinite = false;
  for (double r : moduli) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("shapiro_shields_sums: need moduli in (0, 1)");
    blaschke.add(1.0 - r);
    const double log_term = std::log(1.0 / (1.0 - r));
    if (log_term <= 0.0)
      infinite = true;
    else
      ss.add(1.0 / log_term);
  }
  sums.blaschke_sum = blaschke.value();
  sums.ss_sum = infinite ? inf : ss.value();
  return sums;
}

ShapiroShieldsSums shapiro_shields_sums_log(std::span<const double> log_inv_gaps) {
  ShapiroShieldsSums sums;
  CompensatedSum blaschke, ss;
  for (double L : log_inv_gaps) {
    if (!(L > 0.0)) throw DomainError("shapiro_shields_sums_log: need log(1/(1-r)) > 0");
    blaschke.add(std::exp(-L));
    ss.add(1.0 / L);
  }
  sums.blaschke_sum = blaschke.value();
  sums.ss_sum = ss.value();
  return sums;
}

AtomicConditionSums atomic_condition_sums(std::span<const double> masses,
                                          std::optional<double> s) {
  AtomicConditionSums sums;
  CompensatedSum ss, ws;
  for (double a : masses) {
    if (!(a > 0.0)) throw DomainError("atomic_condition_sums: masses must be positive");
    ss.add(condition_term(a));
    if (s) ws.add(std::pow(a, *s));
  }
  sums.ss_atomic_sum = ss.value();
  if (s) sums.weighted_sum = ws.value();
  return sums;
}

AtomicConditionSums atomic_condition_sums_log(std::span<const double> log_inv_masses,
                                              std::optional<double> s) {
  AtomicConditionSums sums;
  CompensatedSum ss, ws;
  for (double L : log_inv_masses) {
    if (!(L > 0.0)) throw DomainError("atomic_condition_sums_log: need log(1/a) > 0");
    // log(1 + 1/a) = log(1 + e^L) = L + log1p(e^{-L})
    const double log1p_term = (L > 700.0) ? L : L + std::log1p(std::exp(-L));
    ss.add(1.0 / log1p_term);
    if (s) ws.add(std::exp(-L * (*s)));
  }
  sums.ss_atomic_sum = ss.value();
  if (s) sums.weighted_sum = ws.value();
  return sums;
}

InfiniteProductCriterion infinite_product_criterion(std::span<const double> gammas) {
  InfiniteProductCriterion result;
  CompensatedSum acc;
  double product = 1.0;
  for (double g : gammas) {
    if (!(g > 0.0 && g <= 1.0))
      throw DomainError("infinite_product_criterion: need gamma in (0, 1]");
    acc.add(1.0 - g);
    product *= g;
  }
  result.deficiency_sum = acc.value();
  result.product = product;
  result.lower_bound = std::max(0.0, 1.0 - result.deficiency_sum);
  return result;
}

CarlesonEntropy carleson_entropy(std::span<const double> thetas) {
  for (std::size_t i = 0; i + 1 < thetas.size(); ++i)
    if (!(thetas[i] > thetas[i + 1]))
      throw MalformedSequence("carleson_entropy: angles must be strictly decreasing");
  for (double t : thetas)
    if (!(t > 0.0 && t < 1.0))
      throw MalformedSequence("carleson_entropy: angles must lie in (0, 1)");
  CarlesonEntropy result;
  CompensatedSum raw, normalized;
  for (std::size_t i = 0; i + 1 < thetas.size(); ++i) {
    const double eps = thetas[i] - thetas[i + 1];
    raw.add(eps * std::log(1.0 / eps));
    const double tau = eps / two_pi;
    normalized.add(tau * std::log(1.0 / tau));
  }
  result.raw = raw.value();
  result.normalized = normalized.value();
  return result;
}

double carleson_logdist_integral(std::span<const CirclePoint> points, int n_nodes) {
  if (points.empty()) throw DomainError("carleson_logdist_integral: set must be nonempty");
  std::vector<double> angles;
  angles.reserve(points.size());
  for (const auto& p : points) angles.push_back(p.theta);
  auto integrand = [&](CirclePoint zeta) {
    const Complex zc = zeta.value();
    double d2 = inf;
    for (const auto& p : points) d2 = std::min(d2, std::norm(zc - p.value()));
    return -0.5 * std::log(d2);
  };
  RefinedResult result = integrate_circle_refined(integrand, angles, n_nodes);
  if (result.diverged)
    throw NonConvergence("carleson_logdist_integral: unexpected divergence at a set point");
  return result.value * two_pi;
}

std::vector<UnitDiscPoint> uniqueness_witness(std::span<const double> thetas) {
  std::vector<double> sorted(thetas.begin(), thetas.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!std::equal(sorted.begin(), sorted.end(), thetas.begin(), thetas.end()))
    std::cerr << "uniqueness_witness: input re-sorted to strictly decreasing order\n";
  if (sorted.size() < 2)
    throw MalformedSequence("uniqueness_witness: need at least two distinct angles");
  for (double t : sorted)
    if (!(t > 0.0 && t < 1.0))
      throw MalformedSequence("uniqueness_witness: angles must lie in (0, 1)");

  std::vector<UnitDiscPoint> witness;
  witness.reserve(sorted.size() - 1);
  for (std::size_t n = 0; n + 1 < sorted.size(); ++n) {
    const double tau = sorted[n] / two_pi;
    const double delta = (sorted[n] - sorted[n + 1]) / two_pi;
    const double s = 1.0 - delta;
    witness.push_back(UnitDiscPoint::polar(s, tau));
    // proof chain: |1 - w_n| <= |1 - e^{i tau}| + (1 - s) <= 2 tau <= |1 - e^{i theta_n}|
    const double lhs = std::abs(1.0 - witness.back().value());
    const double rhs = std::abs(1.0 - Complex(std::cos(sorted[n]), std::sin(sorted[n])));
    if (lhs > rhs + 1e-12)
      throw NumericalNegativity("uniqueness_witness: proof inequality violated numerically");
  }
  return witness;
}

PushoutComparison pushout_gamma_compare(std::span<const UnitDiscPoint> zeros,
                                        std::span<const double> radii,
                                        const DiagonalKernel& kernel) {
  if (zeros.size() != radii.size())
    throw DomainError("pushout_gamma_compare: need one radius per point");
  std::vector<UnitDiscPoint> pushed;
  pushed.reserve(zeros.size());
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    const double r = zeros[i].abs();
    if (!(radii[i] >= r && radii[i] < 1.0))
      throw DomainError("pushout_gamma_compare: radii must lie in [|z_n|, 1)");
    const double theta = std::atan2(zeros[i].im, zeros[i].re);
    pushed.push_back(UnitDiscPoint::polar(radii[i], theta));
  }
  PushoutComparison result;
  result.gamma_z = gamma_extremal(kernel, ConstraintSet::at_points(zeros)).gamma;
  result.gamma_w = gamma_extremal(kernel, ConstraintSet::at_points(pushed)).gamma;
  result.ok = result.gamma_w >= result.gamma_z - 1e-10;
  return result;
}

ExtremalPoissonCheck extremal_poisson_check(std::span<const UnitDiscPoint> zeros,
                                            double r, double s, double t, int n_nodes) {
  if (!(0.0 < r && r <= s && s < 1.0))
    throw DomainError("extremal_poisson_check: need 0 < r <= s < 1");
  const auto kernel = DiagonalKernel::dirichlet();
  const auto constraints = ConstraintSet::at_points(zeros);
  const auto cert = gamma_extremal(kernel, constraints);
  auto density = [&](CirclePoint zeta) {
    return std::norm(extremal_eval_boundary(kernel, cert, constraints, zeta));
  };
  ExtremalPoissonCheck check;
  check.lhs = poisson_integral(density, UnitDiscPoint::polar(s, t), n_nodes);
  check.rhs = poisson_integral(density, UnitDiscPoint::polar(r, t), n_nodes) + (1.0 - r / s);
  check.ok = check.lhs <= check.rhs + 1e-8;
  return check;
}

ClusterDecomposition greedy_partition(std::span<const UnitDiscPoint> points, int max_clusters) {
  if (points.empty()) throw DomainError("greedy_partition: point set is empty");
  if (max_clusters < 1) throw DomainError("greedy_partition: need max_clusters >= 1");

  // Start from singletons; repeatedly take the merge that most decreases
  // (or least increases) the condition sum; remember the best decomposition
  // seen with at most max_clusters clusters.
  std::vector<std::vector<UnitDiscPoint>> groups;
  for (const auto& z : points) groups.push_back({z});

  auto group_term = [](const std::vector<UnitDiscPoint>& group) {
    const CirclePoint vertex = mean_direction(group);
    return condition_term(cluster_weight(group, vertex));
  };

  auto snapshot = [&](const std::vector<std::vector<UnitDiscPoint>>& gs) {
    std::vector<Cluster> clusters;
    clusters.reserve(gs.size());
    for (const auto& g : gs) clusters.push_back({g, mean_direction(g), 0.0});
    return ClusterDecomposition(std::move(clusters));
  };

  std::optional<ClusterDecomposition> best;
  auto consider = [&](const std::vector<std::vector<UnitDiscPoint>>& gs) {
    if (static_cast<int>(gs.size()) > max_clusters) return;
    ClusterDecomposition candidate = snapshot(gs);
    if (!best || candidate.condition_sum() < best->condition_sum()) best = std::move(candidate);
  };

  consider(groups);
  while (groups.size() > 1) {
    std::vector<double> terms(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) terms[i] = group_term(groups[i]);
    std::size_t best_i = 0, best_j = 1;
    double best_delta = inf;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        std::vector<UnitDiscPoint> merged = groups[i];
        merged.insert(merged.end(), groups[j].begin(), groups[j].end());
        const double delta = group_term(merged) - terms[i] - terms[j];
        if (delta < best_delta) {
          best_delta = delta;
          best_i = i;
          best_j = j;
        }
      }
    }
    groups[best_i].insert(groups[best_i].end(), groups[best_j].begin(), groups[best_j].end());
    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(best_j));
    consider(groups);
  }
  return *best;
}

}  // namespace rkdisc
