#include "rkdisc/suites.hpp"

#include <cmath>
#include <cstdio>

#include "rkdisc/conditions.hpp"
#include "rkdisc/gramian.hpp"
#include "rkdisc/rng.hpp"

namespace rkdisc::suites {

namespace {

std::string format(const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

/// Random distinct points, pairwise separated so Gramians stay well
/// conditioned enough for the stated tolerances.
std::vector<UnitDiscPoint> random_points(Rng& rng, int count, double r_lo, double r_hi) {
  std::vector<UnitDiscPoint> points;
  while (static_cast<int>(points.size()) < count) {
    UnitDiscPoint candidate = rng.disc_point(r_lo, r_hi);
    bool separated = true;
    for (const auto& p : points)
      if (std::abs(p.value() - candidate.value()) < 0.05) separated = false;
    if (separated) points.push_back(candidate);
  }
  return points;
}

}  // namespace

SuiteResult run_pushout(const DiagonalKernel& kernel, std::uint64_t seed, int trials) {
  SuiteResult result;
  result.name = "pushout (" + to_string(kernel.family()) + ")";
  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    ++result.trials;
    std::vector<UnitDiscPoint> zeros;
    std::vector<double> radii;
    if (kernel.family() == KernelFamily::appendix_a) {
      // The even-weighted kernel's documented counter-instance: zeros at
      // {-1/2, 1/2}, the positive one pushed outward.
      zeros = {UnitDiscPoint(-0.5, 0.0), UnitDiscPoint(0.5, 0.0)};
      radii = {0.5, 0.55};
    } else {
      zeros = random_points(rng, rng.uniform_int(1, 4), 0.1, 0.8);
      for (const auto& z : zeros) radii.push_back(rng.uniform(z.abs(), 0.95));
    }
    const auto cmp = pushout_gamma_compare(zeros, radii, kernel);
    if (!cmp.ok) {
      ++result.failures;
      result.counterexamples.push_back(
          format("trial %d: gamma_Z=%.12f gamma_W=%.12f", trial, cmp.gamma_z, cmp.gamma_w));
    }
  }
  return result;
}

SuiteResult run_extremal_poisson(std::uint64_t seed, int trials) {
  SuiteResult result;
  result.name = "extremal-poisson";
  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    ++result.trials;
    const auto zeros = random_points(rng, rng.uniform_int(1, 3), 0.1, 0.8);
    const double r = rng.uniform(0.05, 0.9);
    const double s = rng.uniform(r, 0.95);
    const double t = rng.uniform(0.0, two_pi);
    const auto check = extremal_poisson_check(zeros, r, s, t, 8192);
    if (!check.ok) {
      ++result.failures;
      result.counterexamples.push_back(
          format("trial %d: lhs=%.12f rhs=%.12f r=%.4f s=%.4f t=%.4f", trial, check.lhs,
                 check.rhs, r, s, t));
    }
  }
  return result;
}

SuiteResult run_domination(std::uint64_t seed, int trials) {
  SuiteResult result;
  result.name = "domination";
  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    ++result.trials;
    const int n_clusters = rng.uniform_int(1, 4);
    std::vector<Cluster> clusters;
    for (int k = 0; k < n_clusters; ++k) {
      Cluster cluster;
      cluster.vertex = CirclePoint(rng.uniform(0.0, two_pi));
      const int n_points = rng.uniform_int(1, 5);
      for (int i = 0; i < n_points; ++i) {
        // points loosely gathered around the vertex direction
        const double r = rng.uniform(0.3, 0.95);
        const double theta = cluster.vertex.theta + rng.uniform(-0.5, 0.5);
        cluster.points.push_back(UnitDiscPoint::polar(r, theta));
      }
      clusters.push_back(std::move(cluster));
    }
    const ClusterDecomposition decomp(std::move(clusters));
    const auto dom = domination_check(decomp, 8192);
    if (dom.max_violation > 1e-10 * std::max(dom.max_rhs, 1.0)) {
      ++result.failures;
      result.counterexamples.push_back(
          format("trial %d: max_violation=%.3e scale=%.3e", trial, dom.max_violation,
                 dom.max_rhs));
    }
  }
  return result;
}

SuiteResult run_hardy_oracle(std::uint64_t seed, int trials) {
  SuiteResult result;
  result.name = "hardy-product-oracle";
  Rng rng(seed);
  const auto kernel = DiagonalKernel::hardy();
  for (int trial = 0; trial < trials; ++trial) {
    ++result.trials;
    const auto points = random_points(rng, rng.uniform_int(1, 4), 0.1, 0.9);
    double product = 1.0;
    for (const auto& z : points) product *= z.abs();
    const double gamma = gamma_extremal(kernel, ConstraintSet::at_points(points)).gamma;
    if (std::abs(gamma - product) > 1e-10) {
      ++result.failures;
      result.counterexamples.push_back(
          format("trial %d: gamma=%.14f product=%.14f", trial, gamma, product));
    }
  }
  return result;
}

SuiteResult run_bruteforce_convergence(std::uint64_t seed, int trials, int degree) {
  SuiteResult result;
  result.name = "bruteforce-oracle";
  Rng rng(seed);
  const auto kernel = DiagonalKernel::dirichlet();
  for (int trial = 0; trial < trials; ++trial) {
    ++result.trials;
    const auto points = random_points(rng, rng.uniform_int(1, 4), 0.1, 0.8);
    const auto constraints = ConstraintSet::at_points(points);
    const double gamma = gamma_extremal(kernel, constraints).gamma;
    double previous = 0.0;
    bool monotone = true;
    for (int d = 32; d <= degree; d *= 2) {
      const double value = gamma_bruteforce_poly(kernel, constraints, d);
      if (value < previous - 1e-12) monotone = false;
      previous = value;
    }
    const double gap = std::abs(previous - gamma);
    if (!monotone || gap > 1e-8) {
      ++result.failures;
      result.counterexamples.push_back(
          format("trial %d: gap=%.3e monotone=%d", trial, gap, monotone ? 1 : 0));
    }
  }
  return result;
}

SuiteResult run_two_point_consistency(std::uint64_t seed, int trials) {
  SuiteResult result;
  result.name = "two-point-consistency";
  Rng rng(seed);
  const DiagonalKernel kernels[] = {DiagonalKernel::dirichlet(), DiagonalKernel::hardy(),
                                    DiagonalKernel::appendix_a(0.1)};
  for (int trial = 0; trial < trials; ++trial) {
    ++result.trials;
    const auto& kernel = kernels[trial % 3];
    const auto points = random_points(rng, 2, 0.1, 0.85);
    const double via_formula = gamma_two_point(kernel, points[0], points[1]);
    const double via_gramian =
        gamma_extremal(kernel, ConstraintSet::at_points(points)).gamma;
    if (std::abs(via_formula - via_gramian) > 1e-12) {
      ++result.failures;
      result.counterexamples.push_back(format("trial %d: formula=%.15f gramian=%.15f", trial,
                                              via_formula, via_gramian));
    }
  }
  return result;
}

}  // namespace rkdisc::suites
