#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rkdisc/disc.hpp"
#include "rkdisc/kernels.hpp"

namespace rkdisc {

/// Stolz angle Omega_K(lambda) = { z : |lambda - z| <= K (1 - |z|) }.
struct StolzAngle {
  CirclePoint vertex;
  double aperture = 2.0;  // K > 1
};

bool stolz_contains(const StolzAngle& angle, UnitDiscPoint z);

/// a = 2 sum_z |lambda - z|^2 / (1 - |z|^2) for a cluster with vertex lambda.
double cluster_weight(std::span<const UnitDiscPoint> points, CirclePoint vertex);

struct Cluster {
  std::vector<UnitDiscPoint> points;
  CirclePoint vertex;
  double weight = 0.0;  // a_k, recomputed at construction
};

/// A partition of a point multiset into vertex-tagged clusters, carrying the
/// weights a_k and the condition sum  sum_k 1/log(1 + 1/a_k).
class ClusterDecomposition {
public:
  ClusterDecomposition() = default;
  explicit ClusterDecomposition(std::vector<Cluster> clusters);

  const std::vector<Cluster>& clusters() const { return clusters_; }
  double condition_sum() const { return condition_sum_; }
  std::vector<UnitDiscPoint> all_points() const;

private:
  std::vector<Cluster> clusters_;
  double condition_sum_ = 0.0;
};

struct DominationResult {
  double max_violation = 0.0;  // max over the grid of (lhs - rhs)
  double max_rhs = 0.0;        // scale for relative tolerance
};

/// Grid check of sum_{z} (1-|z|^2)/|zeta - z|^2 <= sum_k 2 a_k /|zeta - lambda_k|^2
/// over equispaced angles offset half a step (and nudged off any vertex).
DominationResult domination_check(const ClusterDecomposition& decomp, int n_grid = 8192);

struct ClusterReport {
  double weight = 0.0;
  double condition_term = 0.0;
  double pushout_weight = 0.0;
  std::size_t size = 0;
  double vertex_theta = 0.0;
};

struct DecompCertificate {
  double condition_sum = 0.0;
  double pushout_condition_sum = 0.0;
  std::vector<ClusterReport> per_cluster;
  bool dominated = false;
  double max_violation = 0.0;
  double domination_scale = 0.0;
};

DecompCertificate decomp_certificate(const ClusterDecomposition& decomp, int n_grid = 8192);

/// The refined weight obtained by pulling each point radially to the
/// minimizer of g(r) = |1 - r e^{it}|^2/(1 - r^2) (vertex rotated to 1):
/// points with t in (-pi/2, pi/2) and |z| > cos t/(1 + |sin t|) contribute
/// 2|sin t|, the rest keep their plain term. Never exceeds cluster_weight.
double pushout_weights(std::span<const UnitDiscPoint> points, CirclePoint vertex);

/// g(r) = (1 - 2 r cos t + r^2)/(1 - r^2); min over [0,1) is |sin t|,
/// attained at r = cos t/(1 + |sin t|). Exposed for the grid-search oracle.
double radial_distance_ratio(double r, double t);

struct ShapiroShieldsSums {
  double blaschke_sum = 0.0;  // sum (1 - r_n)
  double ss_sum = 0.0;        // sum 1/log(1/(1 - r_n)); +inf marker on bad terms
};
ShapiroShieldsSums shapiro_shields_sums(std::span<const double> moduli);
/// Same sums with the gaps 1 - r_n given as L_n = log(1/(1 - r_n)), usable
/// when 1 - r_n underflows (terms are then 1/L_n and e^{-L_n}).
ShapiroShieldsSums shapiro_shields_sums_log(std::span<const double> log_inv_gaps);

struct AtomicConditionSums {
  double ss_atomic_sum = 0.0;              // sum 1/log(1 + 1/a_n)
  std::optional<double> weighted_sum;      // sum a_n^s when s is given
};
AtomicConditionSums atomic_condition_sums(std::span<const double> masses,
                                          std::optional<double> s = std::nullopt);
/// Masses given as L_n = log(1/a_n).
AtomicConditionSums atomic_condition_sums_log(std::span<const double> log_inv_masses,
                                              std::optional<double> s = std::nullopt);

struct InfiniteProductCriterion {
  double deficiency_sum = 0.0;  // sum (1 - gamma_n)
  double product = 1.0;         // prod gamma_n
  double lower_bound = 0.0;     // max(0, 1 - deficiency_sum) <= product
};
InfiniteProductCriterion infinite_product_criterion(std::span<const double> gammas);

struct CarlesonEntropy {
  double raw = 0.0;         // sum eps_n log(1/eps_n), eps_n = theta_n - theta_{n+1}
  double normalized = 0.0;  // gaps normalized by 2 pi
};
CarlesonEntropy carleson_entropy(std::span<const double> thetas);

/// int_T log(1/dist(zeta, E)) |dzeta| with chordal distance to the finite
/// set E; always finite, the log singularities at points of E are resolved
/// by dyadic refinement.
double carleson_logdist_integral(std::span<const CirclePoint> points, int n_nodes = 2048);

/// w_n = (1 - delta_n) e^{i tau_n} with tau_n = theta_n/(2 pi) and
/// delta_n = tau_n - tau_{n+1}; asserts |1 - w_n| <= |1 - e^{i theta_n}|.
/// Input is sorted decreasing and deduplicated if needed.
std::vector<UnitDiscPoint> uniqueness_witness(std::span<const double> thetas);

struct PushoutComparison {
  double gamma_z = 0.0;
  double gamma_w = 0.0;
  bool ok = false;  // gamma_w >= gamma_z - 1e-10
};
/// gamma before and after replacing |z_n| by radii[n] (same arguments).
/// The monotonicity conclusion is a theorem for the Dirichlet kernel only;
/// other kernels are allowed for exploration.
PushoutComparison pushout_gamma_compare(std::span<const UnitDiscPoint> zeros,
                                        std::span<const double> radii,
                                        const DiagonalKernel& kernel);

struct ExtremalPoissonCheck {
  double lhs = 0.0;  // P[|phi|^2](s e^{it})
  double rhs = 0.0;  // P[|phi|^2](r e^{it}) + (1 - r/s)
  bool ok = false;
};
/// phi is the Dirichlet extremal function for the order-0 constraints at Z.
ExtremalPoissonCheck extremal_poisson_check(std::span<const UnitDiscPoint> zeros,
                                            double r, double s, double t, int n_nodes = 4096);

/// Greedy agglomerative search over partitions: clusters merge while the
/// condition sum improves, scanning all cluster counts down to 1 and keeping
/// the best decomposition with at most max_clusters clusters. Vertices are
/// the normalized mean boundary directions.
ClusterDecomposition greedy_partition(std::span<const UnitDiscPoint> points, int max_clusters);

}  // namespace rkdisc
