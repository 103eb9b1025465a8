#include "rkdisc/appendix.hpp"

#include <algorithm>
#include <cmath>

#include "rkdisc/errors.hpp"
#include "rkdisc/gramian.hpp"

namespace rkdisc {

double appendix_gamma(double a, double r, double t) {
  if (!(a >= 0.0 && a < 1.0)) throw DomainError("appendix_gamma: need a in [0, 1)");
  if (!(r > 0.0 && r < 1.0 && t > 0.0 && t < 1.0))
    throw DomainError("appendix_gamma: need r, t in (0, 1)");
  const auto kernel = DiagonalKernel::appendix_a(a);
  const UnitDiscPoint points[] = {UnitDiscPoint(-r, 0.0), UnitDiscPoint(t, 0.0)};
  return gamma_extremal(kernel, ConstraintSet::at_points(points)).gamma;
}

double figure_formula(double t) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("figure_formula: need t in (0, 1)");
  const double num_radicand =
      3881196.0 * t * t * t * t - 4038012.0 * t * t * t + 1089495.0 * t * t -
      40788.0 * t + 158812.0;
  const double den_radicand = 39501.0 * t * t - 39600.0 * t + 10300.0;
  if (num_radicand < 0.0 || den_radicand <= 0.0)
    throw DomainError("figure_formula: radicand negative");
  return t * std::sqrt(num_radicand) / (40.0 * std::sqrt(den_radicand));
}

NonmonotonicityWitness nonmonotonicity_witness(double a, double r) {
  constexpr double margin = 1e-6;

  // Coarse scan, with t = r included exactly (the a = 0 curve has its jump
  // there); track the best drop from a running maximum.
  std::vector<double> grid;
  for (double t = 0.005; t < 0.9995; t += 0.005) grid.push_back(t);
  grid.push_back(r);
  std::sort(grid.begin(), grid.end());

  double run_max = -1.0, run_max_t = 0.0;
  NonmonotonicityWitness best;
  double best_drop = -1.0;
  for (double t : grid) {
    const double g = appendix_gamma(a, r, t);
    if (g > run_max) {
      run_max = g;
      run_max_t = t;
    } else if (run_max - g > best_drop) {
      best_drop = run_max - g;
      best = {run_max_t, t, run_max, g};
    }
  }
  if (best_drop <= margin)
    throw NotFound("nonmonotonicity_witness: curve is monotone at this a");

  // Refine t1 by a fine scan around the recorded maximum.
  const double lo = std::max(1e-4, best.t1 - 0.005);
  const double hi = std::min(1.0 - 1e-4, best.t1 + 0.005);
  for (int k = 0; k <= 200; ++k) {
    const double t = lo + (hi - lo) * k / 200.0;
    const double g = appendix_gamma(a, r, t);
    if (g > best.gamma1) {
      best.gamma1 = g;
      best.t1 = t;
    }
  }
  return best;
}

std::vector<CurveSample> appendix_curve(double a, double r, double t_min, double t_max,
                                        double step) {
  if (!(t_min > 0.0 && t_max < 1.0 && t_min <= t_max))
    throw DomainError("appendix_curve: need 0 < t_min <= t_max < 1");
  if (!(step > 0.0)) throw DomainError("appendix_curve: need step > 0");
  std::vector<CurveSample> samples;
  const int n = static_cast<int>(std::floor((t_max - t_min) / step + 0.5));
  for (int k = 0; k <= n; ++k) {
    const double t = t_min + k * step;
    if (t >= 1.0) break;
    samples.push_back({t, appendix_gamma(a, r, t)});
  }
  return samples;
}

}  // namespace rkdisc
