#pragma once

#include <vector>

#include "rkdisc/disc.hpp"

namespace rkdisc {

/// gamma_a(t) = sup{ |f(0)| : f(-r) = f(t) = 0, ||f||_{H_a} <= 1 } for the
/// appendix_a kernel family. Computed by the general Gramian path; the
/// rank-deficient case a = 0, t = r goes through the pseudo-inverse.
double appendix_gamma(double a, double r, double t);

/// The explicit rational-surd curve for a = 0.01, r = 0.5:
///   t sqrt(3881196 t^4 - 4038012 t^3 + 1089495 t^2 - 40788 t + 158812)
///   / (40 sqrt(39501 t^2 - 39600 t + 10300)).
double figure_formula(double t);

struct NonmonotonicityWitness {
  double t1 = 0.0, t2 = 0.0;
  double gamma1 = 0.0, gamma2 = 0.0;
};

/// Finds t1 < t2 with gamma_a(t1) > gamma_a(t2) + 1e-6 by a coarse scan
/// followed by local refinement near t = r. Throws NotFound when the curve
/// is monotone at this a (expected for large a).
NonmonotonicityWitness nonmonotonicity_witness(double a, double r);

struct CurveSample {
  double t = 0.0;
  double gamma = 0.0;
};

std::vector<CurveSample> appendix_curve(double a, double r, double t_min, double t_max,
                                        double step);

}  // namespace rkdisc
