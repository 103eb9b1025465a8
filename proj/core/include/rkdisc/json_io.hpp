#pragma once

#include <string>
#include <vector>

#include "rkdisc/conditions.hpp"
#include "rkdisc/gramian.hpp"
#include "rkdisc/inner.hpp"
#include "rkdisc/kernels.hpp"

namespace rkdisc {

/// Kernel from {"family": "dirichlet"|"hardy"|"appendix_a", "a": 0.01}
/// or {"family": "weighted_ds", "s": 0.5}; plain family names also accepted.
DiagonalKernel parse_kernel_json(const std::string& text);

/// Constraints from [{"r": 0.5, "theta": 0.0, "order": 0}, ...] (polar) or
/// [{"re": .., "im": .., "order": ..}, ...]; "order" defaults to 0.
ConstraintSet parse_constraints_json(const std::string& text);

/// Measure from [{"theta": 0.0, "mass": 0.25}, ...].
AtomicMeasure parse_measure_json(const std::string& text);

/// Optional partition: [[{point}, ...], ...] of constraint-style points,
/// clusters tagged with {"vertex_theta": ..} or given mean-direction vertices.
ClusterDecomposition parse_partition_json(const std::string& text);

std::string certificate_to_json(const GammaCertificate& cert);
std::string decomp_certificate_to_json(const DecompCertificate& cert);

}  // namespace rkdisc
