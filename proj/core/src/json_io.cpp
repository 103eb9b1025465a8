#include "rkdisc/json_io.hpp"

#include <json.hpp>

#include "rkdisc/errors.hpp"

namespace rkdisc {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DomainError(std::string("malformed JSON for ") + what);
  return j;
}

/// Type errors from field access surface as input errors, not internal ones.
template <class F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed JSON for ") + what + ": " + e.what());
  }
}

UnitDiscPoint point_from_json(const json& item) {
  if (item.contains("r") || item.contains("theta")) {
    const double r = item.value("r", 0.0);
    const double theta = item.value("theta", 0.0);
    return UnitDiscPoint::polar(r, theta);
  }
  return UnitDiscPoint(item.value("re", 0.0), item.value("im", 0.0));
}

}  // namespace

DiagonalKernel parse_kernel_json(const std::string& text) {
  return guarded("kernel", [&] {
  std::string family;
  double a = 0.0, s = 0.5;
  bool have_a = false, have_s = false;
  if (!text.empty() && text.front() == '{') {
    json j = parse(text, "kernel");
    family = j.value("family", "");
    if (j.contains("a")) {
      a = j["a"].get<double>();
      have_a = true;
    }
    if (j.contains("s")) {
      s = j["s"].get<double>();
      have_s = true;
    }
  } else {
    family = text;
  }
  if (family == "dirichlet") return DiagonalKernel::dirichlet();
  if (family == "hardy") return DiagonalKernel::hardy();
  if (family == "appendix_a") {
    if (!have_a) throw DomainError("kernel appendix_a requires parameter \"a\"");
    return DiagonalKernel::appendix_a(a);
  }
  if (family == "weighted_ds") {
    if (!have_s) throw DomainError("kernel weighted_ds requires parameter \"s\"");
    return DiagonalKernel::weighted_ds(s);
  }
  throw DomainError("unknown kernel family: " + family);
  });
}

ConstraintSet parse_constraints_json(const std::string& text) {
  return guarded("constraints", [&] {
  json j = parse(text, "constraints");
  if (!j.is_array()) throw DomainError("constraints must be a JSON array");
  std::vector<Constraint> entries;
  for (const auto& item : j) {
    Constraint c;
    c.point = point_from_json(item);
    c.order = item.value("order", 0);
    entries.push_back(c);
  }
  return ConstraintSet(std::move(entries));
  });
}

AtomicMeasure parse_measure_json(const std::string& text) {
  return guarded("measure", [&] {
  json j = parse(text, "measure");
  if (!j.is_array()) throw DomainError("measure must be a JSON array");
  std::vector<Atom> atoms;
  for (const auto& item : j) {
    Atom atom;
    atom.location = CirclePoint(item.value("theta", 0.0));
    atom.mass = item.value("mass", 0.0);
    atoms.push_back(atom);
  }
  return AtomicMeasure(std::move(atoms));
  });
}

ClusterDecomposition parse_partition_json(const std::string& text) {
  return guarded("partition", [&] {
  json j = parse(text, "partition");
  if (!j.is_array()) throw DomainError("partition must be a JSON array of clusters");
  std::vector<Cluster> clusters;
  for (const auto& group : j) {
    Cluster cluster;
    const json* members = &group;
    if (group.is_object()) {
      if (!group.contains("points")) throw DomainError("cluster object requires \"points\"");
      members = &group["points"];
      if (group.contains("vertex_theta")) {
        cluster.vertex = CirclePoint(group["vertex_theta"].get<double>());
      }
    }
    for (const auto& item : *members) cluster.points.push_back(point_from_json(item));
    if (cluster.points.empty()) throw DomainError("partition clusters must be nonempty");
    if (!group.is_object() || !group.contains("vertex_theta")) {
      Complex sum = 0.0;
      for (const auto& z : cluster.points) {
        const double r = z.abs();
        if (!(r > 0.0)) throw DomainError("partition points must be nonzero");
        sum += z.value() / r;
      }
      cluster.vertex = CirclePoint(std::atan2(sum.imag(), sum.real()));
    }
    clusters.push_back(std::move(cluster));
  }
  return ClusterDecomposition(std::move(clusters));
  });
}

std::string certificate_to_json(const GammaCertificate& cert) {
  json j;
  j["gamma"] = cert.gamma;
  j["rank"] = cert.rank;
  j["condition_estimate"] = cert.condition_estimate;
  j["ill_conditioned"] = cert.ill_conditioned;
  j["projection_norm_sq"] = cert.projection_norm_sq;
  json coeffs = json::array();
  for (Eigen::Index i = 0; i < cert.coeffs.size(); ++i)
    coeffs.push_back({{"re", cert.coeffs(i).real()}, {"im", cert.coeffs(i).imag()}});
  j["coeffs"] = coeffs;
  return j.dump(2);
}

std::string decomp_certificate_to_json(const DecompCertificate& cert) {
  json j;
  j["condition_sum"] = cert.condition_sum;
  j["pushout_condition_sum"] = cert.pushout_condition_sum;
  j["dominated"] = cert.dominated;
  j["domination_max_violation"] = cert.max_violation;
  j["domination_scale"] = cert.domination_scale;
  json clusters = json::array();
  for (const auto& c : cert.per_cluster) {
    clusters.push_back({{"size", c.size},
                        {"vertex_theta", c.vertex_theta},
                        {"a_k", c.weight},
                        {"condition_term", c.condition_term},
                        {"pushout_a_k", c.pushout_weight}});
  }
  j["clusters"] = clusters;
  return j.dump(2);
}

}  // namespace rkdisc
