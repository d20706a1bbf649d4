#include "mcda/micmac.hpp"

namespace mcda {

std::string_view cluster_name(Cluster c) {
  switch (c) {
    case Cluster::Autonomous:
      return "Autonomous";
    case Cluster::Dependent:
      return "Dependent";
    case Cluster::Linkage:
      return "Linkage";
    case Cluster::Independent:
      return "Independent";
  }
  return "?";
}

Cluster cluster_from_name(std::string_view name) {
  if (name == "Autonomous") return Cluster::Autonomous;
  if (name == "Dependent") return Cluster::Dependent;
  if (name == "Linkage") return Cluster::Linkage;
  if (name == "Independent") return Cluster::Independent;
  throw DomainError(detail::cat("unknown cluster '", name, "'"));
}

MicmacClassification classify(const PowerSummary& powers, int n) {
  if (powers.driving.size() != powers.dependence.size() ||
      static_cast<int>(powers.driving.size()) != n) {
    throw DomainError("power summary does not match the factor count");
  }
  MicmacClassification result;
  result.threshold = n / 2.0;
  result.cluster.reserve(powers.driving.size());
  result.points.reserve(powers.driving.size());
  for (std::size_t i = 0; i < powers.driving.size(); ++i) {
    const int driving = powers.driving[i];
    const int dependence = powers.dependence[i];
    if (driving < 1 || driving > n || dependence < 1 || dependence > n) {
      throw DomainError(detail::cat("factor ", i + 1, " has powers (", driving, ", ", dependence,
                                    ") outside [1, ", n, "]"));
    }
    const bool high_driving = driving > result.threshold;
    const bool high_dependence = dependence > result.threshold;
    Cluster c = Cluster::Autonomous;
    if (high_driving && high_dependence) {
      c = Cluster::Linkage;
    } else if (high_driving) {
      c = Cluster::Independent;
    } else if (high_dependence) {
      c = Cluster::Dependent;
    }
    result.cluster.push_back(c);
    result.points.emplace_back(dependence, driving);
  }
  return result;
}

}  // namespace mcda
