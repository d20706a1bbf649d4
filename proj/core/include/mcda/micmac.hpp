#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "mcda/ism.hpp"

namespace mcda {

/// Quadrant of the driving-power / dependence-power plane.
enum class Cluster { Autonomous, Dependent, Linkage, Independent };

std::string_view cluster_name(Cluster c);
Cluster cluster_from_name(std::string_view name);

/// Per-factor cluster assignment plus the scatter points (dependence,
/// driving) and the midpoint threshold used, recorded for reproducibility.
struct MicmacClassification {
  std::vector<Cluster> cluster;
  double threshold = 0.0;
  std::vector<std::pair<int, int>> points;  // (dependence, driving)
};

/// Classifies factors with the midpoint threshold t = n/2: a power counts as
/// high only when strictly above t. Powers outside [1, n] raise DomainError.
MicmacClassification classify(const PowerSummary& powers, int n);

}  // namespace mcda
