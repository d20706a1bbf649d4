#pragma once

#include "mcda/io.hpp"
#include "mcda/report.hpp"

namespace mcda::pipeline {

/// Parsed and cross-checked study inputs.
struct StudyData {
  std::vector<io::Factor> categories;
  std::vector<io::Factor> motivators;
  io::SsimInput ssim;
  io::DecisionInput decision;
  std::map<std::string, Orientation> orientations;
  std::map<std::string, std::string> category_map;
  std::map<std::string, std::optional<Cluster>> micmac_reference;
  std::vector<int> conical_order;  // indices into ssim codes; empty = default
};

/// Loads every input named by the config and validates that the files agree
/// with each other (codes, coverage, conical order).
StudyData load_study(const io::StudyConfig& config);

/// Runs every stage over the loaded inputs with the configured modes.
report::ReportBundle run_study(const io::StudyConfig& config, const StudyData& data);

/// load_study + run_study.
report::ReportBundle run_study(const io::StudyConfig& config);

}  // namespace mcda::pipeline
