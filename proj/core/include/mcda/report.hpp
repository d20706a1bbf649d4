#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcda/io.hpp"
#include "mcda/micmac.hpp"

namespace mcda::report {

/// Everything the structural-analysis stage produced.
struct IsmStage {
  std::vector<std::string> codes;
  std::vector<std::string> labels;  // optional, aligned with codes
  MarkedMatrix initial{1};
  MarkedMatrix filled{1};
  PowerSummary powers;
  LevelPartition levels;
  ConicalMatrix conical;
  std::vector<DigraphEdge> edges;
  ClosureMode closure = ClosureMode::SinglePass;
  ExtractionMode extraction = ExtractionMode::PaperCompat;
};

struct MicmacStage {
  std::vector<std::string> codes;
  MicmacClassification classification;
  /// Reference clusters (e.g. a published narrative) to compare against.
  std::map<std::string, std::optional<Cluster>> reference;
};

struct TopsisStage {
  FuzzyDecisionMatrix normalized;
  FuzzyDecisionMatrix weighted;
  IdealSolutions ideals;
  std::vector<std::vector<double>> to_positive;  // per-criterion distances
  std::vector<std::vector<double>> to_negative;
  SeparationMeasures separations;
  ClosenessRanking ranking;
  std::map<std::string, std::string> category_of;
  std::vector<std::string> alternative_labels;  // optional, aligned with rows
};

/// Tables accumulated by a run; absent stages are skipped by the emitter.
struct ReportBundle {
  std::string study_name = "study";
  std::optional<IsmStage> ism;
  std::optional<MicmacStage> micmac;
  std::optional<TopsisStage> topsis;
  std::vector<std::string> notes;
};

/// Writes the bundle under `dir` and returns the emitted paths in a fixed
/// order. A full bundle produces eleven files:
///   reachability.csv closure.csv levels.csv conical.csv digraph.dot
///   micmac.csv normalized.csv weighted.csv separations.csv closeness.csv
///   report.md
/// Matrix CSVs carry full-precision values; report.md rounds to three
/// decimals. Reruns over identical inputs are byte-identical.
std::vector<std::filesystem::path> emit_reports(const ReportBundle& bundle,
                                                const std::filesystem::path& dir);

/// digraph.dot content: one rank-group per level, one edge per plain 1-cell.
std::string render_digraph(const IsmStage& ism);

/// report.md content.
std::string render_markdown(const ReportBundle& bundle);

}  // namespace mcda::report
