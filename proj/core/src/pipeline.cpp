#include "mcda/pipeline.hpp"

#include <algorithm>

namespace mcda::pipeline {

StudyData load_study(const io::StudyConfig& config) {
  StudyData data{.categories = io::parse_factors(io::read_file(config.categories),
                                                 config.categories.string()),
                 .motivators = io::parse_factors(io::read_file(config.motivators),
                                                 config.motivators.string()),
                 .ssim = io::load_ssim(config.ssim),
                 .decision = io::load_decision_matrix(
                     config.ratings, {.allow_unordered_cells = config.allow_unordered_cells}),
                 .orientations = io::load_orientations(config.orientations),
                 .category_map = io::load_category_map(config.category_map),
                 .micmac_reference = {},
                 .conical_order = {}};

  if (config.weights) {
    auto override_input = io::load_decision_matrix(
        *config.weights, {.allow_unordered_cells = config.allow_unordered_cells});
    if (override_input.matrix.criteria != data.decision.matrix.criteria) {
      throw ParseError(detail::cat(config.weights->string(),
                                   ": weight criteria do not match the rating matrix"));
    }
    data.decision.weights = std::move(override_input.weights);
  }
  if (config.micmac_reference) {
    data.micmac_reference = io::parse_cluster_reference(io::read_file(*config.micmac_reference),
                                                        config.micmac_reference->string());
  }

  auto category_codes = [&] {
    std::vector<std::string> codes;
    codes.reserve(data.categories.size());
    for (const auto& f : data.categories) codes.push_back(f.code);
    return codes;
  }();

  if (data.ssim.codes != category_codes) {
    throw ParseError(detail::cat(config.ssim.string(),
                                 ": factor codes do not match the categories file"));
  }
  if (data.decision.matrix.criteria != category_codes) {
    throw ParseError(detail::cat(config.ratings.string(),
                                 ": criterion codes do not match the categories file"));
  }
  for (const auto& code : category_codes) {
    if (!data.orientations.contains(code)) {
      throw ParseError(detail::cat(config.orientations.string(),
                                   ": missing orientation for criterion '", code, "'"));
    }
  }
  for (const auto& alt : data.decision.matrix.alternatives) {
    const auto it = data.category_map.find(alt);
    if (it == data.category_map.end()) {
      throw ParseError(detail::cat(config.category_map.string(),
                                   ": missing category for motivator '", alt, "'"));
    }
    if (std::find(category_codes.begin(), category_codes.end(), it->second) ==
        category_codes.end()) {
      throw ParseError(detail::cat(config.category_map.string(), ": motivator '", alt,
                                   "' maps to unknown category '", it->second, "'"));
    }
  }

  if (!config.conical_order.empty()) {
    for (const auto& code : config.conical_order) {
      const auto it = std::find(category_codes.begin(), category_codes.end(), code);
      if (it == category_codes.end()) {
        throw ParseError(detail::cat("conical order names unknown factor '", code, "'"));
      }
      data.conical_order.push_back(static_cast<int>(it - category_codes.begin()));
    }
  }
  return data;
}

report::ReportBundle run_study(const io::StudyConfig& config, const StudyData& data) {
  report::ReportBundle bundle;
  bundle.study_name = config.name;

  report::IsmStage ism;
  ism.codes = data.ssim.codes;
  for (const auto& f : data.categories) ism.labels.push_back(f.label);
  ism.closure = config.closure;
  ism.extraction = config.extraction;
  ism.initial = initial_reachability(data.ssim.matrix);
  ism.filled = transitive_fill(ism.initial, config.closure);
  ism.powers = power_summary(ism.filled);
  ism.levels = level_partition(ism.filled, config.extraction);
  ism.conical = conical_matrix(ism.filled, ism.levels, data.conical_order);
  ism.edges = digraph_edges(ism.filled, ism.levels);

  report::MicmacStage micmac;
  micmac.codes = data.ssim.codes;
  micmac.classification = classify(ism.powers, ism.filled.size());
  micmac.reference = data.micmac_reference;

  report::TopsisStage topsis;
  std::vector<Orientation> orientations;
  orientations.reserve(data.decision.matrix.criteria.size());
  for (const auto& code : data.decision.matrix.criteria) {
    orientations.push_back(data.orientations.at(code));
  }
  topsis.normalized = normalize(data.decision.matrix, orientations);
  topsis.weighted = apply_weights(topsis.normalized, data.decision.weights);
  topsis.ideals = ideal_solutions(topsis.weighted);
  topsis.to_positive = separation_details(topsis.weighted, topsis.ideals.positive);
  topsis.to_negative = separation_details(topsis.weighted, topsis.ideals.negative);
  topsis.separations = separation_measures(topsis.weighted, topsis.ideals, config.separation);
  const auto cc = closeness(topsis.separations);
  topsis.category_of = data.category_map;
  topsis.ranking = rank(cc, data.decision.matrix.alternatives, data.category_map);
  for (const auto& alt : data.decision.matrix.alternatives) {
    const auto it = std::find_if(data.motivators.begin(), data.motivators.end(),
                                 [&](const io::Factor& f) { return f.code == alt; });
    topsis.alternative_labels.push_back(it == data.motivators.end() ? alt : it->label);
  }

  for (const auto& note : data.decision.unordered_cells) {
    bundle.notes.push_back(detail::cat(
        "ratings cell (", note.alternative.empty() ? "WEIGHTS" : note.alternative, ", ",
        note.criterion, ") is a non-monotone triple kept verbatim from the source data"));
  }

  bundle.ism = std::move(ism);
  bundle.micmac = std::move(micmac);
  bundle.topsis = std::move(topsis);
  return bundle;
}

report::ReportBundle run_study(const io::StudyConfig& config) {
  return run_study(config, load_study(config));
}

}  // namespace mcda::pipeline
