#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mcda/numeric.hpp"
#include "mcda/pipeline.hpp"
#include "mcda/verify.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerifyMismatch = 2;
constexpr int kExitUsage = 64;

struct IsmArgs {
  std::string ssim;
  std::string closure = "single-pass";
  std::string levels = "paper-compat";
  std::string out;
};

struct TopsisArgs {
  std::string matrix;
  std::string orientations;
  std::string category_map;
  std::string separation = "standard";
  std::string out;
  bool allow_unordered = false;
};

mcda::report::IsmStage run_ism_stage(const std::string& ssim_path, mcda::ClosureMode closure,
                                     mcda::ExtractionMode extraction) {
  const auto input = mcda::io::load_ssim(ssim_path);
  mcda::report::IsmStage stage;
  stage.codes = input.codes;
  stage.closure = closure;
  stage.extraction = extraction;
  stage.initial = mcda::initial_reachability(input.matrix);
  stage.filled = mcda::transitive_fill(stage.initial, closure);
  stage.powers = mcda::power_summary(stage.filled);
  stage.levels = mcda::level_partition(stage.filled, extraction);
  stage.conical = mcda::conical_matrix(stage.filled, stage.levels);
  stage.edges = mcda::digraph_edges(stage.filled, stage.levels);
  return stage;
}

int cmd_ism(const IsmArgs& args) {
  mcda::report::ReportBundle bundle;
  bundle.study_name = fs::path(args.ssim).stem().string();
  bundle.ism = run_ism_stage(args.ssim, mcda::io::closure_mode_from_name(args.closure),
                             mcda::io::extraction_mode_from_name(args.levels));
  const auto written = mcda::report::emit_reports(bundle, args.out);
  std::cout << "wrote " << written.size() << " files to " << args.out << "\n";
  return kExitOk;
}

int cmd_micmac(const std::string& ssim_path, const std::string& out) {
  const auto input = mcda::io::load_ssim(ssim_path);
  const auto initial = mcda::initial_reachability(input.matrix);
  const auto filled = mcda::transitive_fill(initial, mcda::ClosureMode::SinglePass);
  mcda::report::ReportBundle bundle;
  bundle.study_name = fs::path(ssim_path).stem().string();
  mcda::report::MicmacStage stage;
  stage.codes = input.codes;
  stage.classification = mcda::classify(mcda::power_summary(filled), filled.size());
  bundle.micmac = std::move(stage);
  const auto written = mcda::report::emit_reports(bundle, out);
  std::cout << "wrote " << written.size() << " files to " << out << "\n";
  return kExitOk;
}

int cmd_topsis(const TopsisArgs& args) {
  const auto decision = mcda::io::load_decision_matrix(
      args.matrix, {.allow_unordered_cells = args.allow_unordered});
  const auto orientations_by_code = mcda::io::load_orientations(args.orientations);
  const auto category_map = mcda::io::load_category_map(args.category_map);

  std::vector<mcda::Orientation> orientations;
  for (const auto& code : decision.matrix.criteria) {
    const auto it = orientations_by_code.find(code);
    if (it == orientations_by_code.end()) {
      throw mcda::ParseError(mcda::detail::cat(args.orientations,
                                               ": missing orientation for criterion '", code,
                                               "'"));
    }
    orientations.push_back(it->second);
  }

  mcda::report::ReportBundle bundle;
  bundle.study_name = fs::path(args.matrix).stem().string();
  mcda::report::TopsisStage stage;
  stage.normalized = mcda::normalize(decision.matrix, orientations);
  stage.weighted = mcda::apply_weights(stage.normalized, decision.weights);
  stage.ideals = mcda::ideal_solutions(stage.weighted);
  stage.to_positive = mcda::separation_details(stage.weighted, stage.ideals.positive);
  stage.to_negative = mcda::separation_details(stage.weighted, stage.ideals.negative);
  stage.separations = mcda::separation_measures(
      stage.weighted, stage.ideals, mcda::separation_mode_from_name(args.separation));
  const auto cc = mcda::closeness(stage.separations);
  stage.ranking = mcda::rank(cc, decision.matrix.alternatives, category_map);
  stage.category_of = category_map;
  bundle.topsis = std::move(stage);
  for (const auto& note : decision.unordered_cells) {
    bundle.notes.push_back(mcda::detail::cat(
        "ratings cell (", note.alternative.empty() ? "WEIGHTS" : note.alternative, ", ",
        note.criterion, ") is a non-monotone triple kept verbatim from the source data"));
  }
  const auto written = mcda::report::emit_reports(bundle, args.out);
  std::cout << "wrote " << written.size() << " files to " << args.out << "\n";
  return kExitOk;
}

int cmd_kendall(const std::string& ratings, bool no_tie_correction) {
  const auto table = mcda::io::load_rating_table(ratings);
  const auto result = mcda::kendalls_w(table, !no_tie_correction);
  std::cout << "raters: " << table.raters << "\nsubjects: " << table.subjects
            << "\nW: " << mcda::format_double(result.w)
            << "\nchi_squared: " << mcda::format_double(result.chi_squared)
            << "\ndf: " << result.degrees_of_freedom << "\n";
  return kExitOk;
}

int cmd_pipeline(const std::string& config_path, const std::string& out_override) {
  auto config = mcda::io::load_study_config(config_path);
  if (!out_override.empty()) {
    config.output_dir = out_override;
  }
  const auto bundle = mcda::pipeline::run_study(config);
  const auto written = mcda::report::emit_reports(bundle, config.output_dir);
  std::cout << "wrote " << written.size() << " files to " << config.output_dir.string() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& data_dir, bool strict) {
  const auto result = mcda::verify::verify_reference_study(data_dir, {.strict = strict});
  int failed = 0;
  for (const auto& table : result.tables) {
    std::cout << (table.passed ? "[ OK ] " : "[FAIL] ") << table.name << " (" << table.cells_checked
              << " values";
    if (!table.notes.empty()) {
      std::cout << ", " << table.notes.size() << " documented divergence"
                << (table.notes.size() == 1 ? "" : "s");
    }
    std::cout << ")\n";
    for (const auto& note : table.notes) {
      std::cout << "       note: " << note << "\n";
    }
    if (!table.passed) {
      ++failed;
      for (const auto& diff : table.diffs) {
        std::cout << "       diff: " << diff << "\n";
      }
    }
  }
  if (failed > 0) {
    std::cout << failed << " table(s) diverged from the reference values\n";
    return kExitVerifyMismatch;
  }
  std::cout << "all reference tables reproduced\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision-structuring toolkit: interpretive structural modeling, "
               "driving/dependence classification and fuzzy closeness ranking"};
  app.require_subcommand(1);

  IsmArgs ism_args;
  auto* ism = app.add_subcommand("ism", "Reachability, levels and conical matrix from a "
                                        "self-interaction matrix");
  ism->add_option("--ssim", ism_args.ssim, "SSIM file (.csv or .json)")->required();
  ism->add_option("--closure", ism_args.closure, "single-pass|fixed-point")
      ->check(CLI::IsMember({"single-pass", "fixed-point"}));
  ism->add_option("--levels", ism_args.levels, "standard|paper-compat")
      ->check(CLI::IsMember({"standard", "paper-compat"}));
  ism->add_option("--out", ism_args.out, "output directory")->required();

  std::string micmac_ssim, micmac_out;
  auto* micmac = app.add_subcommand("micmac", "Driving/dependence cluster classification");
  micmac->add_option("--ssim", micmac_ssim, "SSIM file (.csv or .json)")->required();
  micmac->add_option("--out", micmac_out, "output directory")->required();

  TopsisArgs topsis_args;
  auto* topsis = app.add_subcommand("topsis", "Fuzzy closeness ranking of alternatives");
  topsis->add_option("--matrix", topsis_args.matrix, "decision matrix with WEIGHTS row")
      ->required();
  topsis->add_option("--orientations", topsis_args.orientations, "criterion orientation file")
      ->required();
  topsis->add_option("--category-map", topsis_args.category_map, "alternative-to-category file")
      ->required();
  topsis->add_option("--separation", topsis_args.separation, "standard|paper-compat")
      ->check(CLI::IsMember({"standard", "paper-compat"}));
  topsis->add_flag("--allow-unordered-cells", topsis_args.allow_unordered,
                   "admit non-monotone rating triples instead of rejecting them");
  topsis->add_option("--out", topsis_args.out, "output directory")->required();

  std::string kendall_ratings;
  bool kendall_no_ties = false;
  auto* kendall = app.add_subcommand("kendall", "Kendall's coefficient of concordance");
  kendall->add_option("--ratings", kendall_ratings, "raters x subjects score table")->required();
  kendall->add_flag("--no-tie-correction", kendall_no_ties,
                    "use the uncorrected textbook denominator");

  std::string pipeline_config, pipeline_out;
  auto* pipeline = app.add_subcommand("pipeline", "Run every stage from a study config");
  pipeline->add_option("--config", pipeline_config, "study config (.json)")->required();
  pipeline->add_option("--out", pipeline_out, "override the configured output directory");

  std::string verify_data = "data/ai_ethics";
  bool verify_strict = false;
  auto* verify = app.add_subcommand(
      "verify-paper", "Reproduce the bundled case study and compare against its reference tables");
  verify->add_option("--data", verify_data, "study data directory");
  verify->add_flag("--strict", verify_strict,
                   "additionally require the frozen full-precision values at 1e-12");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (ism->parsed()) return cmd_ism(ism_args);
    if (micmac->parsed()) return cmd_micmac(micmac_ssim, micmac_out);
    if (topsis->parsed()) return cmd_topsis(topsis_args);
    if (kendall->parsed()) return cmd_kendall(kendall_ratings, kendall_no_ties);
    if (pipeline->parsed()) return cmd_pipeline(pipeline_config, pipeline_out);
    if (verify->parsed()) return cmd_verify(verify_data, verify_strict);
  } catch (const mcda::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitUsage;
}
