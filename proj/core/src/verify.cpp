#include "mcda/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mcda/csv.hpp"
#include "mcda/numeric.hpp"

namespace mcda::verify {

namespace fs = std::filesystem;

namespace {

constexpr double kCellTolerance = 0.001;
constexpr double kSeparationTolerance = 0.01;
constexpr double kClosenessTolerance = 0.005;
constexpr double kStrictTolerance = 1e-12;

struct Context {
  fs::path expected_dir;
  const pipeline::StudyData* data = nullptr;
  const report::ReportBundle* bundle = nullptr;
};

std::vector<std::vector<std::string>> load_table(const fs::path& path) {
  return csv::parse(io::read_file(path), path.string());
}

int column_of(const std::vector<std::string>& header, const std::string& name,
              const fs::path& path) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw ParseError(detail::cat(path.string(), ": missing column '", name, "'"));
  }
  return static_cast<int>(it - header.begin());
}

int row_of(const std::vector<std::string>& codes, const std::string& code) {
  const auto it = std::find(codes.begin(), codes.end(), code);
  if (it == codes.end()) {
    throw ParseError(detail::cat("unknown factor code '", code, "' in reference table"));
  }
  return static_cast<int>(it - codes.begin());
}

Tfn parse_ref_tfn(const std::string& cell, const std::string& context) {
  std::vector<double> parts;
  std::string current;
  for (char c : std::string(cell) + ";") {
    if (c == ';') {
      if (!trim(current).empty()) parts.push_back(parse_number(current, context));
      current.clear();
    } else {
      current += c;
    }
  }
  if (parts.size() != 3) {
    throw ParseError(detail::cat(context, ": expected 3 components in '", cell, "'"));
  }
  return Tfn::unordered(parts[0], parts[1], parts[2]);
}

void check_structure(Context& ctx, TableCheck& check) {
  const auto& data = *ctx.data;
  check.cells_checked = data.ssim.matrix.pair_count();
  if (data.ssim.matrix.pair_count() != 28) {
    check.diffs.push_back(detail::cat("expected 28 relation pairs, parsed ",
                                      data.ssim.matrix.pair_count()));
  }
  int a_count = 0;
  const int n = data.ssim.matrix.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (data.ssim.matrix.at(i, j) == Relation::A) ++a_count;
    }
  }
  if (a_count != 0) {
    check.diffs.push_back(detail::cat(a_count, " 'A' relations parsed; the study has none"));
  }
  if (data.decision.matrix.rows() != 20 || data.decision.matrix.cols() != 8) {
    check.diffs.push_back(detail::cat("expected a 20x8 rating matrix, parsed ",
                                      data.decision.matrix.rows(), "x",
                                      data.decision.matrix.cols()));
  }
  if (data.decision.unordered_cells.size() != 1 ||
      data.decision.unordered_cells[0].alternative != "M3" ||
      data.decision.unordered_cells[0].criterion != "CA4") {
    check.diffs.push_back("expected exactly one non-monotone source cell, (M3, CA4)");
  } else {
    check.notes.push_back(
        "rating cell (M3, CA4) = (1.5, 1.2, 3) is non-monotone in the source data and is kept "
        "verbatim; the published downstream tables are consistent with it");
  }
}

void check_marked_matrix(Context& ctx, TableCheck& check, const MarkedMatrix& computed,
                         const fs::path& file, bool compare_marks) {
  const auto expected = io::parse_marked_matrix(io::read_file(file), file.string());
  const auto& codes = ctx.data->ssim.codes;
  if (expected.codes != codes) {
    check.diffs.push_back(detail::cat(file.string(), ": factor codes disagree with the inputs"));
    return;
  }
  const int n = computed.size();
  check.cells_checked += n * n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool want = expected.matrix.reaches(i, j);
      const bool got = computed.reaches(i, j);
      if (want != got) {
        check.diffs.push_back(detail::cat("cell (", codes[i], ", ", codes[j], "): expected ",
                                          want ? 1 : 0, ", computed ", got ? 1 : 0));
      }
    }
  }
  if (!compare_marks) return;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool want_star = expected.matrix.at(i, j) == Mark::Derived;
      const bool got_star = computed.at(i, j) == Mark::Derived;
      if (want_star && !got_star) {
        check.diffs.push_back(detail::cat("cell (", codes[i], ", ", codes[j],
                                          "): reference marks it derived (1*), computed mark is plain"));
      } else if (!want_star && got_star && expected.matrix.reaches(i, j)) {
        // The reference transcription dropped some derived marks; surplus
        // computed marks are reported, not failed.
        check.notes.push_back(detail::cat("cell (", codes[i], ", ", codes[j],
                                          ") is derived (1*) here but carries a plain mark in the "
                                          "reference transcription"));
      }
    }
  }
}

void check_powers(Context& ctx, TableCheck& check, const PowerSummary& powers,
                  const fs::path& file) {
  const auto rows = load_table(file);
  const auto& codes = ctx.data->ssim.codes;
  const int n = static_cast<int>(codes.size());
  const int driving_col = column_of(rows[0], "driving", file);
  const int rank_col = column_of(rows[0], "driving_rank", file);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    check.cells_checked += 2;
    const int want_driving = static_cast<int>(parse_number(row[driving_col], "driving"));
    const int want_rank = static_cast<int>(parse_number(row[rank_col], "driving_rank"));
    if (powers.driving[i] != want_driving) {
      check.diffs.push_back(detail::cat(codes[i], ": driving power ", powers.driving[i],
                                        ", reference ", want_driving));
    }
    if (powers.driving_rank[i] != want_rank) {
      check.diffs.push_back(detail::cat(codes[i], ": driving rank ", powers.driving_rank[i],
                                        ", reference ", want_rank));
    }
  }
  for (std::size_t r = n + 1; r < rows.size(); ++r) {
    const bool is_rank = rows[r][0] == "dependence_rank";
    if (rows[r][0] != "dependence" && !is_rank) continue;
    for (int j = 0; j < n; ++j) {
      check.cells_checked += 1;
      const int want = static_cast<int>(parse_number(rows[r][j + 1], rows[r][0]));
      const int got = is_rank ? powers.dependence_rank[j] : powers.dependence[j];
      if (got != want) {
        check.diffs.push_back(detail::cat(codes[j], ": ", rows[r][0], " ", got, ", reference ",
                                          want));
      }
    }
  }
}

void check_closure_gap(Context& ctx, TableCheck& check) {
  const auto& ism = *ctx.bundle->ism;
  const auto fixed = transitive_fill(ism.initial, ClosureMode::FixedPoint);
  const auto& codes = ctx.data->ssim.codes;
  std::set<std::pair<std::string, std::string>> gap;
  for (int i = 0; i < fixed.size(); ++i) {
    for (int j = 0; j < fixed.size(); ++j) {
      if (fixed.reaches(i, j) != ism.filled.reaches(i, j)) {
        gap.emplace(codes[i], codes[j]);
      }
    }
  }
  std::set<std::pair<std::string, std::string>> want;
  const auto rows = load_table(ctx.expected_dir / "closure_gap.csv");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    want.emplace(rows[r][0], rows[r][1]);
  }
  check.cells_checked = static_cast<int>(want.size());
  if (gap != want) {
    auto render = [](const auto& set) {
      std::string out;
      for (const auto& [a, b] : set) out += detail::cat(" (", a, ",", b, ")");
      return out.empty() ? std::string(" none") : out;
    };
    check.diffs.push_back(detail::cat("fixed-point minus single-pass cells:", render(gap),
                                      "; reference:", render(want)));
  }
}

void check_levels(Context& ctx, TableCheck& check) {
  const auto& codes = ctx.data->ssim.codes;
  const auto compare = [&](const fs::path& file, const LevelPartition& partition,
                           std::string_view label) {
    const auto rows = load_table(file);
    for (std::size_t r = 1; r < rows.size(); ++r) {
      check.cells_checked += 1;
      const int i = row_of(codes, rows[r][0]);
      const int want = static_cast<int>(parse_number(rows[r][1], "level"));
      if (partition.level[i] != want) {
        check.diffs.push_back(detail::cat(label, ": ", codes[i], " at level ", partition.level[i],
                                          ", reference ", want));
      }
    }
    if (partition.trace.empty()) {
      check.diffs.push_back(detail::cat(label, ": no iteration trace recorded"));
    }
  };
  compare(ctx.expected_dir / "levels_paper_compat.csv", ctx.bundle->ism->levels, "paper-compat");
  const auto standard = level_partition(ctx.bundle->ism->filled, ExtractionMode::Standard);
  compare(ctx.expected_dir / "levels_standard.csv", standard, "standard");
}

void check_conical(Context& ctx, TableCheck& check) {
  const auto rows = load_table(ctx.expected_dir / "conical.csv");
  const auto& codes = ctx.data->ssim.codes;
  const auto& conical = ctx.bundle->ism->conical;
  const int n = conical.size();
  for (int r = 0; r < n; ++r) {
    const int want_index = row_of(codes, rows[r + 1][0]);
    if (conical.order[r] != want_index) {
      check.diffs.push_back(detail::cat("row ", r + 1, ": ordered factor ",
                                        codes[conical.order[r]], ", reference ", rows[r + 1][0]));
      continue;
    }
    for (int c = 0; c < n; ++c) {
      check.cells_checked += 1;
      const int want = static_cast<int>(parse_number(rows[r + 1][c + 1], "conical cell"));
      if (conical.at(r, c) != want) {
        check.diffs.push_back(detail::cat("cell (", codes[conical.order[r]], ", ",
                                          codes[conical.order[c]], "): computed ",
                                          conical.at(r, c), ", reference ", want));
      }
    }
  }
}

void check_micmac(Context& ctx, TableCheck& check) {
  const auto rows = load_table(ctx.expected_dir / "micmac.csv");
  const auto& codes = ctx.data->ssim.codes;
  const auto& stage = *ctx.bundle->micmac;
  const int cluster_col = column_of(rows[0], "cluster", ctx.expected_dir / "micmac.csv");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    check.cells_checked += 1;
    const int i = row_of(codes, rows[r][0]);
    const Cluster want = cluster_from_name(rows[r][cluster_col]);
    if (stage.classification.cluster[i] != want) {
      check.diffs.push_back(detail::cat(codes[i], ": computed ",
                                        cluster_name(stage.classification.cluster[i]),
                                        ", reference ", cluster_name(want)));
    }
  }
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const auto it = stage.reference.find(codes[i]);
    if (it == stage.reference.end()) continue;
    if (!it->second) {
      check.notes.push_back(detail::cat("published narrative does not place ", codes[i],
                                        "; computed cluster is ",
                                        cluster_name(stage.classification.cluster[i])));
    } else if (*it->second != stage.classification.cluster[i]) {
      check.notes.push_back(detail::cat("published narrative calls ", codes[i], " ",
                                        cluster_name(*it->second),
                                        " but its printed powers put it in ",
                                        cluster_name(stage.classification.cluster[i])));
    }
  }
}

void check_fuzzy_table(TableCheck& check, const FuzzyDecisionMatrix& computed,
                       const fs::path& file,
                       const std::vector<std::pair<std::string, const std::vector<Tfn>*>>& extra,
                       const std::map<std::pair<std::string, std::string>, std::pair<double, double>>*
                           corrections) {
  const auto rows = load_table(file);
  const auto& criteria = computed.criteria;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::string& label = rows[r][0];
    const Tfn* cells = nullptr;
    int row_index = -1;
    for (const auto& [name, vec] : extra) {
      if (name == label) cells = vec->data();
    }
    if (!cells) {
      const auto it = std::find(computed.alternatives.begin(), computed.alternatives.end(), label);
      if (it == computed.alternatives.end()) {
        check.diffs.push_back(detail::cat(file.filename().string(), ": unknown row '", label, "'"));
        continue;
      }
      row_index = static_cast<int>(it - computed.alternatives.begin());
    }
    for (std::size_t c = 1; c < rows[r].size(); ++c) {
      const auto context = detail::cat(file.filename().string(), " row ", label);
      const Tfn want = parse_ref_tfn(rows[r][c], context);
      const Tfn got = cells ? cells[c - 1] : computed.at(row_index, static_cast<int>(c - 1));
      const double want_components[3] = {want.a(), want.b(), want.c()};
      const double got_components[3] = {got.a(), got.b(), got.c()};
      const char* names[3] = {"a", "b", "c"};
      for (int k = 0; k < 3; ++k) {
        check.cells_checked += 1;
        double reference = want_components[k];
        if (corrections && k == 0) {
          const auto it = corrections->find({label, criteria[c - 1]});
          if (it != corrections->end()) {
            reference = it->second.second;  // the downstream-consistent value
            check.notes.push_back(detail::cat("cell (", label, ", ", criteria[c - 1],
                                              ") is published as ",
                                              format_fixed3(it->second.first),
                                              " but the study's own weighted table forces ",
                                              format_fixed3(it->second.second)));
          }
        }
        if (std::abs(reference - got_components[k]) > kCellTolerance) {
          check.diffs.push_back(detail::cat("cell (", label, ", ", criteria[c - 1], ") component ",
                                            names[k], ": computed ",
                                            format_double(got_components[k]), ", reference ",
                                            format_double(reference), " (|diff| ",
                                            format_double(std::abs(reference - got_components[k])),
                                            ")"));
        }
      }
    }
  }
}

void check_separations(Context& ctx, TableCheck& check, const fs::path& file,
                       const std::vector<std::vector<double>>& details,
                       const std::vector<double>& totals, const std::string& total_column) {
  const auto rows = load_table(file);
  const auto& alts = ctx.bundle->topsis->weighted.alternatives;
  const auto& criteria = ctx.bundle->topsis->weighted.criteria;
  const int total_col = column_of(rows[0], total_column, file);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto it = std::find(alts.begin(), alts.end(), rows[r][0]);
    if (it == alts.end()) {
      check.diffs.push_back(detail::cat(file.filename().string(), ": unknown row '", rows[r][0],
                                        "'"));
      continue;
    }
    const int i = static_cast<int>(it - alts.begin());
    for (std::size_t j = 0; j < criteria.size(); ++j) {
      check.cells_checked += 1;
      const double want = parse_number(rows[r][j + 1], "separation cell");
      if (std::abs(want - details[i][j]) > kCellTolerance) {
        check.diffs.push_back(detail::cat("distance (", alts[i], ", ", criteria[j],
                                          "): computed ", format_double(details[i][j]),
                                          ", reference ", format_double(want)));
      }
    }
    check.cells_checked += 1;
    const double want_total = parse_number(rows[r][total_col], total_column);
    if (std::abs(want_total - totals[i]) > kSeparationTolerance) {
      check.diffs.push_back(detail::cat(total_column, " (", alts[i], "): computed ",
                                        format_double(totals[i]), ", reference ",
                                        format_double(want_total)));
    }
  }
}

void check_closeness(Context& ctx, TableCheck& check) {
  const auto rows = load_table(ctx.expected_dir / "closeness.csv");
  const auto& stage = *ctx.bundle->topsis;
  const auto& alts = stage.weighted.alternatives;
  const fs::path file = ctx.expected_dir / "closeness.csv";
  const int cc_col = column_of(rows[0], "cc", file);
  const int local_col = column_of(rows[0], "local_rank", file);
  const int global_col = column_of(rows[0], "global_rank", file);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto it = std::find(alts.begin(), alts.end(), rows[r][0]);
    if (it == alts.end()) {
      check.diffs.push_back(detail::cat("unknown motivator '", rows[r][0], "'"));
      continue;
    }
    const int i = static_cast<int>(it - alts.begin());
    check.cells_checked += 3;
    const double want_cc = parse_number(rows[r][cc_col], "cc");
    if (std::abs(want_cc - stage.ranking.cc[i]) > kClosenessTolerance) {
      check.diffs.push_back(detail::cat(alts[i], ": closeness ",
                                        format_double(stage.ranking.cc[i]), ", reference ",
                                        format_double(want_cc)));
    }
    const int want_local = static_cast<int>(parse_number(rows[r][local_col], "local_rank"));
    if (stage.ranking.local_rank[i] != want_local) {
      check.diffs.push_back(detail::cat(alts[i], ": local rank ", stage.ranking.local_rank[i],
                                        ", reference ", want_local));
    }
    const int want_global = static_cast<int>(parse_number(rows[r][global_col], "global_rank"));
    if (stage.ranking.global_rank[i] != want_global) {
      check.diffs.push_back(detail::cat(alts[i], ": global rank ", stage.ranking.global_rank[i],
                                        ", reference ", want_global));
    }
  }
  const auto divergences = load_table(ctx.expected_dir / "local_rank_divergences.csv");
  for (std::size_t r = 1; r < divergences.size(); ++r) {
    check.notes.push_back(detail::cat("published local rank of ", divergences[r][0], " is ",
                                      divergences[r][1],
                                      ", inconsistent with its published closeness; the "
                                      "consistent rank ", divergences[r][2], " is asserted"));
  }
}

void check_reference_values(Context& ctx, TableCheck& check) {
  const fs::path file = ctx.expected_dir / "reference_full_precision.csv";
  const auto rows = load_table(file);
  const auto& stage = *ctx.bundle->topsis;
  const auto& alts = stage.weighted.alternatives;
  const int cc_col = column_of(rows[0], "cc", file);
  const int dplus_col = column_of(rows[0], "d_plus", file);
  const int dminus_col = column_of(rows[0], "d_minus_paper_compat", file);
  const int dstd_col = column_of(rows[0], "d_minus_standard", file);

  const auto standard =
      separation_measures(stage.weighted, stage.ideals, SeparationMode::Standard);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto it = std::find(alts.begin(), alts.end(), rows[r][0]);
    if (it == alts.end()) continue;
    const int i = static_cast<int>(it - alts.begin());
    const std::pair<double, double> pairs[] = {
        {parse_number(rows[r][cc_col], "cc"), stage.ranking.cc[i]},
        {parse_number(rows[r][dplus_col], "d_plus"), stage.separations.d_plus[i]},
        {parse_number(rows[r][dminus_col], "d_minus"), stage.separations.d_minus[i]},
        {parse_number(rows[r][dstd_col], "d_minus_standard"), standard.d_minus[i]},
    };
    for (const auto& [want, got] : pairs) {
      check.cells_checked += 1;
      if (std::abs(want - got) > kStrictTolerance) {
        check.diffs.push_back(detail::cat(alts[i], ": computed ", format_double(got),
                                          " differs from frozen reference ", format_double(want)));
      }
    }
  }
}

}  // namespace

Result verify_reference_study(const fs::path& data_dir, const Options& options) {
  io::StudyConfig config = io::load_study_config(data_dir / "pipeline.json");
  // Reproduction requires the published conventions regardless of the
  // config's own mode choices.
  config.closure = ClosureMode::SinglePass;
  config.extraction = ExtractionMode::PaperCompat;
  config.separation = SeparationMode::PaperCompat;
  config.allow_unordered_cells = true;

  const auto data = pipeline::load_study(config);
  const auto bundle = pipeline::run_study(config, data);

  Context ctx{data_dir / "expected", &data, &bundle};

  Result result;
  auto run_check = [&](const std::string& name, auto&& body) {
    TableCheck check;
    check.name = name;
    try {
      body(check);
    } catch (const Error& e) {
      check.diffs.push_back(e.what());
    }
    check.passed = check.diffs.empty();
    result.passed = result.passed && check.passed;
    result.tables.push_back(std::move(check));
  };

  run_check("inputs", [&](TableCheck& c) { check_structure(ctx, c); });
  run_check("initial-reachability", [&](TableCheck& c) {
    check_marked_matrix(ctx, c, bundle.ism->initial, ctx.expected_dir / "initial_reachability.csv",
                        false);
  });
  run_check("final-reachability", [&](TableCheck& c) {
    check_marked_matrix(ctx, c, bundle.ism->filled, ctx.expected_dir / "final_reachability.csv",
                        true);
  });
  run_check("driving-dependence", [&](TableCheck& c) {
    check_powers(ctx, c, bundle.ism->powers, ctx.expected_dir / "final_reachability.csv");
  });
  run_check("closure-gap", [&](TableCheck& c) { check_closure_gap(ctx, c); });
  run_check("levels", [&](TableCheck& c) { check_levels(ctx, c); });
  run_check("conical", [&](TableCheck& c) { check_conical(ctx, c); });
  run_check("micmac", [&](TableCheck& c) { check_micmac(ctx, c); });

  std::map<std::pair<std::string, std::string>, std::pair<double, double>> corrections;
  {
    const fs::path file = ctx.expected_dir / "normalized_corrections.csv";
    const auto rows = load_table(file);
    for (std::size_t r = 1; r < rows.size(); ++r) {
      corrections[{rows[r][0], rows[r][1]}] = {parse_number(rows[r][3], "published"),
                                               parse_number(rows[r][4], "consistent")};
    }
  }
  run_check("normalized", [&](TableCheck& c) {
    check_fuzzy_table(c, bundle.topsis->normalized, ctx.expected_dir / "normalized.csv", {},
                      &corrections);
  });
  run_check("weighted", [&](TableCheck& c) {
    check_fuzzy_table(c, bundle.topsis->weighted, ctx.expected_dir / "weighted.csv",
                      {{"APLUS", &bundle.topsis->ideals.positive},
                       {"AMINUS", &bundle.topsis->ideals.negative}},
                      nullptr);
  });
  run_check("separations-positive", [&](TableCheck& c) {
    check_separations(ctx, c, ctx.expected_dir / "separations_positive.csv",
                      bundle.topsis->to_positive, bundle.topsis->separations.d_plus, "total");
  });
  run_check("separations-negative", [&](TableCheck& c) {
    check_separations(ctx, c, ctx.expected_dir / "separations_negative.csv",
                      bundle.topsis->to_negative, bundle.topsis->separations.d_minus, "max");
  });
  run_check("closeness", [&](TableCheck& c) { check_closeness(ctx, c); });
  if (options.strict) {
    run_check("full-precision-reference",
              [&](TableCheck& c) { check_reference_values(ctx, c); });
  }
  return result;
}

}  // namespace mcda::verify
