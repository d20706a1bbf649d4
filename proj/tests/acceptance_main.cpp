// Acceptance suite: runs every stage from the bundled study fixtures and
// checks the results against the reference tables at fixed tolerances,
// printing one pass/fail line per criterion.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "mcda/csv.hpp"
#include "mcda/numeric.hpp"
#include "mcda/pipeline.hpp"
#include "mcda/report.hpp"

namespace fs = std::filesystem;
namespace io = mcda::io;

namespace {

int g_failures = 0;
std::vector<std::string> g_messages;

void report(int number, const std::string& label, bool passed) {
  std::cout << (passed ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << label << "\n";
  if (!passed) {
    ++g_failures;
    for (const auto& message : g_messages) {
      std::cout << "        " << message << "\n";
    }
  }
  g_messages.clear();
}

bool expect(bool condition, const std::string& message) {
  if (!condition && g_messages.size() < 12) {
    g_messages.push_back(message);
  }
  return condition;
}

struct StudyRun {
  mcda::io::StudyConfig config;
  mcda::pipeline::StudyData data;
  mcda::report::ReportBundle bundle;
};

StudyRun run_bundled_study() {
  auto config = io::load_study_config(test::data_file("pipeline.json"));
  config.closure = mcda::ClosureMode::SinglePass;
  config.extraction = mcda::ExtractionMode::PaperCompat;
  config.separation = mcda::SeparationMode::PaperCompat;
  config.allow_unordered_cells = true;
  auto data = mcda::pipeline::load_study(config);
  auto bundle = mcda::pipeline::run_study(config, data);
  return {std::move(config), std::move(data), std::move(bundle)};
}

std::vector<std::vector<std::string>> load_expected(const std::string& name) {
  const auto path = test::data_file("expected/" + name);
  return mcda::csv::parse(io::read_file(path), path.string());
}

int code_index(const std::vector<std::string>& codes, const std::string& code) {
  return static_cast<int>(std::find(codes.begin(), codes.end(), code) - codes.begin());
}

mcda::Tfn parse_triple(const std::string& cell) {
  std::vector<double> parts;
  std::string current;
  for (char c : cell + ";") {
    if (c == ';') {
      parts.push_back(mcda::parse_number(current, "expected triple"));
      current.clear();
    } else {
      current += c;
    }
  }
  return mcda::Tfn::unordered(parts[0], parts[1], parts[2]);
}

// ---------------------------------------------------------------------------

void criterion_1(const StudyRun& run) {
  const auto expected = io::parse_marked_matrix(
      io::read_file(test::data_file("expected/initial_reachability.csv")), "initial");
  bool ok = true;
  int cells = 0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      ++cells;
      ok &= expect(run.bundle.ism->initial.reaches(i, j) == expected.matrix.reaches(i, j),
                   "cell (" + expected.codes[i] + ", " + expected.codes[j] + ") differs");
    }
  }
  ok &= expect(cells == 64, "expected 64 cells");
  report(1, "relation symbols convert to the reference reachability matrix (64 cells exact)", ok);
}

void criterion_2(const StudyRun& run) {
  const auto& ism = *run.bundle.ism;
  const auto expected = io::parse_marked_matrix(
      io::read_file(test::data_file("expected/final_reachability.csv")), "final");
  bool ok = true;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      ok &= expect(ism.filled.reaches(i, j) == expected.matrix.reaches(i, j),
                   "binary cell (" + expected.codes[i] + ", " + expected.codes[j] + ") differs");
    }
  }
  const std::vector<std::pair<int, int>> required_stars{
      {0, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 6}, {5, 4}, {5, 6}, {5, 7}};
  for (const auto& [i, j] : required_stars) {
    ok &= expect(ism.filled.at(i, j) == mcda::Mark::Derived,
                 "derived mark missing at (" + expected.codes[i] + ", " + expected.codes[j] + ")");
  }
  ok &= expect(ism.powers.driving == std::vector<int>{7, 3, 6, 5, 5, 5, 2, 2}, "driving powers");
  ok &= expect(ism.powers.dependence == std::vector<int>{2, 1, 2, 5, 5, 4, 8, 8},
               "dependence powers");
  ok &= expect(ism.powers.driving_rank == std::vector<int>{5, 2, 4, 3, 3, 3, 1, 1},
               "driving ranks");
  ok &= expect(ism.powers.dependence_rank == std::vector<int>{2, 1, 2, 4, 4, 3, 5, 5},
               "dependence ranks");
  report(2, "single-pass transitivity fill reproduces the reference matrix, marks and powers", ok);
}

void criterion_3(const StudyRun& run) {
  const auto& initial = run.bundle.ism->initial;
  const auto single = run.bundle.ism->filled;
  const auto fixed = mcda::transitive_fill(initial, mcda::ClosureMode::FixedPoint);
  // Independent oracle: reflexive-transitive closure by brute-force path search.
  const auto oracle = test::closure_by_path_search(initial);
  bool ok = expect(fixed == oracle, "fixed-point fill differs from the path-search closure");
  std::set<std::pair<int, int>> gap;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (fixed.reaches(i, j) != single.reaches(i, j)) gap.insert({i, j});
    }
  }
  ok &= expect(gap == std::set<std::pair<int, int>>{{2, 5}},
               "fixed point should differ from single pass in exactly (CA3, CA6)");
  report(3, "fixed-point closure differs from the single pass in exactly one cell (CA3, CA6)", ok);
}

void criterion_4(const StudyRun& run) {
  const auto& compat = run.bundle.ism->levels;
  const auto standard = mcda::level_partition(run.bundle.ism->filled,
                                              mcda::ExtractionMode::Standard);
  bool ok = expect(compat.level == std::vector<int>{4, 2, 4, 3, 3, 3, 1, 1},
                   "paper-compat level vector differs");
  ok &= expect(standard.level == std::vector<int>{3, 2, 3, 2, 2, 2, 1, 1},
               "standard level vector differs");
  ok &= expect(compat.trace.size() == 4 && !compat.trace[0].entries.empty(),
               "paper-compat trace missing");
  ok &= expect(standard.trace.size() == 3 && !standard.trace[0].entries.empty(),
               "standard trace missing");
  report(4, "level partitioning yields the reference levels in both extraction modes", ok);
}

void criterion_5(const StudyRun& run) {
  const auto rows = load_expected("conical.csv");
  const auto& conical = run.bundle.ism->conical;
  const auto& codes = run.data.ssim.codes;
  bool ok = true;
  for (int r = 0; r < 8; ++r) {
    ok &= expect(codes[conical.order[r]] == rows[r + 1][0], "conical row order differs");
    for (int c = 0; c < 8; ++c) {
      ok &= expect(conical.at(r, c) == std::stoi(rows[r + 1][c + 1]),
                   "conical cell (" + rows[r + 1][0] + ", " + rows[0][c + 1] + ") differs");
    }
  }
  report(5, "conical matrix under the explicit ordering matches the reference (64 cells)", ok);
}

void criterion_6(const StudyRun& run) {
  const auto rows = load_expected("micmac.csv");
  const auto& stage = *run.bundle.micmac;
  bool ok = true;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const int i = code_index(stage.codes, rows[r][0]);
    ok &= expect(mcda::cluster_name(stage.classification.cluster[i]) == rows[r][3],
                 rows[r][0] + ": cluster differs");
  }
  const auto md = mcda::report::render_markdown(run.bundle);
  for (const char* code : {"CA7", "CA8", "CA6"}) {
    ok &= expect(md.find(std::string("divergence: ") + code) != std::string::npos ||
                     md.find(std::string("narrative calls ") + code) != std::string::npos ||
                     md.find(std::string("does not place ") + code) != std::string::npos,
                 std::string("report does not flag the divergence for ") + code);
  }
  report(6, "driving/dependence clusters match and the narrative divergences are flagged", ok);
}

void check_fuzzy_cells(bool& ok, const mcda::FuzzyDecisionMatrix& computed,
                       const std::vector<std::vector<std::string>>& rows,
                       const std::map<std::pair<std::string, std::string>, double>& corrections,
                       const std::vector<std::pair<std::string, const std::vector<mcda::Tfn>*>>&
                           extra_rows,
                       int* checked) {
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::string& label = rows[r][0];
    const mcda::Tfn* extra = nullptr;
    for (const auto& [name, cells] : extra_rows) {
      if (name == label) extra = cells->data();
    }
    const int i = extra ? -1
                        : static_cast<int>(std::find(computed.alternatives.begin(),
                                                     computed.alternatives.end(), label) -
                                           computed.alternatives.begin());
    for (int j = 0; j < computed.cols(); ++j) {
      const mcda::Tfn want = parse_triple(rows[r][j + 1]);
      const mcda::Tfn got = extra ? extra[j] : computed.at(i, j);
      const double want_components[3] = {want.a(), want.b(), want.c()};
      const double got_components[3] = {got.a(), got.b(), got.c()};
      for (int k = 0; k < 3; ++k) {
        double reference = want_components[k];
        const auto correction = corrections.find({label, computed.criteria[j]});
        if (correction != corrections.end() && k == 0) {
          reference = correction->second;
        }
        ++*checked;
        ok &= expect(std::abs(reference - got_components[k]) <= 0.001,
                     "cell (" + label + ", " + computed.criteria[j] + ") component " +
                         std::to_string(k) + ": computed " + mcda::format_double(got_components[k]) +
                         " vs " + mcda::format_double(reference));
      }
    }
  }
}

void criterion_7(const StudyRun& run) {
  std::map<std::pair<std::string, std::string>, double> corrections;
  std::vector<std::string> corrected_cells;
  for (const auto& row : load_expected("normalized_corrections.csv")) {
    if (row[0] == "alternative") continue;
    corrections[{row[0], row[1]}] = mcda::parse_number(row[4], "consistent");
    corrected_cells.push_back("(" + row[0] + ", " + row[1] + ") published " + row[3] +
                              " -> consistent " + row[4]);
  }
  bool ok = true;
  int checked = 0;
  check_fuzzy_cells(ok, run.bundle.topsis->normalized, load_expected("normalized.csv"),
                    corrections, {}, &checked);
  ok &= expect(checked == 480, "expected 480 components, checked " + std::to_string(checked));
  report(7, "normalization matches the reference matrix within 0.001 (" +
                std::to_string(corrected_cells.size()) +
                " published cells corrected to the study's own downstream values)",
         ok);
}

void criterion_8(const StudyRun& run) {
  bool ok = true;
  int checked = 0;
  check_fuzzy_cells(ok, run.bundle.topsis->weighted, load_expected("weighted.csv"), {},
                    {{"APLUS", &run.bundle.topsis->ideals.positive},
                     {"AMINUS", &run.bundle.topsis->ideals.negative}},
                    &checked);
  ok &= expect(checked == 528, "expected 528 components, checked " + std::to_string(checked));
  report(8, "weighted matrix and both ideal-solution rows match within 0.001", ok);
}

void criterion_9(const StudyRun& run) {
  const auto& topsis = *run.bundle.topsis;
  const auto& alternatives = topsis.weighted.alternatives;
  bool ok = true;
  const auto positive = load_expected("separations_positive.csv");
  int rows_checked = 0;
  for (std::size_t r = 1; r < positive.size(); ++r) {
    const int i = code_index(alternatives, positive[r][0]);
    const double want = mcda::parse_number(positive[r].back(), "total");
    ++rows_checked;
    ok &= expect(std::abs(topsis.separations.d_plus[i] - want) <= 0.01,
                 positive[r][0] + ": D+ computed " +
                     mcda::format_double(topsis.separations.d_plus[i]) + " vs " +
                     mcda::format_double(want));
  }
  ok &= expect(rows_checked == 9, "expected the 9 fully printed positive-separation rows");

  const auto negative = load_expected("separations_negative.csv");
  rows_checked = 0;
  for (std::size_t r = 1; r < negative.size(); ++r) {
    const int i = code_index(alternatives, negative[r][0]);
    const double want = mcda::parse_number(negative[r].back(), "max");
    ++rows_checked;
    ok &= expect(std::abs(topsis.separations.d_minus[i] - want) <= 0.01,
                 negative[r][0] + ": D- computed " +
                     mcda::format_double(topsis.separations.d_minus[i]) + " vs " +
                     mcda::format_double(want));
  }
  ok &= expect(rows_checked == 20, "expected 20 negative-separation rows");
  report(9, "separations match the reference tables within 0.01 (9 positive rows, 20 negative)",
         ok);
}

void criterion_10(const StudyRun& run) {
  const auto& topsis = *run.bundle.topsis;
  const auto& alternatives = topsis.weighted.alternatives;
  const auto rows = load_expected("closeness.csv");
  bool ok = true;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const int i = code_index(alternatives, rows[r][0]);
    const double want_cc = mcda::parse_number(rows[r][2], "cc");
    ok &= expect(std::abs(topsis.ranking.cc[i] - want_cc) <= 0.005,
                 rows[r][0] + ": closeness " + mcda::format_double(topsis.ranking.cc[i]) + " vs " +
                     mcda::format_double(want_cc));
    ok &= expect(topsis.ranking.global_rank[i] == std::stoi(rows[r][4]),
                 rows[r][0] + ": global rank " + std::to_string(topsis.ranking.global_rank[i]) +
                     " vs " + rows[r][4]);
    ok &= expect(topsis.ranking.local_rank[i] == std::stoi(rows[r][3]),
                 rows[r][0] + ": local rank " + std::to_string(topsis.ranking.local_rank[i]) +
                     " vs " + rows[r][3]);
  }
  // Stable tie handling puts M10 ahead of M14, and the CA1 local ranks
  // resolve the published duplicate as M2=1, M1=2, M3=3.
  ok &= expect(topsis.ranking.global_rank[code_index(alternatives, "M10")] == 19, "M10 rank");
  ok &= expect(topsis.ranking.global_rank[code_index(alternatives, "M14")] == 20, "M14 rank");
  ok &= expect(topsis.ranking.local_rank[code_index(alternatives, "M2")] == 1, "M2 local");
  ok &= expect(topsis.ranking.local_rank[code_index(alternatives, "M1")] == 2, "M1 local");
  ok &= expect(topsis.ranking.local_rank[code_index(alternatives, "M3")] == 3, "M3 local");
  report(10, "closeness values within 0.005, global order exact, local ranks consistent", ok);
}

void criterion_11() {
  bool ok = true;
  std::mt19937 rng(90);

  // Fuzzy-triple algebra and the distance metric.
  for (int round = 0; round < 100; ++round) {
    const auto p = test::random_ordered_tfn(rng);
    const auto q = test::random_ordered_tfn(rng);
    const auto r = test::random_ordered_tfn(rng);
    const auto product = p * q;
    ok &= expect(product.ordered(), "product of ordered triples must stay ordered");
    ok &= expect(mcda::distance(p, q) == mcda::distance(q, p), "distance symmetry");
    ok &= expect(mcda::distance(p, p) == 0.0, "distance identity");
    ok &= expect(mcda::distance(p, q) >= 0.0, "distance non-negativity");
    ok &= expect(mcda::distance(p, q) <=
                     mcda::distance(p, r) + mcda::distance(r, q) + 1e-12,
                 "triangle inequality");
  }

  // Closure idempotence and monotonicity.
  for (int round = 0; round < 100; ++round) {
    const auto m = test::random_reflexive_matrix(rng, 2 + static_cast<int>(rng() % 7));
    const auto single = mcda::transitive_fill(m, mcda::ClosureMode::SinglePass);
    const auto fixed = mcda::transitive_fill(m, mcda::ClosureMode::FixedPoint);
    ok &= expect(mcda::transitive_fill(fixed, mcda::ClosureMode::FixedPoint) == fixed,
                 "fixed point must be idempotent");
    for (int i = 0; i < m.size(); ++i) {
      for (int j = 0; j < m.size(); ++j) {
        ok &= expect(!m.reaches(i, j) || single.reaches(i, j), "fill must not clear cells");
        ok &= expect(!single.reaches(i, j) || fixed.reaches(i, j),
                     "fixed point must contain the single pass");
      }
    }
  }

  // Ideal dominance, separation dominance and the closeness range.
  for (int round = 0; round < 100; ++round) {
    const auto matrix = test::random_decision_matrix(rng, 2 + static_cast<int>(rng() % 5),
                                                     1 + static_cast<int>(rng() % 5));
    const auto ideals = mcda::ideal_solutions(matrix);
    for (int i = 0; i < matrix.rows(); ++i) {
      for (int j = 0; j < matrix.cols(); ++j) {
        const auto& cell = matrix.at(i, j);
        ok &= expect(ideals.positive[j].a() >= cell.a() && ideals.positive[j].b() >= cell.b() &&
                         ideals.positive[j].c() >= cell.c(),
                     "positive ideal must dominate its column");
        ok &= expect(ideals.negative[j].a() <= cell.a() && ideals.negative[j].b() <= cell.b() &&
                         ideals.negative[j].c() <= cell.c(),
                     "negative ideal must be dominated by its column");
      }
    }
    const auto standard =
        mcda::separation_measures(matrix, ideals, mcda::SeparationMode::Standard);
    const auto compat =
        mcda::separation_measures(matrix, ideals, mcda::SeparationMode::PaperCompat);
    bool degenerate = false;
    for (std::size_t i = 0; i < standard.d_minus.size(); ++i) {
      ok &= expect(standard.d_minus[i] >= compat.d_minus[i] - 1e-12,
                   "summed negative separation must dominate the maximum");
      degenerate = degenerate || standard.d_plus[i] + standard.d_minus[i] <= 0.0;
    }
    if (!degenerate) {
      for (const double value : mcda::closeness(standard)) {
        ok &= expect(value >= 0.0 && value <= 1.0, "closeness must lie in [0, 1]");
      }
    }
  }

  // Rank-permutation validity.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int round = 0; round < 100; ++round) {
    const int m = 2 + static_cast<int>(rng() % 10);
    std::vector<std::string> alternatives;
    std::vector<double> cc;
    std::map<std::string, std::string> map;
    for (int i = 0; i < m; ++i) {
      alternatives.push_back("A" + std::to_string(i));
      cc.push_back(rng() % 3 ? unit(rng) : 0.25);
      map[alternatives.back()] = "G" + std::to_string(rng() % 3);
    }
    const auto ranking = mcda::rank(cc, alternatives, map);
    auto global = ranking.global_rank;
    std::sort(global.begin(), global.end());
    for (int i = 0; i < m; ++i) {
      ok &= expect(global[i] == i + 1, "global ranks must form a permutation");
    }
  }

  // Parser round-trip.
  for (int round = 0; round < 100; ++round) {
    const auto matrix = test::random_decision_matrix(rng, 1 + static_cast<int>(rng() % 5),
                                                     1 + static_cast<int>(rng() % 4));
    mcda::CriterionWeights weights;
    for (int j = 0; j < matrix.cols(); ++j) weights.push_back(test::random_positive_tfn(rng));
    const auto parsed =
        io::parse_decision_matrix(io::write_decision_matrix_csv(matrix, weights), "roundtrip");
    ok &= expect(parsed.matrix.cells == matrix.cells && parsed.weights == weights,
                 "decision matrix must round-trip bit-exactly");
  }

  report(11, "randomized property suites hold (100 instances each)", ok);
}

void criterion_12() {
  bool ok = true;
  {
    mcda::RatingTable identical{3, 5, {1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 1, 2, 3, 4, 5}};
    ok &= expect(std::abs(mcda::kendalls_w(identical).w - 1.0) <= 1e-12,
                 "identical rankings must give W = 1");
  }
  std::mt19937 rng(91);
  for (int round = 0; round < 100; ++round) {
    mcda::RatingTable table{3, 10, {}};
    for (int r = 0; r < 3; ++r) {
      std::vector<double> ranking(10);
      std::iota(ranking.begin(), ranking.end(), 1.0);
      std::shuffle(ranking.begin(), ranking.end(), rng);
      table.score.insert(table.score.end(), ranking.begin(), ranking.end());
    }
    // Independent direct evaluation: S from rank sums, no tie term for
    // strict rankings.
    std::vector<double> rank_sum(10, 0.0);
    for (int r = 0; r < 3; ++r) {
      for (int s = 0; s < 10; ++s) rank_sum[s] += table.at(r, s);
    }
    const double mean = std::accumulate(rank_sum.begin(), rank_sum.end(), 0.0) / 10.0;
    double s_stat = 0.0;
    for (double v : rank_sum) s_stat += (v - mean) * (v - mean);
    const double want = 12.0 * s_stat / (9.0 * (1000.0 - 10.0));
    const auto got = mcda::kendalls_w(table);
    ok &= expect(std::abs(got.w - want) <= 1e-12, "W differs from the direct formula");
    ok &= expect(std::abs(got.chi_squared - 3.0 * 9.0 * want) <= 1e-12, "chi-squared relation");
    ok &= expect(got.degrees_of_freedom == 9, "degrees of freedom");
  }
  report(12, "concordance: W = 1 for identical rankings, matches the direct formula at 1e-12",
         ok);
}

int run_cli(const std::string& arguments) {
  const std::string command = std::string("\"") + MCDA_CLI + "\" " + arguments;
  const int status = std::system(command.c_str());
  return status < 0 ? status : WEXITSTATUS(status);
}

bool directories_identical(const fs::path& a, const fs::path& b) {
  std::vector<fs::path> names_a, names_b;
  for (const auto& entry : fs::recursive_directory_iterator(a)) {
    names_a.push_back(fs::relative(entry.path(), a));
  }
  for (const auto& entry : fs::recursive_directory_iterator(b)) {
    names_b.push_back(fs::relative(entry.path(), b));
  }
  std::sort(names_a.begin(), names_a.end());
  std::sort(names_b.begin(), names_b.end());
  if (names_a != names_b) return false;
  for (const auto& name : names_a) {
    if (fs::is_regular_file(a / name) &&
        io::read_file(a / name) != io::read_file(b / name)) {
      return false;
    }
  }
  return true;
}

void criterion_13() {
  const fs::path dir_a = "acceptance_out/run_a";
  const fs::path dir_b = "acceptance_out/run_b";
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
  const std::string config = (test::data_file("pipeline.json")).string();
  bool ok = expect(run_cli("pipeline --config \"" + config + "\" --out " + dir_a.string() +
                           " > /dev/null") == 0,
                   "first pipeline run failed");
  ok &= expect(run_cli("pipeline --config \"" + config + "\" --out " + dir_b.string() +
                       " > /dev/null") == 0,
               "second pipeline run failed");
  ok &= expect(directories_identical(dir_a, dir_b), "output directories differ byte-wise");
  report(13, "two pipeline runs over the fixtures are byte-identical", ok);
}

}  // namespace

int main() {
  try {
    const auto run = run_bundled_study();
    criterion_1(run);
    criterion_2(run);
    criterion_3(run);
    criterion_4(run);
    criterion_5(run);
    criterion_6(run);
    criterion_7(run);
    criterion_8(run);
    criterion_9(run);
    criterion_10(run);
    criterion_11();
    criterion_12();
    criterion_13();
  } catch (const std::exception& e) {
    std::cout << "[FAIL] acceptance suite aborted: " << e.what() << "\n";
    return 1;
  }
  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 13 criteria passed\n";
  return 0;
}
