#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcda/ism.hpp"
#include "mcda/kendall.hpp"
#include "mcda/micmac.hpp"
#include "mcda/ssim.hpp"
#include "mcda/topsis.hpp"

namespace mcda::io {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

/// A factor of the study: 1-based index, short code and display label.
struct Factor {
  int index = 0;
  std::string code;
  std::string label;
};

/// Parses an index/code/label table; codes and indexes must be unique.
std::vector<Factor> parse_factors(const std::string& text, const std::string& source);

/// SSIM with the factor codes taken from the file header.
struct SsimInput {
  std::vector<std::string> codes;
  SsimMatrix matrix;
};

/// CSV layout: header of factor codes, one row per factor, relation symbols
/// above the diagonal, '*' or blank on and below it. A JSON mirror with a
/// `pairs` array is accepted for `.json` files.
SsimInput parse_ssim(const std::string& text, const std::string& source);
SsimInput parse_ssim_json(const std::string& text, const std::string& source);
SsimInput load_ssim(const std::filesystem::path& path);

std::string write_ssim_csv(const SsimInput& input);

/// A cell whose triple is not monotone, kept verbatim from the source.
struct UnorderedCellNote {
  std::string alternative;  // empty for the weights row
  std::string criterion;
  Tfn value;
};

struct DecisionMatrixOptions {
  /// Admit non-monotone triples instead of rejecting them. Admitted cells
  /// are recorded in `DecisionInput::unordered_cells`.
  bool allow_unordered_cells = false;
};

struct DecisionInput {
  FuzzyDecisionMatrix matrix;
  CriterionWeights weights;
  std::vector<UnorderedCellNote> unordered_cells;
};

/// CSV layout: header `alternative` + criterion codes; first data row is
/// labeled WEIGHTS; every cell holds three numbers separated by ';' or
/// whitespace, with ',' and '.' both accepted as decimal mark. A JSON mirror
/// is accepted for `.json` files.
DecisionInput parse_decision_matrix(const std::string& text, const std::string& source,
                                    const DecisionMatrixOptions& options = {});
DecisionInput parse_decision_matrix_json(const std::string& text, const std::string& source,
                                         const DecisionMatrixOptions& options = {});
DecisionInput load_decision_matrix(const std::filesystem::path& path,
                                   const DecisionMatrixOptions& options = {});

/// Full-precision emitter; output always uses '.' decimals and ';' between
/// the three components. parse(write(x)) reproduces x exactly.
std::string write_decision_matrix_csv(const FuzzyDecisionMatrix& matrix,
                                      const CriterionWeights& weights);

std::map<std::string, Orientation> parse_orientations(const std::string& text,
                                                      const std::string& source);
std::map<std::string, Orientation> load_orientations(const std::filesystem::path& path);

std::map<std::string, std::string> parse_category_map(const std::string& text,
                                                      const std::string& source);
std::map<std::string, std::string> load_category_map(const std::filesystem::path& path);

/// Optional reference classification (e.g. from a published narrative);
/// factors with an empty cluster field are treated as unstated.
std::map<std::string, std::optional<Cluster>> parse_cluster_reference(const std::string& text,
                                                                      const std::string& source);

RatingTable parse_rating_table(const std::string& text, const std::string& source);
RatingTable load_rating_table(const std::filesystem::path& path);

/// Marked 0/1/1* matrix with optional power columns, as written by the
/// report emitter; used to read matrices back and by golden comparisons.
struct MarkedMatrixInput {
  std::vector<std::string> codes;
  MarkedMatrix matrix;
};
MarkedMatrixInput parse_marked_matrix(const std::string& text, const std::string& source);

/// Pipeline configuration; all paths are resolved against the config file's
/// directory when relative.
struct StudyConfig {
  std::string name;
  std::filesystem::path categories;
  std::filesystem::path motivators;
  std::filesystem::path ssim;
  std::filesystem::path ratings;
  std::filesystem::path orientations;
  std::filesystem::path category_map;
  std::optional<std::filesystem::path> weights;  // overrides the matrix WEIGHTS row
  std::optional<std::filesystem::path> micmac_reference;
  std::vector<std::string> conical_order;  // factor codes; empty = study order
  ClosureMode closure = ClosureMode::SinglePass;
  ExtractionMode extraction = ExtractionMode::PaperCompat;
  SeparationMode separation = SeparationMode::Standard;
  bool allow_unordered_cells = false;
  std::filesystem::path output_dir;
};

StudyConfig load_study_config(const std::filesystem::path& path);

ClosureMode closure_mode_from_name(std::string_view name);
std::string_view closure_mode_name(ClosureMode mode);
ExtractionMode extraction_mode_from_name(std::string_view name);
std::string_view extraction_mode_name(ExtractionMode mode);

}  // namespace mcda::io
