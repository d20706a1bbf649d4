#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mcda/pipeline.hpp"

namespace mcda::verify {

/// Outcome of checking one reproduced table against its reference file.
struct TableCheck {
  std::string name;
  bool passed = true;
  int cells_checked = 0;
  std::vector<std::string> diffs;  // non-empty means failure
  std::vector<std::string> notes;  // documented divergences, not failures
};

struct Options {
  /// Additionally compare closeness and separations against frozen
  /// full-precision reference values at 1e-12.
  bool strict = false;
};

struct Result {
  std::vector<TableCheck> tables;
  bool passed = true;
};

/// Recomputes every stage from the bundled study inputs under `data_dir`
/// (reproduction modes are forced: single-pass closure, paper-compat level
/// extraction and separations) and compares the results with the reference
/// tables under `data_dir`/expected.
Result verify_reference_study(const std::filesystem::path& data_dir, const Options& options = {});

}  // namespace mcda::verify
