#pragma once

#include <vector>

#include "mcda/error.hpp"

namespace mcda {

/// Complete raters x subjects grid of ordinal scores.
struct RatingTable {
  int raters = 0;
  int subjects = 0;
  std::vector<double> score;  // row-major, raters x subjects

  double at(int r, int s) const { return score[static_cast<std::size_t>(r) * subjects + s]; }
};

struct ConcordanceResult {
  double w = 0.0;            // coefficient of concordance in [0, 1]
  double chi_squared = 0.0;  // m * (n - 1) * W
  int degrees_of_freedom = 0;
};

/// Kendall's W over within-rater ranks (ties get mean ranks). With
/// `tie_correction` the denominator subtracts the standard tie term
/// m * sum(t^3 - t). Raises DomainError when the table is smaller than 2x2
/// or every rater scored all subjects equally.
ConcordanceResult kendalls_w(const RatingTable& table, bool tie_correction = true);

}  // namespace mcda
