#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcda/tfn.hpp"

namespace mcda {

/// Whether larger (Benefit) or smaller (Cost) raw ratings are preferable.
enum class Orientation { Benefit, Cost };

Orientation orientation_from_name(std::string_view name);
std::string_view orientation_name(Orientation o);

/// Alternatives x criteria grid of fuzzy ratings, row-major and complete.
struct FuzzyDecisionMatrix {
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  std::vector<Tfn> cells;

  int rows() const { return static_cast<int>(alternatives.size()); }
  int cols() const { return static_cast<int>(criteria.size()); }

  const Tfn& at(int i, int j) const { return cells[index(i, j)]; }
  Tfn& at(int i, int j) { return cells[index(i, j)]; }

  std::size_t index(int i, int j) const;
};

/// One fuzzy weight per criterion, aligned with the matrix criteria order.
using CriterionWeights = std::vector<Tfn>;

/// A single decision-maker's judgment of one alternative under one
/// criterion; weight judgments leave `alternative` empty.
struct ExpertRating {
  std::string expert;
  std::string alternative;
  std::string criterion;
  Tfn rating;
};

/// Complete panel of K decision-makers over an alternatives x criteria grid.
struct ExpertPanel {
  std::vector<std::string> experts;
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  std::vector<ExpertRating> ratings;         // one per (expert, alternative, criterion)
  std::vector<ExpertRating> weight_ratings;  // one per (expert, criterion)
};

struct AggregatedPanel {
  FuzzyDecisionMatrix matrix;
  CriterionWeights weights;
};

/// Folds the panel into a combined matrix: per cell the minimum first
/// component, arithmetic mean of the modal components, and maximum third
/// component over experts; weights are folded the same way. Missing or
/// duplicate judgments raise DomainError.
AggregatedPanel aggregate_experts(const ExpertPanel& panel);

/// Linear-scale normalization: benefit cells divide by the column maximum of
/// third components; cost cells map to (min_a/z, min_a/y, min_a/x) with
/// min_a the column minimum of first components. Columns that would divide
/// by zero raise DomainError naming the criterion.
FuzzyDecisionMatrix normalize(const FuzzyDecisionMatrix& d, std::span<const Orientation> orientations);

/// Component-wise product of every cell with its criterion weight.
FuzzyDecisionMatrix apply_weights(const FuzzyDecisionMatrix& r, const CriterionWeights& weights);

/// Per-criterion component-wise extremes of the weighted matrix.
struct IdealSolutions {
  std::vector<Tfn> positive;  // component-wise maximum
  std::vector<Tfn> negative;  // component-wise minimum
};

IdealSolutions ideal_solutions(const FuzzyDecisionMatrix& weighted);

/// Aggregation rule for the distance to the negative ideal.
///
/// Standard sums per-criterion distances for both separations. PaperCompat
/// sums the positive side but takes the per-row maximum on the negative
/// side, which replicates how published closeness values were derived.
enum class SeparationMode { Standard, PaperCompat };

SeparationMode separation_mode_from_name(std::string_view name);
std::string_view separation_mode_name(SeparationMode m);

struct SeparationMeasures {
  std::vector<double> d_plus;
  std::vector<double> d_minus;
  SeparationMode mode = SeparationMode::Standard;
};

SeparationMeasures separation_measures(const FuzzyDecisionMatrix& weighted,
                                       const IdealSolutions& ideals, SeparationMode mode);

/// Per-criterion vertex distances to one ideal vector; row i, column j.
std::vector<std::vector<double>> separation_details(const FuzzyDecisionMatrix& weighted,
                                                    std::span<const Tfn> ideal);

/// CC_i = D_i- / (D_i+ + D_i-). A row with both separations zero raises
/// DomainError.
std::vector<double> closeness(const SeparationMeasures& s);

/// Global and within-category ranks of the alternatives.
struct ClosenessRanking {
  std::vector<double> cc;
  std::vector<int> global_rank;
  std::vector<int> local_rank;
};

/// Ranks descending by closeness; ties keep the input order. Local ranks
/// apply the same rule within each alternative's category.
ClosenessRanking rank(std::span<const double> cc, std::span<const std::string> alternatives,
                      const std::map<std::string, std::string>& category_of);

}  // namespace mcda
