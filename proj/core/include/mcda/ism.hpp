#pragma once

#include <span>
#include <vector>

#include "mcda/reachability.hpp"
#include "mcda/ssim.hpp"

namespace mcda {

/// Builds the initial reachability matrix from pairwise relations:
/// V sets (i,j), A sets (j,i), X sets both, O neither; the diagonal is 1.
MarkedMatrix initial_reachability(const SsimMatrix& ssim);

/// How far the transitivity fill composes relations.
///
/// SinglePass performs one simultaneous composition pass over the input
/// matrix, the convention used in published ISM studies; FixedPoint iterates
/// to the full reflexive-transitive closure. Cells added by either mode are
/// marked Derived.
enum class ClosureMode { SinglePass, FixedPoint };

MarkedMatrix transitive_fill(const MarkedMatrix& m, ClosureMode mode);

/// Row sums (driving power), column sums (dependence power) and their dense
/// ranks in ascending power order.
struct PowerSummary {
  std::vector<int> driving;
  std::vector<int> dependence;
  std::vector<int> driving_rank;
  std::vector<int> dependence_rank;
};

PowerSummary power_summary(const MarkedMatrix& m);

/// Level extraction rule.
///
/// Standard extracts every factor whose reachability set equals its
/// intersection with the antecedent set. PaperCompat additionally keeps only
/// the qualifiers of minimal reachability-set size per iteration, a
/// reconstruction of how published tables split simultaneous qualifiers
/// across adjacent levels.
enum class ExtractionMode { Standard, PaperCompat };

/// One factor's sets during a partition iteration.
struct LevelTraceEntry {
  int factor = 0;
  std::vector<int> reachability;
  std::vector<int> antecedent;
  std::vector<int> intersection;
  bool extracted = false;
};

struct LevelIteration {
  int number = 0;
  std::vector<LevelTraceEntry> entries;
  std::vector<int> extracted;
};

/// Assignment of every factor to exactly one level (1 = top of the
/// hierarchy), plus the per-iteration trace that produced it.
struct LevelPartition {
  std::vector<int> level;
  std::vector<LevelIteration> trace;
  int depth = 0;
};

LevelPartition level_partition(const MarkedMatrix& m, ExtractionMode mode);

/// Reachability matrix permuted into ascending level order. Derived marks
/// are flattened to plain ones; `order` maps conical row -> original index.
struct ConicalMatrix {
  std::vector<int> order;
  std::vector<std::uint8_t> cells;  // row-major, order.size() squared

  int size() const { return static_cast<int>(order.size()); }
  int at(int r, int c) const { return cells[static_cast<std::size_t>(r) * order.size() + c]; }
};

/// Default row order is (level, study position). A non-empty `explicit_order`
/// (a permutation of original indices with non-decreasing levels) overrides
/// the within-level arrangement.
ConicalMatrix conical_matrix(const MarkedMatrix& m, const LevelPartition& partition,
                             std::span<const int> explicit_order = {});

/// Directed edge between factors, annotated with both endpoint levels.
struct DigraphEdge {
  int from = 0;
  int to = 0;
  int from_level = 0;
  int to_level = 0;

  friend bool operator==(const DigraphEdge&, const DigraphEdge&) = default;
};

/// Emits one edge per plain (non-derived) off-diagonal 1-cell.
std::vector<DigraphEdge> digraph_edges(const MarkedMatrix& m, const LevelPartition& partition);

}  // namespace mcda
