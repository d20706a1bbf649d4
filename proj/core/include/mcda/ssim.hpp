#pragma once

#include <string_view>
#include <vector>

#include "mcda/error.hpp"

namespace mcda {

/// Contextual relation between an ordered factor pair (i, j), i < j.
///   V: i influences j      A: j influences i
///   X: mutual influence    O: no relation
enum class Relation { V, A, X, O };

Relation relation_from_code(std::string_view code);
char relation_code(Relation r);

/// Structural self-interaction matrix: one Relation per unordered factor
/// pair, stored for i < j in row-major upper-triangular order. Complete by
/// construction.
class SsimMatrix {
 public:
  SsimMatrix(int n, std::vector<Relation> upper);

  int size() const { return n_; }
  int pair_count() const { return static_cast<int>(upper_.size()); }

  /// Relation of the pair (i, j); requires 0 <= i < j < size().
  Relation at(int i, int j) const;

  static int upper_index(int n, int i, int j);

 private:
  int n_;
  std::vector<Relation> upper_;
};

}  // namespace mcda
