#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcda/error.hpp"

namespace mcda {

/// Cell state of a reachability matrix. Derived entries come from the
/// transitivity fill and print as "1*".
enum class Mark : std::uint8_t { Zero = 0, One = 1, Derived = 2 };

inline bool is_set(Mark m) { return m != Mark::Zero; }

/// Renders a cell as "0", "1" or "1*".
std::string mark_code(Mark m);
Mark mark_from_code(std::string_view code);

/// Square 0/1 matrix whose derived entries carry a distinguishing mark.
class MarkedMatrix {
 public:
  explicit MarkedMatrix(int n);
  static MarkedMatrix identity(int n);

  int size() const { return n_; }
  Mark at(int i, int j) const { return cells_[index(i, j)]; }
  void set(int i, int j, Mark m) { cells_[index(i, j)] = m; }

  /// True when the cell is 1 or 1*.
  bool reaches(int i, int j) const { return is_set(at(i, j)); }

  friend bool operator==(const MarkedMatrix&, const MarkedMatrix&) = default;

 private:
  std::size_t index(int i, int j) const;

  int n_;
  std::vector<Mark> cells_;
};

}  // namespace mcda
