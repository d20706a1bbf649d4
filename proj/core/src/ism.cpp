#include "mcda/ism.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mcda {

MarkedMatrix initial_reachability(const SsimMatrix& ssim) {
  const int n = ssim.size();
  MarkedMatrix m = MarkedMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      switch (ssim.at(i, j)) {
        case Relation::V:
          m.set(i, j, Mark::One);
          break;
        case Relation::A:
          m.set(j, i, Mark::One);
          break;
        case Relation::X:
          m.set(i, j, Mark::One);
          m.set(j, i, Mark::One);
          break;
        case Relation::O:
          break;
      }
    }
  }
  return m;
}

namespace {

bool compose_once(const MarkedMatrix& base, MarkedMatrix& out) {
  // Marks (i,k) as Derived in `out` when `base` has (i,j) and (j,k) set but
  // `out` still has (i,k) clear. Returns whether anything changed.
  const int n = base.size();
  bool changed = false;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (out.reaches(i, k)) continue;
      for (int j = 0; j < n; ++j) {
        if (base.reaches(i, j) && base.reaches(j, k)) {
          out.set(i, k, Mark::Derived);
          changed = true;
          break;
        }
      }
    }
  }
  return changed;
}

}  // namespace

MarkedMatrix transitive_fill(const MarkedMatrix& m, ClosureMode mode) {
  MarkedMatrix out = m;
  if (mode == ClosureMode::SinglePass) {
    compose_once(m, out);
    return out;
  }
  while (compose_once(out, out)) {
  }
  return out;
}

namespace {

std::vector<int> dense_rank_ascending(const std::vector<int>& values) {
  std::vector<int> distinct(values);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> ranks(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto pos = std::lower_bound(distinct.begin(), distinct.end(), values[i]);
    ranks[i] = static_cast<int>(pos - distinct.begin()) + 1;
  }
  return ranks;
}

}  // namespace

PowerSummary power_summary(const MarkedMatrix& m) {
  const int n = m.size();
  PowerSummary s;
  s.driving.assign(n, 0);
  s.dependence.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m.reaches(i, j)) {
        ++s.driving[i];
        ++s.dependence[j];
      }
    }
  }
  s.driving_rank = dense_rank_ascending(s.driving);
  s.dependence_rank = dense_rank_ascending(s.dependence);
  return s;
}

LevelPartition level_partition(const MarkedMatrix& m, ExtractionMode mode) {
  const int n = m.size();
  LevelPartition result;
  result.level.assign(n, 0);

  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);

  int current = 0;
  while (!remaining.empty()) {
    ++current;
    LevelIteration iteration;
    iteration.number = current;

    std::vector<int> qualifiers;
    std::size_t min_reach = 0;
    for (int i : remaining) {
      LevelTraceEntry entry;
      entry.factor = i;
      for (int j : remaining) {
        if (m.reaches(i, j)) entry.reachability.push_back(j);
        if (m.reaches(j, i)) entry.antecedent.push_back(j);
      }
      std::set_intersection(entry.reachability.begin(), entry.reachability.end(),
                            entry.antecedent.begin(), entry.antecedent.end(),
                            std::back_inserter(entry.intersection));
      // A factor qualifies when it reaches itself and R(i) = R(i) n A(i).
      const bool self = std::binary_search(entry.reachability.begin(), entry.reachability.end(), i);
      if (self && entry.reachability == entry.intersection) {
        if (qualifiers.empty() || entry.reachability.size() < min_reach) {
          min_reach = entry.reachability.size();
        }
        qualifiers.push_back(i);
      }
      iteration.entries.push_back(std::move(entry));
    }

    if (qualifiers.empty()) {
      throw PartitionError(detail::cat("no factor qualifies for level ", current,
                                       " with ", remaining.size(),
                                       " factors remaining; the matrix is malformed"));
    }
    if (mode == ExtractionMode::PaperCompat) {
      std::erase_if(qualifiers, [&](int i) {
        for (const auto& entry : iteration.entries) {
          if (entry.factor == i) return entry.reachability.size() != min_reach;
        }
        return true;
      });
    }

    for (auto& entry : iteration.entries) {
      if (std::find(qualifiers.begin(), qualifiers.end(), entry.factor) != qualifiers.end()) {
        entry.extracted = true;
        result.level[entry.factor] = current;
      }
    }
    iteration.extracted = qualifiers;
    result.trace.push_back(std::move(iteration));
    std::erase_if(remaining, [&](int i) {
      return std::find(qualifiers.begin(), qualifiers.end(), i) != qualifiers.end();
    });
  }
  result.depth = current;
  return result;
}

ConicalMatrix conical_matrix(const MarkedMatrix& m, const LevelPartition& partition,
                             std::span<const int> explicit_order) {
  const int n = m.size();
  if (static_cast<int>(partition.level.size()) != n) {
    throw DomainError("level partition does not cover the matrix");
  }

  std::vector<int> order;
  if (explicit_order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return partition.level[x] < partition.level[y];
    });
  } else {
    order.assign(explicit_order.begin(), explicit_order.end());
    std::vector<bool> seen(n, false);
    for (int i : order) {
      if (i < 0 || i >= n || seen[i]) {
        throw DomainError("explicit conical order is not a permutation of the factors");
      }
      seen[i] = true;
    }
    if (static_cast<int>(order.size()) != n) {
      throw DomainError("explicit conical order is not a permutation of the factors");
    }
    for (int r = 1; r < n; ++r) {
      if (partition.level[order[r]] < partition.level[order[r - 1]]) {
        throw DomainError("explicit conical order must keep levels ascending");
      }
    }
  }

  ConicalMatrix conical;
  conical.order = order;
  conical.cells.resize(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      conical.cells[static_cast<std::size_t>(r) * n + c] =
          m.reaches(order[r], order[c]) ? 1 : 0;
    }
  }
  return conical;
}

std::vector<DigraphEdge> digraph_edges(const MarkedMatrix& m, const LevelPartition& partition) {
  const int n = m.size();
  if (static_cast<int>(partition.level.size()) != n) {
    throw DomainError("level partition does not cover the matrix");
  }
  std::vector<DigraphEdge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && m.at(i, j) == Mark::One) {
        edges.push_back({i, j, partition.level[i], partition.level[j]});
      }
    }
  }
  return edges;
}

}  // namespace mcda
