#include "mcda/kendall.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mcda {

ConcordanceResult kendalls_w(const RatingTable& table, bool tie_correction) {
  const int m = table.raters;
  const int n = table.subjects;
  if (m < 2 || n < 2) {
    throw DomainError(detail::cat("concordance needs at least 2 raters and 2 subjects, got ", m,
                                  "x", n));
  }
  if (table.score.size() != static_cast<std::size_t>(m) * n) {
    throw DomainError("rating table is incomplete");
  }

  std::vector<double> rank_sum(n, 0.0);
  double tie_term = 0.0;

  std::vector<int> order(n);
  for (int r = 0; r < m; ++r) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return table.at(r, x) < table.at(r, y); });
    int i = 0;
    while (i < n) {
      int j = i;
      while (j + 1 < n && table.at(r, order[j + 1]) == table.at(r, order[i])) {
        ++j;
      }
      const double mean_rank = (i + j) / 2.0 + 1.0;
      for (int k = i; k <= j; ++k) {
        rank_sum[order[k]] += mean_rank;
      }
      const double t = j - i + 1;
      tie_term += t * t * t - t;
      i = j + 1;
    }
  }

  const double mean = std::accumulate(rank_sum.begin(), rank_sum.end(), 0.0) / n;
  double s = 0.0;
  for (double v : rank_sum) {
    s += (v - mean) * (v - mean);
  }

  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  double denominator = md * md * (nd * nd * nd - nd);
  if (tie_correction) {
    denominator -= md * tie_term;
  }
  if (denominator <= 0.0) {
    throw DomainError("concordance undefined: every rater assigned identical scores");
  }

  ConcordanceResult result;
  result.w = std::clamp(12.0 * s / denominator, 0.0, 1.0);
  result.chi_squared = md * (nd - 1.0) * result.w;
  result.degrees_of_freedom = n - 1;
  return result;
}

}  // namespace mcda
