#include "mcda/topsis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mcda {

Orientation orientation_from_name(std::string_view name) {
  if (name == "benefit" || name == "Benefit") return Orientation::Benefit;
  if (name == "cost" || name == "Cost") return Orientation::Cost;
  throw DomainError(detail::cat("unknown criterion orientation '", name, "'"));
}

std::string_view orientation_name(Orientation o) {
  return o == Orientation::Benefit ? "benefit" : "cost";
}

SeparationMode separation_mode_from_name(std::string_view name) {
  if (name == "standard") return SeparationMode::Standard;
  if (name == "paper-compat") return SeparationMode::PaperCompat;
  throw DomainError(detail::cat("unknown separation mode '", name, "'"));
}

std::string_view separation_mode_name(SeparationMode m) {
  return m == SeparationMode::Standard ? "standard" : "paper-compat";
}

std::size_t FuzzyDecisionMatrix::index(int i, int j) const {
  if (i < 0 || i >= rows() || j < 0 || j >= cols()) {
    throw DomainError(detail::cat("matrix cell (", i, ", ", j, ") out of range for ", rows(),
                                  "x", cols()));
  }
  return static_cast<std::size_t>(i) * criteria.size() + j;
}

AggregatedPanel aggregate_experts(const ExpertPanel& panel) {
  const int k = static_cast<int>(panel.experts.size());
  const int m = static_cast<int>(panel.alternatives.size());
  const int n = static_cast<int>(panel.criteria.size());
  if (k < 1 || m < 1 || n < 1) {
    throw DomainError("expert panel needs at least one expert, alternative and criterion");
  }

  auto position = [](const std::vector<std::string>& names, const std::string& name,
                     const char* what) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw DomainError(detail::cat("unknown ", what, " '", name, "' in panel rating"));
    }
    return static_cast<int>(it - names.begin());
  };

  // counts[cell] tracks completeness; folds run incrementally.
  struct Fold {
    double min_a = 0.0;
    double sum_b = 0.0;
    double max_c = 0.0;
    int count = 0;
  };
  std::vector<Fold> cells(static_cast<std::size_t>(m) * n);
  std::vector<Fold> weights(static_cast<std::size_t>(n));

  auto feed = [](Fold& f, const Tfn& t) {
    if (f.count == 0) {
      f.min_a = t.a();
      f.max_c = t.c();
    } else {
      f.min_a = std::min(f.min_a, t.a());
      f.max_c = std::max(f.max_c, t.c());
    }
    f.sum_b += t.b();
    ++f.count;
  };

  for (const auto& r : panel.ratings) {
    position(panel.experts, r.expert, "expert");
    const int i = position(panel.alternatives, r.alternative, "alternative");
    const int j = position(panel.criteria, r.criterion, "criterion");
    feed(cells[static_cast<std::size_t>(i) * n + j], r.rating);
  }
  for (const auto& r : panel.weight_ratings) {
    position(panel.experts, r.expert, "expert");
    const int j = position(panel.criteria, r.criterion, "criterion");
    feed(weights[static_cast<std::size_t>(j)], r.rating);
  }

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const int count = cells[static_cast<std::size_t>(i) * n + j].count;
      if (count != k) {
        throw DomainError(detail::cat("incomplete panel: alternative '", panel.alternatives[i],
                                      "', criterion '", panel.criteria[j], "' has ", count,
                                      " of ", k, " ratings"));
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    if (weights[j].count != k) {
      throw DomainError(detail::cat("incomplete panel: criterion '", panel.criteria[j],
                                    "' has ", weights[j].count, " of ", k, " weight ratings"));
    }
  }

  AggregatedPanel out;
  out.matrix.alternatives = panel.alternatives;
  out.matrix.criteria = panel.criteria;
  out.matrix.cells.reserve(cells.size());
  for (const auto& f : cells) {
    out.matrix.cells.push_back(Tfn::unordered(f.min_a, f.sum_b / k, f.max_c));
  }
  out.weights.reserve(weights.size());
  for (const auto& f : weights) {
    out.weights.push_back(Tfn::unordered(f.min_a, f.sum_b / k, f.max_c));
  }
  return out;
}

FuzzyDecisionMatrix normalize(const FuzzyDecisionMatrix& d,
                              std::span<const Orientation> orientations) {
  if (static_cast<int>(orientations.size()) != d.cols()) {
    throw DomainError(detail::cat("have ", orientations.size(), " orientations for ", d.cols(),
                                  " criteria"));
  }
  if (d.rows() < 1) {
    throw DomainError("cannot normalize an empty matrix");
  }
  FuzzyDecisionMatrix out;
  out.alternatives = d.alternatives;
  out.criteria = d.criteria;
  out.cells.resize(d.cells.size());

  for (int j = 0; j < d.cols(); ++j) {
    if (orientations[j] == Orientation::Benefit) {
      double z_max = 0.0;
      for (int i = 0; i < d.rows(); ++i) {
        z_max = std::max(z_max, d.at(i, j).c());
      }
      if (z_max <= 0.0) {
        throw DomainError(detail::cat("benefit criterion '", d.criteria[j],
                                      "' has zero column maximum; cannot normalize"));
      }
      for (int i = 0; i < d.rows(); ++i) {
        const Tfn& t = d.at(i, j);
        out.at(i, j) = Tfn::unordered(t.a() / z_max, t.b() / z_max, t.c() / z_max);
      }
    } else {
      double x_min = d.at(0, j).a();
      for (int i = 0; i < d.rows(); ++i) {
        const Tfn& t = d.at(i, j);
        if (t.a() <= 0.0 || t.b() <= 0.0 || t.c() <= 0.0) {
          throw DomainError(detail::cat("cost criterion '", d.criteria[j], "' has a zero component",
                                        " in alternative '", d.alternatives[i],
                                        "'; cannot normalize"));
        }
        x_min = std::min(x_min, t.a());
      }
      for (int i = 0; i < d.rows(); ++i) {
        const Tfn& t = d.at(i, j);
        out.at(i, j) = Tfn::unordered(x_min / t.c(), x_min / t.b(), x_min / t.a());
      }
    }
  }
  return out;
}

FuzzyDecisionMatrix apply_weights(const FuzzyDecisionMatrix& r, const CriterionWeights& weights) {
  if (static_cast<int>(weights.size()) != r.cols()) {
    throw DomainError(detail::cat("have ", weights.size(), " weights for ", r.cols(),
                                  " criteria"));
  }
  FuzzyDecisionMatrix out;
  out.alternatives = r.alternatives;
  out.criteria = r.criteria;
  out.cells.resize(r.cells.size());
  for (int i = 0; i < r.rows(); ++i) {
    for (int j = 0; j < r.cols(); ++j) {
      out.at(i, j) = r.at(i, j) * weights[j];
    }
  }
  return out;
}

IdealSolutions ideal_solutions(const FuzzyDecisionMatrix& weighted) {
  if (weighted.rows() < 1) {
    throw DomainError("cannot take ideal solutions of an empty matrix");
  }
  IdealSolutions ideals;
  ideals.positive.reserve(weighted.cols());
  ideals.negative.reserve(weighted.cols());
  for (int j = 0; j < weighted.cols(); ++j) {
    double pa = weighted.at(0, j).a(), pb = weighted.at(0, j).b(), pc = weighted.at(0, j).c();
    double na = pa, nb = pb, nc = pc;
    for (int i = 1; i < weighted.rows(); ++i) {
      const Tfn& t = weighted.at(i, j);
      pa = std::max(pa, t.a());
      pb = std::max(pb, t.b());
      pc = std::max(pc, t.c());
      na = std::min(na, t.a());
      nb = std::min(nb, t.b());
      nc = std::min(nc, t.c());
    }
    ideals.positive.push_back(Tfn::unordered(pa, pb, pc));
    ideals.negative.push_back(Tfn::unordered(na, nb, nc));
  }
  return ideals;
}

std::vector<std::vector<double>> separation_details(const FuzzyDecisionMatrix& weighted,
                                                    std::span<const Tfn> ideal) {
  if (static_cast<int>(ideal.size()) != weighted.cols()) {
    throw DomainError("ideal vector does not match the criteria count");
  }
  std::vector<std::vector<double>> rows(weighted.rows());
  for (int i = 0; i < weighted.rows(); ++i) {
    rows[i].reserve(weighted.cols());
    for (int j = 0; j < weighted.cols(); ++j) {
      rows[i].push_back(distance(weighted.at(i, j), ideal[j]));
    }
  }
  return rows;
}

SeparationMeasures separation_measures(const FuzzyDecisionMatrix& weighted,
                                       const IdealSolutions& ideals, SeparationMode mode) {
  const auto to_positive = separation_details(weighted, ideals.positive);
  const auto to_negative = separation_details(weighted, ideals.negative);
  SeparationMeasures s;
  s.mode = mode;
  s.d_plus.reserve(weighted.rows());
  s.d_minus.reserve(weighted.rows());
  for (int i = 0; i < weighted.rows(); ++i) {
    s.d_plus.push_back(std::accumulate(to_positive[i].begin(), to_positive[i].end(), 0.0));
    if (mode == SeparationMode::Standard) {
      s.d_minus.push_back(std::accumulate(to_negative[i].begin(), to_negative[i].end(), 0.0));
    } else {
      s.d_minus.push_back(*std::max_element(to_negative[i].begin(), to_negative[i].end()));
    }
  }
  return s;
}

std::vector<double> closeness(const SeparationMeasures& s) {
  if (s.d_plus.size() != s.d_minus.size()) {
    throw DomainError("separation vectors disagree in length");
  }
  std::vector<double> cc;
  cc.reserve(s.d_plus.size());
  for (std::size_t i = 0; i < s.d_plus.size(); ++i) {
    const double total = s.d_plus[i] + s.d_minus[i];
    if (total <= 0.0) {
      throw DomainError(detail::cat("alternative ", i + 1,
                                    " is equidistant from both ideals at zero; closeness undefined"));
    }
    cc.push_back(s.d_minus[i] / total);
  }
  return cc;
}

namespace {

std::vector<int> rank_descending(std::span<const double> cc, std::span<const int> members) {
  // Returns the 1-based rank of each member, ties resolved by input order.
  std::vector<int> order(members.begin(), members.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return cc[x] > cc[y]; });
  std::vector<int> rank_of(cc.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    rank_of[order[pos]] = static_cast<int>(pos) + 1;
  }
  return rank_of;
}

}  // namespace

ClosenessRanking rank(std::span<const double> cc, std::span<const std::string> alternatives,
                      const std::map<std::string, std::string>& category_of) {
  if (cc.size() != alternatives.size()) {
    throw DomainError("closeness vector does not match the alternatives");
  }
  for (double v : cc) {
    if (!std::isfinite(v)) {
      throw DomainError("closeness values must be finite");
    }
  }

  ClosenessRanking result;
  result.cc.assign(cc.begin(), cc.end());

  std::vector<int> everyone(cc.size());
  std::iota(everyone.begin(), everyone.end(), 0);
  const auto global = rank_descending(cc, everyone);
  result.global_rank.assign(cc.size(), 0);
  for (std::size_t i = 0; i < cc.size(); ++i) {
    result.global_rank[i] = global[i];
  }

  result.local_rank.assign(cc.size(), 0);
  std::map<std::string, std::vector<int>> groups;
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    const auto it = category_of.find(alternatives[i]);
    if (it == category_of.end()) {
      throw DomainError(detail::cat("alternative '", alternatives[i],
                                    "' is missing from the category map"));
    }
    groups[it->second].push_back(static_cast<int>(i));
  }
  for (const auto& [category, members] : groups) {
    std::vector<int> order(members);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return cc[x] > cc[y]; });
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      result.local_rank[order[pos]] = static_cast<int>(pos) + 1;
    }
  }
  return result;
}

}  // namespace mcda
