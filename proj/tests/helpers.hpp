#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "mcda/io.hpp"

namespace test {

inline std::filesystem::path data_dir() { return MCDA_DATA_DIR; }

inline std::filesystem::path data_file(const std::string& name) { return data_dir() / name; }

inline mcda::io::SsimInput load_study_ssim() {
  return mcda::io::load_ssim(data_file("ssim.csv"));
}

inline mcda::io::DecisionInput load_study_matrix() {
  return mcda::io::load_decision_matrix(data_file("decision_matrix.csv"),
                                        {.allow_unordered_cells = true});
}

inline std::vector<mcda::Orientation> study_orientations(const mcda::FuzzyDecisionMatrix& m) {
  const auto by_code = mcda::io::load_orientations(data_file("orientations.csv"));
  std::vector<mcda::Orientation> out;
  for (const auto& code : m.criteria) out.push_back(by_code.at(code));
  return out;
}

inline mcda::SsimMatrix random_ssim(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<mcda::Relation> upper;
  for (int i = 0; i < n * (n - 1) / 2; ++i) {
    upper.push_back(static_cast<mcda::Relation>(pick(rng)));
  }
  return {n, std::move(upper)};
}

inline mcda::MarkedMatrix random_reflexive_matrix(std::mt19937& rng, int n, double density = 0.3) {
  std::bernoulli_distribution edge(density);
  auto m = mcda::MarkedMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && edge(rng)) m.set(i, j, mcda::Mark::One);
    }
  }
  return m;
}

/// Reflexive-transitive closure by plain path search, the reference for the
/// fixed-point fill.
inline mcda::MarkedMatrix closure_by_path_search(const mcda::MarkedMatrix& m) {
  const int n = m.size();
  auto out = m;
  for (int start = 0; start < n; ++start) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const int at = stack.back();
      stack.pop_back();
      for (int next = 0; next < n; ++next) {
        if (!seen[next] && m.reaches(at, next)) {
          seen[next] = true;
          stack.push_back(next);
        }
      }
    }
    for (int j = 0; j < n; ++j) {
      if (seen[j] && !out.reaches(start, j)) {
        out.set(start, j, mcda::Mark::Derived);
      }
    }
  }
  return out;
}

inline mcda::Tfn random_ordered_tfn(std::mt19937& rng, double high = 4.0) {
  std::uniform_real_distribution<double> value(0.0, high);
  double a = value(rng), b = value(rng), c = value(rng);
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return {a, b, c};
}

inline mcda::Tfn random_positive_tfn(std::mt19937& rng, double low = 0.05, double high = 4.0) {
  std::uniform_real_distribution<double> value(low, high);
  double a = value(rng), b = value(rng), c = value(rng);
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return {a, b, c};
}

inline mcda::FuzzyDecisionMatrix random_decision_matrix(std::mt19937& rng, int rows, int cols) {
  mcda::FuzzyDecisionMatrix m;
  for (int i = 0; i < rows; ++i) m.alternatives.push_back("A" + std::to_string(i + 1));
  for (int j = 0; j < cols; ++j) m.criteria.push_back("C" + std::to_string(j + 1));
  for (int k = 0; k < rows * cols; ++k) m.cells.push_back(random_positive_tfn(rng));
  return m;
}

}  // namespace test
