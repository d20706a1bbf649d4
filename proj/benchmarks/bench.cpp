#include <benchmark/benchmark.h>

#include <random>

#include "mcda/ism.hpp"
#include "mcda/kendall.hpp"
#include "mcda/topsis.hpp"

namespace {

mcda::MarkedMatrix random_matrix(int n, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(density);
  auto m = mcda::MarkedMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && edge(rng)) m.set(i, j, mcda::Mark::One);
    }
  }
  return m;
}

void BM_TransitiveFillFixedPoint(benchmark::State& state) {
  const auto m = random_matrix(static_cast<int>(state.range(0)), 0.05, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcda::transitive_fill(m, mcda::ClosureMode::FixedPoint));
  }
}
BENCHMARK(BM_TransitiveFillFixedPoint)->Arg(16)->Arg(64)->Arg(128);

void BM_LevelPartition(benchmark::State& state) {
  const auto closed = mcda::transitive_fill(
      random_matrix(static_cast<int>(state.range(0)), 0.05, 11), mcda::ClosureMode::FixedPoint);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcda::level_partition(closed, mcda::ExtractionMode::Standard));
  }
}
BENCHMARK(BM_LevelPartition)->Arg(16)->Arg(64);

mcda::FuzzyDecisionMatrix random_decision_matrix(int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> low(0.1, 2.0);
  mcda::FuzzyDecisionMatrix m;
  for (int i = 0; i < rows; ++i) m.alternatives.push_back("A" + std::to_string(i));
  for (int j = 0; j < cols; ++j) m.criteria.push_back("C" + std::to_string(j));
  for (int k = 0; k < rows * cols; ++k) {
    const double a = low(rng);
    m.cells.emplace_back(a, a + low(rng), a + 2.5);
  }
  return m;
}

void BM_TopsisPipeline(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  const auto matrix = random_decision_matrix(rows, 8, 13);
  const mcda::CriterionWeights weights(8, mcda::Tfn(0.5, 1.0, 2.0));
  const std::vector<mcda::Orientation> orientations(8, mcda::Orientation::Benefit);
  for (auto _ : state) {
    const auto normalized = mcda::normalize(matrix, orientations);
    const auto weighted = mcda::apply_weights(normalized, weights);
    const auto ideals = mcda::ideal_solutions(weighted);
    const auto separations =
        mcda::separation_measures(weighted, ideals, mcda::SeparationMode::Standard);
    benchmark::DoNotOptimize(mcda::closeness(separations));
  }
}
BENCHMARK(BM_TopsisPipeline)->Arg(20)->Arg(200);

void BM_KendallsW(benchmark::State& state) {
  const int subjects = static_cast<int>(state.range(0));
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> score(1, 5);
  mcda::RatingTable table;
  table.raters = 10;
  table.subjects = subjects;
  for (int i = 0; i < table.raters * subjects; ++i) table.score.push_back(score(rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcda::kendalls_w(table));
  }
}
BENCHMARK(BM_KendallsW)->Arg(10)->Arg(100);

}  // namespace
