// Copyright 2026 The contdo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "contdo/blotto.h"
#include "contdo/double_oracle.h"
#include "contdo/interval_games.h"
#include "contdo/matrix_game.h"

namespace contdo {
namespace {

Matrix RandomMatrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = u(rng);
  }
  return m;
}

void BM_SolveZeroSum(benchmark::State& state) {
  const Matrix a = RandomMatrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(SolveZeroSum(a).value);
}
BENCHMARK(BM_SolveZeroSum)->RangeMultiplier(2)->Range(4, 128);

void BM_GridOracle(benchmark::State& state) {
  const GameDefinition g1 = MakePolynomialGame();
  const double resolution = 1.0 / static_cast<double>(state.range(0));
  const auto q = FiniteMixedStrategy::MergeDuplicates(
      {{1.0}, {-1.0}, {0.3}, {-0.7}}, {0.5, 0.2, 0.2, 0.1});
  for (auto _ : state) {
    // A fresh oracle each time, so the column cache starts cold.
    const GridOracle oracle(g1, Player::kOne, resolution);
    benchmark::DoNotOptimize(oracle.Respond(q).value);
  }
}
BENCHMARK(BM_GridOracle)->Arg(1000)->Arg(10000)->Arg(100000);

FiniteMixedStrategy BlottoOpponent(int divisions, std::size_t k) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 2);
  std::vector<StrategyPoint> atoms;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> parts(3, 0.0);
    for (int u = 0; u < divisions; ++u) parts[pick(rng)] += 1.0 / divisions;
    atoms.emplace_back(parts);
  }
  return FiniteMixedStrategy::MergeDuplicates(atoms,
                                              std::vector<double>(k, 1.0));
}

void BM_BlottoMilp(benchmark::State& state) {
  const BlottoGame game{{1.0, 1.0, 1.0}, 1.0 / 16};
  const auto opp = BlottoOpponent(16, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(MilpBestResponse(opp, game).value);
  }
}
BENCHMARK(BM_BlottoMilp)->Arg(1)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_BlottoEnumeration(benchmark::State& state) {
  const BlottoGame game{{1.0, 1.0, 1.0}, 1.0 / 16};
  const auto opp = BlottoOpponent(16, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(GridEnumerationBestResponse(opp, game, game.c).value);
  }
}
BENCHMARK(BM_BlottoEnumeration)->Arg(1)->Arg(3)->Arg(6);

void BM_DoubleOraclePolynomial(benchmark::State& state) {
  const GameDefinition g1 = MakePolynomialGame();
  const GridOracle o1(g1, Player::kOne, 1e-4);
  const GridOracle o2(g1, Player::kTwo, 1e-4);
  DoubleOracleOptions options;
  options.epsilon = 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        RunDoubleOracle(g1, o1, o2, {{0.0}}, {{0.0}}, options).value);
  }
}
BENCHMARK(BM_DoubleOraclePolynomial)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace contdo

BENCHMARK_MAIN();
