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

#include "contdo/fictitious_play.h"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "contdo/double_oracle.h"
#include "contdo/errors.h"
#include "contdo/interval_games.h"
#include "contdo/matrix_game.h"
#include "test_util.h"

namespace contdo {
namespace {

TEST(RunFictitiousPlay, SingletonGame) {
  const GameDefinition g = EmbedMatrixGame(Matrix{{2.5}});
  const ExhaustiveOracle o1(g, Player::kOne, SimplexVertices(1));
  const ExhaustiveOracle o2(g, Player::kTwo, SimplexVertices(1));
  FictitiousPlayOptions options;
  options.iterations = 3;
  const FpResult r = RunFictitiousPlay(g, o1, o2, {1.0}, {1.0}, options);
  ASSERT_EQ(r.trace.size(), 3u);
  for (const FpRecord& rec : r.trace) {
    EXPECT_DOUBLE_EQ(rec.lower, 2.5);
    EXPECT_DOUBLE_EQ(rec.upper, 2.5);
    EXPECT_DOUBLE_EQ(rec.value, 2.5);
  }
  EXPECT_EQ(r.empirical1.size(), 1u);
}

TEST(RunFictitiousPlay, MatchingPenniesApproachesUniform) {
  const GameDefinition g = EmbedMatrixGame(Matrix{{1, -1}, {-1, 1}});
  const ExhaustiveOracle o1(g, Player::kOne, SimplexVertices(2));
  const ExhaustiveOracle o2(g, Player::kTwo, SimplexVertices(2));
  FictitiousPlayOptions options;
  options.iterations = 2000;
  const FpResult r = RunFictitiousPlay(g, o1, o2, SimplexVertices(2)[0],
                                       SimplexVertices(2)[0], options);
  for (const StrategyPoint& v : SimplexVertices(2)) {
    EXPECT_NEAR(r.empirical1.MassNear(v, 1e-9), 0.5, 0.05);
    EXPECT_NEAR(r.empirical2.MassNear(v, 1e-9), 0.5, 0.05);
  }
}

TEST(RunFictitiousPlay, EmpiricalMixtureIsUniformOverHistory) {
  const GameDefinition g = EmbedMatrixGame(Matrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
  const ExhaustiveOracle o1(g, Player::kOne, SimplexVertices(3));
  const ExhaustiveOracle o2(g, Player::kTwo, SimplexVertices(3));
  FictitiousPlayOptions options;
  options.iterations = 37;
  const FpResult r = RunFictitiousPlay(g, o1, o2, SimplexVertices(3)[0],
                                       SimplexVertices(3)[1], options);
  ASSERT_EQ(r.history1.size(), 38u);
  // The final empirical mixture is the one the last responses answered.
  for (const StrategyPoint& v : SimplexVertices(3)) {
    double count = 0.0;
    for (std::size_t k = 0; k + 1 < r.history1.size(); ++k) {
      count += r.history1[k] == v ? 1.0 : 0.0;
    }
    EXPECT_NEAR(r.empirical1.MassNear(v, 1e-9), count / 37.0, 1e-12);
  }
  double total = 0.0;
  for (double w : r.empirical2.weights()) total += w;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(RunFictitiousPlay, Errors) {
  const GameDefinition g1 = MakePolynomialGame();
  const GridOracle o1(g1, Player::kOne, 1e-2);
  const GridOracle o2(g1, Player::kTwo, 1e-2);
  FictitiousPlayOptions options;
  options.iterations = 0;
  EXPECT_THROW(RunFictitiousPlay(g1, o1, o2, {0.0}, {0.0}, options),
               ParameterError);
  options.iterations = 1;
  EXPECT_THROW(RunFictitiousPlay(g1, o2, o1, {0.0}, {0.0}, options),
               ParameterError);
  EXPECT_THROW(RunFictitiousPlay(g1, o1, o2, {2.0}, {0.0}, options),
               DomainError);
}

TEST(RunFictitiousPlay, DeterministicAcrossThreadingModes) {
  const GameDefinition g2 = MakeTownsendGame();
  const GridOracle o1(g2, Player::kOne, 1e-3, kTownsendLipschitz);
  const GridOracle o2(g2, Player::kTwo, 1e-3, kTownsendLipschitz);
  FictitiousPlayOptions options;
  options.iterations = 30;
  options.parallel_oracles = true;
  const FpResult a = RunFictitiousPlay(g2, o1, o2, {0.4}, {-1.2}, options);
  options.parallel_oracles = false;
  const FpResult b = RunFictitiousPlay(g2, o1, o2, {0.4}, {-1.2}, options);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    EXPECT_EQ(a.trace[i].lower, b.trace[i].lower);
    EXPECT_EQ(a.trace[i].upper, b.trace[i].upper);
  }
  EXPECT_EQ(a.history1, b.history1);
  EXPECT_EQ(a.history2, b.history2);
}

TEST(RunFictitiousPlay, PolynomialBracketAndSlowerThanDoubleOracle) {
  const GameDefinition g1 = MakePolynomialGame();
  const GridOracle o1(g1, Player::kOne, 1e-4, kPolynomialLipschitz);
  const GridOracle o2(g1, Player::kTwo, 1e-4, kPolynomialLipschitz);
  const double tol = 1e-6 + o1.accuracy() + o2.accuracy();

  FictitiousPlayOptions fp_options;
  fp_options.iterations = 500;
  const FpResult fp = RunFictitiousPlay(g1, o1, o2, {0.0}, {0.0}, fp_options);
  for (const FpRecord& rec : fp.trace) {
    EXPECT_LE(rec.lower, kPolynomialGameValue + tol);
    EXPECT_GE(rec.upper, kPolynomialGameValue - tol);
  }

  DoubleOracleOptions do_options;
  do_options.epsilon = 1e-3;
  do_options.max_iters = 50;
  const SolveResult dor = RunDoubleOracle(g1, o1, o2, {{0.0}}, {{0.0}}, do_options);
  const std::size_t at = std::min<std::size_t>(50, dor.trace.size()) - 1;
  EXPECT_GT(fp.trace.back().gap(), dor.trace[at].gap());
}

}  // namespace
}  // namespace contdo
