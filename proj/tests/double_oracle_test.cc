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

#include "contdo/double_oracle.h"

#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "contdo/errors.h"
#include "contdo/interval_games.h"
#include "contdo/matrix_game.h"
#include "test_util.h"

namespace contdo {
namespace {

// Answers with a fixed point and a caller-chosen reported value.
class FixedOracle : public BestResponseOracle {
 public:
  FixedOracle(Player player, StrategyPoint point, double value)
      : player_(player), point_(std::move(point)), value_(value) {}

  Player player() const override { return player_; }
  OracleAnswer Respond(const FiniteMixedStrategy&) const override {
    return {point_, value_};
  }
  double accuracy() const override { return 0.0; }
  std::string name() const override { return "fixed"; }

 private:
  Player player_;
  StrategyPoint point_;
  double value_;
};

struct FiniteSetup {
  GameDefinition game;
  ExhaustiveOracle oracle1;
  ExhaustiveOracle oracle2;

  explicit FiniteSetup(const Matrix& a)
      : game(EmbedMatrixGame(a)),
        oracle1(game, Player::kOne, SimplexVertices(a.rows())),
        oracle2(game, Player::kTwo, SimplexVertices(a.cols())) {}
};

struct G1Setup {
  GameDefinition game = MakePolynomialGame();
  GridOracle oracle1{game, Player::kOne, 1e-4, kPolynomialLipschitz};
  GridOracle oracle2{game, Player::kTwo, 1e-4, kPolynomialLipschitz};
  double accuracy() const { return oracle1.accuracy() + oracle2.accuracy(); }
};

TEST(RunDoubleOracle, RockPaperScissorsExact) {
  const FiniteSetup s(Matrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
  DoubleOracleOptions options;
  options.epsilon = 0.0;
  const SolveResult r = RunDoubleOracle(s.game, s.oracle1, s.oracle2,
                                        {SimplexVertices(3)[0]},
                                        {SimplexVertices(3)[0]}, options);
  EXPECT_EQ(r.terminated_by, Termination::kGap);
  EXPECT_LE(std::abs(r.gap), 1e-9);
  EXPECT_NEAR(r.value, 0.0, 1e-9);
  EXPECT_LE(r.trace.size(), 4u);
  for (const StrategyPoint& v : SimplexVertices(3)) {
    EXPECT_NEAR(r.p_star.MassNear(v, 1e-9), 1.0 / 3, 1e-9);
  }
}

TEST(RunDoubleOracle, PolynomialGameFromOrigin) {
  const G1Setup s;
  DoubleOracleOptions options;
  options.epsilon = 1e-3;
  const SolveResult r =
      RunDoubleOracle(s.game, s.oracle1, s.oracle2, {{0.0}}, {{0.0}}, options);
  EXPECT_EQ(r.terminated_by, Termination::kGap);
  EXPECT_LE(r.gap, 1e-3 + kStoppingSlack);
  EXPECT_NEAR(r.value, kPolynomialGameValue, 1e-3);
  // First iteration is the analytic (lower, upper) = (-1, 0) pair.
  EXPECT_NEAR(r.trace[0].lower, -1.0, 1e-12);
  EXPECT_NEAR(r.trace[0].upper, 0.0, 1e-12);
}

TEST(RunDoubleOracle, ParallelAndSequentialAgree) {
  const G1Setup s;
  DoubleOracleOptions options;
  options.parallel_oracles = true;
  const SolveResult a =
      RunDoubleOracle(s.game, s.oracle1, s.oracle2, {{0.3}}, {{-0.6}}, options);
  options.parallel_oracles = false;
  const SolveResult b =
      RunDoubleOracle(s.game, s.oracle1, s.oracle2, {{0.3}}, {{-0.6}}, options);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    EXPECT_EQ(a.trace[i].lower, b.trace[i].lower);
    EXPECT_EQ(a.trace[i].upper, b.trace[i].upper);
    EXPECT_EQ(a.trace[i].added_x, b.trace[i].added_x);
    EXPECT_EQ(a.trace[i].added_y, b.trace[i].added_y);
  }
}

TEST(RunDoubleOracle, IterationCap) {
  const G1Setup s;
  DoubleOracleOptions options;
  options.epsilon = 0.0;
  options.max_iters = 3;
  int callbacks = 0;
  options.on_iteration = [&](const IterationRecord&) { ++callbacks; };
  const SolveResult r =
      RunDoubleOracle(s.game, s.oracle1, s.oracle2, {{0.0}}, {{0.0}}, options);
  EXPECT_EQ(r.terminated_by, Termination::kIterationCap);
  EXPECT_EQ(r.trace.size(), 3u);
  EXPECT_EQ(callbacks, 3);
  EXPECT_STREQ(ToString(r.terminated_by), "iteration_cap");
}

TEST(RunDoubleOracle, ParameterErrors) {
  const G1Setup s;
  DoubleOracleOptions options;
  options.epsilon = -1.0;
  EXPECT_THROW(RunDoubleOracle(s.game, s.oracle1, s.oracle2, {{0.0}}, {{0.0}},
                               options),
               ParameterError);
  options.epsilon = 1e-3;
  options.max_iters = 0;
  EXPECT_THROW(RunDoubleOracle(s.game, s.oracle1, s.oracle2, {{0.0}}, {{0.0}},
                               options),
               ParameterError);
  EXPECT_THROW(RunDoubleOracle(s.game, s.oracle2, s.oracle1, {{0.0}}, {{0.0}}),
               ParameterError);
  EXPECT_THROW(RunDoubleOracle(s.game, s.oracle1, s.oracle2, {}, {{0.0}}),
               InvalidStrategyError);
  EXPECT_THROW(RunDoubleOracle(s.game, s.oracle1, s.oracle2, {{5.0}}, {{0.0}}),
               DomainError);
}

TEST(RunDoubleOracle, OracleOutsideSpaceViolatesContract) {
  const G1Setup s;
  const FixedOracle bad(Player::kOne, StrategyPoint{1.5}, 0.0);
  EXPECT_THROW(RunDoubleOracle(s.game, bad, s.oracle2, {{0.0}}, {{0.0}}),
               OracleContractError);
}

TEST(RunDoubleOracle, MisreportedValueViolatesContract) {
  const G1Setup s;
  // u1(0.5, 0) = -0.5, reported as 3.
  const FixedOracle liar(Player::kOne, StrategyPoint{0.5}, 3.0);
  EXPECT_THROW(RunDoubleOracle(s.game, liar, s.oracle2, {{0.0}}, {{0.0}}),
               OracleContractError);
}

TEST(RunDoubleOracle, TiledGameStillTerminates) {
  const GameDefinition g1 = MakePolynomialGame();
  const GameDefinition tiled = MakeTiledGame(g1, 3.0);
  const AlternatingTileOracle o1(tiled, g1, 3.0, 1e-3, kPolynomialLipschitz);
  const GridOracle o2(tiled, Player::kTwo, 1e-3, kPolynomialLipschitz);
  DoubleOracleOptions options;
  options.epsilon = 1e-3;
  const SolveResult r = RunDoubleOracle(tiled, o1, o2, {{0.0}}, {{0.0}}, options);
  EXPECT_EQ(r.terminated_by, Termination::kGap);
  EXPECT_NEAR(r.value, kPolynomialGameValue, 1e-3);
  bool second_tile = false;
  for (const IterationRecord& rec : r.trace) second_tile |= rec.added_x[0] > 1.5;
  EXPECT_TRUE(second_tile);
}

TEST(BoundsFromProfile, PurePolynomialProfile) {
  const G1Setup s;
  const ValueBounds b = BoundsFromProfile(
      s.game, FiniteMixedStrategy(StrategyPoint{0.0}),
      FiniteMixedStrategy(StrategyPoint{0.0}), s.oracle1, s.oracle2);
  EXPECT_NEAR(b.lower, -1.0, 1e-12);
  EXPECT_NEAR(b.upper, 0.0, 1e-12);
  EXPECT_EQ(b.best_y, StrategyPoint{1.0});
  EXPECT_EQ(b.best_x, StrategyPoint{0.0});
}

TEST(BoundsFromProfile, EquilibriumProfile) {
  const G1Setup s;
  const auto q = FiniteMixedStrategy::MergeDuplicates({{1.0}, {-1.0}}, {0.78, 0.22});
  const ValueBounds b = BoundsFromProfile(
      s.game, FiniteMixedStrategy(StrategyPoint{0.2}), q, s.oracle1, s.oracle2);
  EXPECT_NEAR(b.lower, -0.48, 1e-7);
  EXPECT_NEAR(b.upper, -0.48, 1e-7);
}

TEST(DoubleOracleProperty, FiniteGamesInvariants) {
  testing::Gen gen(71);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix a = gen.RandomMatrix(gen.Int(1, 6), gen.Int(1, 6));
    const FiniteSetup s(a);
    const auto rows = SimplexVertices(a.rows());
    const auto cols = SimplexVertices(a.cols());
    DoubleOracleOptions options;
    options.epsilon = 0.0;
    options.parallel_oracles = gen.Coin();
    const SolveResult r = RunDoubleOracle(
        s.game, s.oracle1, s.oracle2,
        {rows[gen.Int(0, static_cast<int>(rows.size()) - 1)]},
        {cols[gen.Int(0, static_cast<int>(cols.size()) - 1)]}, options);
    const double value = SolveZeroSum(a).value;

    EXPECT_EQ(r.terminated_by, Termination::kGap) << "trial " << trial;
    EXPECT_NEAR(r.value, value, 1e-7);
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      const IterationRecord& rec = r.trace[i];
      EXPECT_LE(rec.lower, rec.subgame_value + 1e-7);
      EXPECT_LE(rec.subgame_value, rec.upper + 1e-7);
      EXPECT_LE(rec.lower, value + 1e-7);
      EXPECT_GE(rec.upper, value - 1e-7);
      EXPECT_GE(rec.gap(), -1e-7);
      if (rec.stabilized()) {
        EXPECT_LE(rec.gap(), 1e-7);
      }
      if (i + 1 < r.trace.size()) {
        const IterationRecord& next = r.trace[i + 1];
        EXPECT_EQ(next.size_x, rec.size_x + (rec.new_x ? 1 : 0));
        EXPECT_EQ(next.size_y, rec.size_y + (rec.new_y ? 1 : 0));
      }
    }
    for (const StrategyPoint& atom : r.p_star.atoms()) {
      bool found = false;
      for (const StrategyPoint& x : r.strategies_x) found |= x.SameAs(atom);
      EXPECT_TRUE(found);
    }
    for (const StrategyPoint& atom : r.q_star.atoms()) {
      bool found = false;
      for (const StrategyPoint& y : r.strategies_y) found |= y.SameAs(atom);
      EXPECT_TRUE(found);
    }
  }
}

TEST(DoubleOracleProperty, PolynomialSandwichFromRandomStarts) {
  const G1Setup s;
  testing::Gen gen(72);
  for (int trial = 0; trial < 4; ++trial) {
    DoubleOracleOptions options;
    options.epsilon = 1e-3;
    const SolveResult r = RunDoubleOracle(
        s.game, s.oracle1, s.oracle2, {{gen.Uniform(-1.0, 1.0)}},
        {{gen.Uniform(-1.0, 1.0)}}, options);
    const double tol = 1e-6 + s.accuracy();
    for (const IterationRecord& rec : r.trace) {
      EXPECT_LE(rec.lower, kPolynomialGameValue + tol);
      EXPECT_GE(rec.upper, kPolynomialGameValue - tol);
      EXPECT_GE(rec.gap(), -2.0 * s.accuracy());
    }
    EXPECT_EQ(r.terminated_by, Termination::kGap);
  }
}

}  // namespace
}  // namespace contdo
