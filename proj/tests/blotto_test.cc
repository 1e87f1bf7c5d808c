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

#include "contdo/blotto.h"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "contdo/double_oracle.h"
#include "contdo/errors.h"
#include "contdo/matrix_game.h"
#include "test_util.h"

namespace contdo {
namespace {

const BlottoGame kUnit16{{1.0, 1.0, 1.0}, 1.0 / 16};
const BlottoGame kUnit8{{1.0, 1.0, 1.0}, 1.0 / 8};

double MixtureValue(const StrategyPoint& x, const FiniteMixedStrategy& opp,
                    const BlottoGame& game) {
  double v = 0.0;
  for (std::size_t i = 0; i < opp.size(); ++i) {
    v += opp.weight(i) * BlottoUtility(x, opp.atom(i), game);
  }
  return v;
}

TEST(ContestPayoff, Branches) {
  for (double c : {1.0, 0.25, 1.0 / 16}) {
    EXPECT_EQ(ContestPayoff(0.0, c), 0.0);
    EXPECT_EQ(ContestPayoff(c, c), 1.0);
    EXPECT_EQ(ContestPayoff(-2.0 * c, c), -1.0);
    EXPECT_DOUBLE_EQ(ContestPayoff(c / 2, c), 0.5);
  }
  EXPECT_THROW(ContestPayoff(0.1, 0.0), ParameterError);
  EXPECT_THROW(ContestPayoff(0.1, -1.0), ParameterError);
}

TEST(ContestPayoffProperty, SaturatesToSign) {
  testing::Gen gen(61);
  for (int trial = 0; trial < 500; ++trial) {
    const double c = gen.Uniform(1e-3, 1.0);
    const double z = gen.Uniform(c, 2.0);
    EXPECT_EQ(ContestPayoff(z, c), 1.0);
    EXPECT_EQ(ContestPayoff(-z, c), -1.0);
    const double inner = gen.Uniform(-c, c);
    EXPECT_EQ(ContestPayoff(inner, c), -ContestPayoff(-inner, c));
  }
}

TEST(BlottoUtility, Examples) {
  const StrategyPoint x{0.2, 0.3, 0.5};
  EXPECT_EQ(BlottoUtility(x, x, kUnit16), 0.0);
  EXPECT_EQ(BlottoUtility({1, 0, 0}, {0, 1, 0}, kUnit16), 0.0);
  EXPECT_EQ(BlottoUtility({1, 0, 0}, {0, 0, 1}, BlottoGame{{1, 2, 3}, 1.0 / 16}),
            -2.0);
  EXPECT_THROW(BlottoUtility({1, 0}, {0, 0, 1}, kUnit16), DomainError);
}

TEST(BlottoUtilityProperty, Antisymmetric) {
  testing::Gen gen(62);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = gen.Int(2, 5);
    BlottoGame game{gen.Weights(n), gen.Uniform(0.01, 1.0)};
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t j = 0; j < n; ++j) {
      xs[j] = gen.Uniform(0.0, 1.0);
      ys[j] = gen.Uniform(0.0, 1.0);
    }
    const StrategyPoint x(xs);
    const StrategyPoint y(ys);
    EXPECT_EQ(BlottoUtility(x, y, game), -BlottoUtility(y, x, game));
  }
}

TEST(BlottoGame, Validation) {
  EXPECT_THROW(MakeBlottoGame(BlottoGame{{1.0}, 0.1}), ParameterError);
  EXPECT_THROW(MakeBlottoGame(BlottoGame{{1.0, 0.0}, 0.1}), ParameterError);
  EXPECT_THROW(MakeBlottoGame(BlottoGame{{1.0, 1.0}, 0.0}), ParameterError);
  EXPECT_THROW(MakeBlottoGame(BlottoGame{{1.0, 1.0}, 1.5}), ParameterError);
  const GameDefinition g = MakeBlottoGame(kUnit16);
  EXPECT_EQ(g.space1.kind(), StrategySpace::Kind::kSimplex);
  EXPECT_EQ(g.space2.dim(), 3u);
}

TEST(SimplexGrid, SmallGrids) {
  const auto g = SimplexGrid(3, 0.5);
  ASSERT_EQ(g.size(), 6u);
  const std::vector<StrategyPoint> expected = {
      {0, 0, 1}, {0, 0.5, 0.5}, {0, 1, 0}, {0.5, 0, 0.5}, {0.5, 0.5, 0},
      {1, 0, 0}};
  EXPECT_EQ(g, expected);

  const auto line = SimplexGrid(2, 0.25);
  const std::vector<StrategyPoint> line_expected = {
      {0, 1}, {0.25, 0.75}, {0.5, 0.5}, {0.75, 0.25}, {1, 0}};
  EXPECT_EQ(line, line_expected);
}

TEST(SimplexGrid, CountsAndOrder) {
  const auto g = SimplexGrid(3, 1.0 / 16);
  EXPECT_EQ(g.size(), 153u);
  EXPECT_EQ(SimplexGridSize(3, 16), 153u);
  EXPECT_EQ(SimplexGridSize(4, 8), 165u);
  EXPECT_EQ(SimplexGrid(4, 1.0 / 8).size(), 165u);
  for (std::size_t i = 1; i < g.size(); ++i) {
    EXPECT_TRUE(std::lexicographical_compare(
        g[i - 1].coords().begin(), g[i - 1].coords().end(),
        g[i].coords().begin(), g[i].coords().end()));
  }
  for (const auto& p : g) {
    double sum = 0.0;
    for (double v : p.coords()) sum += v;
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(SimplexGrid, Errors) {
  EXPECT_THROW(SimplexGrid(3, 0.3), ParameterError);
  EXPECT_THROW(GridDivisions(0.0), ParameterError);
  EXPECT_THROW(SimplexGrid(10, 1.0 / 64), ResourceLimitError);
  try {
    GridDivisions(0.3);
  } catch (const ParameterError& e) {
    EXPECT_NE(std::string(e.what()).find("1/c"), std::string::npos);
  }
}

TEST(BlottoBigM, Sixteenth) {
  const BigMConstants m = BlottoBigM(1.0 / 16);
  EXPECT_DOUBLE_EQ(m.s_lower, 15.0);
  EXPECT_DOUBLE_EQ(m.t_upper, 15.0);
  EXPECT_DOUBLE_EQ(m.t_lower, 17.0);
  EXPECT_DOUBLE_EQ(m.s_upper, 17.0);
}

TEST(BuildBestResponseMilp, ModelSize) {
  const auto opp = FiniteMixedStrategy(StrategyPoint{0.5, 0.25, 0.25});
  const BlottoMilp milp = BuildBestResponseMilp(opp, kUnit16);
  EXPECT_EQ(milp.model.lp.num_vars(), 3u + 6u + 6u);
  EXPECT_EQ(milp.model.binary_vars.size(), 6u);
  EXPECT_EQ(milp.model.lp.num_rows(), 1u + 6u * 3u);

  const auto opp4 = FiniteMixedStrategy::MergeDuplicates(
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0.5, 0.5, 0}}, {1, 1, 1, 1});
  const BlottoMilp big = BuildBestResponseMilp(opp4, kUnit16);
  EXPECT_EQ(big.model.binary_vars.size(), 2u * 4u * 3u);
  EXPECT_EQ(big.model.lp.num_vars(), 3u + 4u * 4u * 3u);
}

TEST(BuildBestResponseMilp, SingleBattlefieldIsForced) {
  const BlottoGame one{{2.5}, 0.25};
  const auto opp = FiniteMixedStrategy(StrategyPoint{1.0});
  const MilpSolution s = SolveMilp(BuildBestResponseMilp(opp, one).model);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.x[0], 1.0, 1e-9);
  EXPECT_NEAR(s.objective, 2.5 * ContestPayoff(0.0, 0.25), 1e-9);
}

TEST(BuildBestResponseMilp, RejectsInvalidAtoms) {
  EXPECT_THROW(BuildBestResponseMilp(FiniteMixedStrategy(StrategyPoint{0.5, 0.6, 0.0}),
                                     kUnit16),
               DomainError);
  EXPECT_THROW(BuildBestResponseMilp(FiniteMixedStrategy(StrategyPoint{0.5, 0.5}),
                                     kUnit16),
               DomainError);
  EXPECT_THROW(BuildBestResponseMilp(FiniteMixedStrategy(StrategyPoint{1.2, -0.2, 0.0}),
                                     kUnit16),
               DomainError);
}

TEST(MilpBestResponse, AgainstUniformOpponent) {
  const auto opp = FiniteMixedStrategy(StrategyPoint{1.0 / 3, 1.0 / 3, 1.0 / 3});
  const OracleAnswer a = MilpBestResponse(opp, kUnit8);
  EXPECT_NEAR(a.value, 1.0, 1e-6);
  EXPECT_NEAR(BlottoUtility(a.point, opp.atom(0), kUnit8), 1.0, 1e-9);
  EXPECT_NEAR(BlottoUtility({1.0 / 3 + 0.125, 1.0 / 3 + 0.125, 1.0 / 3 - 0.25},
                            opp.atom(0), kUnit8),
              1.0, 1e-12);
}

TEST(MilpBestResponse, AgainstVertexOpponent) {
  const auto opp = FiniteMixedStrategy(StrategyPoint{1.0, 0.0, 0.0});
  const OracleAnswer a = MilpBestResponse(opp, kUnit16);
  EXPECT_NEAR(a.value, 1.0, 1e-6);
  EXPECT_TRUE(StrategySpace::Simplex(3).Contains(a.point));
  EXPECT_NEAR(BlottoUtility(a.point, opp.atom(0), kUnit16), a.value, 1e-12);
}

TEST(MilpBestResponse, MirroringGivesNonnegativeValue) {
  testing::Gen gen(63);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> y(3);
    double sum = 0.0;
    for (double& v : y) sum += (v = gen.Uniform(0.0, 1.0));
    for (double& v : y) v /= sum;
    const auto opp = FiniteMixedStrategy(StrategyPoint(y));
    EXPECT_GE(MilpBestResponse(opp, kUnit16).value, -1e-9);
  }
}

TEST(MilpBestResponse, PlayerTwoUsesAntisymmetry) {
  const auto opp = FiniteMixedStrategy::MergeDuplicates(
      {{0.5, 0.25, 0.25}, {0.125, 0.375, 0.5}}, {0.6, 0.4});
  const OracleAnswer a1 = MilpBestResponse(opp, kUnit8, Player::kOne);
  const OracleAnswer a2 = MilpBestResponse(opp, kUnit8, Player::kTwo);
  EXPECT_NEAR(a2.value, -a1.value, 1e-9);
  double v = 0.0;
  for (std::size_t i = 0; i < opp.size(); ++i) {
    v += opp.weight(i) * BlottoUtility(opp.atom(i), a2.point, kUnit8);
  }
  EXPECT_NEAR(a2.value, v, 1e-12);
}

TEST(GridEnumerationBestResponse, OnGridOpponent) {
  const auto opp = FiniteMixedStrategy(StrategyPoint{0.375, 0.375, 0.25});
  const OracleAnswer a = GridEnumerationBestResponse(opp, kUnit8, 0.125);
  EXPECT_NEAR(a.value, 1.0, 1e-12);
  EXPECT_NEAR(BlottoUtility({0.5, 0.5, 0.0}, opp.atom(0), kUnit8), 1.0, 1e-12);
  // First maximizer in lexicographic order.
  for (const StrategyPoint& g : SimplexGrid(3, 0.125)) {
    const double v = BlottoUtility(g, opp.atom(0), kUnit8);
    if (v >= 1.0 - 1e-12) {
      EXPECT_EQ(a.point, g);
      break;
    }
  }
}

TEST(GridEnumerationBestResponse, TwoBattlefieldsLexicographicWinner) {
  const BlottoGame two{{1.0, 1.0}, 0.25};
  const auto opp = FiniteMixedStrategy(StrategyPoint{1.0, 0.0});
  const OracleAnswer a = GridEnumerationBestResponse(opp, two, 0.25);
  EXPECT_EQ(a.point, (StrategyPoint{0.0, 1.0}));
  EXPECT_EQ(a.value, 0.0);
}

TEST(GridEnumerationBestResponse, UniformOverGridIsNonnegative) {
  const auto grid = SimplexGrid(3, 0.25);
  const auto opp = FiniteMixedStrategy::MergeDuplicates(
      grid, std::vector<double>(grid.size(), 1.0));
  EXPECT_GE(GridEnumerationBestResponse(opp, BlottoGame{{1, 1, 1}, 0.25}, 0.25).value,
            -1e-12);
}

TEST(BlottoEnumerationOracle, DefaultsToGameStep) {
  const BlottoEnumerationOracle oracle(kUnit8, Player::kTwo);
  const auto opp = FiniteMixedStrategy(StrategyPoint{0.375, 0.375, 0.25});
  const OracleAnswer a = oracle.Respond(opp);
  EXPECT_NEAR(a.value, -1.0, 1e-12);
  EXPECT_EQ(oracle.accuracy(), 0.0);
  EXPECT_THROW(BlottoEnumerationOracle(BlottoGame{{1, 1, 1}, 0.3}, Player::kOne),
               ParameterError);
}

// With x and y pinned, the constraint system leaves exactly one s and one t:
// maximizing and minimizing each of them gives the same number.
TEST(LinearizationProperty, AuxiliariesAreDetermined) {
  testing::Gen gen(64);
  for (int trial = 0; trial < 200; ++trial) {
    const double c = trial % 4 == 0 ? 1.0 / gen.Int(1, 20) : gen.Uniform(0.02, 1.0);
    const double x = gen.Uniform(0.0, 1.0);
    const double y = gen.Uniform(0.0, 1.0);
    const BlottoGame game{{1.0, 1.0}, c};
    BlottoMilp milp =
        BuildBestResponseMilp(FiniteMixedStrategy(StrategyPoint{y, 1.0 - y}), game);
    milp.model.lp.lower[milp.x_var(0)] = milp.model.lp.upper[milp.x_var(0)] = x;
    milp.model.lp.lower[milp.x_var(1)] = milp.model.lp.upper[milp.x_var(1)] = 1.0 - x;

    auto extreme = [&](std::size_t var, double sign) {
      MilpModel m = milp.model;
      std::fill(m.lp.objective.begin(), m.lp.objective.end(), 0.0);
      m.lp.objective_constant = 0.0;
      m.lp.objective[var] = sign;
      const MilpSolution s = SolveMilp(m);
      EXPECT_EQ(s.status, LpStatus::kOptimal);
      return s.x[var];
    };
    const double s_expected = std::max((x - y + c) / c, 0.0);
    const double t_expected = std::max((x - y - c) / c, 0.0);
    const double s_hi = extreme(milp.s_var(0, 0), 1.0);
    const double s_lo = extreme(milp.s_var(0, 0), -1.0);
    const double t_hi = extreme(milp.t_var(0, 0), 1.0);
    const double t_lo = extreme(milp.t_var(0, 0), -1.0);
    EXPECT_NEAR(s_hi, s_expected, 1e-9) << "x=" << x << " y=" << y << " c=" << c;
    EXPECT_NEAR(s_lo, s_expected, 1e-9) << "x=" << x << " y=" << y << " c=" << c;
    EXPECT_NEAR(t_hi, t_expected, 1e-9) << "x=" << x << " y=" << y << " c=" << c;
    EXPECT_NEAR(t_lo, t_expected, 1e-9) << "x=" << x << " y=" << y << " c=" << c;
    EXPECT_NEAR(s_hi - t_hi - 1.0, ContestPayoff(x - y, c), 1e-9);
  }
}

TEST(OracleEquivalenceProperty, MilpNeverBelowEnumeration) {
  testing::Gen gen(65);
  for (int trial = 0; trial < 24; ++trial) {
    const int divisions = trial % 2 == 0 ? 4 : 8;
    const BlottoGame game{{1.0, 1.0, 1.0}, 1.0 / divisions};
    const auto opp = gen.GridMixture(3, divisions, gen.Int(1, 6));
    const OracleAnswer milp = MilpBestResponse(opp, game);
    const OracleAnswer grid = GridEnumerationBestResponse(opp, game, game.c);
    EXPECT_GE(milp.value, grid.value - 1e-6) << "trial " << trial;
    EXPECT_NEAR(milp.value, MixtureValue(milp.point, opp, game), 1e-12);
    // When the MILP lands on the grid, both are exact over the same points.
    bool on_grid = true;
    for (double v : milp.point.coords()) {
      on_grid &= std::abs(v * divisions - std::round(v * divisions)) < 1e-7;
    }
    if (on_grid) {
      EXPECT_NEAR(milp.value, grid.value, 1e-6) << "trial " << trial;
    }
  }
}

TEST(BlottoDoubleOracle, SymmetricGameBracketsZero) {
  for (BlottoGame game : {kUnit8, BlottoGame{{1, 1, 1}, 0.25}}) {
    const BlottoEnumerationOracle e1(game, Player::kOne);
    const BlottoEnumerationOracle e2(game, Player::kTwo);
    const BlottoMilpOracle m1(game, Player::kOne);
    const BlottoMilpOracle m2(game, Player::kTwo);
    const bool use_milp = game.c == 0.25;
    const BestResponseOracle& o1 = use_milp ? static_cast<const BestResponseOracle&>(m1) : e1;
    const BestResponseOracle& o2 = use_milp ? static_cast<const BestResponseOracle&>(m2) : e2;
    DoubleOracleOptions options;
    options.epsilon = 1e-6;
    options.max_iters = 60;
    const SolveResult r =
        RunDoubleOracle(MakeBlottoGame(game), o1, o2, SimplexVertices(3),
                        SimplexVertices(3), options);
    const double tol = 1e-7 + o1.accuracy() + o2.accuracy();
    for (const IterationRecord& rec : r.trace) {
      EXPECT_LE(rec.lower, tol);
      EXPECT_GE(rec.upper, -tol);
    }
    EXPECT_EQ(r.terminated_by, Termination::kGap);
    EXPECT_NEAR(r.value, 0.0, 1e-6);
  }
}

TEST(BlottoDoubleOracle, FullGridConvergesInOneIteration) {
  const BlottoEnumerationOracle o1(kUnit16, Player::kOne);
  const BlottoEnumerationOracle o2(kUnit16, Player::kTwo);
  DoubleOracleOptions options;
  options.epsilon = 1e-6;
  const auto grid = SimplexGrid(3, 1.0 / 16);
  const SolveResult r =
      RunDoubleOracle(MakeBlottoGame(kUnit16), o1, o2, grid, grid, options);
  EXPECT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.terminated_by, Termination::kGap);
  EXPECT_LE(r.gap, 1e-6);
}

}  // namespace
}  // namespace contdo
