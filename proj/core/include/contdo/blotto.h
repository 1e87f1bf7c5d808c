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

// Continuous Colonel Blotto with a saturated linear contest function.
//
// Both players split one unit of force over n battlefields. Battlefield j
// pays a_j * l(x_j - y_j) to player 1, where
//
//   l(z) = -1 for z <= -c,   z / c on [-c, c],   1 for z >= c.
//
// Best responses to a finite opponent mixture are found either with the
// big-M mixed-integer model below or by enumerating the simplex grid of
// step c.

#ifndef CONTDO_BLOTTO_H_
#define CONTDO_BLOTTO_H_

#include <cstddef>
#include <string>
#include <vector>

#include "contdo/game.h"
#include "contdo/milp.h"
#include "contdo/oracle.h"

namespace contdo {

struct BlottoGame {
  std::vector<double> weights;  // a_j > 0
  double c = 1.0 / 16.0;        // 0 < c <= 1

  std::size_t n() const { return weights.size(); }

  // Throws ParameterError unless n >= min_battlefields, a_j > 0, 0 < c <= 1.
  void Validate(std::size_t min_battlefields = 2) const;
};

// Contest function l(z) with sharpness c. Throws ParameterError if c <= 0.
double ContestPayoff(double z, double c);

// sum_j a_j l(x_j - y_j). Throws DomainError on dimension mismatch.
double BlottoUtility(const StrategyPoint& x, const StrategyPoint& y,
                     const BlottoGame& game);

GameDefinition MakeBlottoGame(const BlottoGame& game);

// Returns k = 1 / step if it is an integer (within 1e-9), else throws
// ParameterError.
std::size_t GridDivisions(double step);

// Number of points of the simplex grid: C(k + n - 1, n - 1).
std::size_t SimplexGridSize(std::size_t n, std::size_t divisions);

// All allocations with coordinates in {0, step, ..., 1} summing to one, in
// ascending lexicographic order. Throws ResourceLimitError if the grid has
// more than max_points points.
std::vector<StrategyPoint> SimplexGrid(std::size_t n, double step,
                                       std::size_t max_points = 1'000'000);

// Deactivation constants for the s and t linearizations.
struct BigMConstants {
  double s_lower;  // 1/c - 1
  double s_upper;  // 1/c + 1
  double t_lower;  // 1/c + 1
  double t_upper;  // 1/c - 1
};
BigMConstants BlottoBigM(double c);

// Best-response MILP against an opponent mixture (y_i, q_i), i < k:
//
//   max  sum_i q_i sum_j a_j (s_ij - t_ij - 1)
//   s.t. x in the simplex,
//        s_ij >= 0,  s_ij >= (x_j - y_ij + c) / c,
//        s_ij <= (x_j - y_ij + c) / c + Ms_l (1 - z_ij),  s_ij <= Ms_u z_ij,
//        t_ij >= 0,  t_ij >= (x_j - y_ij - c) / c,
//        t_ij <= (x_j - y_ij - c) / c + Mt_l (1 - w_ij),  t_ij <= Mt_u w_ij,
//        z_ij, w_ij binary.
//
// At every feasible point s_ij - t_ij - 1 = l(x_j - y_ij), so the optimum is
// the best-response value.
struct BlottoMilp {
  MilpModel model;
  std::size_t n = 0;
  std::size_t k = 0;
  BigMConstants big_m{};

  std::size_t x_var(std::size_t j) const { return j; }
  std::size_t s_var(std::size_t i, std::size_t j) const {
    return n + 4 * (i * n + j);
  }
  std::size_t t_var(std::size_t i, std::size_t j) const {
    return s_var(i, j) + 1;
  }
  std::size_t z_var(std::size_t i, std::size_t j) const {
    return s_var(i, j) + 2;
  }
  std::size_t w_var(std::size_t i, std::size_t j) const {
    return s_var(i, j) + 3;
  }
};

// Requires every opponent atom to be an allocation in [0, 1]^n (the big-M
// constants are only valid there); n = 1 is accepted.
BlottoMilp BuildBestResponseMilp(const FiniteMixedStrategy& opponent,
                                 const BlottoGame& game);

inline constexpr double kMilpOracleAccuracy = 1e-6;

// Solves the MILP for player 1. For player 2 the game's antisymmetry
// u(x, y) = -u(y, x) turns the minimization into the same model. The value
// reported is the exact expected utility of the returned allocation.
OracleAnswer MilpBestResponse(const FiniteMixedStrategy& opponent,
                              const BlottoGame& game,
                              Player player = Player::kOne,
                              const MilpOptions& options = {});

// Exhaustive search over SimplexGrid(n, grid_step); exact over the grid,
// lexicographically smallest point on ties.
OracleAnswer GridEnumerationBestResponse(const FiniteMixedStrategy& opponent,
                                         const BlottoGame& game,
                                         double grid_step,
                                         Player player = Player::kOne);

class BlottoMilpOracle : public BestResponseOracle {
 public:
  BlottoMilpOracle(BlottoGame game, Player player, MilpOptions options = {});

  Player player() const override { return player_; }
  OracleAnswer Respond(const FiniteMixedStrategy& opponent) const override;
  double accuracy() const override { return kMilpOracleAccuracy; }
  std::string name() const override { return "milp"; }

 private:
  BlottoGame game_;
  Player player_;
  MilpOptions options_;
};

// Restricted to the grid, so it is exact only when a best response lies on
// the grid; declared accuracy is zero.
class BlottoEnumerationOracle : public BestResponseOracle {
 public:
  // grid_step <= 0 selects the game's own c.
  BlottoEnumerationOracle(BlottoGame game, Player player,
                          double grid_step = 0.0);

  Player player() const override { return player_; }
  OracleAnswer Respond(const FiniteMixedStrategy& opponent) const override;
  double accuracy() const override { return 0.0; }
  std::string name() const override { return "enumeration"; }

 private:
  BlottoGame game_;
  Player player_;
  std::vector<StrategyPoint> grid_;
};

}  // namespace contdo

#endif  // CONTDO_BLOTTO_H_
