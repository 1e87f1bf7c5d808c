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

// Games on intervals and the uniform-grid best-response oracle for them.

#ifndef CONTDO_INTERVAL_GAMES_H_
#define CONTDO_INTERVAL_GAMES_H_

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "contdo/game.h"
#include "contdo/oracle.h"

namespace contdo {

inline constexpr double kDefaultGridResolution = 1e-4;

// u(x, y) = 5xy - 2x^2 - 2xy^2 - y on [-1, 1]^2. Value -0.48, attained by
// x = 0.2 against 0.78 at y = 1 and 0.22 at y = -1.
GameDefinition MakePolynomialGame();
inline constexpr double kPolynomialGameValue = -0.48;
// |du/dx| = |5y - 4x - 2y^2| <= 11 on the square; 16 leaves headroom.
inline constexpr double kPolynomialLipschitz = 16.0;

// u(x, y) = -cos^2((x - 0.1) y) - x sin(3x + y) on [-2.25, 2.5] x [-2.5, 1.75].
GameDefinition MakeTownsendGame();
inline constexpr double kTownsendLipschitz = 20.0;

GameDefinition MakeIntervalGame(std::string name, double a1, double b1,
                                double a2, double b2, UtilityFn utility);

// Duplicates player 1's interval [a, b] of a one-dimensional game onto
// [a + shift, b + shift] with the same payoffs, shift > b - a. The gap
// between the copies interpolates linearly between u(b, y) and u(a, y), so
// it never beats the better end point and the value is unchanged.
GameDefinition MakeTiledGame(const GameDefinition& base, double shift);

// Uniform grid over [lo, hi] with spacing at most `resolution`, both ends
// included.
std::vector<double> UniformGrid(double lo, double hi, double resolution);

// Exhaustive search of U(., opponent) over the uniform grid of the player's
// interval. Player 1 takes the largest value, player 2 the smallest, and
// ties go to the smallest coordinate. The declared accuracy is
// L * spacing / 2 for a Lipschitz bound L in the player's own variable, or
// zero when no bound is given.
class GridOracle : public BestResponseOracle {
 public:
  GridOracle(GameDefinition game, Player player,
             double resolution = kDefaultGridResolution,
             std::optional<double> lipschitz = std::nullopt);

  Player player() const override { return player_; }
  OracleAnswer Respond(const FiniteMixedStrategy& opponent) const override;
  double accuracy() const override { return accuracy_; }
  std::string name() const override { return "grid"; }

  const std::vector<double>& grid() const { return grid_; }
  double spacing() const { return spacing_; }

 private:
  using Column = std::vector<double>;

  // Utility of every grid point against one opponent atom, memoized since
  // solvers query the same atoms repeatedly.
  std::shared_ptr<const Column> ColumnFor(const StrategyPoint& atom) const;

  GameDefinition game_;
  Player player_;
  std::vector<double> grid_;
  double spacing_;
  double accuracy_;

  mutable std::mutex cache_mu_;
  mutable std::map<std::vector<double>, std::shared_ptr<const Column>> cache_;
};

// Convenience wrapper for a single grid query.
OracleAnswer GridBestResponse(const FiniteMixedStrategy& opponent,
                              const GameDefinition& game, Player player,
                              double resolution);

// Player 1 oracle for a tiled game: answers with the best response of the
// base game, placed on the first copy on odd calls and on the shifted copy
// on even calls. Reproduces alternating iterates between equivalent tiles.
class AlternatingTileOracle : public BestResponseOracle {
 public:
  AlternatingTileOracle(const GameDefinition& tiled_game,
                        const GameDefinition& base_game, double shift,
                        double resolution = kDefaultGridResolution,
                        std::optional<double> lipschitz = std::nullopt);

  Player player() const override { return Player::kOne; }
  OracleAnswer Respond(const FiniteMixedStrategy& opponent) const override;
  double accuracy() const override { return base_.accuracy(); }
  std::string name() const override { return "alternating-tile"; }

 private:
  GridOracle base_;
  double shift_;
  mutable std::atomic<long> calls_{0};
};

}  // namespace contdo

#endif  // CONTDO_INTERVAL_GAMES_H_
