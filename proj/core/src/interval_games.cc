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

#include "contdo/interval_games.h"

#include <cmath>

#include "contdo/errors.h"

namespace contdo {
namespace {

// Cap on memoized grid columns, counted in doubles (256 MiB).
constexpr std::size_t kCacheBudget = std::size_t{1} << 25;

void RequireInterval(const StrategySpace& space, const char* what) {
  if (space.kind() != StrategySpace::Kind::kBox || space.dim() != 1) {
    throw ParameterError(std::string(what) + " must be a one-dimensional box");
  }
}

}  // namespace

GameDefinition MakeIntervalGame(std::string name, double a1, double b1,
                                double a2, double b2, UtilityFn utility) {
  if (!(a1 < b1) || !(a2 < b2)) {
    throw ParameterError("interval bounds must satisfy a < b");
  }
  return GameDefinition{std::move(name), StrategySpace::Interval(a1, b1),
                        StrategySpace::Interval(a2, b2), std::move(utility)};
}

GameDefinition MakePolynomialGame() {
  return MakeIntervalGame(
      "g1-polynomial", -1.0, 1.0, -1.0, 1.0,
      [](const StrategyPoint& xp, const StrategyPoint& yp) {
        const double x = xp[0];
        const double y = yp[0];
        return 5.0 * x * y - 2.0 * x * x - 2.0 * x * y * y - y;
      });
}

GameDefinition MakeTownsendGame() {
  return MakeIntervalGame(
      "g2-townsend", -2.25, 2.5, -2.5, 1.75,
      [](const StrategyPoint& xp, const StrategyPoint& yp) {
        const double x = xp[0];
        const double y = yp[0];
        const double c = std::cos((x - 0.1) * y);
        return -c * c - x * std::sin(3.0 * x + y);
      });
}

GameDefinition MakeTiledGame(const GameDefinition& base, double shift) {
  RequireInterval(base.space1, "player 1 space of the base game");
  const double a = base.space1.lower()[0];
  const double b = base.space1.upper()[0];
  if (!(shift > b - a)) {
    throw ParameterError("tile shift must exceed the interval length");
  }
  UtilityFn u = base.utility;
  const double gap_start = b;
  const double gap_end = a + shift;
  return GameDefinition{
      base.name + "-tiled", StrategySpace::Interval(a, b + shift), base.space2,
      [u, a, gap_start, gap_end, shift](const StrategyPoint& x,
                                        const StrategyPoint& y) {
        const double v = x[0];
        if (v <= gap_start) return u(x, y);
        if (v >= gap_end) return u(StrategyPoint{v - shift}, y);
        const double t = (v - gap_start) / (gap_end - gap_start);
        return (1.0 - t) * u(StrategyPoint{gap_start}, y) +
               t * u(StrategyPoint{a}, y);
      }};
}

std::vector<double> UniformGrid(double lo, double hi, double resolution) {
  if (!(resolution > 0.0)) throw ParameterError("grid resolution must be > 0");
  if (!(lo <= hi)) throw ParameterError("grid bounds must satisfy lo <= hi");
  const double intervals = std::ceil((hi - lo) / resolution - 1e-9);
  if (intervals > 1e8) throw ResourceLimitError("grid has too many points");
  const auto n = static_cast<std::size_t>(std::max(intervals, 0.0));
  std::vector<double> grid(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    grid[k] = n == 0 ? lo : lo + (hi - lo) * static_cast<double>(k) /
                                     static_cast<double>(n);
  }
  if (n > 0) grid.back() = hi;
  return grid;
}

GridOracle::GridOracle(GameDefinition game, Player player, double resolution,
                       std::optional<double> lipschitz)
    : game_(std::move(game)), player_(player) {
  const StrategySpace& space = game_.space(player_);
  RequireInterval(space, "grid oracle strategy space");
  grid_ = UniformGrid(space.lower()[0], space.upper()[0], resolution);
  spacing_ = grid_.size() > 1 ? (grid_.back() - grid_.front()) /
                                    static_cast<double>(grid_.size() - 1)
                              : 0.0;
  accuracy_ = lipschitz ? *lipschitz * spacing_ / 2.0 : 0.0;
}

std::shared_ptr<const GridOracle::Column> GridOracle::ColumnFor(
    const StrategyPoint& atom) const {
  std::vector<double> key(atom.coords().begin(), atom.coords().end());
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto column = std::make_shared<Column>(grid_.size());
  for (std::size_t k = 0; k < grid_.size(); ++k) {
    const StrategyPoint g{grid_[k]};
    (*column)[k] = player_ == Player::kOne ? game_.utility(g, atom)
                                           : game_.utility(atom, g);
  }
  std::lock_guard<std::mutex> lock(cache_mu_);
  if ((cache_.size() + 1) * grid_.size() <= kCacheBudget) {
    cache_.emplace(std::move(key), column);
  }
  return column;
}

OracleAnswer GridOracle::Respond(const FiniteMixedStrategy& opponent) const {
  const Player other = player_ == Player::kOne ? Player::kTwo : Player::kOne;
  for (const StrategyPoint& a : opponent.atoms()) CheckInSpace(game_, other, a);

  std::vector<double> payoff(grid_.size(), 0.0);
  for (std::size_t i = 0; i < opponent.size(); ++i) {
    const auto column = ColumnFor(opponent.atom(i));
    const double w = opponent.weight(i);
    for (std::size_t k = 0; k < grid_.size(); ++k) payoff[k] += w * (*column)[k];
  }
  const std::size_t best = FirstNearBest(payoff, player_ == Player::kOne);
  return OracleAnswer{StrategyPoint{grid_[best]}, payoff[best]};
}

OracleAnswer GridBestResponse(const FiniteMixedStrategy& opponent,
                              const GameDefinition& game, Player player,
                              double resolution) {
  return GridOracle(game, player, resolution).Respond(opponent);
}

AlternatingTileOracle::AlternatingTileOracle(const GameDefinition& tiled_game,
                                             const GameDefinition& base_game,
                                             double shift, double resolution,
                                             std::optional<double> lipschitz)
    : base_(base_game, Player::kOne, resolution, lipschitz), shift_(shift) {
  const StrategyPoint far{base_game.space1.upper()[0] + shift};
  if (!tiled_game.space1.Contains(far)) {
    throw ParameterError("shifted tile is outside the tiled strategy space");
  }
}

OracleAnswer AlternatingTileOracle::Respond(
    const FiniteMixedStrategy& opponent) const {
  OracleAnswer answer = base_.Respond(opponent);
  if (calls_.fetch_add(1) % 2 == 1) {
    answer.point = StrategyPoint{answer.point[0] + shift_};
  }
  return answer;
}

}  // namespace contdo
