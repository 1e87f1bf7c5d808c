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

#ifndef CONTDO_ORACLE_H_
#define CONTDO_ORACLE_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "contdo/game.h"

namespace contdo {

// A pure best response and its payoff U(x, q) (player 1) or U(p, y)
// (player 2).
struct OracleAnswer {
  StrategyPoint point;
  double value;
};

// Payoffs within this relative distance of the optimum count as ties.
inline constexpr double kTieTolerance = 1e-12;

// Index of the first entry within kTieTolerance * (1 + |best|) of the best
// entry (largest if maximize, else smallest). values must be non-empty.
std::size_t FirstNearBest(std::span<const double> values, bool maximize);

// Best-response oracle for one player. Player 1 oracles maximize U(., q),
// player 2 oracles minimize U(p, .). The returned value must match the
// expected utility of the returned point up to numerical noise, and the
// point must be at most accuracy() worse than a true best response.
class BestResponseOracle {
 public:
  virtual ~BestResponseOracle() = default;

  virtual Player player() const = 0;
  virtual OracleAnswer Respond(const FiniteMixedStrategy& opponent) const = 0;
  virtual double accuracy() const = 0;
  virtual std::string name() const = 0;
};

// Searches a fixed candidate list and returns the first optimal candidate,
// up to kTieTolerance.
// Exact for finite games whose candidate list is the full strategy set.
class ExhaustiveOracle : public BestResponseOracle {
 public:
  ExhaustiveOracle(GameDefinition game, Player player,
                   std::vector<StrategyPoint> candidates,
                   double accuracy = 0.0);

  Player player() const override { return player_; }
  OracleAnswer Respond(const FiniteMixedStrategy& opponent) const override;
  double accuracy() const override { return accuracy_; }
  std::string name() const override { return "exhaustive"; }

  const std::vector<StrategyPoint>& candidates() const { return candidates_; }

 private:
  GameDefinition game_;
  Player player_;
  std::vector<StrategyPoint> candidates_;
  double accuracy_;
};

}  // namespace contdo

#endif  // CONTDO_ORACLE_H_
