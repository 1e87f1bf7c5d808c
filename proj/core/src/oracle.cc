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

#include "contdo/oracle.h"

#include <algorithm>
#include <cmath>

#include "contdo/errors.h"

namespace contdo {

std::size_t FirstNearBest(std::span<const double> values, bool maximize) {
  if (values.empty()) throw ParameterError("no values to choose from");
  double best = values[0];
  for (double v : values) best = maximize ? std::max(best, v) : std::min(best, v);
  const double slack = kTieTolerance * (1.0 + std::abs(best));
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (maximize ? values[k] >= best - slack : values[k] <= best + slack) {
      return k;
    }
  }
  return 0;
}

ExhaustiveOracle::ExhaustiveOracle(GameDefinition game, Player player,
                                   std::vector<StrategyPoint> candidates,
                                   double accuracy)
    : game_(std::move(game)), player_(player),
      candidates_(std::move(candidates)), accuracy_(accuracy) {
  if (candidates_.empty()) {
    throw ParameterError("exhaustive oracle needs at least one candidate");
  }
  for (const StrategyPoint& c : candidates_) CheckInSpace(game_, player_, c);
}

OracleAnswer ExhaustiveOracle::Respond(
    const FiniteMixedStrategy& opponent) const {
  const Player other = player_ == Player::kOne ? Player::kTwo : Player::kOne;
  for (const StrategyPoint& a : opponent.atoms()) {
    CheckInSpace(game_, other, a);
  }
  std::vector<double> values(candidates_.size(), 0.0);
  for (std::size_t c = 0; c < candidates_.size(); ++c) {
    for (std::size_t k = 0; k < opponent.size(); ++k) {
      values[c] += opponent.weight(k) *
                   (player_ == Player::kOne
                        ? game_.utility(candidates_[c], opponent.atom(k))
                        : game_.utility(opponent.atom(k), candidates_[c]));
    }
  }
  const std::size_t best = FirstNearBest(values, player_ == Player::kOne);
  const double best_value = values[best];
  return OracleAnswer{candidates_[best], best_value};
}

}  // namespace contdo
