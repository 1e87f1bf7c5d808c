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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <optional>
#include <string>
#include <utility>

#include "contdo/errors.h"
#include "contdo/matrix_game.h"

namespace contdo {

const char* ToString(Termination t) {
  switch (t) {
    case Termination::kGap:
      return "gap";
    case Termination::kIterationCap:
      return "iteration_cap";
    case Termination::kStalled:
      return "stalled";
  }
  return "unknown";
}

OracleAnswer QueryOracle(const GameDefinition& game,
                         const BestResponseOracle& oracle,
                         const FiniteMixedStrategy& opponent) {
  OracleAnswer answer = oracle.Respond(opponent);
  const Player player = oracle.player();
  if (!game.space(player).Contains(answer.point)) {
    throw OracleContractError(
        oracle.name() + " oracle of player " +
        std::to_string(static_cast<int>(player)) + " returned " +
        answer.point.ToString() + " outside " + game.space(player).ToString());
  }
  const double exact = player == Player::kOne
                           ? ExpectedUtility(answer.point, opponent, game)
                           : ExpectedUtility(opponent, answer.point, game);
  if (!std::isfinite(answer.value) ||
      std::abs(answer.value - exact) >
          oracle.accuracy() + 1e-9 * (1.0 + std::abs(exact))) {
    throw OracleContractError(oracle.name() + " oracle reported value " +
                              std::to_string(answer.value) +
                              " but the point scores " +
                              std::to_string(exact));
  }
  answer.value = exact;
  return answer;
}

namespace {

void CheckOracleSide(const BestResponseOracle& oracle, Player expected) {
  if (oracle.player() != expected) {
    throw ParameterError(oracle.name() + " oracle answers for the wrong player");
  }
}

// Adds `point` unless a point within the merge tolerance is present.
bool InsertIfNew(std::vector<StrategyPoint>& set, const StrategyPoint& point) {
  for (const StrategyPoint& s : set) {
    if (s.SameAs(point)) return false;
  }
  set.push_back(point);
  return true;
}

std::vector<StrategyPoint> Deduplicate(std::vector<StrategyPoint> points) {
  std::vector<StrategyPoint> out;
  out.reserve(points.size());
  for (StrategyPoint& p : points) InsertIfNew(out, p);
  return out;
}

}  // namespace

SolveResult RunDoubleOracle(const GameDefinition& game,
                            const BestResponseOracle& oracle1,
                            const BestResponseOracle& oracle2,
                            std::vector<StrategyPoint> initial_x,
                            std::vector<StrategyPoint> initial_y,
                            const DoubleOracleOptions& options) {
  CheckOracleSide(oracle1, Player::kOne);
  CheckOracleSide(oracle2, Player::kTwo);
  if (!(options.epsilon >= 0.0)) {
    throw ParameterError("epsilon must be nonnegative");
  }
  if (options.max_iters < 1) throw ParameterError("max_iters must be >= 1");
  if (initial_x.empty() || initial_y.empty()) {
    throw InvalidStrategyError("initial strategy sets must be nonempty");
  }

  std::vector<StrategyPoint> xs = Deduplicate(std::move(initial_x));
  std::vector<StrategyPoint> ys = Deduplicate(std::move(initial_y));
  std::vector<IterationRecord> trace;

  for (int i = 1;; ++i) {
    const auto start = std::chrono::steady_clock::now();
    ZeroSumSolution sub = SolveZeroSum(SubgameMatrix(game, xs, ys));

    OracleAnswer response_x;
    OracleAnswer response_y;
    if (options.parallel_oracles) {
      auto pending = std::async(std::launch::async, [&] {
        return QueryOracle(game, oracle2, sub.p);
      });
      response_x = QueryOracle(game, oracle1, sub.q);
      response_y = pending.get();
    } else {
      response_x = QueryOracle(game, oracle1, sub.q);
      response_y = QueryOracle(game, oracle2, sub.p);
    }

    IterationRecord rec;
    rec.index = i;
    rec.size_x = xs.size();
    rec.size_y = ys.size();
    rec.lower = response_y.value;
    rec.upper = response_x.value;
    rec.subgame_value = sub.value;
    rec.added_x = response_x.point;
    rec.added_y = response_y.point;
    rec.new_x = InsertIfNew(xs, response_x.point);
    rec.new_y = InsertIfNew(ys, response_y.point);
    rec.time_s = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    trace.push_back(rec);
    if (options.on_iteration) options.on_iteration(rec);

    std::optional<Termination> stop;
    if (rec.gap() <= options.epsilon + kStoppingSlack) {
      stop = Termination::kGap;
    } else if (rec.stabilized()) {
      stop = Termination::kStalled;
    } else if (i >= options.max_iters) {
      stop = Termination::kIterationCap;
    }
    if (stop) {
      return SolveResult{std::move(sub.p),  std::move(sub.q), rec.lower,
                         rec.upper,         sub.value,        rec.gap(),
                         *stop,             std::move(trace), std::move(xs),
                         std::move(ys)};
    }
  }
}

ValueBounds BoundsFromProfile(const GameDefinition& game,
                              const FiniteMixedStrategy& p,
                              const FiniteMixedStrategy& q,
                              const BestResponseOracle& oracle1,
                              const BestResponseOracle& oracle2) {
  CheckOracleSide(oracle1, Player::kOne);
  CheckOracleSide(oracle2, Player::kTwo);
  OracleAnswer y = QueryOracle(game, oracle2, p);
  OracleAnswer x = QueryOracle(game, oracle1, q);
  return ValueBounds{y.value, x.value, std::move(x.point), std::move(y.point)};
}

}  // namespace contdo
