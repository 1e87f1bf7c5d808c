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

// Double oracle for continuous zero-sum games.
//
// Each iteration solves the finite subgame (X_i, Y_i, u) exactly by LP,
// asks both oracles for a best response to the subgame equilibrium, and
// grows the strategy sets by those responses. The values
//
//   lower_i = U(p_i, y_{i+1})   and   upper_i = U(x_{i+1}, q_i)
//
// bracket both U(p_i, q_i) and the value of the full game, and (p_i, q_i) is
// an (upper_i - lower_i)-equilibrium. The loop stops once that gap is at
// most epsilon.

#ifndef CONTDO_DOUBLE_ORACLE_H_
#define CONTDO_DOUBLE_ORACLE_H_

#include <functional>
#include <vector>

#include "contdo/game.h"
#include "contdo/oracle.h"

namespace contdo {

// Absolute slack on the stopping test that absorbs LP round-off, so that
// epsilon = 0 still terminates on finite games.
inline constexpr double kStoppingSlack = 1e-10;

struct IterationRecord {
  int index = 0;
  double lower = 0.0;
  double upper = 0.0;
  double subgame_value = 0.0;
  std::size_t size_x = 0;  // |X_i|
  std::size_t size_y = 0;  // |Y_i|
  StrategyPoint added_x;   // x_{i+1}
  StrategyPoint added_y;   // y_{i+1}
  bool new_x = false;      // x_{i+1} was not already in X_i
  bool new_y = false;
  double time_s = 0.0;

  double gap() const { return upper - lower; }
  bool stabilized() const { return !new_x && !new_y; }
};

enum class Termination {
  kGap,
  kIterationCap,
  // Both strategy sets stopped growing while the gap stayed above epsilon;
  // only reachable when an oracle misses its accuracy contract.
  kStalled,
};

const char* ToString(Termination t);

struct SolveResult {
  FiniteMixedStrategy p_star;
  FiniteMixedStrategy q_star;
  double lower;
  double upper;
  double value;  // U(p_star, q_star)
  double gap;
  Termination terminated_by;
  std::vector<IterationRecord> trace;
  // Strategy sets after the last union.
  std::vector<StrategyPoint> strategies_x;
  std::vector<StrategyPoint> strategies_y;
};

struct DoubleOracleOptions {
  double epsilon = 1e-3;
  int max_iters = 1000;
  // Query the two oracles on separate threads.
  bool parallel_oracles = true;
  // Called after every iteration, before the stopping test.
  std::function<void(const IterationRecord&)> on_iteration;
};

SolveResult RunDoubleOracle(const GameDefinition& game,
                            const BestResponseOracle& oracle1,
                            const BestResponseOracle& oracle2,
                            std::vector<StrategyPoint> initial_x,
                            std::vector<StrategyPoint> initial_y,
                            const DoubleOracleOptions& options = {});

struct ValueBounds {
  double lower;  // min_y U(p, y) as found by oracle2
  double upper;  // max_x U(x, q) as found by oracle1
  StrategyPoint best_x;
  StrategyPoint best_y;
};

// Brackets the value of the game from any profile (p, q).
ValueBounds BoundsFromProfile(const GameDefinition& game,
                              const FiniteMixedStrategy& p,
                              const FiniteMixedStrategy& q,
                              const BestResponseOracle& oracle1,
                              const BestResponseOracle& oracle2);

// Queries one oracle and validates its answer; shared by the solvers.
OracleAnswer QueryOracle(const GameDefinition& game,
                         const BestResponseOracle& oracle,
                         const FiniteMixedStrategy& opponent);

}  // namespace contdo

#endif  // CONTDO_DOUBLE_ORACLE_H_
