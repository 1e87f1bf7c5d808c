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

#ifndef CONTDO_FICTITIOUS_PLAY_H_
#define CONTDO_FICTITIOUS_PLAY_H_

#include <functional>
#include <vector>

#include "contdo/game.h"
#include "contdo/oracle.h"

namespace contdo {

struct FpRecord {
  int index = 0;
  double lower = 0.0;  // oracle2 value against empirical1
  double upper = 0.0;  // oracle1 value against empirical2
  double value = 0.0;  // U(empirical1, empirical2)
  std::size_t support1 = 0;
  std::size_t support2 = 0;
  double time_s = 0.0;

  double gap() const { return upper - lower; }
};

struct FpResult {
  std::vector<FpRecord> trace;
  FiniteMixedStrategy empirical1;
  FiniteMixedStrategy empirical2;
  // Every play so far, starting with the initial points.
  std::vector<StrategyPoint> history1;
  std::vector<StrategyPoint> history2;
};

struct FictitiousPlayOptions {
  int iterations = 1000;
  bool parallel_oracles = true;
  std::function<void(const FpRecord&)> on_iteration;
};

// Simultaneous fictitious play. Iteration i evaluates both oracles against
// the opponent's uniform average over its first i plays (the first play is
// the initial point), records the resulting bounds, then appends both
// responses to the histories.
FpResult RunFictitiousPlay(const GameDefinition& game,
                           const BestResponseOracle& oracle1,
                           const BestResponseOracle& oracle2,
                           const StrategyPoint& init1,
                           const StrategyPoint& init2,
                           const FictitiousPlayOptions& options = {});

}  // namespace contdo

#endif  // CONTDO_FICTITIOUS_PLAY_H_
