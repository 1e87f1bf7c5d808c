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

#include "contdo/fictitious_play.h"

#include <chrono>
#include <future>

#include "contdo/double_oracle.h"
#include "contdo/errors.h"

namespace contdo {
namespace {

// Play counts per distinct point.
class EmpiricalCounts {
 public:
  explicit EmpiricalCounts(const StrategyPoint& first) { Add(first); }

  void Add(const StrategyPoint& point) {
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      if (atoms_[k].SameAs(point)) {
        counts_[k] += 1.0;
        return;
      }
    }
    atoms_.push_back(point);
    counts_.push_back(1.0);
  }

  FiniteMixedStrategy Mixture() const {
    return FiniteMixedStrategy::MergeDuplicates(atoms_, counts_);
  }

 private:
  std::vector<StrategyPoint> atoms_;
  std::vector<double> counts_;
};

}  // namespace

FpResult RunFictitiousPlay(const GameDefinition& game,
                           const BestResponseOracle& oracle1,
                           const BestResponseOracle& oracle2,
                           const StrategyPoint& init1,
                           const StrategyPoint& init2,
                           const FictitiousPlayOptions& options) {
  if (oracle1.player() != Player::kOne || oracle2.player() != Player::kTwo) {
    throw ParameterError("fictitious play needs a player 1 and a player 2 "
                         "oracle, in that order");
  }
  if (options.iterations < 1) throw ParameterError("iterations must be >= 1");
  CheckInSpace(game, Player::kOne, init1);
  CheckInSpace(game, Player::kTwo, init2);

  EmpiricalCounts counts1(init1);
  EmpiricalCounts counts2(init2);
  std::vector<StrategyPoint> history1{init1};
  std::vector<StrategyPoint> history2{init2};
  std::vector<FpRecord> trace;
  trace.reserve(options.iterations);

  FiniteMixedStrategy empirical1(init1);
  FiniteMixedStrategy empirical2(init2);
  for (int i = 1; i <= options.iterations; ++i) {
    const auto start = std::chrono::steady_clock::now();
    empirical1 = counts1.Mixture();
    empirical2 = counts2.Mixture();

    OracleAnswer response1;
    OracleAnswer response2;
    if (options.parallel_oracles) {
      auto pending = std::async(std::launch::async, [&] {
        return QueryOracle(game, oracle2, empirical1);
      });
      response1 = QueryOracle(game, oracle1, empirical2);
      response2 = pending.get();
    } else {
      response1 = QueryOracle(game, oracle1, empirical2);
      response2 = QueryOracle(game, oracle2, empirical1);
    }

    FpRecord rec;
    rec.index = i;
    rec.lower = response2.value;
    rec.upper = response1.value;
    rec.value = ExpectedUtility(empirical1, empirical2, game);
    rec.support1 = empirical1.size();
    rec.support2 = empirical2.size();

    counts1.Add(response1.point);
    counts2.Add(response2.point);
    history1.push_back(std::move(response1.point));
    history2.push_back(std::move(response2.point));

    rec.time_s = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    trace.push_back(rec);
    if (options.on_iteration) options.on_iteration(rec);
  }
  return FpResult{std::move(trace), std::move(empirical1),
                  std::move(empirical2), std::move(history1),
                  std::move(history2)};
}

}  // namespace contdo
