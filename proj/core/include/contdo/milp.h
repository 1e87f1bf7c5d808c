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

#ifndef CONTDO_MILP_H_
#define CONTDO_MILP_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "contdo/errors.h"
#include "contdo/linear_program.h"

namespace contdo {

struct MilpModel {
  LinearProgram lp;
  // Variables restricted to {0, 1}; their relaxation bounds must be [0, 1].
  std::vector<std::size_t> binary_vars;

  void Validate() const;
};

struct MilpOptions {
  double int_tol = kIntegralityTolerance;
  double gap_tol = 1e-9;
  std::int64_t node_limit = 1'000'000;
};

struct MilpSolution : LpSolution {
  std::int64_t nodes_explored = 0;
  // Global upper bound on the optimum when the search stopped.
  double best_bound = -kInfinity;
};

// Thrown when the node limit is hit; carries the search state at that point.
class MilpNodeLimitError : public ResourceLimitError {
 public:
  MilpNodeLimitError(const std::string& what, bool has_incumbent,
                     double incumbent, double bound)
      : ResourceLimitError(what), has_incumbent_(has_incumbent),
        incumbent_(incumbent), bound_(bound) {}

  bool has_incumbent() const { return has_incumbent_; }
  double incumbent() const { return incumbent_; }
  double bound() const { return bound_; }

 private:
  bool has_incumbent_;
  double incumbent_;
  double bound_;
};

// Best-first branch and bound over LP relaxations. Branches on the most
// fractional binary (lowest index on ties) and explores nodes in order of
// their parent bound, oldest first on ties, so runs are reproducible.
MilpSolution SolveMilp(const MilpModel& model, const MilpOptions& options = {});

}  // namespace contdo

#endif  // CONTDO_MILP_H_
