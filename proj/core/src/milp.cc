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

#include "contdo/milp.h"

#include <cmath>
#include <queue>
#include <string>

namespace contdo {

void MilpModel::Validate() const {
  lp.Validate();
  std::vector<char> seen(lp.num_vars(), 0);
  for (std::size_t v : binary_vars) {
    if (v >= lp.num_vars()) {
      throw ModelError("binary variable index " + std::to_string(v) +
                       " out of range");
    }
    if (seen[v]) {
      throw ModelError("binary variable " + std::to_string(v) + " listed twice");
    }
    seen[v] = 1;
    if (lp.lower[v] != 0.0 || lp.upper[v] != 1.0) {
      throw ModelError("binary variable " + std::to_string(v) +
                       " must have relaxation bounds [0, 1]");
    }
  }
}

namespace {

struct Node {
  double bound;
  std::int64_t seq;
  // Fixed value per entry of binary_vars: -1 free, 0 or 1 fixed.
  std::vector<signed char> fixing;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.seq > b.seq;
  }
};

}  // namespace

MilpSolution SolveMilp(const MilpModel& model, const MilpOptions& options) {
  model.Validate();
  const std::size_t nb = model.binary_vars.size();

  MilpSolution best;
  best.status = LpStatus::kInfeasible;
  bool has_incumbent = false;
  double incumbent = -kInfinity;

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  std::int64_t seq = 0;
  open.push(Node{kInfinity, seq++, std::vector<signed char>(nb, -1)});

  LinearProgram relaxation = model.lp;
  std::int64_t nodes = 0;
  bool unbounded = false;

  while (!open.empty()) {
    if (has_incumbent && open.top().bound <= incumbent + options.gap_tol) break;
    if (nodes >= options.node_limit) {
      const double bound = std::max(incumbent, open.top().bound);
      throw MilpNodeLimitError(
          "branch and bound node limit of " +
              std::to_string(options.node_limit) + " reached (incumbent " +
              (has_incumbent ? std::to_string(incumbent) : std::string("none")) +
              ", bound " + std::to_string(bound) + ")",
          has_incumbent, incumbent, bound);
    }
    Node node = open.top();
    open.pop();

    for (std::size_t k = 0; k < nb; ++k) {
      const std::size_t v = model.binary_vars[k];
      if (node.fixing[k] < 0) {
        relaxation.lower[v] = 0.0;
        relaxation.upper[v] = 1.0;
      } else {
        relaxation.lower[v] = relaxation.upper[v] = node.fixing[k];
      }
    }
    LpSolution lp = SolveLp(relaxation);
    ++nodes;
    if (lp.status == LpStatus::kInfeasible) continue;
    if (lp.status == LpStatus::kUnbounded) {
      unbounded = true;
      break;
    }
    if (has_incumbent && lp.objective <= incumbent + options.gap_tol) continue;

    std::size_t branch = nb;
    double most = options.int_tol;
    for (std::size_t k = 0; k < nb; ++k) {
      const double value = lp.x[model.binary_vars[k]];
      const double frac = std::abs(value - std::round(value));
      if (frac > most) {
        most = frac;
        branch = k;
      }
    }
    if (branch == nb) {
      has_incumbent = true;
      incumbent = lp.objective;
      static_cast<LpSolution&>(best) = std::move(lp);
      continue;
    }
    for (signed char value : {0, 1}) {
      Node child{lp.objective, seq++, node.fixing};
      child.fixing[branch] = value;
      open.push(std::move(child));
    }
  }

  best.nodes_explored = nodes;
  if (unbounded) {
    best.status = LpStatus::kUnbounded;
    best.x.clear();
    best.best_bound = kInfinity;
    return best;
  }
  if (!has_incumbent) {
    best.status = LpStatus::kInfeasible;
    return best;
  }
  best.best_bound =
      open.empty() ? incumbent : std::max(incumbent, open.top().bound);
  return best;
}

}  // namespace contdo
