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

#ifndef CONTDO_LINEAR_PROGRAM_H_
#define CONTDO_LINEAR_PROGRAM_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace contdo {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline constexpr double kFeasibilityTolerance = 1e-8;
inline constexpr double kReducedCostTolerance = 1e-9;
inline constexpr double kIntegralityTolerance = 1e-6;

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

// maximize  objective . x + objective_constant
// s.t.      rows[r] . x  (senses[r])  rhs[r]
//           lower <= x <= upper        (bounds may be infinite)
struct LinearProgram {
  std::vector<double> objective;
  double objective_constant = 0.0;
  std::vector<std::vector<double>> rows;
  std::vector<RowSense> senses;
  std::vector<double> rhs;
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t num_vars() const { return objective.size(); }
  std::size_t num_rows() const { return rows.size(); }

  // Appends a column (existing rows get a zero coefficient) and returns its
  // index.
  std::size_t AddVariable(double cost, double lo = 0.0, double hi = kInfinity);

  // `coeffs` may be shorter than num_vars(); missing entries are zero.
  void AddRow(std::vector<double> coeffs, RowSense sense, double rhs_value);

  // Throws ModelError on inconsistent dimensions, NaNs or crossed bounds.
  void Validate() const;

  double Evaluate(std::span<const double> x) const;

  // Largest violation of any row or bound at `x`.
  double MaxViolation(std::span<const double> x) const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* ToString(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double objective = 0.0;
  std::int64_t pivots = 0;
};

// Dense two-phase tableau simplex. Pricing is Dantzig's rule until a run of
// degenerate pivots is seen, after which Bland's rule is used to the end of
// the phase, so the method cannot cycle.
LpSolution SolveLp(const LinearProgram& lp);

}  // namespace contdo

#endif  // CONTDO_LINEAR_PROGRAM_H_
