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

#include "contdo/linear_program.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "contdo/errors.h"

namespace contdo {

std::size_t LinearProgram::AddVariable(double cost, double lo, double hi) {
  objective.push_back(cost);
  lower.push_back(lo);
  upper.push_back(hi);
  for (auto& row : rows) row.resize(objective.size(), 0.0);
  return objective.size() - 1;
}

void LinearProgram::AddRow(std::vector<double> coeffs, RowSense sense,
                           double rhs_value) {
  if (coeffs.size() > num_vars()) {
    throw ModelError("row has more coefficients than the model has columns");
  }
  coeffs.resize(num_vars(), 0.0);
  rows.push_back(std::move(coeffs));
  senses.push_back(sense);
  rhs.push_back(rhs_value);
}

void LinearProgram::Validate() const {
  const std::size_t n = num_vars();
  if (lower.size() != n || upper.size() != n) {
    throw ModelError("bound vectors must match the objective length " +
                     std::to_string(n));
  }
  if (senses.size() != rows.size() || rhs.size() != rows.size()) {
    throw ModelError("row, sense and rhs counts differ");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(objective[j])) {
      throw ModelError("objective coefficient " + std::to_string(j) +
                       " is not finite");
    }
    if (std::isnan(lower[j]) || std::isnan(upper[j]) || lower[j] > upper[j] ||
        lower[j] == kInfinity || upper[j] == -kInfinity) {
      throw ModelError("invalid bounds on variable " + std::to_string(j));
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) {
      throw ModelError("row " + std::to_string(r) + " has " +
                       std::to_string(rows[r].size()) + " coefficients, " +
                       "expected " + std::to_string(n));
    }
    if (!std::isfinite(rhs[r])) {
      throw ModelError("rhs of row " + std::to_string(r) + " is not finite");
    }
    for (double v : rows[r]) {
      if (!std::isfinite(v)) {
        throw ModelError("row " + std::to_string(r) + " has a non-finite "
                         "coefficient");
      }
    }
  }
}

double LinearProgram::Evaluate(std::span<const double> x) const {
  double value = objective_constant;
  for (std::size_t j = 0; j < num_vars(); ++j) value += objective[j] * x[j];
  return value;
}

double LinearProgram::MaxViolation(std::span<const double> x) const {
  double worst = 0.0;
  for (std::size_t j = 0; j < num_vars(); ++j) {
    worst = std::max({worst, lower[j] - x[j], x[j] - upper[j]});
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    double activity = 0.0;
    for (std::size_t j = 0; j < num_vars(); ++j) activity += rows[r][j] * x[j];
    switch (senses[r]) {
      case RowSense::kLessEqual:
        worst = std::max(worst, activity - rhs[r]);
        break;
      case RowSense::kGreaterEqual:
        worst = std::max(worst, rhs[r] - activity);
        break;
      case RowSense::kEqual:
        worst = std::max(worst, std::abs(activity - rhs[r]));
        break;
    }
  }
  return worst;
}

const char* ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kRatioTieTolerance = 1e-12;
constexpr int kDegenerateRunBeforeBland = 50;

// How an original variable is expressed through nonnegative columns:
// x = offset + sign * col  (+ (-1) * neg_col for free variables).
struct ColumnMap {
  double offset = 0.0;
  int col = -1;
  double sign = 1.0;
  int neg_col = -1;
};

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols),
        b_(rows), basis_(rows, -1), d_(cols), live_(cols, 1) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  double* row(int i) { return &a_[static_cast<std::size_t>(i) * cols_]; }
  std::vector<double>& b() { return b_; }
  std::vector<int>& basis() { return basis_; }
  double objective_value() const { return z_; }
  std::int64_t pivots() const { return pivots_; }

  // Recomputes reduced costs d_j = c_j - c_B^T B^{-1} A_j and the objective.
  void Price(const std::vector<double>& cost) {
    d_ = cost;
    z_ = 0.0;
    for (int i = 0; i < rows_; ++i) {
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      z_ += cb * b_[i];
      const double* r = row(i);
      for (int j = 0; j < cols_; ++j) d_[j] -= cb * r[j];
    }
    for (int i = 0; i < rows_; ++i) d_[basis_[i]] = 0.0;
  }

  // Columns that may still enter the basis. Retired columns (artificials
  // once they leave) are no longer updated.
  void Retire(int j) { live_[j] = 0; }
  bool live(int j) const { return live_[j] != 0; }

  void Pivot(int r, int c) {
    double* pr = row(r);
    const double inv = 1.0 / pr[c];
    nz_.clear();
    for (int j = 0; j < cols_; ++j) {
      if (pr[j] == 0.0 || (!live_[j] && j != c)) continue;
      pr[j] *= inv;
      nz_.push_back(j);
    }
    pr[c] = 1.0;
    b_[r] *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      double* pi = row(i);
      const double f = pi[c];
      if (f == 0.0) continue;
      for (int j : nz_) pi[j] -= f * pr[j];
      pi[c] = 0.0;
      b_[i] -= f * b_[r];
      if (b_[i] < 0.0 && b_[i] > -kFeasibilityTolerance) b_[i] = 0.0;
    }
    const double dc = d_[c];
    if (dc != 0.0) {
      for (int j : nz_) d_[j] -= dc * pr[j];
      z_ += dc * b_[r];
    }
    d_[c] = 0.0;
    basis_[r] = c;
    ++pivots_;
  }

  enum class Outcome { kOptimal, kUnbounded };

  // Primal simplex on the current basis over the live columns. With
  // retire_from >= 0, columns at or beyond that index are retired as soon as
  // they leave the basis.
  Outcome Optimize(int retire_from = -1) {
    bool bland = false;
    int degenerate_run = 0;
    const std::int64_t limit =
        100000 + 200 * static_cast<std::int64_t>(rows_ + cols_);
    for (std::int64_t iter = 0;; ++iter) {
      if (iter > limit) {
        throw ResourceLimitError("simplex pivot limit exceeded");
      }
      int enter = -1;
      double best = kReducedCostTolerance;
      for (int j = 0; j < cols_; ++j) {
        if (!live_[j] || d_[j] <= kReducedCostTolerance) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (d_[j] > best) {
          best = d_[j];
          enter = j;
        }
      }
      if (enter < 0) return Outcome::kOptimal;

      int leave = -1;
      double best_ratio = kInfinity;
      for (int i = 0; i < rows_; ++i) {
        const double aij = at(i, enter);
        if (aij <= kPivotTolerance) continue;
        const double ratio = b_[i] / aij;
        if (leave < 0 ||
            ratio < best_ratio - kRatioTieTolerance * (1.0 + best_ratio)) {
          leave = i;
          best_ratio = ratio;
          continue;
        }
        if (ratio <= best_ratio + kRatioTieTolerance * (1.0 + best_ratio)) {
          // Tie: Bland wants the smallest basic index; otherwise prefer the
          // larger pivot element.
          const bool take = bland ? basis_[i] < basis_[leave]
                                  : aij > at(leave, enter);
          if (take) {
            leave = i;
            best_ratio = std::min(best_ratio, ratio);
          }
        }
      }
      if (leave < 0) return Outcome::kUnbounded;

      if (best_ratio <= kRatioTieTolerance) {
        if (++degenerate_run > kDegenerateRunBeforeBland) bland = true;
      } else {
        degenerate_run = 0;
      }
      const int leaving = basis_[leave];
      Pivot(leave, enter);
      if (retire_from >= 0 && leaving >= retire_from) Retire(leaving);
    }
  }

  void EraseRow(int r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
             a_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
    b_.erase(b_.begin() + r);
    basis_.erase(basis_.begin() + r);
    --rows_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<int> basis_;
  std::vector<double> d_;
  std::vector<char> live_;
  std::vector<int> nz_;
  double z_ = 0.0;
  std::int64_t pivots_ = 0;
};

}  // namespace

LpSolution SolveLp(const LinearProgram& lp) {
  lp.Validate();
  const std::size_t n = lp.num_vars();

  // Map every original variable onto nonnegative structural columns.
  std::vector<ColumnMap> maps(n);
  std::vector<double> struct_cost;
  struct BoundRow {
    int col;
    double range;
  };
  std::vector<BoundRow> bound_rows;
  for (std::size_t j = 0; j < n; ++j) {
    const double lo = lp.lower[j];
    const double hi = lp.upper[j];
    ColumnMap& m = maps[j];
    if (std::isfinite(lo) && lo == hi) {
      m.offset = lo;
      continue;
    }
    m.col = static_cast<int>(struct_cost.size());
    if (std::isfinite(lo)) {
      m.offset = lo;
      m.sign = 1.0;
      struct_cost.push_back(lp.objective[j]);
      if (std::isfinite(hi)) bound_rows.push_back({m.col, hi - lo});
    } else if (std::isfinite(hi)) {
      m.offset = hi;
      m.sign = -1.0;
      struct_cost.push_back(-lp.objective[j]);
    } else {
      m.sign = 1.0;
      struct_cost.push_back(lp.objective[j]);
      m.neg_col = static_cast<int>(struct_cost.size());
      struct_cost.push_back(-lp.objective[j]);
    }
  }
  const int num_struct = static_cast<int>(struct_cost.size());

  // Standardized rows over structural columns with nonnegative rhs.
  struct StdRow {
    std::vector<double> coeffs;
    RowSense sense;
    double rhs;
  };
  std::vector<StdRow> std_rows;
  std_rows.reserve(lp.num_rows() + bound_rows.size());
  for (std::size_t r = 0; r < lp.num_rows(); ++r) {
    StdRow row{std::vector<double>(num_struct, 0.0), lp.senses[r], lp.rhs[r]};
    for (std::size_t j = 0; j < n; ++j) {
      const double a = lp.rows[r][j];
      if (a == 0.0) continue;
      const ColumnMap& m = maps[j];
      row.rhs -= a * m.offset;
      if (m.col >= 0) row.coeffs[m.col] += a * m.sign;
      if (m.neg_col >= 0) row.coeffs[m.neg_col] -= a;
    }
    std_rows.push_back(std::move(row));
  }
  for (const BoundRow& br : bound_rows) {
    StdRow row{std::vector<double>(num_struct, 0.0), RowSense::kLessEqual,
               br.range};
    row.coeffs[br.col] = 1.0;
    std_rows.push_back(std::move(row));
  }
  for (StdRow& row : std_rows) {
    if (row.rhs < 0.0) {
      row.rhs = -row.rhs;
      for (double& v : row.coeffs) v = -v;
      if (row.sense == RowSense::kLessEqual) {
        row.sense = RowSense::kGreaterEqual;
      } else if (row.sense == RowSense::kGreaterEqual) {
        row.sense = RowSense::kLessEqual;
      }
    }
  }

  // Column layout: structural | slack/surplus | artificial.
  const int m = static_cast<int>(std_rows.size());
  int num_slack = 0;
  int num_art = 0;
  for (const StdRow& row : std_rows) {
    if (row.sense != RowSense::kEqual) ++num_slack;
    if (row.sense != RowSense::kLessEqual) ++num_art;
  }
  const int art_begin = num_struct + num_slack;
  const int cols = art_begin + num_art;

  Tableau tab(m, cols);
  double rhs_scale = 1.0;
  {
    int slack = num_struct;
    int art = art_begin;
    for (int i = 0; i < m; ++i) {
      const StdRow& row = std_rows[i];
      double* t = tab.row(i);
      std::copy(row.coeffs.begin(), row.coeffs.end(), t);
      tab.b()[i] = row.rhs;
      rhs_scale = std::max(rhs_scale, row.rhs);
      switch (row.sense) {
        case RowSense::kLessEqual:
          t[slack] = 1.0;
          tab.basis()[i] = slack++;
          break;
        case RowSense::kGreaterEqual:
          t[slack++] = -1.0;
          t[art] = 1.0;
          tab.basis()[i] = art++;
          break;
        case RowSense::kEqual:
          t[art] = 1.0;
          tab.basis()[i] = art++;
          break;
      }
    }
  }

  LpSolution solution;

  if (num_art > 0) {
    std::vector<double> phase1_cost(cols, 0.0);
    for (int j = art_begin; j < cols; ++j) phase1_cost[j] = -1.0;
    tab.Price(phase1_cost);
    tab.Optimize(art_begin);
    if (tab.objective_value() < -kFeasibilityTolerance * rhs_scale) {
      solution.status = LpStatus::kInfeasible;
      solution.pivots = tab.pivots();
      return solution;
    }
    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are linearly dependent and dropped.
    for (int i = 0; i < tab.rows();) {
      if (tab.basis()[i] < art_begin) {
        ++i;
        continue;
      }
      int best_col = -1;
      double best_abs = kPivotTolerance;
      for (int j = 0; j < art_begin; ++j) {
        if (!tab.live(j)) continue;
        const double v = std::abs(tab.at(i, j));
        if (v > best_abs) {
          best_abs = v;
          best_col = j;
        }
      }
      if (best_col < 0) {
        tab.EraseRow(i);
        continue;
      }
      const int leaving = tab.basis()[i];
      tab.b()[i] = 0.0;
      tab.Pivot(i, best_col);
      tab.Retire(leaving);
      ++i;
    }
    for (int j = art_begin; j < cols; ++j) tab.Retire(j);
  }

  std::vector<double> cost(cols, 0.0);
  std::copy(struct_cost.begin(), struct_cost.end(), cost.begin());
  tab.Price(cost);
  const Tableau::Outcome outcome = tab.Optimize();
  solution.pivots = tab.pivots();
  if (outcome == Tableau::Outcome::kUnbounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  std::vector<double> col_value(cols, 0.0);
  for (int i = 0; i < tab.rows(); ++i) {
    col_value[tab.basis()[i]] = std::max(0.0, tab.b()[i]);
  }
  solution.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const ColumnMap& map = maps[j];
    double v = map.offset;
    if (map.col >= 0) v += map.sign * col_value[map.col];
    if (map.neg_col >= 0) v -= col_value[map.neg_col];
    solution.x[j] = v;
  }
  solution.status = LpStatus::kOptimal;
  solution.objective = lp.Evaluate(solution.x);
  return solution;
}

}  // namespace contdo
