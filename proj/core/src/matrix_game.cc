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

#include "contdo/matrix_game.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <string>

#include "contdo/errors.h"
#include "contdo/linear_program.h"

namespace contdo {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ModelError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::Transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

double Matrix::MinEntry() const {
  return *std::min_element(data_.begin(), data_.end());
}

double Matrix::MaxEntry() const {
  return *std::max_element(data_.begin(), data_.end());
}

MatrixGame SubgameMatrix(const GameDefinition& game,
                         std::span<const StrategyPoint> xs,
                         std::span<const StrategyPoint> ys) {
  if (xs.empty() || ys.empty()) {
    throw InvalidStrategyError("subgame strategy sets must be nonempty");
  }
  for (const StrategyPoint& x : xs) CheckInSpace(game, Player::kOne, x);
  for (const StrategyPoint& y : ys) CheckInSpace(game, Player::kTwo, y);
  MatrixGame mg{Matrix(xs.size(), ys.size()),
                std::vector<StrategyPoint>(xs.begin(), xs.end()),
                std::vector<StrategyPoint>(ys.begin(), ys.end())};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const double v = game.utility(xs[i], ys[j]);
      if (!std::isfinite(v)) {
        throw DomainError("utility is not finite at " + xs[i].ToString() +
                          ", " + ys[j].ToString());
      }
      mg.payoff(i, j) = v;
    }
  }
  return mg;
}

namespace {

// Noise from the simplex below this level is treated as an exact zero.
constexpr double kWeightFloor = 1e-13;

std::vector<double> Normalize(std::vector<double> w) {
  for (double& v : w) {
    if (v < kWeightFloor) v = 0.0;
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& v : w) v /= total;
  return w;
}

}  // namespace

MatrixEquilibrium SolveZeroSum(const Matrix& payoff) {
  const std::size_t m = payoff.rows();
  const std::size_t n = payoff.cols();
  if (m == 0 || n == 0) throw ModelError("empty payoff matrix");
  const double shift = 1.0 + std::max(0.0, -payoff.MinEntry());

  // Column player: max sum(w) s.t. (A + shift) w <= 1, w >= 0. The optimum is
  // 1 / (v + shift) and q = w (v + shift).
  LinearProgram col_lp;
  for (std::size_t j = 0; j < n; ++j) col_lp.AddVariable(1.0);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = payoff(i, j) + shift;
    col_lp.AddRow(std::move(row), RowSense::kLessEqual, 1.0);
  }

  // Row player: min sum(u) s.t. (A + shift)^T u >= 1, u >= 0, written as a
  // maximization of -sum(u).
  LinearProgram row_lp;
  for (std::size_t i = 0; i < m; ++i) row_lp.AddVariable(-1.0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = payoff(i, j) + shift;
    row_lp.AddRow(std::move(row), RowSense::kGreaterEqual, 1.0);
  }

  const LpSolution col_sol = SolveLp(col_lp);
  const LpSolution row_sol = SolveLp(row_lp);
  if (col_sol.status != LpStatus::kOptimal ||
      row_sol.status != LpStatus::kOptimal) {
    throw ModelError("matrix game LP did not reach optimality");
  }

  MatrixEquilibrium eq;
  eq.row_weights = Normalize(row_sol.x);
  eq.col_weights = Normalize(col_sol.x);
  double value = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (eq.row_weights[i] == 0.0) continue;
    double r = 0.0;
    for (std::size_t j = 0; j < n; ++j) r += payoff(i, j) * eq.col_weights[j];
    value += eq.row_weights[i] * r;
  }
  eq.value = value;
  return eq;
}

ZeroSumSolution SolveZeroSum(const MatrixGame& game) {
  if (game.row_strategies.size() != game.payoff.rows() ||
      game.col_strategies.size() != game.payoff.cols()) {
    throw ModelError("strategy lists do not match the payoff matrix shape");
  }
  MatrixEquilibrium eq = SolveZeroSum(game.payoff);
  FiniteMixedStrategy p =
      FiniteMixedStrategy::MergeDuplicates(game.row_strategies, eq.row_weights);
  FiniteMixedStrategy q =
      FiniteMixedStrategy::MergeDuplicates(game.col_strategies, eq.col_weights);
  return ZeroSumSolution{std::move(p), std::move(q), eq.value,
                         std::move(eq.row_weights), std::move(eq.col_weights)};
}

double CertificateError(const Matrix& payoff, std::span<const double> row,
                        std::span<const double> col, double value) {
  double best_row = -kInfinity;
  for (std::size_t i = 0; i < payoff.rows(); ++i) {
    double r = 0.0;
    for (std::size_t j = 0; j < payoff.cols(); ++j) r += payoff(i, j) * col[j];
    best_row = std::max(best_row, r);
  }
  double best_col = kInfinity;
  for (std::size_t j = 0; j < payoff.cols(); ++j) {
    double c = 0.0;
    for (std::size_t i = 0; i < payoff.rows(); ++i) c += row[i] * payoff(i, j);
    best_col = std::min(best_col, c);
  }
  return std::max(std::abs(best_row - value), std::abs(best_col - value));
}

GameDefinition EmbedMatrixGame(const Matrix& payoff) {
  if (payoff.rows() == 0 || payoff.cols() == 0) {
    throw ModelError("empty payoff matrix");
  }
  auto a = std::make_shared<const Matrix>(payoff);
  return GameDefinition{
      "matrix", StrategySpace::Simplex(payoff.rows()),
      StrategySpace::Simplex(payoff.cols()),
      [a](const StrategyPoint& x, const StrategyPoint& y) {
        double total = 0.0;
        for (std::size_t i = 0; i < a->rows(); ++i) {
          if (x[i] == 0.0) continue;
          double r = 0.0;
          for (std::size_t j = 0; j < a->cols(); ++j) r += (*a)(i, j) * y[j];
          total += x[i] * r;
        }
        return total;
      }};
}

std::vector<StrategyPoint> SimplexVertices(std::size_t dim) {
  std::vector<StrategyPoint> vertices;
  vertices.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<double> e(dim, 0.0);
    e[i] = 1.0;
    vertices.emplace_back(std::move(e));
  }
  return vertices;
}

}  // namespace contdo
