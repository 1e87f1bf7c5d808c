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

#ifndef CONTDO_MATRIX_GAME_H_
#define CONTDO_MATRIX_GAME_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "contdo/game.h"

namespace contdo {

// Dense row-major matrix of payoffs to the row player.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix Transposed() const;
  double MinEntry() const;
  double MaxEntry() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Finite subgame: payoff(i, j) = u(row_strategies[i], col_strategies[j]).
struct MatrixGame {
  Matrix payoff;
  std::vector<StrategyPoint> row_strategies;
  std::vector<StrategyPoint> col_strategies;
};

MatrixGame SubgameMatrix(const GameDefinition& game,
                         std::span<const StrategyPoint> xs,
                         std::span<const StrategyPoint> ys);

struct MatrixEquilibrium {
  std::vector<double> row_weights;
  std::vector<double> col_weights;
  // row_weights^T A col_weights.
  double value = 0.0;
};

// Maximin/minimax strategies of a zero-sum matrix game. The matrix is shifted
// to be positive and each player's reciprocal-value LP is solved separately.
MatrixEquilibrium SolveZeroSum(const Matrix& payoff);

struct ZeroSumSolution {
  FiniteMixedStrategy p;
  FiniteMixedStrategy q;
  double value;
  std::vector<double> row_weights;
  std::vector<double> col_weights;
};

ZeroSumSolution SolveZeroSum(const MatrixGame& game);

// Largest deviation of max_i (A q)_i and min_j (p^T A)_j from `value`. Zero
// for an exact equilibrium.
double CertificateError(const Matrix& payoff, std::span<const double> row,
                        std::span<const double> col, double value);

// Embeds a finite matrix game on simplices with u(x, y) = x^T A y, so pure
// strategies are the simplex vertices.
GameDefinition EmbedMatrixGame(const Matrix& payoff);

std::vector<StrategyPoint> SimplexVertices(std::size_t dim);

}  // namespace contdo

#endif  // CONTDO_MATRIX_GAME_H_
