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

#include "contdo/blotto.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "contdo/errors.h"

namespace contdo {

void BlottoGame::Validate(std::size_t min_battlefields) const {
  if (n() < min_battlefields) {
    throw ParameterError("blotto needs at least " +
                         std::to_string(min_battlefields) + " battlefields");
  }
  for (double a : weights) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw ParameterError("battlefield weights must be positive");
    }
  }
  if (!(c > 0.0) || c > 1.0) {
    throw ParameterError("contest constant c must lie in (0, 1]");
  }
}

double ContestPayoff(double z, double c) {
  if (!(c > 0.0)) throw ParameterError("contest constant c must be positive");
  if (z <= -c) return -1.0;
  if (z >= c) return 1.0;
  return z / c;
}

double BlottoUtility(const StrategyPoint& x, const StrategyPoint& y,
                     const BlottoGame& game) {
  if (x.dim() != game.n() || y.dim() != game.n()) {
    throw DomainError("allocation dimension does not match " +
                      std::to_string(game.n()) + " battlefields");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < game.n(); ++j) {
    total += game.weights[j] * ContestPayoff(x[j] - y[j], game.c);
  }
  return total;
}

GameDefinition MakeBlottoGame(const BlottoGame& game) {
  game.Validate();
  return GameDefinition{
      "blotto", StrategySpace::Simplex(game.n()),
      StrategySpace::Simplex(game.n()),
      [game](const StrategyPoint& x, const StrategyPoint& y) {
        return BlottoUtility(x, y, game);
      }};
}

std::size_t GridDivisions(double step) {
  if (!(step > 0.0) || step > 1.0) {
    throw ParameterError("grid step must lie in (0, 1]");
  }
  const double k = 1.0 / step;
  const double rounded = std::round(k);
  if (std::abs(k - rounded) > 1e-9 * std::max(1.0, k)) {
    throw ParameterError("1/c = " + std::to_string(k) +
                         " is not an integer; the simplex grid needs 1/c "
                         "integral");
  }
  return static_cast<std::size_t>(rounded);
}

std::size_t SimplexGridSize(std::size_t n, std::size_t divisions) {
  // C(k + n - 1, n - 1), computed incrementally; each partial product is
  // itself a binomial coefficient so the division is exact.
  std::size_t result = 1;
  for (std::size_t i = 1; i < n; ++i) {
    result = result * (divisions + i) / i;
  }
  return result;
}

std::vector<StrategyPoint> SimplexGrid(std::size_t n, double step,
                                       std::size_t max_points) {
  if (n == 0) throw ParameterError("simplex grid needs n >= 1");
  const std::size_t k = GridDivisions(step);
  if (SimplexGridSize(n, k) > max_points) {
    throw ResourceLimitError("simplex grid with " +
                             std::to_string(SimplexGridSize(n, k)) +
                             " points exceeds the limit of " +
                             std::to_string(max_points));
  }
  std::vector<StrategyPoint> out;
  out.reserve(SimplexGridSize(n, k));
  std::vector<std::size_t> parts(n, 0);
  const double kd = static_cast<double>(k);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t j,
                                                           std::size_t left) {
    if (j + 1 == n) {
      parts[j] = left;
      std::vector<double> coords(n);
      for (std::size_t t = 0; t < n; ++t) {
        coords[t] = static_cast<double>(parts[t]) / kd;
      }
      out.emplace_back(std::move(coords));
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      parts[j] = v;
      fill(j + 1, left - v);
    }
  };
  fill(0, k);
  return out;
}

BigMConstants BlottoBigM(double c) {
  if (!(c > 0.0)) throw ParameterError("contest constant c must be positive");
  const double inv = 1.0 / c;
  return BigMConstants{inv - 1.0, inv + 1.0, inv + 1.0, inv - 1.0};
}

namespace {

constexpr double kAllocationTolerance = 1e-9;

void CheckAllocation(const StrategyPoint& y, std::size_t n) {
  bool ok = y.dim() == n;
  double sum = 0.0;
  for (std::size_t j = 0; ok && j < n; ++j) {
    ok = y[j] >= -kAllocationTolerance && y[j] <= 1.0 + kAllocationTolerance;
    sum += y[j];
  }
  if (!ok || std::abs(sum - 1.0) > kAllocationTolerance) {
    throw DomainError("opponent atom " + y.ToString() +
                      " is not an allocation over " + std::to_string(n) +
                      " battlefields");
  }
}

// Clamps solver noise so the point is a valid allocation.
StrategyPoint CleanAllocation(std::span<const double> x) {
  std::vector<double> v(x.begin(), x.end());
  double sum = 0.0;
  for (double& e : v) {
    e = std::clamp(e, 0.0, 1.0);
    sum += e;
  }
  for (double& e : v) e /= sum;
  return StrategyPoint(std::move(v));
}

}  // namespace

BlottoMilp BuildBestResponseMilp(const FiniteMixedStrategy& opponent,
                                 const BlottoGame& game) {
  game.Validate(1);
  const std::size_t n = game.n();
  const std::size_t k = opponent.size();
  for (const StrategyPoint& y : opponent.atoms()) CheckAllocation(y, n);

  BlottoMilp out;
  out.n = n;
  out.k = k;
  out.big_m = BlottoBigM(game.c);
  const BigMConstants& m = out.big_m;
  const double inv_c = 1.0 / game.c;
  LinearProgram& lp = out.model.lp;

  for (std::size_t j = 0; j < n; ++j) lp.AddVariable(0.0, 0.0, 1.0);
  double constant = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double coef = opponent.weight(i) * game.weights[j];
      lp.AddVariable(coef);              // s_ij
      lp.AddVariable(-coef);             // t_ij
      lp.AddVariable(0.0, 0.0, 1.0);     // z_ij
      lp.AddVariable(0.0, 0.0, 1.0);     // w_ij
      constant -= coef;
    }
  }
  lp.objective_constant = constant;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.model.binary_vars.push_back(out.z_var(i, j));
      out.model.binary_vars.push_back(out.w_var(i, j));
    }
  }

  const std::size_t cols = lp.num_vars();
  std::vector<double> simplex(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) simplex[out.x_var(j)] = 1.0;
  lp.AddRow(std::move(simplex), RowSense::kEqual, 1.0);

  auto row = [&](std::initializer_list<std::pair<std::size_t, double>> terms,
                 RowSense sense, double rhs) {
    std::vector<double> coeffs(cols, 0.0);
    for (const auto& [var, value] : terms) coeffs[var] += value;
    lp.AddRow(std::move(coeffs), sense, rhs);
  };

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double y = opponent.atom(i)[j];
      const std::size_t x = out.x_var(j);
      const std::size_t s = out.s_var(i, j);
      const std::size_t t = out.t_var(i, j);
      const std::size_t z = out.z_var(i, j);
      const std::size_t w = out.w_var(i, j);
      // Affine parts (x - y + c) / c and (x - y - c) / c, written as
      // inv_c * x + offset.
      const double sa = (game.c - y) * inv_c;
      const double ta = (-game.c - y) * inv_c;

      // s >= inv_c x + sa
      row({{s, 1.0}, {x, -inv_c}}, RowSense::kGreaterEqual, sa);
      // s <= inv_c x + sa + Ms_l (1 - z)
      row({{s, 1.0}, {x, -inv_c}, {z, m.s_lower}}, RowSense::kLessEqual,
          sa + m.s_lower);
      // s <= Ms_u z
      row({{s, 1.0}, {z, -m.s_upper}}, RowSense::kLessEqual, 0.0);
      // t >= inv_c x + ta
      row({{t, 1.0}, {x, -inv_c}}, RowSense::kGreaterEqual, ta);
      // t <= inv_c x + ta + Mt_l (1 - w)
      row({{t, 1.0}, {x, -inv_c}, {w, m.t_lower}}, RowSense::kLessEqual,
          ta + m.t_lower);
      // t <= Mt_u w
      row({{t, 1.0}, {w, -m.t_upper}}, RowSense::kLessEqual, 0.0);
    }
  }
  return out;
}

OracleAnswer MilpBestResponse(const FiniteMixedStrategy& opponent,
                              const BlottoGame& game, Player player,
                              const MilpOptions& options) {
  const BlottoMilp milp = BuildBestResponseMilp(opponent, game);
  const MilpSolution sol = SolveMilp(milp.model, options);
  if (sol.status != LpStatus::kOptimal) {
    throw ModelError(std::string("blotto best-response MILP is ") +
                     ToString(sol.status));
  }
  StrategyPoint x = CleanAllocation(
      std::span<const double>(sol.x).subspan(0, milp.n));
  double value = 0.0;
  for (std::size_t i = 0; i < opponent.size(); ++i) {
    value += opponent.weight(i) *
             (player == Player::kOne ? BlottoUtility(x, opponent.atom(i), game)
                                     : BlottoUtility(opponent.atom(i), x, game));
  }
  return OracleAnswer{std::move(x), value};
}

OracleAnswer GridEnumerationBestResponse(const FiniteMixedStrategy& opponent,
                                         const BlottoGame& game,
                                         double grid_step, Player player) {
  return BlottoEnumerationOracle(game, player, grid_step).Respond(opponent);
}

BlottoMilpOracle::BlottoMilpOracle(BlottoGame game, Player player,
                                   MilpOptions options)
    : game_(std::move(game)), player_(player), options_(options) {
  game_.Validate();
}

OracleAnswer BlottoMilpOracle::Respond(
    const FiniteMixedStrategy& opponent) const {
  return MilpBestResponse(opponent, game_, player_, options_);
}

BlottoEnumerationOracle::BlottoEnumerationOracle(BlottoGame game,
                                                 Player player,
                                                 double grid_step)
    : game_(std::move(game)), player_(player) {
  game_.Validate(1);
  grid_ = SimplexGrid(game_.n(), grid_step > 0.0 ? grid_step : game_.c);
}

OracleAnswer BlottoEnumerationOracle::Respond(
    const FiniteMixedStrategy& opponent) const {
  for (const StrategyPoint& y : opponent.atoms()) {
    CheckAllocation(y, game_.n());
  }
  std::vector<double> values(grid_.size(), 0.0);
  for (std::size_t g = 0; g < grid_.size(); ++g) {
    for (std::size_t i = 0; i < opponent.size(); ++i) {
      values[g] += opponent.weight(i) *
                   (player_ == Player::kOne
                        ? BlottoUtility(grid_[g], opponent.atom(i), game_)
                        : BlottoUtility(opponent.atom(i), grid_[g], game_));
    }
  }
  const std::size_t best = FirstNearBest(values, player_ == Player::kOne);
  const double best_value = values[best];
  return OracleAnswer{grid_[best], best_value};
}

}  // namespace contdo
