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

#include "contdo/game.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "contdo/errors.h"

namespace contdo {

double StrategyPoint::DistanceTo(const StrategyPoint& other) const {
  if (dim() != other.dim()) return std::numeric_limits<double>::infinity();
  double dist = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    dist = std::max(dist, std::abs(coords_[i] - other.coords_[i]));
  }
  return dist;
}

std::string StrategyPoint::ToString() const {
  std::string out = "(";
  char buf[32];
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12g", coords_[i]);
    if (i > 0) out += ", ";
    out += buf;
  }
  return out + ")";
}

StrategySpace StrategySpace::Box(std::vector<double> lower,
                                 std::vector<double> upper) {
  if (lower.empty() || lower.size() != upper.size()) {
    throw ParameterError("box bounds must be nonempty and of equal length");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!std::isfinite(lower[i]) || !std::isfinite(upper[i]) ||
        lower[i] > upper[i]) {
      throw ParameterError("box bounds must be finite with lower <= upper");
    }
  }
  const std::size_t dim = lower.size();
  return StrategySpace(Kind::kBox, dim, std::move(lower), std::move(upper));
}

StrategySpace StrategySpace::Simplex(std::size_t dim) {
  if (dim == 0) throw ParameterError("simplex dimension must be positive");
  return StrategySpace(Kind::kSimplex, dim, std::vector<double>(dim, 0.0),
                       std::vector<double>(dim, 1.0));
}

bool StrategySpace::Contains(const StrategyPoint& point, double tol) const {
  if (point.dim() != dim_) return false;
  for (double v : point.coords()) {
    if (!std::isfinite(v)) return false;
  }
  if (kind_ == Kind::kBox) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (point[i] < lower_[i] - tol || point[i] > upper_[i] + tol) {
        return false;
      }
    }
    return true;
  }
  double sum = 0.0;
  for (double v : point.coords()) {
    if (v < -tol) return false;
    sum += v;
  }
  return std::abs(sum - 1.0) <= tol;
}

std::string StrategySpace::ToString() const {
  std::ostringstream out;
  if (kind_ == Kind::kSimplex) {
    out << "simplex(" << dim_ << ")";
    return out.str();
  }
  out << "box[";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i > 0) out << " x ";
    out << lower_[i] << ", " << upper_[i];
  }
  out << "]";
  return out.str();
}

void CheckInSpace(const GameDefinition& game, Player player,
                  const StrategyPoint& point) {
  const StrategySpace& space = game.space(player);
  if (!space.Contains(point)) {
    throw DomainError("strategy " + point.ToString() + " of player " +
                      std::to_string(static_cast<int>(player)) +
                      " is outside " + space.ToString());
  }
}

FiniteMixedStrategy::FiniteMixedStrategy(StrategyPoint point)
    : atoms_{std::move(point)}, weights_{1.0} {}

FiniteMixedStrategy FiniteMixedStrategy::MergeDuplicates(
    std::vector<StrategyPoint> atoms, std::vector<double> weights) {
  if (atoms.empty()) throw InvalidStrategyError("mixed strategy has no atoms");
  if (atoms.size() != weights.size()) {
    throw InvalidStrategyError("atom and weight counts differ");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidStrategyError("weights must be finite and nonnegative");
    }
    total += w;
  }
  if (!(total > 0.0)) {
    throw InvalidStrategyError("mixed strategy has zero total weight");
  }

  FiniteMixedStrategy out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (weights[i] == 0.0) continue;
    auto it = std::find_if(
        out.atoms_.begin(), out.atoms_.end(),
        [&](const StrategyPoint& a) { return a.SameAs(atoms[i]); });
    if (it == out.atoms_.end()) {
      out.atoms_.push_back(std::move(atoms[i]));
      out.weights_.push_back(weights[i]);
    } else {
      out.weights_[it - out.atoms_.begin()] += weights[i];
    }
  }
  for (double& w : out.weights_) w /= total;
  return out;
}

double FiniteMixedStrategy::MassNear(const StrategyPoint& center,
                                     double radius) const {
  double mass = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].DistanceTo(center) <= radius) mass += weights_[i];
  }
  return mass;
}

double ExpectedUtility(const FiniteMixedStrategy& p,
                       const FiniteMixedStrategy& q,
                       const GameDefinition& game) {
  for (const StrategyPoint& x : p.atoms()) CheckInSpace(game, Player::kOne, x);
  for (const StrategyPoint& y : q.atoms()) CheckInSpace(game, Player::kTwo, y);
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
      row += q.weight(j) * game.utility(p.atom(i), q.atom(j));
    }
    total += p.weight(i) * row;
  }
  return total;
}

double ExpectedUtility(const StrategyPoint& x, const FiniteMixedStrategy& q,
                       const GameDefinition& game) {
  return ExpectedUtility(FiniteMixedStrategy(x), q, game);
}

double ExpectedUtility(const FiniteMixedStrategy& p, const StrategyPoint& y,
                       const GameDefinition& game) {
  return ExpectedUtility(p, FiniteMixedStrategy(y), game);
}

}  // namespace contdo
