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

// Core vocabulary for two-player zero-sum games on compact subsets of R^d:
// strategy points, finitely supported mixed strategies, strategy spaces and
// the game triple (X, Y, u). Player 1 maximizes u, player 2 minimizes it.

#ifndef CONTDO_GAME_H_
#define CONTDO_GAME_H_

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace contdo {

// Max-norm distance under which two atoms are considered the same point.
inline constexpr double kMergeTolerance = 1e-9;

// Slack used by strategy-space membership tests.
inline constexpr double kMembershipTolerance = 1e-9;

enum class Player { kOne = 1, kTwo = 2 };

// A pure strategy: a point in R^d.
class StrategyPoint {
 public:
  StrategyPoint() = default;
  StrategyPoint(std::initializer_list<double> coords) : coords_(coords) {}
  explicit StrategyPoint(std::vector<double> coords)
      : coords_(std::move(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  // Max-norm distance; points of different dimension are infinitely apart.
  double DistanceTo(const StrategyPoint& other) const;
  bool SameAs(const StrategyPoint& other,
              double tol = kMergeTolerance) const {
    return DistanceTo(other) <= tol;
  }

  std::string ToString() const;

  friend bool operator==(const StrategyPoint&, const StrategyPoint&) = default;

 private:
  std::vector<double> coords_;
};

// Axis-aligned box or probability simplex. Only membership is needed by the
// solvers; nothing ever projects onto a space.
class StrategySpace {
 public:
  enum class Kind { kBox, kSimplex };

  static StrategySpace Box(std::vector<double> lower, std::vector<double> upper);
  static StrategySpace Interval(double lower, double upper) {
    return Box({lower}, {upper});
  }
  static StrategySpace Simplex(std::size_t dim);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }

  bool Contains(const StrategyPoint& point,
                double tol = kMembershipTolerance) const;

  std::string ToString() const;

 private:
  StrategySpace(Kind kind, std::size_t dim, std::vector<double> lower,
                std::vector<double> upper)
      : kind_(kind), dim_(dim), lower_(std::move(lower)),
        upper_(std::move(upper)) {}

  Kind kind_;
  std::size_t dim_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

// Pure utility of player 1. Must be deterministic and free of side effects so
// it can be evaluated from several threads.
using UtilityFn =
    std::function<double(const StrategyPoint& x, const StrategyPoint& y)>;

struct GameDefinition {
  std::string name;
  StrategySpace space1;
  StrategySpace space2;
  UtilityFn utility;

  const StrategySpace& space(Player player) const {
    return player == Player::kOne ? space1 : space2;
  }
};

// Throws DomainError naming the point if it is not in the player's space.
void CheckInSpace(const GameDefinition& game, Player player,
                  const StrategyPoint& point);

// Probability distribution with finitely many atoms. Immutable once built;
// construction merges atoms closer than kMergeTolerance and renormalizes.
class FiniteMixedStrategy {
 public:
  // Dirac measure at `point`.
  explicit FiniteMixedStrategy(StrategyPoint point);

  // Merges near-duplicate atoms (summing their weights) and rescales the
  // weights to sum to one. Throws InvalidStrategyError on an empty list,
  // mismatched lengths, negative or non-finite weights, or zero total mass.
  static FiniteMixedStrategy MergeDuplicates(std::vector<StrategyPoint> atoms,
                                             std::vector<double> weights);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<StrategyPoint>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }
  const StrategyPoint& atom(std::size_t i) const { return atoms_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

  // Total weight of atoms within `radius` (max-norm) of `center`.
  double MassNear(const StrategyPoint& center, double radius) const;

 private:
  FiniteMixedStrategy() = default;

  std::vector<StrategyPoint> atoms_;
  std::vector<double> weights_;
};

// U(p, q) = sum_x sum_y p(x) q(y) u(x, y). Every atom is checked against its
// strategy space first.
double ExpectedUtility(const FiniteMixedStrategy& p,
                       const FiniteMixedStrategy& q,
                       const GameDefinition& game);

// U(x, q) and U(p, y) shorthands.
double ExpectedUtility(const StrategyPoint& x, const FiniteMixedStrategy& q,
                       const GameDefinition& game);
double ExpectedUtility(const FiniteMixedStrategy& p, const StrategyPoint& y,
                       const GameDefinition& game);

}  // namespace contdo

#endif  // CONTDO_GAME_H_
