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

#ifndef CONTDO_ERRORS_H_
#define CONTDO_ERRORS_H_

#include <stdexcept>
#include <string>

namespace contdo {

// A strategy point lies outside the strategy space it was used in.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A mixed strategy could not be formed (empty support, zero mass, ...).
class InvalidStrategyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed linear or mixed-integer model.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Invalid game or solver parameter (c <= 0, non-integral grid, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A best-response oracle broke its contract.
class OracleContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A solver or enumeration exceeded its configured work limit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace contdo

#endif  // CONTDO_ERRORS_H_
