// Copyright 2026 The causal-switch-teleport Authors
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

#ifndef CST_ERROR_HPP
#define CST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cst {

/// Operand shapes do not fit the requested operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A domain value (probability, angle, density matrix, index) is out of range.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Post-selection probability is too small for the normalized fidelity to be defined.
class NullProbability : public std::domain_error {
 public:
  explicit NullProbability(double probability)
      : std::domain_error("post-selection probability " + std::to_string(probability) +
                          " is below the null threshold; fidelity undefined"),
        probability_(probability) {}

  double probability() const noexcept { return probability_; }

 private:
  double probability_;
};

/// Every candidate measurement of an optimizer scan has null probability.
class AllPointsNull : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cst

#endif  // CST_ERROR_HPP
