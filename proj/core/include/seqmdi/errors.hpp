// Copyright 2026 The seqmdi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace seqmdi {

// Parameter outside the documented range of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Subsystem labels, permutations or dimensions that do not fit a layout.
class LayoutError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix that fails a Hermiticity, trace or positivity requirement.
class InvalidOperatorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Measurement outcome with (numerically) zero probability.
class DegenerateOutcomeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Linear system without a unique solution, e.g. a rank-deficient input ensemble.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace seqmdi
