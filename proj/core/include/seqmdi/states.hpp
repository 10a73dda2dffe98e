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

// States and quantum input ensembles of the two-qubit witnessing scenario.
//
// Two-qubit vectors use the computational basis |00>, |01>, |10>, |11>.

#include <array>
#include <cmath>
#include <numbers>

#include "seqmdi/kernel.hpp"

namespace seqmdi {

inline constexpr double kMaxAlpha = 1.0 / std::numbers::sqrt2;

// alpha|01> - sqrt(1 - alpha^2)|10>, 0 < alpha <= 1/sqrt(2).
ComplexVector psi_alpha(double alpha);
ComplexVector psi_minus();
ComplexVector bell_phi_plus();

// 1 + 4 alpha sqrt(1 - alpha^2), i.e. 1 + 2C for the concurrence C of
// psi_alpha. Sets both the sharpness threshold and the negativity of the
// noisy family.
double entanglement_factor(double alpha);

// q |psi_alpha><psi_alpha| + (1 - q)/4 I on (A, B).
struct WernerAlphaState {
  double q = 1.0;
  double alpha = kMaxAlpha;

  // Throws DomainError on out-of-range parameters.
  DensityOperator densify() const;
};

DensityOperator werner_alpha(double q, double alpha);

enum class InputKind { Tau, Omega };

// Referee input sigma_s (I + n.sigma)/2 sigma_s with n = (1,1,1)/sqrt(3).
// Tau inputs live on A', omega inputs on B'.
DensityOperator input_state(InputKind kind, int index);

std::array<double, 3> bloch_vector(const ComplexMatrix& qubit);

// Four qubit inputs with a uniform prior.
class InputEnsemble {
 public:
  // All states must be single-qubit operators on the same label.
  explicit InputEnsemble(std::array<DensityOperator, 4> states);

  static InputEnsemble standard(InputKind kind);

  const DensityOperator& operator[](int index) const;
  const std::array<DensityOperator, 4>& states() const { return states_; }
  double prior(int /*index*/) const { return 0.25; }
  const std::string& label() const;

 private:
  std::array<DensityOperator, 4> states_;
};

// -a^2 log2 a^2 - (1 - a^2) log2 (1 - a^2), in ebits.
double entanglement_entropy(double alpha);
// Inverse of entanglement_entropy on (0, 1/sqrt(2)], by bisection.
double alpha_for_entropy(double entropy);

}  // namespace seqmdi
