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

// Two-outcome joint measurements on a qubit pair and the Luders update.

#include <span>
#include <string>
#include <vector>

#include "seqmdi/kernel.hpp"
#include "seqmdi/states.hpp"

namespace seqmdi {

enum class Outcome { Plus, Minus };

// Unsharp version of {P+, I - P+} with P+ = |phi+><phi+|:
//   E+ = lambda P+ + (1 - lambda)/4 I,  E- = I - E+.
// E+ has eigenvalue (1 + 3 lambda)/4 on P+ and (1 - lambda)/4 elsewhere.
struct BinaryEffectPair {
  double lambda = 1.0;
  ComplexMatrix plus;
  ComplexMatrix minus;

  const ComplexMatrix& effect(Outcome o) const { return o == Outcome::Plus ? plus : minus; }
};

BinaryEffectPair unsharp_pair(double lambda);

// sqrt(E) from the two-eigenspace form. Agrees with herm_sqrt(effect) to
// ~1e-15.
ComplexMatrix effect_sqrt(const BinaryEffectPair& pair, Outcome outcome);

// `op` acting on the factors `acting_on` (in that order), identity elsewhere,
// expressed in `layout` order.
ComplexMatrix embed_operator(const ComplexMatrix& op, const SubsystemLayout& layout,
                             std::span<const std::string> acting_on);

// tr[(effect on acting_on) rho].
double outcome_probability(const DensityOperator& rho, const ComplexMatrix& effect,
                           std::span<const std::string> acting_on);

struct LudersResult {
  ComplexMatrix unnormalized;
  SubsystemLayout layout;
  double probability = 0.0;

  DensityOperator normalized() const;
};

// (I x sqrt(E)) rho (I x sqrt(E)) for the chosen outcome, with the
// post-measurement unitary fixed to the identity. Throws
// DegenerateOutcomeError if the outcome probability is below 1e-14.
LudersResult luders_update(const DensityOperator& rho_with_input, const BinaryEffectPair& pair,
                           Outcome outcome, std::span<const std::string> acting_on);

// State handed to the next Bob: the input omega_t is attached on B', Bob
// measures {E+, E-} on (B, B'), outcomes and inputs are averaged with the
// ensemble prior and B' is traced out. `rho_ab` must live on (A, B).
DensityOperator average_post_measurement_state(const DensityOperator& rho_ab, double lambda,
                                               const InputEnsemble& omegas);
DensityOperator average_post_measurement_state(const DensityOperator& rho_ab, double lambda);

}  // namespace seqmdi
