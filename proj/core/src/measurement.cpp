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

#include "seqmdi/measurement.hpp"

#include <algorithm>
#include <cmath>

#include "seqmdi/errors.hpp"

namespace seqmdi {
namespace {

void require_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("sharpness must lie in [0, 1], got " + std::to_string(lambda));
  }
}

}  // namespace

BinaryEffectPair unsharp_pair(double lambda) {
  require_lambda(lambda);
  const ComplexMatrix p_plus = projector(bell_phi_plus());
  BinaryEffectPair pair;
  pair.lambda = lambda;
  pair.plus = lambda * p_plus + ((1.0 - lambda) / 4.0) * identity(4);
  pair.minus = -lambda * p_plus + ((3.0 + lambda) / 4.0) * identity(4);
  return pair;
}

ComplexMatrix effect_sqrt(const BinaryEffectPair& pair, Outcome outcome) {
  const double l = pair.lambda;
  const ComplexMatrix p_plus = projector(bell_phi_plus());
  const ComplexMatrix p_rest = identity(4) - p_plus;
  if (outcome == Outcome::Plus) {
    return std::sqrt((1.0 + 3.0 * l) / 4.0) * p_plus + std::sqrt((1.0 - l) / 4.0) * p_rest;
  }
  return std::sqrt((3.0 - 3.0 * l) / 4.0) * p_plus + std::sqrt((3.0 + l) / 4.0) * p_rest;
}

ComplexMatrix embed_operator(const ComplexMatrix& op, const SubsystemLayout& layout,
                             std::span<const std::string> acting_on) {
  // Order: acting_on factors first, then the rest in layout order.
  std::vector<std::size_t> perm;
  std::vector<bool> taken(layout.size(), false);
  for (const auto& label : acting_on) {
    const std::size_t k = layout.index_of(label);
    if (taken[k]) throw LayoutError("subsystem '" + label + "' listed twice");
    taken[k] = true;
    perm.push_back(k);
  }
  int rest_dim = 1;
  for (std::size_t k = 0; k < layout.size(); ++k) {
    if (!taken[k]) {
      perm.push_back(k);
      rest_dim *= layout.factors()[k].dim;
    }
  }
  if (op.rows() * rest_dim != layout.total_dim() || op.rows() != op.cols()) {
    throw LayoutError("operator dimension does not match the acting subsystems");
  }
  const SubsystemLayout reordered = layout.permuted(perm);
  return permute_subsystems(tensor(op, identity(rest_dim)), reordered, inverse_permutation(perm));
}

double outcome_probability(const DensityOperator& rho, const ComplexMatrix& effect,
                           std::span<const std::string> acting_on) {
  const ComplexMatrix full = embed_operator(effect, rho.layout(), acting_on);
  return (full * rho.matrix()).trace().real();
}

DensityOperator LudersResult::normalized() const {
  ComplexMatrix m = unnormalized / probability;
  // Wash out rounding asymmetry before validation.
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityOperator(std::move(m), layout);
}

LudersResult luders_update(const DensityOperator& rho_with_input, const BinaryEffectPair& pair,
                           Outcome outcome, std::span<const std::string> acting_on) {
  const ComplexMatrix k = embed_operator(effect_sqrt(pair, outcome), rho_with_input.layout(), acting_on);
  LudersResult result;
  result.unnormalized = k * rho_with_input.matrix() * k;
  result.layout = rho_with_input.layout();
  result.probability = result.unnormalized.trace().real();
  if (result.probability < 1e-14) {
    throw DegenerateOutcomeError("measurement outcome has zero probability");
  }
  return result;
}

DensityOperator average_post_measurement_state(const DensityOperator& rho_ab, double lambda,
                                               const InputEnsemble& omegas) {
  require_lambda(lambda);
  const auto& layout = rho_ab.layout();
  if (layout.size() != 2 || !layout.contains("A") || !layout.contains("B")) {
    throw LayoutError("average_post_measurement_state expects a state on (A, B)");
  }
  const BinaryEffectPair pair = unsharp_pair(lambda);
  const std::vector<std::string> bob{"B", omegas.label()};
  const std::vector<std::string> keep{"A", "B"};

  ComplexMatrix acc = ComplexMatrix::Zero(4, 4);
  for (int t = 0; t < 4; ++t) {
    const DensityOperator joint = tensor(rho_ab, omegas[t]);
    for (Outcome o : {Outcome::Plus, Outcome::Minus}) {
      const ComplexMatrix k = embed_operator(effect_sqrt(pair, o), joint.layout(), bob);
      const ComplexMatrix post = k * joint.matrix() * k;
      acc += omegas.prior(t) * partial_trace(post, joint.layout(), keep);
    }
  }
  acc = 0.5 * (acc + acc.adjoint()).eval();
  return DensityOperator(std::move(acc), layout);
}

DensityOperator average_post_measurement_state(const DensityOperator& rho_ab, double lambda) {
  return average_post_measurement_state(rho_ab, lambda, InputEnsemble::standard(InputKind::Omega));
}

}  // namespace seqmdi
