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

#include "seqmdi/states.hpp"

#include <string>

#include "seqmdi/errors.hpp"

namespace seqmdi {
namespace {

void require_alpha(double alpha) {
  // Allow the rounding of 1/sqrt(2) computed elsewhere.
  if (!(alpha > 0.0) || alpha > kMaxAlpha + 1e-15) {
    throw DomainError("alpha must lie in (0, 1/sqrt(2)], got " + std::to_string(alpha));
  }
}

void require_probability(double q, const char* name) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(q));
  }
}

double clamp_alpha(double alpha) { return std::min(alpha, kMaxAlpha); }

}  // namespace

ComplexVector psi_alpha(double alpha) {
  require_alpha(alpha);
  alpha = clamp_alpha(alpha);
  ComplexVector psi = ComplexVector::Zero(4);
  psi(1) = alpha;
  psi(2) = -std::sqrt(1.0 - alpha * alpha);
  return psi;
}

ComplexVector psi_minus() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(1) = 1.0 / std::numbers::sqrt2;
  psi(2) = -1.0 / std::numbers::sqrt2;
  return psi;
}

ComplexVector bell_phi_plus() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = 1.0 / std::numbers::sqrt2;
  psi(3) = 1.0 / std::numbers::sqrt2;
  return psi;
}

double entanglement_factor(double alpha) {
  require_alpha(alpha);
  alpha = clamp_alpha(alpha);
  return 1.0 + 4.0 * alpha * std::sqrt(1.0 - alpha * alpha);
}

DensityOperator WernerAlphaState::densify() const {
  require_probability(q, "q");
  require_alpha(alpha);
  ComplexMatrix m = q * projector(psi_alpha(alpha)) + ((1.0 - q) / 4.0) * identity(4);
  return DensityOperator(std::move(m), SubsystemLayout::qubits({"A", "B"}));
}

DensityOperator werner_alpha(double q, double alpha) { return WernerAlphaState{q, alpha}.densify(); }

DensityOperator input_state(InputKind kind, int index) {
  if (index < 0 || index > 3) throw DomainError("input index must be in 0..3");
  const double c = 1.0 / std::sqrt(3.0);
  const ComplexMatrix base = 0.5 * (identity(2) + c * (pauli(1) + pauli(2) + pauli(3)));
  const ComplexMatrix s = pauli(index);
  const char* label = kind == InputKind::Tau ? "A'" : "B'";
  return DensityOperator(s * base * s, SubsystemLayout::qubits({label}));
}

std::array<double, 3> bloch_vector(const ComplexMatrix& qubit) {
  if (qubit.rows() != 2 || qubit.cols() != 2) throw InvalidOperatorError("bloch_vector needs a 2x2 matrix");
  return {(qubit * pauli(1)).trace().real(), (qubit * pauli(2)).trace().real(),
          (qubit * pauli(3)).trace().real()};
}

InputEnsemble::InputEnsemble(std::array<DensityOperator, 4> states) : states_(std::move(states)) {
  for (const auto& s : states_) {
    if (s.layout().size() != 1 || s.dim() != 2) {
      throw LayoutError("input ensemble members must be single qubits");
    }
    if (s.layout().factors()[0].label != states_[0].layout().factors()[0].label) {
      throw LayoutError("input ensemble members must share one subsystem label");
    }
  }
}

InputEnsemble InputEnsemble::standard(InputKind kind) {
  return InputEnsemble({input_state(kind, 0), input_state(kind, 1), input_state(kind, 2),
                        input_state(kind, 3)});
}

const DensityOperator& InputEnsemble::operator[](int index) const {
  if (index < 0 || index > 3) throw DomainError("input index must be in 0..3");
  return states_[static_cast<std::size_t>(index)];
}

const std::string& InputEnsemble::label() const { return states_[0].layout().factors()[0].label; }

double entanglement_entropy(double alpha) {
  require_alpha(alpha);
  const double a2 = clamp_alpha(alpha) * clamp_alpha(alpha);
  const double b2 = 1.0 - a2;
  return -a2 * std::log2(a2) - b2 * std::log2(b2);
}

double alpha_for_entropy(double entropy) {
  if (!(entropy > 0.0 && entropy <= 1.0)) {
    throw DomainError("entanglement entropy must lie in (0, 1], got " + std::to_string(entropy));
  }
  if (entropy == 1.0) return kMaxAlpha;
  double lo = 0.0;
  double hi = kMaxAlpha;
  for (int iter = 0; iter < 200 && hi - lo > 1e-16; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid > 0.0 && entanglement_entropy(mid) < entropy) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace seqmdi
