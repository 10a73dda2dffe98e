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

#include "seqmdi/witness.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "seqmdi/errors.hpp"

namespace seqmdi {
namespace {

const std::vector<std::string>& protocol_labels() {
  static const std::vector<std::string> labels{"A'", "A", "B", "B'"};
  return labels;
}

void require_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
  }
}

}  // namespace

WitnessValue make_witness_value(double value, double lambda) {
  return WitnessValue{value, lambda, value < -kDetectionTol};
}

WitnessCoefficients werner_beta() {
  WitnessCoefficients c;
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      c.beta[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = s == t ? 5.0 / 8.0 : -1.0 / 8.0;
    }
  }
  return c;
}

double joint_success_probability(const DensityOperator& rho_ab, const DensityOperator& tau,
                                 const DensityOperator& omega, double lambda) {
  const auto& layout = rho_ab.layout();
  if (layout.size() != 2 || layout.factors()[0].label != "A" || layout.factors()[1].label != "B" ||
      layout.total_dim() != 4) {
    throw LayoutError("witness evaluation expects a two-qubit state on (A, B)");
  }
  const DensityOperator joint = tensor(tensor(tau, rho_ab), omega);
  if (joint.layout() != SubsystemLayout::qubits({"A'", "A", "B", "B'"})) {
    throw LayoutError("inputs must live on A' (Alice) and B' (Bob)");
  }
  const ComplexMatrix effect = tensor(projector(bell_phi_plus()), unsharp_pair(lambda).plus);
  return outcome_probability(joint, effect, protocol_labels());
}

WitnessValue mdi_ew_numeric(const DensityOperator& rho_ab, const WitnessCoefficients& beta,
                            double lambda, const InputEnsemble& taus, const InputEnsemble& omegas) {
  require_unit(lambda, "lambda");
  double value = 0.0;
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      value += beta(s, t) * joint_success_probability(rho_ab, taus[s], omegas[t], lambda);
    }
  }
  return make_witness_value(value, lambda);
}

WitnessValue mdi_ew_numeric(const DensityOperator& rho_ab, const WitnessCoefficients& beta,
                            double lambda) {
  static const InputEnsemble taus = InputEnsemble::standard(InputKind::Tau);
  static const InputEnsemble omegas = InputEnsemble::standard(InputKind::Omega);
  return mdi_ew_numeric(rho_ab, beta, lambda, taus, omegas);
}

double mdi_ew_closed_form(double q) {
  require_unit(q, "q");
  return (1.0 - 3.0 * q) / 16.0;
}

double mdi_ew_closed_form_unsharp(double q, double alpha, double lambda) {
  require_unit(q, "q");
  require_unit(lambda, "lambda");
  // entanglement_factor validates alpha; (c - 1)/4 = alpha sqrt(1 - alpha^2).
  const double overlap = (entanglement_factor(alpha) - 1.0) / 4.0;
  return -lambda * q * overlap / 4.0 + (1.0 - lambda * q) / 16.0;
}

ThresholdSharpness threshold_lambda(double q, double alpha) {
  require_unit(q, "q");
  const double factor = entanglement_factor(alpha);
  if (q == 0.0) return {std::numeric_limits<double>::infinity(), false};
  const double lambda = 1.0 / (q * factor);
  return {lambda, lambda < 1.0 - kDetectionTol};
}

ComplexMatrix recompose_witness(const WitnessCoefficients& beta, const InputEnsemble& taus,
                                const InputEnsemble& omegas) {
  ComplexMatrix w = ComplexMatrix::Zero(4, 4);
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      w += beta(s, t) * tensor(taus[s].matrix().transpose(), omegas[t].matrix().transpose());
    }
  }
  return w;
}

WitnessCoefficients decompose_witness(const ComplexMatrix& w, const InputEnsemble& taus,
                                      const InputEnsemble& omegas) {
  if (w.rows() != 4 || w.cols() != 4 || !is_hermitian(w, 1e-10)) {
    throw InvalidOperatorError("decompose_witness expects a 4x4 Hermitian matrix");
  }
  // Real system: rows are (Re, Im) of the 16 matrix entries, columns the
  // 16 product operators.
  Eigen::MatrixXd system(32, 16);
  Eigen::VectorXd rhs(32);
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      const ComplexMatrix basis =
          tensor(taus[s].matrix().transpose(), omegas[t].matrix().transpose());
      for (int k = 0; k < 16; ++k) {
        system(k, 4 * s + t) = basis(k / 4, k % 4).real();
        system(16 + k, 4 * s + t) = basis(k / 4, k % 4).imag();
      }
    }
  }
  for (int k = 0; k < 16; ++k) {
    rhs(k) = w(k / 4, k % 4).real();
    rhs(16 + k) = w(k / 4, k % 4).imag();
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(system);
  qr.setThreshold(1e-10);
  if (qr.rank() < 16) {
    throw SingularSystemError("input ensembles do not span the two-qubit operator space (rank " +
                              std::to_string(qr.rank()) + ")");
  }
  const Eigen::VectorXd x = qr.solve(rhs);

  WitnessCoefficients out;
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      out.beta[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = x(4 * s + t);
    }
  }
  return out;
}

}  // namespace seqmdi
