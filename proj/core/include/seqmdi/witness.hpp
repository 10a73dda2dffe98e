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

// Measurement-device-independent entanglement witness (MDI-EW).
//
//   I_lambda(rho) = sum_{s,t} beta_st P_lambda(1,1 | tau_s, omega_t)
//
// where P_lambda is the probability that Alice's sharp Bell measurement on
// (A', A) and Bob's unsharp one on (B, B') both report outcome 1.

#include <array>

#include "seqmdi/kernel.hpp"
#include "seqmdi/measurement.hpp"
#include "seqmdi/states.hpp"

namespace seqmdi {

// Witness values at or above -kDetectionTol do not certify entanglement.
inline constexpr double kDetectionTol = 1e-12;

// sum_st beta_st P(1,1|tau_s,omega_t) = kPhiPlusContraction * tr(W rho)
// for sharp measurements, when W = sum_st beta_st tau_s^T x omega_t^T.
// Each |phi+> projection contributes a factor 1/2; the value is recovered
// by calibration in the witness tests.
inline constexpr double kPhiPlusContraction = 0.25;

struct WitnessCoefficients {
  std::array<std::array<double, 4>, 4> beta{};

  double operator()(int s, int t) const {
    return beta[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
  }
};

struct WitnessValue {
  double value = 0.0;
  double lambda = 1.0;
  bool entangled = false;
};

WitnessValue make_witness_value(double value, double lambda);

// 5/8 on the diagonal, -1/8 off it.
WitnessCoefficients werner_beta();

// P_lambda(1,1 | tau, omega) on the assembled A', A, B, B' space.
double joint_success_probability(const DensityOperator& rho_ab, const DensityOperator& tau,
                                 const DensityOperator& omega, double lambda);

WitnessValue mdi_ew_numeric(const DensityOperator& rho_ab, const WitnessCoefficients& beta,
                            double lambda, const InputEnsemble& taus, const InputEnsemble& omegas);
WitnessValue mdi_ew_numeric(const DensityOperator& rho_ab, const WitnessCoefficients& beta,
                            double lambda);

// Werner state, sharp measurements: (1 - 3q)/16.
double mdi_ew_closed_form(double q);
// Noisy psi_alpha family, Bob unsharp:
//   -lambda q alpha sqrt(1 - alpha^2)/4 + (1 - lambda q)/16.
double mdi_ew_closed_form_unsharp(double q, double alpha, double lambda);

struct ThresholdSharpness {
  // +infinity when q == 0.
  double lambda = 0.0;
  // lambda < 1 - kDetectionTol.
  bool feasible = false;
};

// Smallest sharpness above which the witness turns negative:
// 1 / (q (1 + 4 alpha sqrt(1 - alpha^2))).
ThresholdSharpness threshold_lambda(double q, double alpha);

// Solves sum_st beta_st tau_s^T x omega_t^T = w for real beta. Throws
// SingularSystemError when the 16 product operators are linearly dependent
// and InvalidOperatorError when `w` is not a 4x4 Hermitian matrix.
WitnessCoefficients decompose_witness(const ComplexMatrix& w, const InputEnsemble& taus,
                                      const InputEnsemble& omegas);

ComplexMatrix recompose_witness(const WitnessCoefficients& beta, const InputEnsemble& taus,
                                const InputEnsemble& omegas);

}  // namespace seqmdi
