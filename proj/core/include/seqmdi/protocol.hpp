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

// Sequential sharing of entanglement between one Alice and a chain of Bobs.
//
// Bob i holds rho_i = q_i |psi_alpha><psi_alpha| + (1 - q_i)/4 I with
// q_1 = 1, measures with sharpness lambda_i and leaves the next Bob a state
// whose |psi_alpha> weight is q_{i+1} = retention_factor(lambda_i) q_i.
// Bob i succeeds when his witness value is strictly negative.

#include <span>
#include <variant>
#include <vector>

namespace seqmdi {

// Fraction of the |psi_alpha> weight that survives one averaged measurement:
//   f(l) = 1/2 [1 + (sqrt((1+3l)(1-l)) + sqrt((3-3l)(3+l)))/4].
double retention_factor(double lambda);

struct BobRecord {
  int index = 1;
  double lambda = 0.0;
  // Weight before Bob `index` measures.
  double q = 1.0;
  // Witness observed at `lambda`.
  double witness_value = 0.0;
  // Witness the same state would give under a sharp measurement.
  double witness_sharp = 0.0;
  double negativity = 0.0;
  bool success = false;
};

// Each Bob measures at his own threshold plus `margin` (capped at 1).
struct ThresholdSchedule {
  double margin = 0.0;
};

// Every Bob measures with the same sharpness.
struct EqualSharpness {
  double lambda = 1.0;
};

using Policy = std::variant<ThresholdSchedule, EqualSharpness>;

struct ProtocolTrace {
  double alpha = 0.0;
  Policy policy;
  // Successful Bobs followed by the first failing one.
  std::vector<BobRecord> records;
  int n_success = 0;
};

// With margin == 0 a Bob counts as successful iff his threshold is below 1
// (limiting convention: the witness at the threshold itself is 0). With
// margin > 0 the witness at lambda_i must also be strictly negative.
ProtocolTrace run_threshold_protocol(double alpha, double margin = 0.0);

ProtocolTrace run_equal_sharpness(double alpha, double lambda);
// n_success of run_equal_sharpness without building records.
int equal_sharpness_count(double alpha, double lambda);

struct EntanglementCount {
  double alpha = 0.0;
  double entropy = 0.0;
  int n = 0;
};

// Threshold-schedule Bob count for each alpha, in input order.
std::vector<EntanglementCount> max_bobs_vs_entanglement(std::span<const double> alphas);

// Smallest alpha (to ~1e-15) at which the threshold schedule supports at
// least `n` Bobs, by bisection. Returns 0 for n <= 1; throws DomainError if
// even the singlet supports fewer than n.
double min_alpha_for_count(int n);
// entanglement_entropy(min_alpha_for_count(n)), 0 for n <= 1.
double min_entropy_for_count(int n);

// Half-open sharpness interval (lo, hi].
struct LambdaInterval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
};

struct CountSegment {
  LambdaInterval interval;
  int n = 0;
};

// Partition of (1/3, 1] into maximal intervals of constant equal-sharpness
// count. Scans a grid of spacing `step` and bisects every cell whose end
// counts differ down to 1e-10.
std::vector<CountSegment> equal_sharpness_segments(double alpha, double step = 1e-4);

struct NMaxResult {
  int n_max = 0;
  std::vector<LambdaInterval> intervals;
};

// Largest equal-sharpness count over (1/3, 1] and where it is attained.
// `step` must not exceed 1e-3.
NMaxResult n_max_over_lambda(double alpha, double step = 1e-4);

// Measure of {lambda in (1/3, 1] : count == n}.
double lambda_range(double alpha, int n, double step = 1e-4);

// max{(q (1 + 4 alpha sqrt(1 - alpha^2)) - 1)/4, 0}
double negativity_walpha(double q, double alpha);

// N_i - N_{i+1} after a measurement with sharpness lambda, for a state of
// the noisy family with negativity N. Equals N once the next state is
// separable.
double delta_negativity(double negativity, double lambda);
// (1 + 4N)/4 (1 - f(lambda)): the drop while the next state stays entangled.
double delta_negativity_entangled_branch(double negativity, double lambda);

// 1 / (4N + 1)
double threshold_from_negativity(double negativity);

// Closed form of delta_negativity_entangled_branch(N, 1/(4N + 1)):
//   1/8 [1 + 4N - sqrt(N(1 + N)) - sqrt(3N(1 + 3N))].
// Requires N > 0.
double delta_negativity_at_threshold(double negativity);

}  // namespace seqmdi
