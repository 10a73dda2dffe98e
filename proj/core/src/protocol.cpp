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

#include "seqmdi/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "seqmdi/errors.hpp"
#include "seqmdi/states.hpp"
#include "seqmdi/witness.hpp"

namespace seqmdi {
namespace {

constexpr double kLambdaFloor = 1.0 / 3.0;
constexpr double kSegmentTol = 1e-10;
constexpr int kMaxBobs = 100000;

void require_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("sharpness must lie in [0, 1], got " + std::to_string(lambda));
  }
}

void require_negativity(double n) {
  if (!(n >= 0.0)) throw DomainError("negativity must be non-negative, got " + std::to_string(n));
}

// Witness of the noisy psi_alpha family, with alpha folded into `overlap`
// = alpha sqrt(1 - alpha^2). Same expression as mdi_ew_closed_form_unsharp.
double family_witness(double q, double overlap, double lambda) {
  return -lambda * q * overlap / 4.0 + (1.0 - lambda * q) / 16.0;
}

double overlap_of(double alpha) { return (entanglement_factor(alpha) - 1.0) / 4.0; }

BobRecord make_record(int index, double lambda, double q, double alpha, bool success) {
  BobRecord r;
  r.index = index;
  r.lambda = lambda;
  r.q = q;
  r.witness_value = mdi_ew_closed_form_unsharp(q, alpha, lambda);
  r.witness_sharp = mdi_ew_closed_form_unsharp(q, alpha, 1.0);
  r.negativity = negativity_walpha(q, alpha);
  r.success = success;
  return r;
}

int count_with_overlap(double overlap, double lambda) {
  const double f = retention_factor(lambda);
  double q = 1.0;
  int n = 0;
  while (family_witness(q, overlap, lambda) < -kDetectionTol) {
    if (++n > kMaxBobs) throw std::logic_error("equal-sharpness count did not terminate");
    q *= f;
  }
  return n;
}

}  // namespace

double retention_factor(double lambda) {
  require_lambda(lambda);
  const double a = std::sqrt((1.0 + 3.0 * lambda) * (1.0 - lambda));
  const double b = std::sqrt((3.0 - 3.0 * lambda) * (3.0 + lambda));
  return 0.5 * (1.0 + (a + b) / 4.0);
}

ProtocolTrace run_threshold_protocol(double alpha, double margin) {
  if (!(margin >= 0.0)) throw DomainError("margin must be non-negative");
  ProtocolTrace trace;
  trace.alpha = alpha;
  trace.policy = ThresholdSchedule{margin};

  double q = 1.0;
  for (int i = 1;; ++i) {
    if (i > kMaxBobs) throw std::logic_error("threshold protocol did not terminate");
    const ThresholdSharpness th = threshold_lambda(q, alpha);
    const double lambda = std::min(th.lambda + margin, 1.0);
    bool success = th.feasible;
    if (success && margin > 0.0) {
      success = mdi_ew_closed_form_unsharp(q, alpha, lambda) < -kDetectionTol;
    }
    trace.records.push_back(make_record(i, lambda, q, alpha, success));
    if (!success) break;
    ++trace.n_success;
    q *= retention_factor(lambda);
  }
  return trace;
}

ProtocolTrace run_equal_sharpness(double alpha, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw DomainError("common sharpness must lie in (0, 1], got " + std::to_string(lambda));
  }
  ProtocolTrace trace;
  trace.alpha = alpha;
  trace.policy = EqualSharpness{lambda};

  const double f = retention_factor(lambda);
  double q = 1.0;
  for (int i = 1;; ++i) {
    if (i > kMaxBobs) throw std::logic_error("equal-sharpness protocol did not terminate");
    const bool success = mdi_ew_closed_form_unsharp(q, alpha, lambda) < -kDetectionTol;
    trace.records.push_back(make_record(i, lambda, q, alpha, success));
    if (!success) break;
    ++trace.n_success;
    q *= f;
  }
  return trace;
}

int equal_sharpness_count(double alpha, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw DomainError("common sharpness must lie in (0, 1], got " + std::to_string(lambda));
  }
  return count_with_overlap(overlap_of(alpha), lambda);
}

std::vector<EntanglementCount> max_bobs_vs_entanglement(std::span<const double> alphas) {
  std::vector<EntanglementCount> out;
  out.reserve(alphas.size());
  for (double alpha : alphas) {
    out.push_back({alpha, entanglement_entropy(alpha), run_threshold_protocol(alpha).n_success});
  }
  return out;
}

double min_alpha_for_count(int n) {
  if (n <= 1) return 0.0;
  if (run_threshold_protocol(kMaxAlpha).n_success < n) {
    throw DomainError("no initial state supports " + std::to_string(n) + " Bobs");
  }
  double lo = 0.0;  // count(lo) < n (limit)
  double hi = kMaxAlpha;
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (run_threshold_protocol(mid).n_success >= n) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double min_entropy_for_count(int n) {
  if (n <= 1) return 0.0;
  return entanglement_entropy(min_alpha_for_count(n));
}

std::vector<CountSegment> equal_sharpness_segments(double alpha, double step) {
  if (!(step > 0.0 && step <= 2.0 / 3.0)) throw DomainError("grid step must lie in (0, 2/3]");
  const double overlap = overlap_of(alpha);
  auto count = [&](double lambda) { return count_with_overlap(overlap, lambda); };

  // Transition points (position, count to the right of it), in order.
  std::vector<std::pair<double, int>> transitions;
  auto refine = [&](auto&& self, double lo, double hi, int n_lo, int n_hi) -> void {
    if (n_lo == n_hi) return;
    if (hi - lo <= kSegmentTol) {
      transitions.emplace_back(hi, n_hi);
      return;
    }
    const double mid = 0.5 * (lo + hi);
    const int n_mid = count(mid);
    self(self, lo, mid, n_lo, n_mid);
    self(self, mid, hi, n_mid, n_hi);
  };

  const auto cells = static_cast<long>(std::ceil((1.0 - kLambdaFloor) / step - 1e-9));
  double prev = kLambdaFloor;
  int n_prev = count(prev);
  const int n_first = n_prev;
  for (long k = 1; k <= cells; ++k) {
    const double next = k == cells ? 1.0 : kLambdaFloor + static_cast<double>(k) * step;
    const int n_next = count(next);
    refine(refine, prev, next, n_prev, n_next);
    prev = next;
    n_prev = n_next;
  }

  std::vector<CountSegment> segments;
  double lo = kLambdaFloor;
  int n = n_first;
  for (const auto& [pos, n_right] : transitions) {
    // Count changes at `pos`; (lo, pos) keeps `n` up to bisection accuracy.
    if (pos > lo) segments.push_back({{lo, pos}, n});
    lo = pos;
    n = n_right;
  }
  if (1.0 > lo) segments.push_back({{lo, 1.0}, n});

  // Merge neighbours with equal counts (possible when a transition is undone
  // inside one cell).
  std::vector<CountSegment> merged;
  for (const auto& s : segments) {
    if (!merged.empty() && merged.back().n == s.n) {
      merged.back().interval.hi = s.interval.hi;
    } else {
      merged.push_back(s);
    }
  }
  return merged;
}

NMaxResult n_max_over_lambda(double alpha, double step) {
  if (!(step > 0.0 && step <= 1e-3)) throw DomainError("n_max scan step must lie in (0, 1e-3]");
  NMaxResult result;
  const auto segments = equal_sharpness_segments(alpha, step);
  for (const auto& s : segments) result.n_max = std::max(result.n_max, s.n);
  for (const auto& s : segments) {
    if (s.n == result.n_max) result.intervals.push_back(s.interval);
  }
  return result;
}

double lambda_range(double alpha, int n, double step) {
  if (n < 0) throw DomainError("Bob count must be non-negative");
  double total = 0.0;
  for (const auto& s : equal_sharpness_segments(alpha, step)) {
    if (s.n == n) total += s.interval.length();
  }
  return total;
}

double negativity_walpha(double q, double alpha) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("q must lie in [0, 1]");
  return std::max((q * entanglement_factor(alpha) - 1.0) / 4.0, 0.0);
}

double delta_negativity_entangled_branch(double negativity, double lambda) {
  require_negativity(negativity);
  return (1.0 + 4.0 * negativity) / 4.0 * (1.0 - retention_factor(lambda));
}

double delta_negativity(double negativity, double lambda) {
  require_negativity(negativity);
  const double next = (retention_factor(lambda) * (1.0 + 4.0 * negativity) - 1.0) / 4.0;
  if (next > 0.0) return delta_negativity_entangled_branch(negativity, lambda);
  return negativity;
}

double threshold_from_negativity(double negativity) {
  require_negativity(negativity);
  return 1.0 / (4.0 * negativity + 1.0);
}

double delta_negativity_at_threshold(double negativity) {
  if (!(negativity > 0.0)) throw DomainError("delta_negativity_at_threshold requires N > 0");
  const double n = negativity;
  return (1.0 + 4.0 * n - std::sqrt(n * (1.0 + n)) - std::sqrt(3.0 * n * (1.0 + 3.0 * n))) / 8.0;
}

}  // namespace seqmdi
