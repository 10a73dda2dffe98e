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

#include <seqmdi/errors.hpp>
#include <seqmdi/measurement.hpp>
#include <seqmdi/protocol.hpp>
#include <seqmdi/states.hpp>
#include <seqmdi/witness.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <variant>
#include <vector>

#include "support/oracles.hpp"

namespace seqmdi {
namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

Big big_retention(const Big& lambda) {
  using boost::multiprecision::sqrt;
  return (1 + (sqrt((1 + 3 * lambda) * (1 - lambda)) + sqrt((3 - 3 * lambda) * (3 + lambda))) / 4) / 2;
}

void expect_trace_invariants(const ProtocolTrace& trace) {
  ASSERT_FALSE(trace.records.empty());
  bool failed = false;
  int successes = 0;
  for (std::size_t k = 0; k < trace.records.size(); ++k) {
    const auto& r = trace.records[k];
    EXPECT_EQ(r.index, static_cast<int>(k) + 1);
    EXPECT_NEAR(r.negativity, std::max((r.q * entanglement_factor(trace.alpha) - 1) / 4, 0.0), 1e-12);
    if (k > 0) {
      const auto& prev = trace.records[k - 1];
      EXPECT_NEAR(r.q, retention_factor(prev.lambda) * prev.q, 1e-12);
      EXPECT_LE(r.negativity, prev.negativity);
      if (prev.lambda > 0 && prev.negativity > 0) {
        EXPECT_LT(r.negativity, prev.negativity);
      }
    }
    if (failed) {
      EXPECT_FALSE(r.success);
    }
    if (!r.success) failed = true;
    successes += r.success ? 1 : 0;
  }
  EXPECT_EQ(successes, trace.n_success);
  EXPECT_FALSE(trace.records.back().success);
}

TEST(Retention, Values) {
  EXPECT_DOUBLE_EQ(retention_factor(0.0), 1.0);
  EXPECT_DOUBLE_EQ(retention_factor(1.0), 0.5);
  EXPECT_NEAR(retention_factor(1.0 / 3.0), 0.9670861794813578482, 1e-15);
  EXPECT_NEAR(retention_factor(0.5), 0.92616522952847685644, 1e-15);
  EXPECT_THROW(retention_factor(-0.1), DomainError);
  EXPECT_THROW(retention_factor(1.1), DomainError);
}

TEST(Retention, DecreasingWithinBounds) {
  double prev = retention_factor(0.0);
  for (int k = 1; k <= 1000; ++k) {
    const double f = retention_factor(k / 1000.0);
    EXPECT_LT(f, prev);
    EXPECT_GE(f, 0.5);
    prev = f;
  }
}

TEST(Retention, MatchesBruteForceChannel) {
  for (double lambda : {0.1, 1.0 / 3.0, 0.7, 1.0}) {
    for (double q : {0.4, 1.0}) {
      const auto out = average_post_measurement_state(werner_alpha(q, kMaxAlpha), lambda);
      const double weight = psi_minus().dot(out.matrix() * psi_minus()).real();
      // <psi-| rho(q') |psi-> = q' + (1 - q') / 4.
      EXPECT_NEAR((weight - 0.25) * 4.0 / 3.0, retention_factor(lambda) * q, 1e-12);
    }
  }
}

TEST(ThresholdProtocol, SingletReachesFourteen) {
  const auto trace = run_threshold_protocol(kMaxAlpha);
  EXPECT_EQ(trace.n_success, 14);
  ASSERT_EQ(trace.records.size(), 15U);
  expect_trace_invariants(trace);
  const auto& reference = testing::singlet_threshold_q_reference();
  for (std::size_t k = 0; k < reference.size(); ++k) {
    EXPECT_NEAR(trace.records[k].q, reference[k], 1e-12) << "Bob " << k + 1;
  }
  EXPECT_GT(trace.records[13].q, 1.0 / 3.0);
  EXPECT_LT(trace.records[14].q, 1.0 / 3.0);
  EXPECT_NEAR(trace.records[14].q, 0.3256, 5e-5);
  EXPECT_TRUE(std::holds_alternative<ThresholdSchedule>(trace.policy));
}

TEST(ThresholdProtocol, FirstRecord) {
  const auto trace = run_threshold_protocol(kMaxAlpha);
  const auto& r = trace.records.front();
  EXPECT_NEAR(r.lambda, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(r.q, 1.0);
  EXPECT_NEAR(r.witness_value, 0.0, 1e-15);
  EXPECT_NEAR(r.witness_sharp, -0.125, 1e-15);
  EXPECT_NEAR(r.negativity, 0.5, 1e-15);
  EXPECT_TRUE(r.success);
}

TEST(ThresholdProtocol, MultiprecisionRecursion) {
  const auto trace = run_threshold_protocol(kMaxAlpha);
  Big q = 1;
  for (std::size_t k = 0; k < trace.records.size(); ++k) {
    EXPECT_NEAR(trace.records[k].q, q.convert_to<double>(), 1e-12);
    q *= big_retention(1 / (3 * q));
  }
}

TEST(ThresholdProtocol, MarginReducesCount) {
  const auto strict = run_threshold_protocol(kMaxAlpha, 1e-6);
  expect_trace_invariants(strict);
  EXPECT_LE(strict.n_success, 14);
  for (const auto& r : strict.records) {
    if (r.success) {
      EXPECT_LT(r.witness_value, -kDetectionTol);
    }
  }
  const auto coarse = run_threshold_protocol(kMaxAlpha, 0.05);
  expect_trace_invariants(coarse);
  EXPECT_LT(coarse.n_success, 14);
  EXPECT_THROW(run_threshold_protocol(kMaxAlpha, -0.1), DomainError);
}

TEST(ThresholdProtocol, FourteenBoundary) {
  const double alpha = min_alpha_for_count(14);
  const double e = entanglement_entropy(alpha);
  EXPECT_NEAR(e, 0.9349, 5e-4);
  EXPECT_NEAR(e, 0.9348408341942105, 1e-9);
  EXPECT_NEAR(alpha, 0.5923410886765756, 1e-9);
  EXPECT_EQ(run_threshold_protocol(alpha).n_success, 14);
  EXPECT_EQ(run_threshold_protocol(alpha - 1e-9).n_success, 13);
  EXPECT_EQ(run_threshold_protocol(alpha_for_entropy(0.9349)).n_success, 14);
  EXPECT_EQ(run_threshold_protocol(alpha_for_entropy(0.9347)).n_success, 13);
  EXPECT_NEAR(min_entropy_for_count(14), e, 1e-15);
  EXPECT_EQ(min_alpha_for_count(1), 0.0);
  EXPECT_THROW(min_alpha_for_count(15), DomainError);
}

TEST(MaxBobs, StepwiseMonotoneInEntanglement) {
  std::vector<double> alphas;
  for (int k = 1; k <= 400; ++k) alphas.push_back(alpha_for_entropy(k / 400.0));
  const auto table = max_bobs_vs_entanglement(alphas);
  ASSERT_EQ(table.size(), alphas.size());
  for (std::size_t k = 1; k < table.size(); ++k) {
    EXPECT_GT(table[k].entropy, table[k - 1].entropy);
    EXPECT_GE(table[k].n, table[k - 1].n);
  }
  EXPECT_EQ(table.back().n, 14);
  EXPECT_EQ(table.front().n >= 1, true);
}

TEST(MaxBobs, BarelyEntangledStillDetectedOnce) {
  for (double alpha : {1e-6, 1e-4, 1e-2}) {
    const auto trace = run_threshold_protocol(alpha);
    EXPECT_EQ(trace.n_success, 1);
    EXPECT_LT(trace.records.front().lambda, 1.0);
  }
}

TEST(EqualSharpness, Examples) {
  EXPECT_EQ(run_equal_sharpness(kMaxAlpha, 1.0).n_success, 2);
  EXPECT_EQ(run_equal_sharpness(kMaxAlpha, 0.5).n_success, 6);
  EXPECT_EQ(run_equal_sharpness(kMaxAlpha, 1.0 / 3.0).n_success, 0);
  EXPECT_EQ(equal_sharpness_count(kMaxAlpha, 1.0), 2);
  EXPECT_EQ(equal_sharpness_count(kMaxAlpha, 0.5), 6);
  EXPECT_EQ(equal_sharpness_count(kMaxAlpha, 1.0 / 3.0), 0);
  EXPECT_THROW(run_equal_sharpness(kMaxAlpha, 0.0), DomainError);
  EXPECT_THROW(equal_sharpness_count(kMaxAlpha, 1.2), DomainError);
}

TEST(EqualSharpness, SixFromRetentionPowers) {
  const double f = retention_factor(0.5);
  EXPECT_GT(std::pow(f, 5), 1.0 / 1.5);
  EXPECT_LT(std::pow(f, 6), 1.0 / 1.5);
}

TEST(EqualSharpness, TraceMatchesPowers) {
  const auto trace = run_equal_sharpness(0.5, 0.6);
  expect_trace_invariants(trace);
  const double f = retention_factor(0.6);
  for (const auto& r : trace.records) {
    EXPECT_NEAR(r.q, std::pow(f, r.index - 1), 1e-14);
    EXPECT_EQ(r.lambda, 0.6);
    EXPECT_EQ(r.success, mdi_ew_closed_form_unsharp(r.q, 0.5, 0.6) < -kDetectionTol);
  }
  EXPECT_EQ(trace.n_success, equal_sharpness_count(0.5, 0.6));
}

TEST(EqualSharpness, SharpCountDependsOnHalfFactor) {
  for (int k = 1; k <= 50; ++k) {
    const double alpha = kMaxAlpha * k / 50.0;
    const int expected = entanglement_factor(alpha) / 2 > 1 ? 2 : 1;
    EXPECT_EQ(equal_sharpness_count(alpha, 1.0), expected) << "alpha " << alpha;
  }
}

TEST(NMax, SingletAndNearBoundary) {
  const auto singlet = n_max_over_lambda(kMaxAlpha);
  EXPECT_EQ(singlet.n_max, 6);
  const auto weaker = n_max_over_lambda(alpha_for_entropy(0.935));
  EXPECT_EQ(weaker.n_max, 5);
  for (const auto* r : {&singlet, &weaker}) {
    ASSERT_FALSE(r->intervals.empty());
    for (const auto& iv : r->intervals) {
      EXPECT_GT(iv.lo, 1.0 / 3.0 + 1e-3);
      EXPECT_LT(iv.hi, 1.0 - 1e-3);
      EXPECT_GT(iv.length(), 0.0);
    }
  }
  EXPECT_THROW(n_max_over_lambda(kMaxAlpha, 1e-2), DomainError);
}

TEST(Segments, PartitionTheInterval) {
  for (double alpha : {0.2, 0.5, kMaxAlpha}) {
    const auto segments = equal_sharpness_segments(alpha, 1e-3);
    ASSERT_FALSE(segments.empty());
    EXPECT_DOUBLE_EQ(segments.front().interval.lo, 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(segments.back().interval.hi, 1.0);
    double total = 0.0;
    for (std::size_t k = 0; k < segments.size(); ++k) {
      total += segments[k].interval.length();
      if (k > 0) {
        EXPECT_EQ(segments[k].interval.lo, segments[k - 1].interval.hi);
        EXPECT_NE(segments[k].n, segments[k - 1].n);
      }
    }
    EXPECT_NEAR(total, 2.0 / 3.0, 1e-12);
  }
}

TEST(Segments, EndpointsAreSharp) {
  const auto segments = equal_sharpness_segments(kMaxAlpha, 1e-3);
  for (const auto& s : segments) {
    const auto& iv = s.interval;
    if (iv.length() < 1e-8) continue;
    EXPECT_EQ(equal_sharpness_count(kMaxAlpha, std::min(iv.lo + 1e-9, 1.0)), s.n);
    EXPECT_EQ(equal_sharpness_count(kMaxAlpha, iv.hi - 1e-9), s.n);
    EXPECT_EQ(equal_sharpness_count(kMaxAlpha, 0.5 * (iv.lo + iv.hi)), s.n);
  }
}

TEST(LambdaRange, Examples) {
  double total = 0.0;
  for (int n = 0; n <= 10; ++n) total += lambda_range(kMaxAlpha, n, 1e-3);
  EXPECT_NEAR(total, 2.0 / 3.0, 1e-12);
  EXPECT_EQ(lambda_range(kMaxAlpha, 7, 1e-3), 0.0);
  EXPECT_GT(lambda_range(kMaxAlpha, 2, 1e-3), 0.0);
  const auto segments = equal_sharpness_segments(kMaxAlpha, 1e-3);
  EXPECT_EQ(segments.back().n, 2);
  EXPECT_THROW(lambda_range(kMaxAlpha, -1), DomainError);
}

TEST(Negativity, ClosedFormExamples) {
  EXPECT_NEAR(negativity_walpha(1.0, kMaxAlpha), 0.5, 1e-15);
  EXPECT_EQ(negativity_walpha(1.0 / 3.0, kMaxAlpha), 0.0);
  EXPECT_NEAR(negativity_walpha(1.0, 0.3), 0.28618176042508369475, 1e-15);
}

TEST(Negativity, MatchesPartialTransposeOracle) {
  for (int i = 0; i < 20; ++i) {
    for (int j = 1; j <= 20; ++j) {
      const double q = i / 19.0;
      const double alpha = kMaxAlpha * j / 20.0;
      const auto pt = partial_transpose(werner_alpha(q, alpha), "B");
      const auto evals = hermitian_eigenvalues(pt);
      double oracle = 0.0;
      for (int k = 0; k < evals.size(); ++k) oracle += std::max(-evals(k), 0.0);
      EXPECT_NEAR(negativity_walpha(q, alpha), oracle, 1e-10);
    }
  }
}

TEST(DeltaNegativity, Examples) {
  for (double n : {0.0, 0.2, 0.5}) EXPECT_EQ(delta_negativity(n, 0.0), 0.0);
  EXPECT_NEAR(delta_negativity(0.5, 1.0), 0.375, 1e-15);
  EXPECT_NEAR(delta_negativity(0.5, 1.0 / 3.0), 0.024685365388981613831, 1e-14);
  EXPECT_NEAR(delta_negativity(0.5, 1.0 / 3.0), 0.0246855, 1e-6);
  // Next state separable: all negativity is lost.
  EXPECT_EQ(delta_negativity(0.1, 1.0), 0.1);
  EXPECT_THROW(delta_negativity(-0.1, 0.5), DomainError);
}

TEST(DeltaNegativity, NonNegativeAndIncreasingInLambda) {
  for (int i = 0; i <= 10; ++i) {
    const double n = 0.05 * i;
    double prev = -1.0;
    for (int k = 0; k <= 200; ++k) {
      const double d = delta_negativity(n, k / 200.0);
      EXPECT_GE(d, 0.0);
      EXPECT_GE(d, prev);
      prev = d;
    }
  }
}

TEST(DeltaNegativity, AgreesWithRecursion) {
  for (double alpha : {0.4, kMaxAlpha}) {
    for (double lambda : {0.2, 0.5, 0.9}) {
      const double q = 0.9;
      const double n = negativity_walpha(q, alpha);
      const double next = negativity_walpha(retention_factor(lambda) * q, alpha);
      EXPECT_NEAR(delta_negativity(n, lambda), n - next, 1e-14);
    }
  }
}

TEST(ThresholdFromNegativity, Examples) {
  EXPECT_NEAR(threshold_from_negativity(0.5), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(threshold_from_negativity(0.0), 1.0);
  EXPECT_EQ(threshold_from_negativity(0.25), 0.5);
  for (double q : {0.5, 0.8, 1.0}) {
    for (double alpha : {0.5, kMaxAlpha}) {
      const double n = negativity_walpha(q, alpha);
      if (n > 0) {
        EXPECT_NEAR(threshold_from_negativity(n), threshold_lambda(q, alpha).lambda, 1e-14);
      }
    }
  }
}

TEST(DeltaAtThreshold, ClosedForm) {
  EXPECT_NEAR(delta_negativity_at_threshold(0.5), 0.024685365388981613831, 1e-15);
  EXPECT_NEAR(delta_negativity_at_threshold(0.5), (3 - std::sqrt(0.75) - std::sqrt(3.75)) / 8, 1e-16);
  EXPECT_THROW(delta_negativity_at_threshold(0.0), DomainError);
  for (int k = 1; k <= 10; ++k) {
    const double n = 0.05 * k;
    const double composed = delta_negativity_entangled_branch(n, threshold_from_negativity(n));
    EXPECT_NEAR(delta_negativity_at_threshold(n), composed, 1e-12);
    EXPECT_GT(delta_negativity_at_threshold(n), 0.0);
  }
}

TEST(DeltaAtThreshold, DecreasesWithNegativity) {
  // As a function of N the drop shrinks; the growth appears only along a trace.
  double prev = delta_negativity_at_threshold(1e-4);
  for (int k = 1; k <= 500; ++k) {
    const double d = delta_negativity_at_threshold(k * 1e-3);
    EXPECT_LT(d, prev);
    prev = d;
  }
}

TEST(DeltaAtThreshold, IncreasesAlongThresholdTrace) {
  const auto trace = run_threshold_protocol(kMaxAlpha);
  double prev = 0.0;
  for (std::size_t k = 0; k + 1 < trace.records.size(); ++k) {
    const auto& r = trace.records[k];
    const double next = trace.records[k + 1].negativity;
    if (next <= 0.0) break;
    const double d = delta_negativity_at_threshold(r.negativity);
    EXPECT_NEAR(d, r.negativity - next, 1e-12);
    EXPECT_GT(d, prev);
    prev = d;
  }
}

}  // namespace
}  // namespace seqmdi
