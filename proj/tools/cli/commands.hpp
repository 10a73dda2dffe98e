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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "cli/output.hpp"

namespace seqmdi::cli {

// Invalid command-line parameters; mapped to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  // At most one of alpha / entanglement.
  std::optional<double> alpha;
  std::optional<double> entanglement;
  std::optional<double> lambda;
  double margin = 0.0;
  std::optional<double> grid_step;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> out;
  std::uint64_t seed = 20200101;
};

// Default grid steps.
inline constexpr double kFig1EntropyStep = 1.0 / 2000.0;
inline constexpr double kFig2LambdaStep = 1e-4;
inline constexpr double kFig3EntropyStep = 0.01;
inline constexpr double kFig3LambdaStep = 1e-4;

// alpha from --alpha or --entanglement, else `fallback_alpha`.
double resolve_alpha(const RunConfig& config, double fallback_alpha);

// Columns alpha, e_alpha, n. Uniform entropy grid plus one row at each
// bisection-located step of n.
Table cmd_fig1(const RunConfig& config);
// Columns lambda, n for lambda on a uniform grid in (1/3, 1].
Table cmd_fig2(const RunConfig& config);
// Columns e_alpha, n, delta_lambda_n for n = 1..n_max at each entropy.
Table cmd_fig3(const RunConfig& config);
// One row per Bob: i, lambda_i, q_i, witness_i, witness_sharp_i,
// negativity_i, success. --lambda selects the equal-sharpness policy,
// otherwise the threshold schedule with --margin.
Table cmd_run(const RunConfig& config);

struct VerifyReport {
  Table table;
  bool passed = true;
};

// Oracle-equivalence and property checks over all modules. Columns
// property, metric, tolerance, passed.
VerifyReport cmd_verify(const RunConfig& config);

}  // namespace seqmdi::cli
