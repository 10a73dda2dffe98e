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

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <seqmdi/errors.hpp>
#include <seqmdi/protocol.hpp>
#include <seqmdi/states.hpp>

namespace seqmdi::cli {
namespace {

double step_or(const RunConfig& config, double fallback, double max_step) {
  const double step = config.grid_step.value_or(fallback);
  if (!(step > 0.0 && step <= max_step)) {
    throw UsageError("--grid-step must lie in (0, " + format_double(max_step) + "]");
  }
  return step;
}

// k * step for k = 1..ceil(span/step), last point pinned to `span`.
std::vector<double> uniform_grid(double start, double span, double step) {
  const auto count = static_cast<long>(std::ceil(span / step - 1e-9));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long k = 1; k <= count; ++k) {
    out.push_back(k == count ? start + span : start + static_cast<double>(k) * step);
  }
  return out;
}

void put_common(Table& table, const RunConfig& config) {
  if (config.alpha) table.parameters["alpha"] = round_significant(*config.alpha);
  if (config.entanglement) table.parameters["entanglement"] = round_significant(*config.entanglement);
}

}  // namespace

double resolve_alpha(const RunConfig& config, double fallback_alpha) {
  if (config.alpha && config.entanglement) {
    throw UsageError("--alpha and --entanglement are mutually exclusive");
  }
  try {
    if (config.alpha) {
      entanglement_entropy(*config.alpha);  // range check
      return std::min(*config.alpha, kMaxAlpha);
    }
    if (config.entanglement) return alpha_for_entropy(*config.entanglement);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return fallback_alpha;
}

Table cmd_fig1(const RunConfig& config) {
  const double step = step_or(config, kFig1EntropyStep, 1.0);
  Table table;
  table.command = "fig1";
  table.parameters["grid_step"] = round_significant(step);
  table.columns = {"alpha", "e_alpha", "n"};

  struct Row {
    double alpha;
    double entropy;
    int n;
  };
  std::vector<Row> rows;
  for (double e : uniform_grid(0.0, 1.0, step)) {
    const double alpha = alpha_for_entropy(e);
    rows.push_back({alpha, e, run_threshold_protocol(alpha).n_success});
  }
  const int n_top = run_threshold_protocol(kMaxAlpha).n_success;
  for (int n = 2; n <= n_top; ++n) {
    const double alpha = min_alpha_for_count(n);
    rows.push_back({alpha, entanglement_entropy(alpha), run_threshold_protocol(alpha).n_success});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.entropy < b.entropy; });
  // Keep E strictly increasing after rounding to the output precision.
  std::vector<Row> unique;
  for (const auto& r : rows) {
    if (!unique.empty() && round_significant(r.entropy) <= round_significant(unique.back().entropy)) {
      unique.back().n = std::max(unique.back().n, r.n);
      continue;
    }
    unique.push_back(r);
  }
  for (const auto& r : unique) table.add_row({r.alpha, r.entropy, std::int64_t{r.n}});
  return table;
}

Table cmd_fig2(const RunConfig& config) {
  const double alpha = resolve_alpha(config, kMaxAlpha);
  const double step = step_or(config, kFig2LambdaStep, 2.0 / 3.0);
  Table table;
  table.command = "fig2";
  put_common(table, config);
  table.parameters["grid_step"] = round_significant(step);
  table.columns = {"lambda", "n"};
  for (double lambda : uniform_grid(1.0 / 3.0, 2.0 / 3.0, step)) {
    table.add_row({lambda, std::int64_t{equal_sharpness_count(alpha, lambda)}});
  }
  return table;
}

Table cmd_fig3(const RunConfig& config) {
  const double step = step_or(config, kFig3EntropyStep, 1.0);
  Table table;
  table.command = "fig3";
  table.parameters["grid_step"] = round_significant(step);
  table.parameters["lambda_step"] = kFig3LambdaStep;
  table.columns = {"e_alpha", "n", "delta_lambda_n"};
  for (double e : uniform_grid(0.0, 1.0, step)) {
    const double alpha = alpha_for_entropy(e);
    const auto segments = equal_sharpness_segments(alpha, kFig3LambdaStep);
    int n_max = 0;
    for (const auto& s : segments) n_max = std::max(n_max, s.n);
    for (int n = 1; n <= n_max; ++n) {
      double range = 0.0;
      for (const auto& s : segments) {
        if (s.n == n) range += s.interval.length();
      }
      table.add_row({e, std::int64_t{n}, range});
    }
  }
  return table;
}

Table cmd_run(const RunConfig& config) {
  const double alpha = resolve_alpha(config, kMaxAlpha);
  Table table;
  table.command = "run";
  put_common(table, config);
  table.columns = {"i", "lambda_i", "q_i", "witness_i", "witness_sharp_i", "negativity_i", "success"};

  ProtocolTrace trace;
  try {
    if (config.lambda) {
      if (config.margin != 0.0) throw UsageError("--margin applies only to the threshold policy");
      table.parameters["policy"] = "equal_sharpness";
      table.parameters["lambda"] = round_significant(*config.lambda);
      trace = run_equal_sharpness(alpha, *config.lambda);
    } else {
      table.parameters["policy"] = "threshold";
      table.parameters["margin"] = round_significant(config.margin);
      trace = run_threshold_protocol(alpha, config.margin);
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  table.parameters["n_success"] = trace.n_success;
  for (const auto& r : trace.records) {
    table.add_row({std::int64_t{r.index}, r.lambda, r.q, r.witness_value, r.witness_sharp, r.negativity,
                   std::int64_t{r.success ? 1 : 0}});
  }
  return table;
}

}  // namespace seqmdi::cli
