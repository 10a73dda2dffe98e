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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <seqmdi/errors.hpp>

#include "cli/commands.hpp"

namespace {

using seqmdi::cli::OutputFormat;
using seqmdi::cli::RunConfig;

int emit(const seqmdi::cli::Table& table, const RunConfig& config) {
  if (!config.out) {
    seqmdi::cli::write_table(std::cout, table, config.format);
    return seqmdi::cli::kExitOk;
  }
  std::ofstream file(*config.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    std::cerr << "error: cannot open '" << *config.out << "' for writing\n";
    return seqmdi::cli::kExitUsage;
  }
  seqmdi::cli::write_table(file, table, config.format);
  file.close();
  if (!file) {
    std::cerr << "error: failed writing '" << *config.out << "'\n";
    return seqmdi::cli::kExitUsage;
  }
  return seqmdi::cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential measurement-device-independent entanglement witnessing"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  double alpha = 0.0;
  double entanglement = 0.0;
  double lambda = 0.0;
  double grid_step = 0.0;
  std::string out;

  auto* alpha_opt = app.add_option("--alpha", alpha, "Initial amplitude alpha in (0, 1/sqrt(2)]");
  auto* ent_opt = app.add_option("--entanglement", entanglement, "Initial entanglement entropy E in (0, 1]");
  alpha_opt->excludes(ent_opt);
  auto* lambda_opt = app.add_option("--lambda", lambda, "Common sharpness for the equal-sharpness policy");
  app.add_option("--margin", config.margin, "Threshold-schedule margin added to each threshold")
      ->check(CLI::NonNegativeNumber);
  auto* step_opt = app.add_option("--grid-step", grid_step, "Grid step (entropy for fig1/fig3, lambda for fig2)");
  app.add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}},
          CLI::ignore_case))
      ->option_text("{csv,json}");
  auto* out_opt = app.add_option("--out", out, "Output path (default stdout)");
  app.add_option("--seed", config.seed, "Seed for random separable states (verify)");

  auto* fig1 = app.add_subcommand("fig1", "Maximum Bobs vs initial entanglement (threshold schedule)");
  auto* fig2 = app.add_subcommand("fig2", "Bob count vs common sharpness");
  auto* fig3 = app.add_subcommand("fig3", "Sharpness range per Bob count vs initial entanglement");
  auto* verify = app.add_subcommand("verify", "Run oracle-equivalence and property checks");
  auto* run = app.add_subcommand("run", "Trace one protocol run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return seqmdi::cli::kExitUsage;
  }

  if (*alpha_opt) config.alpha = alpha;
  if (*ent_opt) config.entanglement = entanglement;
  if (*lambda_opt) config.lambda = lambda;
  if (*step_opt) config.grid_step = grid_step;
  if (*out_opt) config.out = out;

  try {
    if (*verify) {
      const auto report = seqmdi::cli::cmd_verify(config);
      const int rc = emit(report.table, config);
      if (rc != seqmdi::cli::kExitOk) return rc;
      return report.passed ? seqmdi::cli::kExitOk : seqmdi::cli::kExitVerifyFailed;
    }
    if (*fig1) return emit(seqmdi::cli::cmd_fig1(config), config);
    if (*fig2) return emit(seqmdi::cli::cmd_fig2(config), config);
    if (*fig3) return emit(seqmdi::cli::cmd_fig3(config), config);
    if (*run) return emit(seqmdi::cli::cmd_run(config), config);
  } catch (const seqmdi::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return seqmdi::cli::kExitUsage;
  } catch (const seqmdi::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return seqmdi::cli::kExitUsage;
  }
  return seqmdi::cli::kExitUsage;
}
