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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <seqmdi/seqmdi.hpp>

#include "cli/commands.hpp"

namespace seqmdi::cli {
namespace {

struct Check {
  std::string name;
  double metric = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

Check max_deviation(std::string name, double deviation, double tol) {
  return {std::move(name), deviation, tol, deviation < tol};
}

const std::vector<double>& alpha_grid5() {
  static const std::vector<double> g{0.1, 0.25, 0.4, 0.55, kMaxAlpha};
  return g;
}

// Expected output of the averaged Bob channel: the B-side channel is
// depolarizing with retention f, which leaves Alice's marginal untouched.
ComplexMatrix depolarized_werner_alpha(double q, double alpha, double f) {
  const ComplexMatrix psi = projector(psi_alpha(alpha));
  const ComplexMatrix rho_a = partial_trace(psi, SubsystemLayout::qubits({"A", "B"}),
                                            std::vector<std::string>{"A"});
  return f * q * psi + (1.0 - f) * q * tensor(rho_a, 0.5 * identity(2)) + ((1.0 - q) / 4.0) * identity(4);
}

std::vector<Check> run_checks(std::uint64_t seed) {
  std::vector<Check> checks;
  const double sqrt2inv = kMaxAlpha;

  {
    double dev = 0.0;
    for (double q : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      for (double alpha : alpha_grid5()) {
        for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0}) {
          const double numeric = mdi_ew_numeric(werner_alpha(q, alpha), werner_beta(), lambda).value;
          dev = std::max(dev, std::abs(numeric - mdi_ew_closed_form_unsharp(q, alpha, lambda)));
        }
      }
    }
    checks.push_back(max_deviation("witness_numeric_vs_closed_form", dev, 1e-10));
  }

  {
    const std::vector<double> lambdas{0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0};
    const std::vector<double> qs{0.25, 0.5, 1.0};
    double dev_singlet = 0.0;
    double dev_form = 0.0;
    double dev_witness = 0.0;
    for (double lambda : lambdas) {
      const double f = retention_factor(lambda);
      for (double q : qs) {
        for (double alpha : {0.2, 0.4, sqrt2inv}) {
          const DensityOperator out = average_post_measurement_state(werner_alpha(q, alpha), lambda);
          if (alpha == sqrt2inv) {
            dev_singlet = std::max(dev_singlet, max_abs_diff(out.matrix(), werner_alpha(f * q, alpha).matrix()));
          }
          dev_form = std::max(dev_form, max_abs_diff(out.matrix(), depolarized_werner_alpha(q, alpha, f)));
          const double w = mdi_ew_numeric(out, werner_beta(), 1.0).value;
          dev_witness = std::max(dev_witness, std::abs(w - mdi_ew_closed_form_unsharp(f * q, alpha, 1.0)));
        }
      }
    }
    checks.push_back(max_deviation("channel_closure_singlet_family", dev_singlet, 1e-10));
    checks.push_back(max_deviation("channel_depolarized_form", dev_form, 1e-10));
    checks.push_back(max_deviation("channel_witness_recursion", dev_witness, 1e-10));
  }

  {
    const InputEnsemble omegas = InputEnsemble::standard(InputKind::Omega);
    double dev = 0.0;
    for (double lambda : {0.0, 0.3, 0.7, 1.0}) {
      const BinaryEffectPair pair = unsharp_pair(lambda);
      const DensityOperator joint = tensor(werner_alpha(0.6, 0.45), omegas[2]);
      const std::vector<std::string> bob{"B", "B'"};
      const double total = outcome_probability(joint, pair.plus, bob) + outcome_probability(joint, pair.minus, bob);
      dev = std::max(dev, std::abs(total - 1.0));
      for (Outcome o : {Outcome::Plus, Outcome::Minus}) {
        dev = std::max(dev, max_abs_diff(effect_sqrt(pair, o), herm_sqrt(pair.effect(o))));
      }
    }
    checks.push_back(max_deviation("effects_complete_and_sqrt_fast_path", dev, 1e-12));
  }

  {
    Rng rng(seed);
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 200; ++k) {
      const DensityOperator rho = random_separable_state(rng);
      for (double lambda : {0.25, 0.5, 1.0}) {
        worst = std::min(worst, mdi_ew_numeric(rho, werner_beta(), lambda).value);
      }
    }
    checks.push_back({"separable_nonnegativity_min", worst, -1e-10, worst >= -1e-10});
  }

  {
    double dev = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double q = i / 19.0;
      for (int j = 0; j < 20; ++j) {
        const double alpha = 0.02 + (sqrt2inv - 0.02) * j / 19.0;
        dev = std::max(dev, std::abs(negativity_walpha(q, alpha) - negativity(werner_alpha(q, alpha), "B")));
      }
    }
    checks.push_back(max_deviation("negativity_closed_form_vs_partial_transpose", dev, 1e-10));
  }

  {
    double dev = 0.0;
    for (int k = 1; k <= 10; ++k) {
      const double n = 0.05 * k;
      dev = std::max(dev, std::abs(delta_negativity_at_threshold(n) -
                                   delta_negativity_entangled_branch(n, threshold_from_negativity(n))));
    }
    checks.push_back(max_deviation("negativity_drop_at_threshold_identity", dev, 1e-12));
  }

  {
    const int n = run_threshold_protocol(sqrt2inv).n_success;
    checks.push_back({"threshold_protocol_singlet_count", static_cast<double>(n), 14.0, n == 14});
    const int n_max = n_max_over_lambda(sqrt2inv).n_max;
    checks.push_back({"equal_sharpness_singlet_n_max", static_cast<double>(n_max), 6.0, n_max == 6});
    const int sharp = run_equal_sharpness(sqrt2inv, 1.0).n_success;
    checks.push_back({"equal_sharpness_singlet_sharp_count", static_cast<double>(sharp), 2.0, sharp == 2});
  }

  {
    Rng rng(seed + 1);
    const SubsystemLayout layout = SubsystemLayout::qubits({"A'", "A", "B", "B'"});
    const DensityOperator rho = random_density_operator(rng, layout);
    const std::vector<std::size_t> perm{2, 0, 3, 1};
    const ComplexMatrix there = permute_subsystems(rho.matrix(), layout, perm);
    const ComplexMatrix back = permute_subsystems(there, layout.permuted(perm), inverse_permutation(perm));
    double dev = max_abs_diff(back, rho.matrix());
    const ComplexMatrix pt = partial_transpose(rho, "B");
    dev = std::max(dev, max_abs_diff(partial_transpose(pt, layout, "B"), rho.matrix()));
    const ComplexMatrix root = herm_sqrt(rho.matrix());
    dev = std::max(dev, max_abs_diff(root * root, rho.matrix()));
    checks.push_back(max_deviation("kernel_roundtrips", dev, 1e-10));
  }

  return checks;
}

}  // namespace

VerifyReport cmd_verify(const RunConfig& config) {
  VerifyReport report;
  report.table.command = "verify";
  report.table.parameters["seed"] = config.seed;
  report.table.columns = {"property", "metric", "tolerance", "passed"};
  for (const auto& c : run_checks(config.seed)) {
    report.table.add_row({c.name, c.metric, c.tolerance, std::int64_t{c.passed ? 1 : 0}});
    report.passed = report.passed && c.passed;
  }
  report.table.parameters["passed"] = report.passed;
  return report;
}

}  // namespace seqmdi::cli
