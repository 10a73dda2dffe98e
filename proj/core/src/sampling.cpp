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

#include "seqmdi/sampling.hpp"

#include <vector>

namespace seqmdi {

ComplexVector random_pure_state(Rng& rng, int dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(dim);
  for (int k = 0; k < dim; ++k) v(k) = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

DensityOperator random_density_operator(Rng& rng, const SubsystemLayout& layout) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const int dim = layout.total_dim();
  ComplexMatrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) g(r, c) = Complex(normal(rng), normal(rng));
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityOperator(std::move(rho), layout);
}

DensityOperator random_separable_state(Rng& rng, int max_terms) {
  std::uniform_int_distribution<int> terms_dist(1, max_terms);
  std::uniform_real_distribution<double> weight_dist(0.0, 1.0);
  const int terms = terms_dist(rng);

  std::vector<double> weights(static_cast<std::size_t>(terms));
  double total = 0.0;
  for (auto& w : weights) total += (w = weight_dist(rng) + 1e-3);

  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  for (double w : weights) {
    const ComplexVector a = random_pure_state(rng, 2);
    const ComplexVector b = random_pure_state(rng, 2);
    rho += (w / total) * tensor(projector(a), projector(b));
  }
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityOperator(std::move(rho), SubsystemLayout::qubits({"A", "B"}));
}

}  // namespace seqmdi
