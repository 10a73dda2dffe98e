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

#include <benchmark/benchmark.h>

#include <seqmdi/kernel.hpp>
#include <seqmdi/sampling.hpp>
#include <seqmdi/states.hpp>

#include <vector>

namespace {

using namespace seqmdi;

DensityOperator random_four_qubit(std::uint64_t seed) {
  Rng rng(seed);
  return random_density_operator(rng, SubsystemLayout::qubits({"A'", "A", "B", "B'"}));
}

void BM_Tensor(benchmark::State& state) {
  const auto a = werner_alpha(0.7, 0.4);
  const auto b = tensor(input_state(InputKind::Tau, 1), input_state(InputKind::Omega, 2));
  for (auto _ : state) benchmark::DoNotOptimize(tensor(a.matrix(), b.matrix()));
}
BENCHMARK(BM_Tensor);

void BM_PermuteSubsystems(benchmark::State& state) {
  const auto rho = random_four_qubit(1);
  const std::vector<std::size_t> perm{2, 3, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(permute_subsystems(rho.matrix(), rho.layout(), perm));
}
BENCHMARK(BM_PermuteSubsystems);

void BM_PartialTrace(benchmark::State& state) {
  const auto rho = random_four_qubit(2);
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(rho, {"A", "B"}));
}
BENCHMARK(BM_PartialTrace);

void BM_Negativity(benchmark::State& state) {
  const auto rho = werner_alpha(0.8, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(negativity(rho, "B"));
}
BENCHMARK(BM_Negativity);

void BM_HermSqrt(benchmark::State& state) {
  const auto rho = random_four_qubit(3);
  for (auto _ : state) benchmark::DoNotOptimize(herm_sqrt(rho.matrix()));
}
BENCHMARK(BM_HermSqrt);

}  // namespace
