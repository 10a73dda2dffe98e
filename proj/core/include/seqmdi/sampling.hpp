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

#include <random>

#include "seqmdi/kernel.hpp"

namespace seqmdi {

using Rng = std::mt19937_64;

// Haar-random unit vector.
ComplexVector random_pure_state(Rng& rng, int dim);

// Ginibre-ensemble mixed state of dimension `dim` on the given layout.
DensityOperator random_density_operator(Rng& rng, const SubsystemLayout& layout);

// Convex mixture of 1..max_terms random pure product states on (A, B).
DensityOperator random_separable_state(Rng& rng, int max_terms = 4);

}  // namespace seqmdi
