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

// Dense complex linear algebra over small labeled tensor-product spaces.
//
// Matrices are plain Eigen::MatrixXcd. A SubsystemLayout names the tensor
// factors of the space a matrix acts on, first factor most significant
// (Kronecker order). The protocol space is ordered A', A, B, B'.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace seqmdi {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

struct Factor {
  std::string label;
  int dim = 2;

  friend bool operator==(const Factor&, const Factor&) = default;
};

class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<Factor> factors);

  // All factors are qubits.
  static SubsystemLayout qubits(std::initializer_list<std::string_view> labels);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  int total_dim() const;

  bool contains(std::string_view label) const;
  // Throws LayoutError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  // Layout whose k-th factor is factor perm[k] of this one.
  SubsystemLayout permuted(std::span<const std::size_t> perm) const;
  // Concatenation, `this` factors first.
  SubsystemLayout concat(const SubsystemLayout& other) const;

  friend bool operator==(const SubsystemLayout&, const SubsystemLayout&) = default;

 private:
  std::vector<Factor> factors_;
};

// Hermitian, unit-trace, positive semidefinite matrix tied to a layout.
// Construction validates all three properties.
class DensityOperator {
 public:
  DensityOperator(ComplexMatrix matrix, SubsystemLayout layout);

  const ComplexMatrix& matrix() const { return matrix_; }
  const SubsystemLayout& layout() const { return layout_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

  // tr(rho^2)
  double purity() const;

 private:
  ComplexMatrix matrix_;
  SubsystemLayout layout_;
};

ComplexMatrix identity(int dim);
// sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
ComplexMatrix pauli(int index);
ComplexMatrix projector(const ComplexVector& psi);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

// Kronecker product, `a` indices major.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm);

// Re-expresses `m` in the basis of layout.permuted(perm).
ComplexMatrix permute_subsystems(const ComplexMatrix& m, const SubsystemLayout& layout,
                                 std::span<const std::size_t> perm);

// Traces out every factor not in `keep`; kept factors stay in layout order.
// The matrix overload accepts unnormalized operators.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemLayout& layout,
                            std::span<const std::string> keep);
DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::string> keep);
DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<std::string> keep);

ComplexMatrix partial_transpose(const ComplexMatrix& m, const SubsystemLayout& layout,
                                std::string_view label);
ComplexMatrix partial_transpose(const DensityOperator& rho, std::string_view label);

// Ascending eigenvalues of a Hermitian matrix. Throws InvalidOperatorError
// if `m` is not Hermitian.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);
double min_eigenvalue(const ComplexMatrix& m);

// Principal square root via eigendecomposition. Eigenvalues below
// -kPsdTol throw; negative ones above it and those within rounding noise
// of zero are treated as zero.
ComplexMatrix herm_sqrt(const ComplexMatrix& m);

// Sum of |negative eigenvalues| of the partial transpose on `label`.
double negativity(const DensityOperator& rho, std::string_view label);

}  // namespace seqmdi
