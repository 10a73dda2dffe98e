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

#include "seqmdi/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <utility>

#include "seqmdi/errors.hpp"

namespace seqmdi {
namespace {

// Row-major digit strides: factor 0 is the most significant.
std::vector<int> strides_of(const SubsystemLayout& layout) {
  std::vector<int> strides(layout.size(), 1);
  for (std::size_t k = layout.size(); k-- > 1;) {
    strides[k - 1] = strides[k] * layout.factors()[k].dim;
  }
  return strides;
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw InvalidOperatorError(std::string(what) + ": matrix is not square");
  }
}

void require_layout_dim(const ComplexMatrix& m, const SubsystemLayout& layout) {
  require_square(m, "layout");
  if (m.rows() != layout.total_dim()) {
    throw LayoutError("matrix dimension " + std::to_string(m.rows()) +
                      " does not match layout dimension " +
                      std::to_string(layout.total_dim()));
  }
}

double hermitian_tolerance(const ComplexMatrix& m) {
  return kHermitianTol * std::max(1.0, m.cwiseAbs().maxCoeff());
}

}  // namespace

SubsystemLayout::SubsystemLayout(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::set<std::string> seen;
  for (const auto& f : factors_) {
    if (f.dim < 1) throw LayoutError("factor '" + f.label + "' has non-positive dimension");
    if (!seen.insert(f.label).second) throw LayoutError("duplicate subsystem label '" + f.label + "'");
  }
}

SubsystemLayout SubsystemLayout::qubits(std::initializer_list<std::string_view> labels) {
  std::vector<Factor> factors;
  factors.reserve(labels.size());
  for (auto label : labels) factors.push_back({std::string(label), 2});
  return SubsystemLayout(std::move(factors));
}

int SubsystemLayout::total_dim() const {
  int dim = 1;
  for (const auto& f : factors_) dim *= f.dim;
  return dim;
}

bool SubsystemLayout::contains(std::string_view label) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return f.label == label; });
}

std::size_t SubsystemLayout::index_of(std::string_view label) const {
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (factors_[k].label == label) return k;
  }
  throw LayoutError("unknown subsystem label '" + std::string(label) + "'");
}

SubsystemLayout SubsystemLayout::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != factors_.size()) {
    throw LayoutError("permutation length " + std::to_string(perm.size()) +
                      " does not match layout size " + std::to_string(factors_.size()));
  }
  std::vector<bool> used(perm.size(), false);
  std::vector<Factor> out;
  out.reserve(perm.size());
  for (std::size_t p : perm) {
    if (p >= perm.size() || used[p]) throw LayoutError("not a permutation of layout positions");
    used[p] = true;
    out.push_back(factors_[p]);
  }
  return SubsystemLayout(std::move(out));
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout& other) const {
  std::vector<Factor> out = factors_;
  out.insert(out.end(), other.factors_.begin(), other.factors_.end());
  return SubsystemLayout(std::move(out));
}

DensityOperator::DensityOperator(ComplexMatrix matrix, SubsystemLayout layout)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {
  require_layout_dim(matrix_, layout_);
  if (!is_hermitian(matrix_, kHermitianTol)) {
    throw InvalidOperatorError("density operator is not Hermitian");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
    throw InvalidOperatorError("density operator trace " + std::to_string(tr.real()) + " != 1");
  }
  if (min_eigenvalue(matrix_) < -kPsdTol) {
    throw InvalidOperatorError("density operator has a negative eigenvalue");
  }
}

double DensityOperator::purity() const { return (matrix_ * matrix_).trace().real(); }

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix pauli(int index) {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  switch (index) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw DomainError("Pauli index must be in 0..3");
  }
  return m;
}

ComplexMatrix projector(const ComplexVector& psi) { return psi * psi.adjoint(); }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidOperatorError("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator(tensor(a.matrix(), b.matrix()), a.layout().concat(b.layout()));
}

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm) {
  std::vector<std::size_t> inv(perm.size(), perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] >= perm.size() || inv[perm[k]] != perm.size()) {
      throw LayoutError("not a permutation of layout positions");
    }
    inv[perm[k]] = k;
  }
  return inv;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, const SubsystemLayout& layout,
                                 std::span<const std::size_t> perm) {
  require_layout_dim(m, layout);
  const SubsystemLayout target = layout.permuted(perm);
  const auto old_strides = strides_of(layout);
  const auto new_strides = strides_of(target);
  const int dim = layout.total_dim();

  // source[r'] = index in the old basis of new basis vector r'
  std::vector<Eigen::Index> source(dim);
  for (int r = 0; r < dim; ++r) {
    int old_index = 0;
    for (std::size_t k = 0; k < perm.size(); ++k) {
      const int digit = (r / new_strides[k]) % target.factors()[k].dim;
      old_index += digit * old_strides[perm[k]];
    }
    source[r] = old_index;
  }

  ComplexMatrix out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) out(r, c) = m(source[r], source[c]);
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemLayout& layout,
                            std::span<const std::string> keep) {
  require_layout_dim(m, layout);
  if (keep.empty()) throw LayoutError("partial_trace: keep set is empty");

  std::vector<bool> kept(layout.size(), false);
  for (const auto& label : keep) kept[layout.index_of(label)] = true;

  const auto strides = strides_of(layout);
  // Full-space offsets contributed by each kept / traced multi-index.
  auto offsets_for = [&](bool want_kept) {
    std::vector<Eigen::Index> offsets{0};
    for (std::size_t k = 0; k < layout.size(); ++k) {
      if (kept[k] != want_kept) continue;
      std::vector<Eigen::Index> next;
      next.reserve(offsets.size() * layout.factors()[k].dim);
      for (auto base : offsets) {
        for (int d = 0; d < layout.factors()[k].dim; ++d) next.push_back(base + d * strides[k]);
      }
      offsets = std::move(next);
    }
    return offsets;
  };
  const auto kept_offsets = offsets_for(true);
  const auto traced_offsets = offsets_for(false);

  const auto n = static_cast<Eigen::Index>(kept_offsets.size());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (auto t : traced_offsets) acc += m(kept_offsets[i] + t, kept_offsets[j] + t);
      out(i, j) = acc;
    }
  }
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::string> keep) {
  std::vector<Factor> factors;
  for (const auto& f : rho.layout().factors()) {
    if (std::find(keep.begin(), keep.end(), f.label) != keep.end()) factors.push_back(f);
  }
  ComplexMatrix reduced = partial_trace(rho.matrix(), rho.layout(), keep);
  return DensityOperator(std::move(reduced), SubsystemLayout(std::move(factors)));
}

DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<std::string> keep) {
  return partial_trace(rho, std::span<const std::string>(keep.begin(), keep.size()));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const SubsystemLayout& layout,
                                std::string_view label) {
  require_layout_dim(m, layout);
  const std::size_t p = layout.index_of(label);
  const int stride = strides_of(layout)[p];
  const int d = layout.factors()[p].dim;
  const int dim = layout.total_dim();

  ComplexMatrix out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const int rd = (r / stride) % d;
    for (int c = 0; c < dim; ++c) {
      const int cd = (c / stride) % d;
      out(r, c) = m(r + (cd - rd) * stride, c + (rd - cd) * stride);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityOperator& rho, std::string_view label) {
  return partial_transpose(rho.matrix(), rho.layout(), label);
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigenvalues");
  if (!is_hermitian(m, hermitian_tolerance(m))) {
    throw InvalidOperatorError("eigenvalues requested for a non-Hermitian matrix");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix& m) { return hermitian_eigenvalues(m).minCoeff(); }

ComplexMatrix herm_sqrt(const ComplexMatrix& m) {
  require_square(m, "herm_sqrt");
  if (!is_hermitian(m, hermitian_tolerance(m))) {
    throw InvalidOperatorError("herm_sqrt of a non-Hermitian matrix");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  Eigen::VectorXd evals = solver.eigenvalues();
  if (evals.minCoeff() < -kPsdTol) {
    throw InvalidOperatorError("herm_sqrt of a matrix with eigenvalue " +
                               std::to_string(evals.minCoeff()));
  }
  // Eigenvalues at the rounding level of the spectrum are exact zeros;
  // taking their square root would amplify the noise to ~1e-8.
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() *
                       static_cast<double>(m.rows()) * std::max(1.0, evals.cwiseAbs().maxCoeff());
  for (auto& e : evals) {
    if (e < noise) e = 0.0;
  }
  evals = evals.cwiseSqrt();
  const ComplexMatrix& v = solver.eigenvectors();
  return v * evals.cast<Complex>().asDiagonal() * v.adjoint();
}

double negativity(const DensityOperator& rho, std::string_view label) {
  const Eigen::VectorXd evals = hermitian_eigenvalues(partial_transpose(rho, label));
  double sum = 0.0;
  for (double e : evals) {
    if (e < 0.0) sum -= e;
  }
  return sum;
}

}  // namespace seqmdi
