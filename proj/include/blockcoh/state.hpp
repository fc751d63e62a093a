// Copyright 2026 The blockcoh Authors.
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

#include "blockcoh/linalg.hpp"

#include <string>

namespace blockcoh {

/// Validated d x d density matrix: Hermitian, positive semidefinite and of
/// unit trace, each within 1e-9.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() == 0)
      throw std::invalid_argument("density matrix must be square and non-empty");
    if (hermiticity_deviation(mat_) > tol::kHermitian)
      throw std::domain_error("density matrix is not Hermitian");
    if (std::abs(mat_.trace() - Complex(1.0)) > tol::kTrace)
      throw std::domain_error("density matrix trace is not 1");
    if (hermitian_eigenvalues(mat_).minCoeff() < -tol::kPsd)
      throw std::domain_error("density matrix is not positive semidefinite");
  }

  static DensityMatrix pure(const ComplexVector& psi) {
    ComplexVector v = psi / psi.norm();
    return DensityMatrix(v * v.adjoint());
  }

  static DensityMatrix maximally_mixed(Eigen::Index dim) {
    return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
  }

  static DensityMatrix random(Eigen::Index dim, Rng& rng) { return DensityMatrix(random_hs_state(dim, rng)); }

  Eigen::Index dim() const noexcept { return mat_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return mat_; }

 private:
  ComplexMatrix mat_;
};

}  // namespace blockcoh
