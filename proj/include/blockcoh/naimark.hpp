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
#include "blockcoh/partition.hpp"
#include "blockcoh/state.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace blockcoh {

class Povm {
 public:
  Povm(Eigen::Index dim, std::vector<ComplexMatrix> effects) : dim_(dim), effects_(std::move(effects)) {
    if (effects_.empty()) throw std::invalid_argument("POVM must have at least one effect");
    ComplexMatrix sum = ComplexMatrix::Zero(dim_, dim_);
    for (std::size_t i = 0; i < effects_.size(); ++i) {
      const auto& e = effects_[i];
      if (e.rows() != dim_ || e.cols() != dim_)
        throw std::invalid_argument("effect " + std::to_string(i) + " has wrong dimension");
      if (hermiticity_deviation(e) > tol::kHermitian)
        throw std::domain_error("effect " + std::to_string(i) + " is not Hermitian");
      if (hermitian_eigenvalues(e).minCoeff() < -tol::kPsd)
        throw std::domain_error("effect " + std::to_string(i) + " is not positive semidefinite");
      sum += e;
    }
    if (identity_deviation(sum) > tol::kCptp) throw std::domain_error("POVM effects do not sum to the identity");
  }

  Eigen::Index dim() const noexcept { return dim_; }
  std::size_t outcomes() const noexcept { return effects_.size(); }
  const std::vector<ComplexMatrix>& effects() const noexcept { return effects_; }
  const ComplexMatrix& operator[](std::size_t i) const { return effects_.at(i); }

  double probability(std::size_t i, const DensityMatrix& rho) const {
    return (effects_.at(i) * rho.matrix()).trace().real();
  }

 private:
  Eigen::Index dim_;
  std::vector<ComplexMatrix> effects_;
};

/// Trine POVM: (2/3)|psi_i><psi_i| for real qubit states at 0, 120, 240 degrees.
inline Povm trine_povm() {
  std::vector<ComplexMatrix> effects;
  for (int i = 0; i < 3; ++i) {
    double th = 2.0 * std::numbers::pi * i / 3.0;
    ComplexVector psi(2);
    psi << std::cos(th), std::sin(th);
    effects.push_back((2.0 / 3.0) * psi * psi.adjoint());
  }
  return Povm(2, std::move(effects));
}

/// n Wishart matrices W_i = G_i G_i^dagger, normalized by S^{-1/2} W_i S^{-1/2}
/// with S = sum W_i.
inline Povm random_povm(Eigen::Index dim, std::size_t outcomes, Rng& rng) {
  std::vector<ComplexMatrix> w;
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < outcomes; ++i) {
    ComplexMatrix g = ginibre(dim, dim, rng);
    w.push_back(g * g.adjoint());
    sum += w.back();
  }
  ComplexMatrix s = inverse_sqrt(sum);
  for (auto& e : w) {
    e = s * e * s;
    e = 0.5 * (e + e.adjoint()).eval();
  }
  return Povm(dim, std::move(w));
}

/// M_i = sqrt(E_i), the principal square root.
inline std::vector<ComplexMatrix> measurement_operators(const Povm& povm) {
  std::vector<ComplexMatrix> m;
  for (const auto& e : povm.effects()) m.push_back(psd_sqrt(e));
  return m;
}

/// Projective realization of a POVM on system (x) ancilla. The global index
/// of |x>|i> is x * n + i; the ancilla starts in basis state 0.
struct NaimarkExtension {
  Eigen::Index system_dim = 0;
  std::size_t outcomes = 0;
  ComplexMatrix global_unitary;
  std::vector<ComplexMatrix> pvm;  // P_i = V^dagger (I (x) |i><i|) V
  std::size_t ancilla_index = 0;

  Eigen::Index global_dim() const { return system_dim * static_cast<Eigen::Index>(outcomes); }
};

/// I (x) |i><i| on the global space.
inline ComplexMatrix ancilla_projector(Eigen::Index system_dim, std::size_t outcomes, std::size_t i) {
  ComplexMatrix a = ComplexMatrix::Zero(static_cast<Eigen::Index>(outcomes), static_cast<Eigen::Index>(outcomes));
  a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
  return kron(ComplexMatrix::Identity(system_dim, system_dim), a);
}

namespace detail {

/// Appends canonical basis vectors (smallest index first) to the fixed
/// columns, orthogonalized twice against everything accepted so far.
inline ComplexMatrix complete_orthonormal(const ComplexMatrix& fixed, Eigen::Index dim) {
  std::vector<ComplexVector> accepted;
  for (Eigen::Index c = 0; c < fixed.cols(); ++c) accepted.push_back(fixed.col(c));
  for (Eigen::Index e = 0; e < dim && static_cast<Eigen::Index>(accepted.size()) < dim; ++e) {
    ComplexVector v = ComplexVector::Unit(dim, e);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : accepted) v -= u * u.dot(v);
    double norm = v.norm();
    if (norm < 1e-6) continue;
    accepted.push_back(v / norm);
  }
  if (static_cast<Eigen::Index>(accepted.size()) != dim)
    throw std::runtime_error("unitary completion failed");
  ComplexMatrix out(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) out.col(c) = accepted[static_cast<std::size_t>(c)];
  return out;
}

}  // namespace detail

/// Canonical dilation: V (|psi> (x) |0>) = sum_i (M_i |psi>) (x) |i>. The
/// columns x*n + 0 carry the stacked M_i; the remaining columns, in
/// ascending index order, are a deterministic Gram-Schmidt completion.
inline NaimarkExtension dilate(const Povm& povm) {
  const Eigen::Index d = povm.dim();
  const std::size_t n = povm.outcomes();
  const auto ni = static_cast<Eigen::Index>(n);
  const Eigen::Index big = d * ni;
  const auto m = measurement_operators(povm);

  ComplexMatrix isometry = ComplexMatrix::Zero(big, d);
  for (Eigen::Index x = 0; x < d; ++x)
    for (std::size_t i = 0; i < n; ++i)
      for (Eigen::Index y = 0; y < d; ++y) isometry(y * ni + static_cast<Eigen::Index>(i), x) = m[i](y, x);
  // Re-orthonormalize against square-root round-off before completing.
  isometry = isometry * inverse_sqrt(isometry.adjoint() * isometry);

  ComplexMatrix completed = detail::complete_orthonormal(isometry, big);
  ComplexMatrix v(big, big);
  Eigen::Index extra = d;
  for (Eigen::Index col = 0; col < big; ++col) {
    if (col % ni == 0)
      v.col(col) = completed.col(col / ni);
    else
      v.col(col) = completed.col(extra++);
  }

  NaimarkExtension ext{d, n, std::move(v), {}, 0};
  for (std::size_t i = 0; i < n; ++i)
    ext.pvm.push_back(ext.global_unitary.adjoint() * ancilla_projector(d, n, i) * ext.global_unitary);
  return ext;
}

/// rho (x) |0><0| on the global space.
inline ComplexMatrix attach_ancilla(const NaimarkExtension& ext, const ComplexMatrix& rho) {
  ComplexMatrix anc = ComplexMatrix::Zero(static_cast<Eigen::Index>(ext.outcomes), static_cast<Eigen::Index>(ext.outcomes));
  anc(static_cast<Eigen::Index>(ext.ancilla_index), static_cast<Eigen::Index>(ext.ancilla_index)) = 1.0;
  return kron(rho, anc);
}

/// max over trials and outcomes of |Tr[E_i rho] - Tr[P_i (rho (x) |0><0|)]|
/// for Hilbert-Schmidt random rho.
inline double verify_dilation(const Povm& povm, const NaimarkExtension& ext, std::size_t trials, std::uint64_t seed) {
  if (ext.system_dim != povm.dim() || ext.outcomes != povm.outcomes())
    throw std::invalid_argument("dilation does not match POVM dimensions");
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    DensityMatrix rho = DensityMatrix::random(povm.dim(), rng);
    ComplexMatrix global = attach_ancilla(ext, rho.matrix());
    for (std::size_t i = 0; i < povm.outcomes(); ++i) {
      double direct = povm.probability(i, rho);
      double dilated = (ext.pvm[i] * global).trace().real();
      worst = std::max(worst, std::abs(direct - dilated));
    }
  }
  return worst;
}

/// Partition (d, ..., d) of the dilated space, with the reordering that
/// makes each outcome's support contiguous: position p = i * d + x of the
/// new basis holds old index x * n + i.
struct InducedPartition {
  BlockPartition partition;
  std::vector<std::size_t> permutation;
};

inline InducedPartition induced_partition(const Povm& povm) {
  const auto d = static_cast<std::size_t>(povm.dim());
  const std::size_t n = povm.outcomes();
  InducedPartition out{BlockPartition(std::vector<std::size_t>(n, d)), std::vector<std::size_t>(d * n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < d; ++x) out.permutation[i * d + x] = x * n + i;
  return out;
}

/// Conjugates a global-space matrix into the reordered basis.
inline ComplexMatrix reorder(const ComplexMatrix& m, const std::vector<std::size_t>& permutation) {
  const auto n = static_cast<Eigen::Index>(permutation.size());
  ComplexMatrix out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      out(r, c) = m(static_cast<Eigen::Index>(permutation[r]), static_cast<Eigen::Index>(permutation[c]));
  return out;
}

}  // namespace blockcoh
