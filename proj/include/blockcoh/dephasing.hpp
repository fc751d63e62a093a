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

#include <vector>

namespace blockcoh {

inline void require_partition_dim(const BlockPartition& p, const ComplexMatrix& m, const char* what) {
  require_square(m, static_cast<Eigen::Index>(p.total()), what);
}

/// Block-dephasing map: keeps entry (x, y) iff x and y share a block.
inline ComplexMatrix block_dephase(const BlockPartition& p, const ComplexMatrix& rho) {
  require_partition_dim(p, rho, "block_dephase");
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (std::size_t l = 0; l < p.blocks(); ++l) {
    auto o = static_cast<Eigen::Index>(p.offset(l));
    auto s = static_cast<Eigen::Index>(p.size(l));
    out.block(o, o, s, s) = rho.block(o, o, s, s);
  }
  return out;
}

inline DensityMatrix block_dephase(const BlockPartition& p, const DensityMatrix& rho) {
  return DensityMatrix(block_dephase(p, rho.matrix()));
}

/// Largest magnitude among entries that connect different blocks.
inline double off_block_magnitude(const BlockPartition& p, const ComplexMatrix& m) {
  require_partition_dim(p, m, "off_block_magnitude");
  return max_abs(m - block_dephase(p, m));
}

/// Block-diagonal within the scale-relative zero rule.
inline bool is_block_diagonal(const BlockPartition& p, const ComplexMatrix& m, double tolerance = tol::kZero) {
  return negligible(off_block_magnitude(p, m), max_abs(m), tolerance);
}

inline bool is_block_incoherent(const BlockPartition& p, const DensityMatrix& rho, double tolerance = tol::kZero) {
  return is_block_diagonal(p, rho.matrix(), tolerance);
}

/// The diagonal 0/1 projectors P_l onto each block's support.
class BlockProjectorSet {
 public:
  explicit BlockProjectorSet(BlockPartition p) : partition_(std::move(p)) {
    auto d = static_cast<Eigen::Index>(partition_.total());
    for (std::size_t l = 0; l < partition_.blocks(); ++l) {
      ComplexMatrix proj = ComplexMatrix::Zero(d, d);
      auto o = static_cast<Eigen::Index>(partition_.offset(l));
      auto s = static_cast<Eigen::Index>(partition_.size(l));
      proj.block(o, o, s, s).setIdentity();
      projectors_.push_back(std::move(proj));
    }
  }

  const BlockPartition& partition() const noexcept { return partition_; }
  const std::vector<ComplexMatrix>& projectors() const noexcept { return projectors_; }
  const ComplexMatrix& operator[](std::size_t l) const { return projectors_.at(l); }
  std::size_t size() const noexcept { return projectors_.size(); }

 private:
  BlockPartition partition_;
  std::vector<ComplexMatrix> projectors_;
};

/// Elementary matrices |x><y| with x, y in the same block. Their span is the
/// space of all block-diagonal operators.
inline std::vector<ComplexMatrix> diagonal_block_basis(const BlockPartition& p) {
  auto d = static_cast<Eigen::Index>(p.total());
  std::vector<ComplexMatrix> basis;
  for (Eigen::Index x = 0; x < d; ++x)
    for (Eigen::Index y = 0; y < d; ++y)
      if (p.same_block(x, y)) basis.push_back(basis_outer(d, x, y));
  return basis;
}

/// Elementary matrices |x><y| with x, y in different blocks.
inline std::vector<ComplexMatrix> offdiagonal_block_basis(const BlockPartition& p) {
  auto d = static_cast<Eigen::Index>(p.total());
  std::vector<ComplexMatrix> basis;
  for (Eigen::Index x = 0; x < d; ++x)
    for (Eigen::Index y = 0; y < d; ++y)
      if (!p.same_block(x, y)) basis.push_back(basis_outer(d, x, y));
  return basis;
}

/// Random block-incoherent state: the dephased image of a Hilbert-Schmidt state.
inline DensityMatrix random_block_incoherent_state(const BlockPartition& p, Rng& rng) {
  return DensityMatrix(block_dephase(p, random_hs_state(static_cast<Eigen::Index>(p.total()), rng)));
}

}  // namespace blockcoh
