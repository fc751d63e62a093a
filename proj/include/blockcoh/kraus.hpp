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

#include "blockcoh/dephasing.hpp"
#include "blockcoh/linalg.hpp"
#include "blockcoh/partition.hpp"
#include "blockcoh/state.hpp"

#include <string>
#include <utility>
#include <vector>

namespace blockcoh {

/// A channel given by Kraus operators on a block-partitioned space. Shape is
/// checked at construction; completeness is a separate query (verify_cptp)
/// so that non-physical inputs can still be loaded and reported on.
class KrausSet {
 public:
  KrausSet(BlockPartition partition, std::vector<ComplexMatrix> operators)
      : partition_(std::move(partition)), ops_(std::move(operators)) {
    if (ops_.empty()) throw std::invalid_argument("Kraus set must contain at least one operator");
    auto d = static_cast<Eigen::Index>(partition_.total());
    for (std::size_t n = 0; n < ops_.size(); ++n)
      if (ops_[n].rows() != d || ops_[n].cols() != d)
        throw std::invalid_argument("Kraus operator " + std::to_string(n) + " is " +
                                    std::to_string(ops_[n].rows()) + "x" + std::to_string(ops_[n].cols()) +
                                    ", expected " + std::to_string(d) + "x" + std::to_string(d));
  }

  std::size_t dim() const noexcept { return partition_.total(); }
  const BlockPartition& partition() const noexcept { return partition_; }
  const std::vector<ComplexMatrix>& operators() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  const ComplexMatrix& operator[](std::size_t n) const { return ops_.at(n); }

  /// Same operators viewed through a different partition of the same dimension.
  KrausSet with_partition(BlockPartition p) const { return KrausSet(std::move(p), ops_); }

 private:
  BlockPartition partition_;
  std::vector<ComplexMatrix> ops_;
};

inline ComplexMatrix completeness_sum(const KrausSet& ks) {
  auto d = static_cast<Eigen::Index>(ks.dim());
  ComplexMatrix s = ComplexMatrix::Zero(d, d);
  for (const auto& k : ks.operators()) s.noalias() += k.adjoint() * k;
  return s;
}

/// Max entry deviation of sum K^dagger K from the identity.
inline double completeness_deviation(const KrausSet& ks) { return identity_deviation(completeness_sum(ks)); }

inline bool verify_cptp(const KrausSet& ks, double tolerance = tol::kCptp) {
  return completeness_deviation(ks) <= tolerance;
}

inline ComplexMatrix apply_channel(const KrausSet& ks, const ComplexMatrix& rho) {
  require_square(rho, static_cast<Eigen::Index>(ks.dim()), "apply_channel");
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : ks.operators()) out.noalias() += k * rho * k.adjoint();
  return out;
}

inline DensityMatrix apply_channel(const KrausSet& ks, const DensityMatrix& rho) {
  return DensityMatrix(apply_channel(ks, rho.matrix()));
}

struct SelectiveOutcome {
  std::size_t kraus_index;
  double probability;
  DensityMatrix state;
};

/// Branch-by-branch action: (q_n, K_n rho K_n^dagger / q_n) for every
/// branch with q_n above the probability floor.
inline std::vector<SelectiveOutcome> apply_selective(const KrausSet& ks, const DensityMatrix& rho,
                                                     double probability_floor = tol::kProbability) {
  require_square(rho.matrix(), static_cast<Eigen::Index>(ks.dim()), "apply_selective");
  std::vector<SelectiveOutcome> out;
  for (std::size_t n = 0; n < ks.size(); ++n) {
    ComplexMatrix branch = ks[n] * rho.matrix() * ks[n].adjoint();
    double q = branch.trace().real();
    if (q <= probability_floor) continue;
    ComplexMatrix normalized = branch / q;
    normalized = 0.5 * (normalized + normalized.adjoint()).eval();
    out.push_back({n, q, DensityMatrix(std::move(normalized))});
  }
  return out;
}

inline KrausSet identity_channel(const BlockPartition& p) {
  auto d = static_cast<Eigen::Index>(p.total());
  return KrausSet(p, {ComplexMatrix::Identity(d, d)});
}

/// Kraus set {P_l} realizing the block-dephasing map.
inline KrausSet block_dephasing_channel(const BlockPartition& p) {
  return KrausSet(p, BlockProjectorSet(p).projectors());
}

}  // namespace blockcoh
