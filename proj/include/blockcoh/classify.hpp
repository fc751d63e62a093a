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
#include "blockcoh/kraus.hpp"

#include <algorithm>
#include <vector>

namespace blockcoh {

/// k x k grid recording which (row block, column block) blocks of an
/// operator hold a non-negligible entry.
class BlockPattern {
 public:
  explicit BlockPattern(std::size_t k) : k_(k), grid_(k * k, false) {}

  std::size_t blocks() const noexcept { return k_; }
  bool operator()(std::size_t row_block, std::size_t col_block) const { return grid_.at(row_block * k_ + col_block); }
  void set(std::size_t row_block, std::size_t col_block, bool v = true) { grid_.at(row_block * k_ + col_block) = v; }

  std::size_t column_count(std::size_t c) const {
    std::size_t n = 0;
    for (std::size_t r = 0; r < k_; ++r) n += (*this)(r, c);
    return n;
  }
  std::size_t row_count(std::size_t r) const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < k_; ++c) n += (*this)(r, c);
    return n;
  }

  /// At most one nonzero block in every column partition.
  bool column_sparse() const {
    for (std::size_t c = 0; c < k_; ++c)
      if (column_count(c) > 1) return false;
    return true;
  }
  /// At most one nonzero block in every row and every column partition.
  bool row_and_column_sparse() const {
    if (!column_sparse()) return false;
    for (std::size_t r = 0; r < k_; ++r)
      if (row_count(r) > 1) return false;
    return true;
  }

  friend bool operator==(const BlockPattern&, const BlockPattern&) = default;

 private:
  std::size_t k_;
  std::vector<bool> grid_;
};

inline BlockPattern block_pattern(const ComplexMatrix& k, const BlockPartition& p, double tolerance = tol::kZero) {
  require_partition_dim(p, k, "block_pattern");
  const double scale = max_abs(k);
  BlockPattern pat(p.blocks());
  for (std::size_t r = 0; r < p.blocks(); ++r)
    for (std::size_t c = 0; c < p.blocks(); ++c) {
      auto blk = k.block(static_cast<Eigen::Index>(p.offset(r)), static_cast<Eigen::Index>(p.offset(c)),
                         static_cast<Eigen::Index>(p.size(r)), static_cast<Eigen::Index>(p.size(c)));
      double m = blk.cwiseAbs().maxCoeff();
      pat.set(r, c, !negligible(m, scale, tolerance));
    }
  return pat;
}

inline bool is_bio_structural(const KrausSet& ks, double tolerance = tol::kZero) {
  return std::all_of(ks.operators().begin(), ks.operators().end(), [&](const ComplexMatrix& k) {
    return block_pattern(k, ks.partition(), tolerance).column_sparse();
  });
}

inline bool is_sbio_structural(const KrausSet& ks, double tolerance = tol::kZero) {
  return std::all_of(ks.operators().begin(), ks.operators().end(), [&](const ComplexMatrix& k) {
    return block_pattern(k, ks.partition(), tolerance).row_and_column_sparse();
  });
}

/// Outcome of a basis sweep: whether every image passed the zero rule, and
/// the largest raw deviation seen.
struct SemanticCheck {
  bool holds = true;
  double max_deviation = 0.0;

  void record(double deviation, double scale, double tolerance) {
    max_deviation = std::max(max_deviation, deviation);
    if (!negligible(deviation, scale, tolerance)) holds = false;
  }
};

/// Every Kraus operator maps every block-diagonal basis element B to a
/// block-diagonal K B K^dagger. Linearity makes the basis sweep complete.
inline SemanticCheck bio_semantic_check(const KrausSet& ks, double tolerance = tol::kZero) {
  const auto& p = ks.partition();
  SemanticCheck out;
  const auto basis = diagonal_block_basis(p);
  for (const auto& k : ks.operators())
    for (const auto& b : basis) {
      ComplexMatrix img = k * b * k.adjoint();
      out.record(off_block_magnitude(p, img), max_abs(img), tolerance);
    }
  return out;
}

/// The cross-block half of the strict condition: Delta(K B' K^dagger) = 0
/// for every off-diagonal basis element B'.
inline SemanticCheck sbio_offdiagonal_check(const KrausSet& ks, double tolerance = tol::kZero) {
  const auto& p = ks.partition();
  SemanticCheck out;
  const auto basis = offdiagonal_block_basis(p);
  for (const auto& k : ks.operators())
    for (const auto& b : basis) {
      ComplexMatrix img = k * b * k.adjoint();
      out.record(max_abs(block_dephase(p, img)), max_abs(img), tolerance);
    }
  return out;
}

inline SemanticCheck sbio_semantic_check(const KrausSet& ks, double tolerance = tol::kZero) {
  SemanticCheck bio = bio_semantic_check(ks, tolerance);
  SemanticCheck off = sbio_offdiagonal_check(ks, tolerance);
  return {bio.holds && off.holds, std::max(bio.max_deviation, off.max_deviation)};
}

inline bool is_bio_semantic(const KrausSet& ks, double tolerance = tol::kZero) {
  return bio_semantic_check(ks, tolerance).holds;
}

inline bool is_sbio_semantic(const KrausSet& ks, double tolerance = tol::kZero) {
  return sbio_semantic_check(ks, tolerance).holds;
}

/// max_n |Delta(K_n rho K_n^dagger) - K_n Delta(rho) K_n^dagger|: the
/// commutation form of the strict condition, evaluated on one operator.
inline double sbio_commutation_deviation(const KrausSet& ks, const ComplexMatrix& rho) {
  const auto& p = ks.partition();
  require_partition_dim(p, rho, "sbio_commutation_deviation");
  const ComplexMatrix dephased = block_dephase(p, rho);
  double worst = 0.0;
  for (const auto& k : ks.operators())
    worst = std::max(worst, max_abs(block_dephase(p, k * rho * k.adjoint()) - k * dephased * k.adjoint()));
  return worst;
}

/// Channel-level check: the full output on each block-diagonal basis element
/// is block-diagonal.
inline SemanticCheck mbio_check(const KrausSet& ks, double tolerance = tol::kZero) {
  const auto& p = ks.partition();
  SemanticCheck out;
  for (const auto& b : diagonal_block_basis(p)) {
    ComplexMatrix img = apply_channel(ks, b);
    out.record(off_block_magnitude(p, img), max_abs(img), tolerance);
  }
  return out;
}

inline bool is_mbio(const KrausSet& ks, double tolerance = tol::kZero) { return mbio_check(ks, tolerance).holds; }

struct ClassifierReport {
  bool cptp = false;
  bool mbio = false;
  bool bio_structural = false;
  bool bio_semantic = false;
  bool sbio_structural = false;
  bool sbio_semantic = false;
  double tolerance = tol::kZero;

  friend bool operator==(const ClassifierReport&, const ClassifierReport&) = default;
};

inline ClassifierReport classify(const KrausSet& ks, double tolerance = tol::kZero) {
  ClassifierReport r;
  r.tolerance = tolerance;
  r.cptp = verify_cptp(ks, std::max(tolerance, tol::kCptp));
  r.mbio = is_mbio(ks, tolerance);
  r.bio_structural = is_bio_structural(ks, tolerance);
  r.bio_semantic = is_bio_semantic(ks, tolerance);
  r.sbio_structural = is_sbio_structural(ks, tolerance);
  r.sbio_semantic = is_sbio_semantic(ks, tolerance);
  return r;
}

}  // namespace blockcoh
