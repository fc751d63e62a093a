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

#include "blockcoh/classify.hpp"
#include "blockcoh/counting.hpp"
#include "blockcoh/kraus.hpp"
#include "blockcoh/pbio.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace blockcoh {

enum class ChannelClass { bio, sbio, pbio, unitary };

inline std::string to_string(ChannelClass c) {
  switch (c) {
    case ChannelClass::bio: return "bio";
    case ChannelClass::sbio: return "sbio";
    case ChannelClass::pbio: return "pbio";
    case ChannelClass::unitary: return "unitary";
  }
  return "?";
}

inline ChannelClass parse_channel_class(const std::string& s) {
  if (s == "bio") return ChannelClass::bio;
  if (s == "sbio") return ChannelClass::sbio;
  if (s == "pbio") return ChannelClass::pbio;
  if (s == "unitary") return ChannelClass::unitary;
  throw std::invalid_argument("unknown channel class '" + s + "'");
}

/// Allowed row blocks for every (operator, column block) pair.
/// rows[n][c] lists the row blocks operator n may occupy in column block c.
struct SupportPattern {
  std::vector<std::vector<std::vector<std::size_t>>> rows;

  std::size_t operators() const { return rows.size(); }
};

enum class PatternKind {
  bio,        ///< at most one row block per column block
  sbio,       ///< additionally injective per operator
  violating,  ///< a BIO pattern with one column block given a second row block
  arbitrary,  ///< independent random subsets
};

namespace detail {

inline std::size_t capped_operator_count(ChannelClass c, const BlockPartition& p, std::size_t cap) {
  if (c != ChannelClass::bio && c != ChannelClass::sbio) return cap;
  BoundReport b = kraus_bound(c == ChannelClass::bio ? BoundClass::bio : BoundClass::sbio, p);
  return b.total < cap ? static_cast<std::size_t>(b.total) : cap;
}

}  // namespace detail

inline SupportPattern sample_pattern(PatternKind kind, const BlockPartition& p, std::size_t n_ops, Rng& rng) {
  const std::size_t k = p.blocks();
  if (kind == PatternKind::violating && k < 2)
    throw std::invalid_argument("a single-block partition admits no pattern-violating operator");
  SupportPattern pat;
  pat.rows.assign(n_ops, std::vector<std::vector<std::size_t>>(k));
  std::uniform_int_distribution<std::size_t> pick_row(0, k - 1);
  std::uniform_int_distribution<std::size_t> pick_op(0, n_ops - 1);
  std::uniform_int_distribution<std::size_t> pick_skip(0, k);  // 0 leaves the column block empty

  if (kind == PatternKind::arbitrary) {
    std::bernoulli_distribution coin(0.5);
    for (auto& op : pat.rows)
      for (auto& col : op)
        for (std::size_t r = 0; r < k; ++r)
          if (coin(rng)) col.push_back(r);
  } else if (kind == PatternKind::sbio) {
    for (auto& op : pat.rows) {
      std::vector<std::size_t> perm(k);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t c = 0; c < k; ++c)
        if (pick_skip(rng) != 0) op[c].push_back(perm[c]);
    }
  } else {
    for (auto& op : pat.rows)
      for (auto& col : op)
        if (pick_skip(rng) != 0) col.push_back(pick_row(rng));
  }

  // Every column block must be occupied by some operator, otherwise the
  // completeness relation cannot hold on that block.
  for (std::size_t c = 0; c < k; ++c) {
    bool covered = false;
    for (const auto& op : pat.rows) covered = covered || !op[c].empty();
    if (covered) continue;
    auto& op = pat.rows[pick_op(rng)];
    if (kind == PatternKind::sbio) {
      std::vector<bool> used(k, false);
      for (const auto& col : op)
        for (std::size_t r : col) used[r] = true;
      std::vector<std::size_t> free_rows;
      for (std::size_t r = 0; r < k; ++r)
        if (!used[r]) free_rows.push_back(r);
      std::uniform_int_distribution<std::size_t> pick_free(0, free_rows.size() - 1);
      op[c].push_back(free_rows[pick_free(rng)]);
    } else {
      op[c].push_back(pick_row(rng));
    }
  }

  if (kind == PatternKind::violating) {
    auto& col = pat.rows[pick_op(rng)][pick_row(rng)];
    if (col.empty()) col.push_back(pick_row(rng));
    std::size_t extra = pick_row(rng);
    while (extra == col.front()) extra = pick_row(rng);
    col.push_back(extra);
  }
  return pat;
}

/// Fills a support pattern so that the stacked operator W = [K_1; ...; K_n]
/// is an isometry, so sum K^dagger K = I to round-off, without leaving the
/// pattern. Column block c is a random isometry (QR of a Gaussian sample)
/// into the subspace of its allowed rows orthogonal to the already-built
/// column blocks, polished by (Y^dagger Y)^{-1/2}. Returns nullopt when the pattern
/// leaves too little room for some column block.
inline std::optional<KrausSet> realize_pattern(const SupportPattern& pat, const BlockPartition& p, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(p.total());
  const auto n_ops = static_cast<Eigen::Index>(pat.operators());
  ComplexMatrix stacked = ComplexMatrix::Zero(n_ops * d, d);

  for (std::size_t c = 0; c < p.blocks(); ++c) {
    const auto col0 = static_cast<Eigen::Index>(p.offset(c));
    const auto width = static_cast<Eigen::Index>(p.size(c));
    std::vector<Eigen::Index> support;
    for (Eigen::Index n = 0; n < n_ops; ++n)
      for (std::size_t r : pat.rows[static_cast<std::size_t>(n)][c])
        for (std::size_t i = 0; i < p.size(r); ++i)
          support.push_back(n * d + static_cast<Eigen::Index>(p.offset(r) + i));
    const auto m = static_cast<Eigen::Index>(support.size());
    if (m < width) return std::nullopt;

    ComplexMatrix null_basis;
    if (col0 == 0) {
      null_basis = ComplexMatrix::Identity(m, m);
    } else {
      ComplexMatrix constraint(col0, m);  // rows: earlier columns, restricted and conjugated
      for (Eigen::Index i = 0; i < m; ++i) constraint.col(i) = stacked.row(support[i]).head(col0).adjoint();
      Eigen::JacobiSVD<ComplexMatrix> svd(constraint, Eigen::ComputeFullV);
      Eigen::Index rank = 0;
      for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1e-10) ++rank;
      null_basis = svd.matrixV().rightCols(m - rank);
    }
    if (null_basis.cols() < width) return std::nullopt;

    Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(null_basis.cols(), width, rng));
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(null_basis.cols(), width);
    ComplexMatrix y = null_basis * q;
    y = y * inverse_sqrt(y.adjoint() * y);
    for (Eigen::Index i = 0; i < m; ++i) stacked.row(support[i]).segment(col0, width) = y.row(i);
  }

  std::vector<ComplexMatrix> ops;
  for (Eigen::Index n = 0; n < n_ops; ++n) {
    ComplexMatrix k = stacked.block(n * d, 0, d, d);
    if (max_abs(k) > 0.0) ops.push_back(std::move(k));
  }
  return KrausSet(p, std::move(ops));
}

/// Samples patterns of the given kind until one is realizable.
inline KrausSet random_from_patterns(PatternKind kind, const BlockPartition& p, std::size_t max_ops, Rng& rng,
                                     std::size_t attempts = 256) {
  std::uniform_int_distribution<std::size_t> pick_n(1, std::max<std::size_t>(1, max_ops));
  for (std::size_t a = 0; a < attempts; ++a) {
    SupportPattern pat = sample_pattern(kind, p, pick_n(rng), rng);
    if (auto ks = realize_pattern(pat, p, rng)) return *std::move(ks);
  }
  throw std::runtime_error("no realizable support pattern found for partition " + p.to_string());
}

/// Kraus set with some operator holding two nonzero blocks in one column
/// block. Structural non-membership is confirmed before returning.
inline KrausSet random_pattern_violating(const BlockPartition& p, Rng& rng, std::size_t max_ops = 4) {
  for (;;) {
    KrausSet ks = random_from_patterns(PatternKind::violating, p, max_ops, rng);
    if (!is_bio_structural(ks)) return ks;
  }
}

/// Maximum operators per generated set (further capped by the class bound).
inline constexpr std::size_t kMaxGeneratedOperators = 4;

/// Deterministic random channel of a class. bio/sbio sets come from legal
/// support patterns, pbio from a random admissible PbioSpec, unitary is a
/// single Haar-random operator.
inline KrausSet gen_random(ChannelClass c, const BlockPartition& p, std::uint64_t seed) {
  Rng rng(seed);
  switch (c) {
    case ChannelClass::bio:
      return random_from_patterns(PatternKind::bio, p, detail::capped_operator_count(c, p, kMaxGeneratedOperators),
                                  rng);
    case ChannelClass::sbio:
      return random_from_patterns(PatternKind::sbio, p, detail::capped_operator_count(c, p, kMaxGeneratedOperators),
                                  rng);
    case ChannelClass::pbio:
      return build_pbio(random_pbio_spec(p, rng));
    case ChannelClass::unitary:
      return KrausSet(p, {haar_unitary(static_cast<Eigen::Index>(p.total()), rng)});
  }
  throw std::invalid_argument("unsupported channel class");
}

}  // namespace blockcoh
