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

#include "blockcoh/dephasing.hpp"
#include "blockcoh/partition.hpp"

#include <gtest/gtest.h>

#include <set>
#include <utility>

namespace blockcoh {
namespace {

ComplexMatrix ket_sum_projector(Eigen::Index d, Eigen::Index a, Eigen::Index b) {
  ComplexVector v = ComplexVector::Zero(d);
  v(a) = 1.0;
  v(b) = 1.0;
  return v * v.adjoint() / 2.0;
}

TEST(BlockPartition, OffsetsAndTotal) {
  BlockPartition p({2, 3});
  EXPECT_EQ(p.total(), 5u);
  EXPECT_EQ(p.blocks(), 2u);
  EXPECT_EQ(p.offset(0), 0u);
  EXPECT_EQ(p.offset(1), 2u);
}

TEST(BlockPartition, RejectsEmptyOrZero) {
  EXPECT_THROW(BlockPartition(std::vector<std::size_t>{}), std::invalid_argument);
  EXPECT_THROW(BlockPartition({2, 0}), std::invalid_argument);
}

TEST(BlockPartition, BlockOfIndex) {
  EXPECT_EQ(block_of_index(BlockPartition({2, 3}), 0), 0u);
  EXPECT_EQ(block_of_index(BlockPartition({2, 3}), 2), 1u);
  EXPECT_EQ(block_of_index(BlockPartition({1, 1, 1}), 2), 2u);
  EXPECT_THROW(block_of_index(BlockPartition({2, 3}), 5), std::out_of_range);
}

TEST(BlockPartition, Parse) {
  EXPECT_EQ(parse_partition("2,3"), BlockPartition({2, 3}));
  EXPECT_EQ(parse_partition("5"), BlockPartition({5}));
  EXPECT_THROW(parse_partition("2,,3"), std::invalid_argument);
  EXPECT_THROW(parse_partition("2,x"), std::invalid_argument);
  EXPECT_THROW(parse_partition("2,0"), std::invalid_argument);
}

TEST(BlockPartition, CompositionsCount) {
  for (std::size_t d = 1; d <= 7; ++d) {
    auto all = compositions(d);
    EXPECT_EQ(all.size(), std::size_t{1} << (d - 1));
    std::set<std::string> unique;
    for (const auto& p : all) {
      EXPECT_EQ(p.total(), d);
      unique.insert(p.to_string());
    }
    EXPECT_EQ(unique.size(), all.size());
  }
}

TEST(BlockDephase, RankOneKillsOffDiagonals) {
  BlockPartition p({1, 1});
  ComplexMatrix plus = ket_sum_projector(2, 0, 1);
  EXPECT_LE(max_abs(block_dephase(p, plus) - ComplexMatrix::Identity(2, 2) / 2.0), 1e-15);
}

TEST(BlockDephase, ErasesCrossBlockCoherence) {
  BlockPartition p({2, 3});
  ComplexMatrix rho = ket_sum_projector(5, 0, 2);
  ComplexMatrix expect = ComplexMatrix::Zero(5, 5);
  expect(0, 0) = 0.5;
  expect(2, 2) = 0.5;
  EXPECT_LE(max_abs(block_dephase(p, rho) - expect), 1e-15);
}

TEST(BlockDephase, IdentityInsideOneBlock) {
  BlockPartition p({2, 3});
  ComplexMatrix rho = ket_sum_projector(5, 0, 1);
  EXPECT_EQ(block_dephase(p, rho), rho);
}

TEST(BlockDephase, DimensionMismatch) {
  EXPECT_THROW(block_dephase(BlockPartition({2, 3}), ComplexMatrix::Identity(4, 4)), std::invalid_argument);
}

TEST(BlockIncoherent, Examples) {
  BlockPartition p({2, 3});
  EXPECT_TRUE(is_block_incoherent(p, DensityMatrix::maximally_mixed(5)));
  EXPECT_FALSE(is_block_incoherent(p, DensityMatrix(ket_sum_projector(5, 0, 2))));
  Rng rng(3);
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(is_block_incoherent(BlockPartition({5}), DensityMatrix::random(5, rng)));
}

TEST(BlockBasis, Counts) {
  EXPECT_EQ(diagonal_block_basis(BlockPartition({2, 3})).size(), 13u);
  EXPECT_EQ(diagonal_block_basis(BlockPartition({5})).size(), 25u);
  EXPECT_EQ(offdiagonal_block_basis(BlockPartition({2, 3})).size(), 12u);
  EXPECT_TRUE(offdiagonal_block_basis(BlockPartition({5})).empty());
}

TEST(BlockBasis, RankOneTwo) {
  auto diag = diagonal_block_basis(BlockPartition({1, 1}));
  ASSERT_EQ(diag.size(), 2u);
  EXPECT_EQ(diag[0], basis_outer(2, 0, 0));
  EXPECT_EQ(diag[1], basis_outer(2, 1, 1));
  auto off = offdiagonal_block_basis(BlockPartition({1, 1}));
  ASSERT_EQ(off.size(), 2u);
  EXPECT_EQ(off[0], basis_outer(2, 0, 1));
  EXPECT_EQ(off[1], basis_outer(2, 1, 0));
}

TEST(BlockBasis, UnionIsFullBasisWithoutOverlap) {
  for (const auto& p : {BlockPartition({2, 3}), BlockPartition({1, 2, 2}), BlockPartition({4})}) {
    std::set<std::pair<Eigen::Index, Eigen::Index>> seen;
    auto add = [&](const std::vector<ComplexMatrix>& basis) {
      for (const auto& m : basis) {
        Eigen::Index r, c;
        m.cwiseAbs().maxCoeff(&r, &c);
        EXPECT_TRUE(seen.emplace(r, c).second);
      }
    };
    add(diagonal_block_basis(p));
    add(offdiagonal_block_basis(p));
    EXPECT_EQ(seen.size(), p.total() * p.total());
  }
}

TEST(BlockProjectorSet, OrthogonalCompleteRank) {
  BlockProjectorSet ps(BlockPartition({2, 3}));
  ComplexMatrix sum = ComplexMatrix::Zero(5, 5);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    sum += ps[i];
    EXPECT_DOUBLE_EQ(ps[i].trace().real(), static_cast<double>(ps.partition().size(i)));
    for (std::size_t j = 0; j < ps.size(); ++j) {
      ComplexMatrix expect = i == j ? ps[i] : ComplexMatrix::Zero(5, 5);
      EXPECT_EQ(ps[i] * ps[j], expect);
    }
  }
  EXPECT_EQ(sum, ComplexMatrix::Identity(5, 5));
}

TEST(BlockDephaseProperty, IdempotentTracePreservingAndFree) {
  Rng rng(11);
  for (const auto& p : {BlockPartition({2, 3}), BlockPartition({1, 2, 2}), BlockPartition({3, 1})}) {
    const auto d = static_cast<Eigen::Index>(p.total());
    for (int t = 0; t < 100; ++t) {
      ComplexMatrix m = ginibre(d, d, rng);
      ComplexMatrix once = block_dephase(p, m);
      EXPECT_LE(max_abs(block_dephase(p, once) - once), 1e-12);
      EXPECT_LE(std::abs(once.trace() - m.trace()), 1e-12);
      ComplexMatrix rho = random_hs_state(d, rng);
      EXPECT_TRUE(is_block_incoherent(p, DensityMatrix(block_dephase(p, rho))));
    }
  }
}

TEST(BlockDephaseProperty, RankOneIsCompleteDephasing) {
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    ComplexMatrix m = ginibre(4, 4, rng);
    ComplexMatrix diag = m.diagonal().asDiagonal();
    EXPECT_EQ(block_dephase(BlockPartition::rank_one(4), m), diag);
  }
}

}  // namespace
}  // namespace blockcoh
