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

#include "blockcoh/generate.hpp"
#include "blockcoh/measures.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

namespace blockcoh {
namespace {

DensityMatrix pure_from(std::initializer_list<Complex> amps) {
  ComplexVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (auto a : amps) v(i++) = a;
  return DensityMatrix::pure(v.normalized());
}

// Relative entropy D(rho || sigma) in bits from the matrix logarithm,
// for full-rank arguments.
ComplexMatrix log2m(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
  RealVector l = es.eigenvalues().array().log() / std::log(2.0);
  return es.eigenvectors() * l.asDiagonal() * es.eigenvectors().adjoint();
}

double relative_entropy_oracle(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  return (rho * (log2m(rho) - log2m(sigma))).trace().real();
}

TEST(Entropy, Examples) {
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(2)), 1.0, 1e-14);
  EXPECT_NEAR(von_neumann_entropy(pure_from({1.0, 1.0, 0.0})), 0.0, 1e-14);
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d.diagonal() << 0.5, 0.25, 0.25;
  EXPECT_NEAR(von_neumann_entropy(d), 1.5, 1e-14);
}

TEST(RelEntropy, Examples) {
  EXPECT_NEAR(rel_entropy_block_coherence(BlockPartition({1, 1}), pure_from({1.0, 1.0})), 1.0, 1e-12);
  EXPECT_NEAR(rel_entropy_block_coherence(BlockPartition({2, 3}), pure_from({1.0, 1.0, 0.0, 0.0, 0.0})), 0.0, 1e-12);
  EXPECT_NEAR(rel_entropy_block_coherence(BlockPartition({2, 3}), pure_from({1.0, 0.0, 1.0, 0.0, 0.0})), 1.0, 1e-12);
}

TEST(RelEntropy, MatchesRelativeEntropyToDephased) {
  Rng rng(31);
  for (const auto& p : {BlockPartition({1, 1}), BlockPartition({2, 3}), BlockPartition({1, 2, 2})}) {
    for (int t = 0; t < 100; ++t) {
      DensityMatrix rho = DensityMatrix::random(static_cast<Eigen::Index>(p.total()), rng);
      double oracle = relative_entropy_oracle(rho.matrix(), block_dephase(p, rho.matrix()));
      EXPECT_NEAR(rel_entropy_block_coherence(p, rho), oracle, 1e-9);
    }
  }
}

TEST(L1, Examples) {
  EXPECT_NEAR(l1_block_coherence(BlockPartition({1, 1}), pure_from({1.0, 1.0})), 1.0, 1e-14);
  EXPECT_NEAR(l1_block_coherence(BlockPartition({1, 1, 1}), pure_from({1.0, 1.0, 1.0})), 2.0, 1e-14);
  EXPECT_NEAR(l1_block_coherence(BlockPartition({3}), pure_from({1.0, 1.0, 1.0})), 0.0, 1e-14);
  EXPECT_NEAR(l1_block_coherence(BlockPartition({2, 1}), pure_from({1.0, 1.0, 1.0})), 4.0 / 3.0, 1e-14);
}

TEST(L1, RankOneIsOffDiagonalSum) {
  Rng rng(32);
  for (int t = 0; t < 50; ++t) {
    DensityMatrix rho = DensityMatrix::random(4, rng);
    double oracle = 0.0;
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = 0; j < 4; ++j)
        if (i != j) oracle += std::abs(rho.matrix()(i, j));
    EXPECT_NEAR(l1_block_coherence(BlockPartition::rank_one(4), rho), oracle, 1e-13);
  }
}

TEST(MeasureKind, Parse) {
  EXPECT_EQ(parse_measure("rel-entropy"), MeasureKind::rel_entropy);
  EXPECT_EQ(parse_measure("l1"), MeasureKind::l1);
  EXPECT_THROW(parse_measure("robustness"), std::invalid_argument);
  EXPECT_EQ(measure_report(MeasureKind::l1, BlockPartition({1, 1}), pure_from({1.0, 1.0})).measure_name, "l1");
}

TEST(MeasureProperty, FaithfulAndNonNegative) {
  Rng rng(33);
  for (const auto& p : {BlockPartition({1, 1}), BlockPartition({2, 3}), BlockPartition({1, 2, 2})}) {
    for (int t = 0; t < 1000; ++t) {
      DensityMatrix rho = DensityMatrix::random(static_cast<Eigen::Index>(p.total()), rng);
      EXPECT_GE(rel_entropy_block_coherence(p, rho), 0.0);
      EXPECT_GE(l1_block_coherence(p, rho), 0.0);
      DensityMatrix free = random_block_incoherent_state(p, rng);
      EXPECT_LE(rel_entropy_block_coherence(p, free), 1e-10);
      EXPECT_LE(l1_block_coherence(p, free), 1e-10);
    }
  }
}

TEST(MeasureProperty, InvariantUnderBlockDiagonalUnitaries) {
  Rng rng(34);
  BlockPartition p({2, 3});
  for (int t = 0; t < 100; ++t) {
    ComplexMatrix u = ComplexMatrix::Zero(5, 5);
    u.block(0, 0, 2, 2) = haar_unitary(2, rng);
    u.block(2, 2, 3, 3) = haar_unitary(3, rng);
    DensityMatrix rho = DensityMatrix::random(5, rng);
    DensityMatrix turned(u * rho.matrix() * u.adjoint());
    EXPECT_NEAR(rel_entropy_block_coherence(p, rho), rel_entropy_block_coherence(p, turned), 1e-10);
  }
}

TEST(Probes, FreeChannelsGiveZeroViolation) {
  BlockPartition p({2, 3});
  for (auto m : {MeasureKind::rel_entropy, MeasureKind::l1}) {
    EXPECT_LE(monotonicity_probe(m, p, identity_channel(p), 50, 1).worst_violation, 1e-12);
    EXPECT_LE(monotonicity_probe(m, p, block_dephasing_channel(p), 50, 1).worst_violation, 1e-12);
    EXPECT_LE(strong_monotonicity_probe(m, p, identity_channel(p), 50, 1).worst_violation, 1e-12);
  }
}

TEST(Probes, SingleKrausStrongEqualsPlain) {
  BlockPartition p({2, 3});
  Rng rng(35);
  ComplexMatrix u = ComplexMatrix::Zero(5, 5);
  u.block(0, 0, 2, 2) = haar_unitary(2, rng);
  u.block(2, 2, 3, 3) = haar_unitary(3, rng);
  KrausSet ks(p, {u});
  auto a = monotonicity_probe(MeasureKind::rel_entropy, p, ks, 40, 9);
  auto b = strong_monotonicity_probe(MeasureKind::rel_entropy, p, ks, 40, 9);
  EXPECT_NEAR(a.worst_violation, b.worst_violation, 1e-12);
}

TEST(Probes, RelEntropyHoldsOnGeneratedBio) {
  BlockPartition p({2, 3});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    KrausSet ks = gen_random(ChannelClass::bio, p, seed);
    auto c2 = monotonicity_probe(MeasureKind::rel_entropy, p, ks, 50, seed);
    auto c3 = strong_monotonicity_probe(MeasureKind::rel_entropy, p, ks, 50, seed);
    EXPECT_LE(c2.worst_violation, kProbeContract);
    EXPECT_LE(c3.worst_violation, kProbeContract);
    EXPECT_FALSE(c3.counterexample.has_value());
  }
  for (auto m : {MeasureKind::rel_entropy, MeasureKind::l1})
    EXPECT_LE(convexity_probe(m, p, 200, 3).worst_violation, kProbeContract);
}

TEST(Probes, RejectNonBioChannel) {
  BlockPartition p({2, 3});
  KrausSet u = gen_random(ChannelClass::unitary, p, 1);
  EXPECT_THROW(monotonicity_probe(MeasureKind::rel_entropy, p, u, 5, 1), std::invalid_argument);
  EXPECT_THROW(strong_monotonicity_probe(MeasureKind::l1, p, u, 5, 1), std::invalid_argument);
}

}  // namespace
}  // namespace blockcoh
