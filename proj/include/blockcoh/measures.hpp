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
#include "blockcoh/dephasing.hpp"
#include "blockcoh/kraus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace blockcoh {

/// Von Neumann entropy in bits. Eigenvalues in [-1e-9, 0) count as zero.
inline double von_neumann_entropy(const ComplexMatrix& rho) {
  RealVector ev = hermitian_eigenvalues(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    double l = ev(i);
    if (l < -tol::kPsd) throw std::domain_error("entropy of a matrix with negative eigenvalue");
    l = std::clamp(l, 0.0, 1.0);
    if (l > 0.0) s -= l * std::log2(l);
  }
  return s;
}

inline double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.matrix()); }

/// S(Delta(rho)) - S(rho), clamped at zero against round-off.
inline double rel_entropy_block_coherence(const BlockPartition& p, const DensityMatrix& rho) {
  require_partition_dim(p, rho.matrix(), "rel_entropy_block_coherence");
  double v = von_neumann_entropy(block_dephase(p, rho.matrix())) - von_neumann_entropy(rho.matrix());
  return std::max(v, 0.0);
}

/// Sum of |rho_xy| over pairs (x, y) in different blocks.
inline double l1_block_coherence(const BlockPartition& p, const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  require_partition_dim(p, m, "l1_block_coherence");
  return (m - block_dephase(p, m)).cwiseAbs().sum();
}

enum class MeasureKind { rel_entropy, l1 };

inline std::string to_string(MeasureKind m) { return m == MeasureKind::rel_entropy ? "rel-entropy" : "l1"; }

inline MeasureKind parse_measure(const std::string& s) {
  if (s == "rel-entropy") return MeasureKind::rel_entropy;
  if (s == "l1") return MeasureKind::l1;
  throw std::invalid_argument("unknown measure '" + s + "'");
}

inline double evaluate(MeasureKind m, const BlockPartition& p, const DensityMatrix& rho) {
  return m == MeasureKind::rel_entropy ? rel_entropy_block_coherence(p, rho) : l1_block_coherence(p, rho);
}

struct MeasureReport {
  std::string measure_name;
  double value;
  BlockPartition partition;
};

inline MeasureReport measure_report(MeasureKind m, const BlockPartition& p, const DensityMatrix& rho) {
  return {to_string(m), evaluate(m, p, rho), p};
}

/// Result of a Monte Carlo axiom probe. The counterexample is the state (or
/// mixture, for convexity) achieving the worst violation, kept only when
/// that violation exceeds the contract.
struct ProbeReport {
  std::string probe;
  std::size_t trials = 0;
  double worst_violation = 0.0;
  std::optional<ComplexMatrix> counterexample;
};

/// Contract for the C2/C3/C4 probes.
inline constexpr double kProbeContract = 1e-8;

namespace detail {

inline void require_bio(const KrausSet& channel) {
  if (!is_bio_semantic(channel))
    throw std::invalid_argument("monotonicity probe requires a block-incoherent channel");
}

inline void track(ProbeReport& r, double violation, const ComplexMatrix& state) {
  if (violation > r.worst_violation) {
    r.worst_violation = violation;
    if (violation > kProbeContract) r.counterexample = state;
  }
}

/// Per-trial generator seeded with seed + trial, so results do not depend
/// on trial scheduling.
inline Rng trial_rng(std::uint64_t seed, std::size_t trial) { return Rng(seed + trial); }

}  // namespace detail

/// max(0, max_rho C(Lambda rho) - C(rho)) over Hilbert-Schmidt random states.
inline ProbeReport monotonicity_probe(MeasureKind m, const BlockPartition& p, const KrausSet& channel,
                                      std::size_t trials, std::uint64_t seed) {
  detail::require_bio(channel.with_partition(p));
  ProbeReport r{"monotonicity:" + to_string(m), trials, 0.0, std::nullopt};
  const auto d = static_cast<Eigen::Index>(p.total());
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = detail::trial_rng(seed, t);
    DensityMatrix rho = DensityMatrix::random(d, rng);
    DensityMatrix out = apply_channel(channel, rho);
    detail::track(r, evaluate(m, p, out) - evaluate(m, p, rho), rho.matrix());
  }
  return r;
}

/// max(0, sum_n q_n C(sigma_n) - C(rho)) over random states, with branches
/// from apply_selective.
inline ProbeReport strong_monotonicity_probe(MeasureKind m, const BlockPartition& p, const KrausSet& channel,
                                             std::size_t trials, std::uint64_t seed) {
  detail::require_bio(channel.with_partition(p));
  ProbeReport r{"strong-monotonicity:" + to_string(m), trials, 0.0, std::nullopt};
  const auto d = static_cast<Eigen::Index>(p.total());
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = detail::trial_rng(seed, t);
    DensityMatrix rho = DensityMatrix::random(d, rng);
    double avg = 0.0;
    for (const auto& branch : apply_selective(channel, rho)) avg += branch.probability * evaluate(m, p, branch.state);
    detail::track(r, avg - evaluate(m, p, rho), rho.matrix());
  }
  return r;
}

/// max(0, C(sum p_i rho_i) - sum p_i C(rho_i)) over mixtures of 2 to 4 random
/// states with flat Dirichlet weights.
inline ProbeReport convexity_probe(MeasureKind m, const BlockPartition& p, std::size_t trials, std::uint64_t seed) {
  ProbeReport r{"convexity:" + to_string(m), trials, 0.0, std::nullopt};
  const auto d = static_cast<Eigen::Index>(p.total());
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = detail::trial_rng(seed, t);
    std::uniform_int_distribution<std::size_t> pick_n(2, 4);
    std::gamma_distribution<double> gamma(1.0, 1.0);
    const std::size_t n = pick_n(rng);
    std::vector<double> w(n);
    double total = 0.0;
    for (auto& x : w) total += (x = gamma(rng));
    ComplexMatrix mix = ComplexMatrix::Zero(d, d);
    double avg = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      DensityMatrix rho = DensityMatrix::random(d, rng);
      w[i] /= total;
      mix += w[i] * rho.matrix();
      avg += w[i] * evaluate(m, p, rho);
    }
    detail::track(r, evaluate(m, p, DensityMatrix(mix)) - avg, mix);
  }
  return r;
}

}  // namespace blockcoh
