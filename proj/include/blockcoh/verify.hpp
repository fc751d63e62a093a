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

// Named property suites behind `blockcoh verify`. Each suite sweeps
// generated instances and reports the worst deviation per property.

#include "blockcoh/classify.hpp"
#include "blockcoh/counting.hpp"
#include "blockcoh/generate.hpp"
#include "blockcoh/measures.hpp"
#include "blockcoh/naimark.hpp"
#include "blockcoh/pbio.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace blockcoh::verify {

struct Property {
  std::string name;
  bool pass = true;
  double worst_deviation = 0.0;
  double threshold = 0.0;
  std::size_t instances = 0;
  /// Reported for information; never fails the suite.
  bool informational = false;
};

struct SuiteConfig {
  BlockPartition partition{{2, 3}};
  std::uint64_t seed = 42;
  std::size_t trials = 200;
  double tolerance = tol::kZero;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<Property> properties;

  bool pass() const {
    return std::all_of(properties.begin(), properties.end(), [](const Property& p) { return p.informational || p.pass; });
  }
};

/// splitmix64 over (seed, stream, index): independent per-instance seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t z = seed ^ (stream * 0x9E3779B97F4A7C15ull) ^ (index * 0xD1B54A32D192ED03ull);
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Element-wise check on the raw matrix, independent of block patterns:
/// at most one entry above threshold per column (and per row when strict).
inline bool elementwise_incoherent(const ComplexMatrix& k, bool strict, double tolerance = tol::kZero) {
  const double thr = tolerance * (1.0 + max_abs(k));
  for (Eigen::Index c = 0; c < k.cols(); ++c) {
    int n = 0;
    for (Eigen::Index r = 0; r < k.rows(); ++r) n += std::abs(k(r, c)) > thr;
    if (n > 1) return false;
  }
  if (!strict) return true;
  for (Eigen::Index r = 0; r < k.rows(); ++r) {
    int n = 0;
    for (Eigen::Index c = 0; c < k.cols(); ++c) n += std::abs(k(r, c)) > thr;
    if (n > 1) return false;
  }
  return true;
}

inline bool elementwise_incoherent(const KrausSet& ks, bool strict, double tolerance = tol::kZero) {
  return std::all_of(ks.operators().begin(), ks.operators().end(),
                     [&](const ComplexMatrix& k) { return elementwise_incoherent(k, strict, tolerance); });
}

/// Mixed set of random Kraus sets: legal and illegal patterns plus dense
/// unitaries, so both classifier outcomes occur.
inline KrausSet random_mixed_kraus_set(const BlockPartition& p, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_int_distribution<int> pick(0, 4);
  switch (pick(rng)) {
    case 0: return random_from_patterns(PatternKind::bio, p, 4, rng);
    case 1: return random_from_patterns(PatternKind::sbio, p, 4, rng);
    case 2: return random_from_patterns(PatternKind::arbitrary, p, 4, rng);
    case 3:
      if (p.blocks() > 1) return random_pattern_violating(p, rng);
      [[fallthrough]];
    default: return KrausSet(p, {haar_unitary(static_cast<Eigen::Index>(p.total()), rng)});
  }
}

/// A set that is BIO but not SBIO: some operator has two nonzero blocks in
/// one row block. Requires at least two blocks.
inline KrausSet random_bio_not_sbio(const BlockPartition& p, Rng& rng) {
  if (p.blocks() < 2) throw std::invalid_argument("a single-block partition has no BIO-but-not-SBIO sets");
  for (;;) {
    SupportPattern pat = sample_pattern(PatternKind::bio, p, 2, rng);
    // Force column blocks 0 and 1 of operator 0 into the same row block.
    std::uniform_int_distribution<std::size_t> pick_row(0, p.blocks() - 1);
    std::size_t r = pick_row(rng);
    pat.rows[0][0] = {r};
    pat.rows[0][1] = {r};
    auto ks = realize_pattern(pat, p, rng);
    if (ks && is_bio_structural(*ks) && !is_sbio_structural(*ks)) return *std::move(ks);
  }
}

inline SuiteReport appendix_a(const SuiteConfig& cfg) {
  SuiteReport rep{"appendix-a", cfg, {}};
  const auto& p = cfg.partition;

  Property fwd{"bio_structural_implies_semantic", true, 0.0, 1e-9, 0, false};
  Property mbio{"bio_implies_mbio", true, 0.0, cfg.tolerance, 0, false};
  Property free{"bio_preserves_block_incoherent_states", true, 0.0, 1e-9, 0, false};
  Property selective{"bio_selective_branches_stay_free", true, 0.0, 1e-9, 0, false};
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    KrausSet ks = gen_random(ChannelClass::bio, p, derive_seed(cfg.seed, 1, i));
    auto chk = bio_semantic_check(ks, cfg.tolerance);
    fwd.worst_deviation = std::max(fwd.worst_deviation, chk.max_deviation);
    fwd.pass = fwd.pass && is_bio_structural(ks, cfg.tolerance) && chk.holds && chk.max_deviation <= fwd.threshold;
    ++fwd.instances;

    auto m = mbio_check(ks, cfg.tolerance);
    mbio.worst_deviation = std::max(mbio.worst_deviation, m.max_deviation);
    mbio.pass = mbio.pass && m.holds;
    ++mbio.instances;

    Rng rng(derive_seed(cfg.seed, 2, i));
    for (int s = 0; s < 10; ++s) {
      DensityMatrix rho = random_block_incoherent_state(p, rng);
      double dev = off_block_magnitude(p, apply_channel(ks, rho.matrix()));
      free.worst_deviation = std::max(free.worst_deviation, dev);
      free.pass = free.pass && dev <= free.threshold;
      ++free.instances;
      for (const auto& branch : apply_selective(ks, rho)) {
        if (branch.probability <= 1e-6) continue;
        double bdev = off_block_magnitude(p, branch.state.matrix());
        selective.worst_deviation = std::max(selective.worst_deviation, bdev);
        selective.pass = selective.pass && bdev <= selective.threshold;
        ++selective.instances;
      }
    }
  }

  Property violating{"pattern_violation_fails_semantic", true, 0.0, cfg.tolerance, 0, false};
  Property converse{"semantic_bio_implies_structural", true, 0.0, 0.0, 0, false};
  if (p.blocks() > 1) {
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      Rng rng(derive_seed(cfg.seed, 3, i));
      KrausSet bad = random_pattern_violating(p, rng);
      auto chk = bio_semantic_check(bad, cfg.tolerance);
      violating.pass = violating.pass && !chk.holds;
      violating.worst_deviation = std::max(violating.worst_deviation, chk.holds ? 1.0 : 0.0);
      ++violating.instances;
    }
  }
  // Converse search: any semantically BIO set must show the structural
  // pattern. worst_deviation counts counterexamples.
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    KrausSet ks = random_mixed_kraus_set(p, derive_seed(cfg.seed, 4, i));
    if (is_bio_semantic(ks, cfg.tolerance) && !is_bio_structural(ks, cfg.tolerance)) {
      converse.pass = false;
      converse.worst_deviation += 1.0;
    }
    ++converse.instances;
  }

  rep.properties = {fwd, violating, converse, mbio, free, selective};
  return rep;
}

inline SuiteReport appendix_b(const SuiteConfig& cfg) {
  SuiteReport rep{"appendix-b", cfg, {}};
  const auto& p = cfg.partition;

  Property fwd{"sbio_structural_implies_semantic", true, 0.0, 1e-9, 0, false};
  Property commute{"sbio_commutes_with_dephasing", true, 0.0, 1e-9, 0, false};
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    KrausSet ks = gen_random(ChannelClass::sbio, p, derive_seed(cfg.seed, 11, i));
    auto chk = sbio_semantic_check(ks, cfg.tolerance);
    fwd.worst_deviation = std::max(fwd.worst_deviation, chk.max_deviation);
    fwd.pass = fwd.pass && is_sbio_structural(ks, cfg.tolerance) && chk.holds && chk.max_deviation <= fwd.threshold;
    ++fwd.instances;
    Rng rng(derive_seed(cfg.seed, 12, i));
    for (int s = 0; s < 20; ++s) {
      double dev = sbio_commutation_deviation(ks, random_hs_state(static_cast<Eigen::Index>(p.total()), rng));
      commute.worst_deviation = std::max(commute.worst_deviation, dev);
      commute.pass = commute.pass && dev <= commute.threshold;
      ++commute.instances;
    }
  }

  Property row_violation{"row_violation_fails_semantic", true, 0.0, cfg.tolerance, 0, false};
  Property col_violation{"column_violation_fails_semantic", true, 0.0, cfg.tolerance, 0, false};
  if (p.blocks() > 1) {
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      Rng rng(derive_seed(cfg.seed, 13, i));
      KrausSet ks = random_bio_not_sbio(p, rng);
      bool holds = is_sbio_semantic(ks, cfg.tolerance);
      row_violation.pass = row_violation.pass && !holds && is_bio_semantic(ks, cfg.tolerance);
      ++row_violation.instances;
      KrausSet bad = random_pattern_violating(p, rng);
      col_violation.pass = col_violation.pass && !is_sbio_semantic(bad, cfg.tolerance);
      ++col_violation.instances;
    }
  }
  Property converse{"semantic_sbio_implies_structural", true, 0.0, 0.0, 0, false};
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    KrausSet ks = random_mixed_kraus_set(p, derive_seed(cfg.seed, 14, i));
    if (is_sbio_semantic(ks, cfg.tolerance) && !is_sbio_structural(ks, cfg.tolerance)) {
      converse.pass = false;
      converse.worst_deviation += 1.0;
    }
    ++converse.instances;
  }
  rep.properties = {fwd, commute, row_violation, col_violation, converse};
  return rep;
}

inline SuiteReport lemmas(const SuiteConfig& cfg) {
  SuiteReport rep{"lemmas", cfg, {}};
  Property counts{"rank_one_bound_closed_forms_d2_to_5", true, 0.0, 0.0, 0, false};
  for (std::size_t d = 2; d <= 5; ++d) {
    counts.pass = counts.pass && rank_one_reduction_check(d);
    ++counts.instances;
  }
  Property bio{"rank_one_bio_matches_elementwise", true, 0.0, 0.0, 0, false};
  Property sbio{"rank_one_sbio_matches_elementwise", true, 0.0, 0.0, 0, false};
  const auto p = BlockPartition::rank_one(3);
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    KrausSet ks = random_mixed_kraus_set(p, derive_seed(cfg.seed, 21, i));
    if (is_bio_structural(ks, cfg.tolerance) != elementwise_incoherent(ks, false, cfg.tolerance)) {
      bio.pass = false;
      bio.worst_deviation += 1.0;
    }
    if (is_sbio_structural(ks, cfg.tolerance) != elementwise_incoherent(ks, true, cfg.tolerance)) {
      sbio.pass = false;
      sbio.worst_deviation += 1.0;
    }
    ++bio.instances;
    ++sbio.instances;
  }
  rep.properties = {counts, bio, sbio};
  return rep;
}

inline SuiteReport inclusion(const SuiteConfig& cfg) {
  SuiteReport rep{"inclusion", cfg, {}};
  const auto& p = cfg.partition;
  Property pbio{"pbio_is_sbio", true, 0.0, 0.0, 0, false};
  Property sbio{"sbio_is_bio", true, 0.0, 0.0, 0, false};
  Property bio{"bio_is_mbio", true, 0.0, 0.0, 0, false};
  Property cptp{"generated_sets_are_cptp", true, 0.0, tol::kCptp, 0, false};
  auto note_cptp = [&](const KrausSet& ks) {
    double dev = completeness_deviation(ks);
    cptp.worst_deviation = std::max(cptp.worst_deviation, dev);
    cptp.pass = cptp.pass && dev <= cptp.threshold;
    ++cptp.instances;
  };
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    KrausSet a = gen_random(ChannelClass::pbio, p, derive_seed(cfg.seed, 31, i));
    KrausSet b = gen_random(ChannelClass::sbio, p, derive_seed(cfg.seed, 32, i));
    KrausSet c = gen_random(ChannelClass::bio, p, derive_seed(cfg.seed, 33, i));
    if (!is_sbio_structural(a, cfg.tolerance)) { pbio.pass = false; pbio.worst_deviation += 1; }
    if (!is_bio_structural(b, cfg.tolerance)) { sbio.pass = false; sbio.worst_deviation += 1; }
    if (!is_mbio(c, cfg.tolerance)) { bio.pass = false; bio.worst_deviation += 1; }
    ++pbio.instances;
    ++sbio.instances;
    ++bio.instances;
    note_cptp(a);
    note_cptp(b);
    note_cptp(c);
  }
  rep.properties = {pbio, sbio, bio, cptp};
  return rep;
}

inline SuiteReport naimark(const SuiteConfig& cfg) {
  SuiteReport rep{"naimark", cfg, {}};
  Property probs{"dilation_reproduces_probabilities", true, 0.0, 1e-10, 0, false};
  Property unitary{"dilation_unitary", true, 0.0, 1e-9, 0, false};
  Property pvm{"pvm_orthogonal_complete_rank_d", true, 0.0, 1e-9, 0, false};
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    Rng rng(derive_seed(cfg.seed, 41, i));
    std::uniform_int_distribution<int> pick(1, 4);
    const Eigen::Index d = pick(rng);
    const auto n = static_cast<std::size_t>(pick(rng));
    Povm povm = random_povm(d, n, rng);
    NaimarkExtension ext = dilate(povm);
    double dev = verify_dilation(povm, ext, 100, derive_seed(cfg.seed, 42, i));
    probs.worst_deviation = std::max(probs.worst_deviation, dev);
    probs.pass = probs.pass && dev <= probs.threshold;
    ++probs.instances;

    const ComplexMatrix& v = ext.global_unitary;
    double udev = std::max(identity_deviation(v.adjoint() * v), identity_deviation(v * v.adjoint()));
    unitary.worst_deviation = std::max(unitary.worst_deviation, udev);
    unitary.pass = unitary.pass && udev <= unitary.threshold;
    ++unitary.instances;

    double pdev = 0.0;
    ComplexMatrix sum = ComplexMatrix::Zero(ext.global_dim(), ext.global_dim());
    bool ranks = true;
    for (std::size_t a = 0; a < n; ++a) {
      sum += ext.pvm[a];
      for (std::size_t b = 0; b < n; ++b) {
        ComplexMatrix expect = a == b ? ext.pvm[a] : ComplexMatrix::Zero(ext.global_dim(), ext.global_dim());
        pdev = std::max(pdev, max_abs(ext.pvm[a] * ext.pvm[b] - expect));
      }
      ranks = ranks && std::lround(ext.pvm[a].trace().real()) == d;
    }
    pdev = std::max(pdev, identity_deviation(sum));
    pvm.worst_deviation = std::max(pvm.worst_deviation, pdev);
    pvm.pass = pvm.pass && ranks && pdev <= pvm.threshold;
    ++pvm.instances;
  }
  Property trine{"trine_probabilities_on_ket0", true, 0.0, 1e-12, 3, false};
  {
    Povm povm = trine_povm();
    NaimarkExtension ext = dilate(povm);
    ComplexVector ket0 = ComplexVector::Unit(2, 0);
    DensityMatrix rho = DensityMatrix::pure(ket0);
    ComplexMatrix global = attach_ancilla(ext, rho.matrix());
    for (std::size_t i = 0; i < 3; ++i) {
      double dev = std::abs(povm.probability(i, rho) - (ext.pvm[i] * global).trace().real());
      trine.worst_deviation = std::max(trine.worst_deviation, dev);
    }
    trine.pass = trine.worst_deviation <= trine.threshold;
  }
  rep.properties = {probs, unitary, pvm, trine};
  return rep;
}

/// States for the two-sided C1 check: Hilbert-Schmidt, dephased, and
/// slightly coherent mixtures of the two.
inline DensityMatrix c1_sample_state(const BlockPartition& p, Rng& rng, std::size_t i) {
  const auto d = static_cast<Eigen::Index>(p.total());
  ComplexMatrix rho = random_hs_state(d, rng);
  switch (i % 3) {
    case 0: return DensityMatrix(rho);
    case 1: return DensityMatrix(block_dephase(p, rho));
    default: return DensityMatrix((1.0 - 1e-3) * block_dephase(p, rho) + 1e-3 * rho);
  }
}

inline SuiteReport measures(const SuiteConfig& cfg) {
  SuiteReport rep{"measures", cfg, {}};
  const auto& p = cfg.partition;
  Property c1{"c1_nonnegative_and_faithful", true, 0.0, 1e-9, 0, false};
  {
    Rng rng(derive_seed(cfg.seed, 51, 0));
    for (std::size_t i = 0; i < std::max<std::size_t>(cfg.trials, 3); ++i) {
      DensityMatrix rho = c1_sample_state(p, rng, i);
      bool free_state = is_block_incoherent(p, rho, 1e-8);
      for (MeasureKind m : {MeasureKind::rel_entropy, MeasureKind::l1}) {
        double v = evaluate(m, p, rho);
        bool ok = v >= 0.0 && ((v <= 1e-9) == free_state);
        if (!ok) {
          c1.pass = false;
          c1.worst_deviation += 1.0;
        }
        ++c1.instances;
      }
    }
  }
  const std::size_t states = std::min<std::size_t>(cfg.trials, 50);
  Property c2{"c2_rel_entropy_monotone_under_bio", true, 0.0, kProbeContract, 0, false};
  Property c3{"c3_rel_entropy_strong_monotone_under_bio", true, 0.0, kProbeContract, 0, false};
  Property c2l1{"c2_l1_monotone_under_bio", true, 0.0, kProbeContract, 0, true};
  Property c3l1{"c3_l1_strong_monotone_under_bio", true, 0.0, kProbeContract, 0, true};
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    KrausSet ks = gen_random(ChannelClass::bio, p, derive_seed(cfg.seed, 52, i));
    const auto seed = derive_seed(cfg.seed, 53, i);
    auto fold = [&](Property& prop, const ProbeReport& r) {
      prop.worst_deviation = std::max(prop.worst_deviation, r.worst_violation);
      prop.pass = prop.pass && r.worst_violation <= prop.threshold;
      prop.instances += r.trials;
    };
    fold(c2, monotonicity_probe(MeasureKind::rel_entropy, p, ks, states, seed));
    fold(c3, strong_monotonicity_probe(MeasureKind::rel_entropy, p, ks, states, seed));
    fold(c2l1, monotonicity_probe(MeasureKind::l1, p, ks, states, seed));
    fold(c3l1, strong_monotonicity_probe(MeasureKind::l1, p, ks, states, seed));
  }
  Property c4{"c4_convexity_both_measures", true, 0.0, kProbeContract, 0, false};
  for (MeasureKind m : {MeasureKind::rel_entropy, MeasureKind::l1}) {
    ProbeReport r = convexity_probe(m, p, cfg.trials, derive_seed(cfg.seed, 54, 0));
    c4.worst_deviation = std::max(c4.worst_deviation, r.worst_violation);
    c4.pass = c4.pass && r.worst_violation <= c4.threshold;
    c4.instances += r.trials;
  }
  rep.properties = {c1, c2, c3, c4, c2l1, c3l1};
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"appendix-a", "appendix-b", "lemmas", "inclusion", "naimark", "measures"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "appendix-a") return appendix_a(cfg);
  if (name == "appendix-b") return appendix_b(cfg);
  if (name == "lemmas") return lemmas(cfg);
  if (name == "inclusion") return inclusion(cfg);
  if (name == "naimark") return naimark(cfg);
  if (name == "measures") return measures(cfg);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace blockcoh::verify
