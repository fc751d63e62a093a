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

#include "blockcoh/kraus.hpp"
#include "blockcoh/linalg.hpp"
#include "blockcoh/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <numbers>
#include <vector>

namespace blockcoh {

/// Ingredients of a physically block-incoherent operation on system A:
///  - an ancilla B with block supports S_k and amplitudes b_s; the ancilla
///    state is sum_k |beta_k><beta_k| with beta_k = sum_{s in S_k} b_s |s>;
///  - a joint unitary e^{i theta_{xs}} |pi(x, s)><x, s|, pi a permutation of
///    the product basis;
///  - a block projective measurement on B.
///
/// Product basis index of (x, s) is x * d_B + s.
struct PbioSpec {
  BlockPartition system_partition;
  BlockPartition ancilla_partition;
  ComplexVector ancilla_amplitudes;
  std::vector<std::size_t> permutation;
  std::vector<double> phases;

  std::size_t system_dim() const { return system_partition.total(); }
  std::size_t ancilla_dim() const { return ancilla_partition.total(); }
  std::size_t joint_index(std::size_t x, std::size_t s) const { return x * ancilla_dim() + s; }
  std::size_t image_system(std::size_t x, std::size_t s) const { return permutation[joint_index(x, s)] / ancilla_dim(); }
  std::size_t image_ancilla(std::size_t x, std::size_t s) const { return permutation[joint_index(x, s)] % ancilla_dim(); }
};

/// Throws std::invalid_argument unless the spec is admissible: amplitudes
/// normalized to 1e-12, permutation bijective, and every product block
/// A_a x S_k mapped onto a single product block (the joint unitary is itself
/// block-incoherent). With rank-one partitions the last condition is vacuous.
inline void validate(const PbioSpec& spec) {
  const std::size_t da = spec.system_dim();
  const std::size_t db = spec.ancilla_dim();
  const std::size_t n = da * db;
  if (static_cast<std::size_t>(spec.ancilla_amplitudes.size()) != db)
    throw std::invalid_argument("ancilla amplitude count does not match ancilla dimension");
  if (std::abs(spec.ancilla_amplitudes.squaredNorm() - 1.0) > 1e-12)
    throw std::invalid_argument("ancilla amplitudes are not normalized");
  if (spec.permutation.size() != n) throw std::invalid_argument("permutation size must equal d_A * d_B");
  if (spec.phases.size() != n) throw std::invalid_argument("phase count must equal d_A * d_B");
  std::vector<bool> hit(n, false);
  for (std::size_t v : spec.permutation) {
    if (v >= n || hit[v]) throw std::invalid_argument("permutation is not a bijection");
    hit[v] = true;
  }
  const auto& pa = spec.system_partition;
  const auto& pb = spec.ancilla_partition;
  for (std::size_t a = 0; a < pa.blocks(); ++a)
    for (std::size_t k = 0; k < pb.blocks(); ++k) {
      std::size_t ta = 0, tk = 0;
      bool first = true;
      for (std::size_t x = pa.offset(a); x < pa.offset(a) + pa.size(a); ++x)
        for (std::size_t s = pb.offset(k); s < pb.offset(k) + pb.size(k); ++s) {
          std::size_t ia = pa.block_of_index(spec.image_system(x, s));
          std::size_t ik = pb.block_of_index(spec.image_ancilla(x, s));
          if (first) {
            ta = ia;
            tk = ik;
            first = false;
          } else if (ia != ta || ik != tk) {
            throw std::invalid_argument("permutation does not map product blocks onto product blocks");
          }
        }
      if (pa.size(a) * pb.size(k) != pa.size(ta) * pb.size(tk))
        throw std::invalid_argument("permutation maps a product block onto one of different size");
    }
}

/// One term b_s U_{sj} P_{sj} of a constructed Kraus operator. U is a full
/// unitary (a phased permutation), P the diagonal projector onto the x with
/// pi_2(x, s) = j.
struct PbioTerm {
  std::size_t ancilla_index;
  Complex amplitude;
  ComplexMatrix unitary;
  ComplexMatrix projector;
};

/// Kraus operator for ancilla block k and ancilla outcome j, with its terms.
struct PbioOperator {
  std::size_t ancilla_block;
  std::size_t outcome;
  ComplexMatrix op;
  std::vector<PbioTerm> terms;
};

namespace detail {

/// Phased partial permutation for a fixed (s, j), completed to a unitary by
/// pairing leftover columns with leftover rows in ascending order.
inline PbioTerm pbio_term(const PbioSpec& spec, std::size_t s, std::size_t j) {
  const auto da = static_cast<Eigen::Index>(spec.system_dim());
  ComplexMatrix u = ComplexMatrix::Zero(da, da);
  ComplexMatrix proj = ComplexMatrix::Zero(da, da);
  std::vector<bool> row_used(da, false), col_used(da, false);
  for (Eigen::Index x = 0; x < da; ++x) {
    auto xs = static_cast<std::size_t>(x);
    if (spec.image_ancilla(xs, s) != j) continue;
    auto row = static_cast<Eigen::Index>(spec.image_system(xs, s));
    u(row, x) = std::polar(1.0, spec.phases[spec.joint_index(xs, s)]);
    proj(x, x) = 1.0;
    row_used[row] = col_used[x] = true;
  }
  Eigen::Index next_row = 0;
  for (Eigen::Index x = 0; x < da; ++x) {
    if (col_used[x]) continue;
    while (row_used[next_row]) ++next_row;
    u(next_row, x) = 1.0;
    row_used[next_row] = true;
  }
  return {s, spec.ancilla_amplitudes(static_cast<Eigen::Index>(s)), std::move(u), std::move(proj)};
}

}  // namespace detail

/// K_{k,j} = sum_{s in S_k} b_s U_{sj} P_{sj} for every ancilla block k and
/// every ancilla outcome j. Operators that vanish identically are omitted.
inline std::vector<PbioOperator> pbio_operators(const PbioSpec& spec) {
  validate(spec);
  const auto da = static_cast<Eigen::Index>(spec.system_dim());
  const auto& pb = spec.ancilla_partition;
  std::vector<PbioOperator> out;
  for (std::size_t k = 0; k < pb.blocks(); ++k)
    for (std::size_t j = 0; j < spec.ancilla_dim(); ++j) {
      PbioOperator op{k, j, ComplexMatrix::Zero(da, da), {}};
      for (std::size_t s = pb.offset(k); s < pb.offset(k) + pb.size(k); ++s) {
        PbioTerm t = detail::pbio_term(spec, s, j);
        op.op += t.amplitude * t.unitary * t.projector;
        op.terms.push_back(std::move(t));
      }
      if (max_abs(op.op) > 0.0) out.push_back(std::move(op));
    }
  return out;
}

inline KrausSet build_pbio(const PbioSpec& spec) {
  std::vector<ComplexMatrix> ops;
  for (auto& op : pbio_operators(spec)) ops.push_back(std::move(op.op));
  return KrausSet(spec.system_partition, std::move(ops));
}

/// Random admissible spec: ancilla of dimension 1..3 with a random
/// composition, product blocks permuted among blocks of equal size, random
/// bijections inside blocks, Gaussian amplitudes and uniform phases.
inline PbioSpec random_pbio_spec(const BlockPartition& system, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick_db(1, 3);
  const std::size_t db = pick_db(rng);
  auto comps = compositions(db);
  std::uniform_int_distribution<std::size_t> pick_comp(0, comps.size() - 1);
  PbioSpec spec{system, comps[pick_comp(rng)], {}, {}, {}};
  const auto& pa = spec.system_partition;
  const auto& pb = spec.ancilla_partition;

  ComplexVector amps(static_cast<Eigen::Index>(db));
  std::normal_distribution<double> n01;
  for (Eigen::Index s = 0; s < amps.size(); ++s) {
    double re = n01(rng);
    double im = n01(rng);
    amps(s) = Complex(re, im);
  }
  spec.ancilla_amplitudes = amps / amps.norm();

  struct ProductBlock {
    std::vector<std::size_t> members;  // joint indices, ascending
  };
  std::map<std::size_t, std::vector<ProductBlock>> by_size;
  for (std::size_t a = 0; a < pa.blocks(); ++a)
    for (std::size_t k = 0; k < pb.blocks(); ++k) {
      ProductBlock blk;
      for (std::size_t x = pa.offset(a); x < pa.offset(a) + pa.size(a); ++x)
        for (std::size_t s = pb.offset(k); s < pb.offset(k) + pb.size(k); ++s)
          blk.members.push_back(spec.joint_index(x, s));
      by_size[blk.members.size()].push_back(std::move(blk));
    }
  spec.permutation.assign(pa.total() * db, 0);
  for (auto& [size, group] : by_size) {
    std::vector<std::size_t> target(group.size());
    std::iota(target.begin(), target.end(), std::size_t{0});
    std::shuffle(target.begin(), target.end(), rng);
    for (std::size_t g = 0; g < group.size(); ++g) {
      std::vector<std::size_t> dst = group[target[g]].members;
      std::shuffle(dst.begin(), dst.end(), rng);
      for (std::size_t m = 0; m < size; ++m) spec.permutation[group[g].members[m]] = dst[m];
    }
  }
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  spec.phases.resize(spec.permutation.size());
  for (auto& th : spec.phases) th = angle(rng);
  return spec;
}

}  // namespace blockcoh
