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

#include "blockcoh/partition.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace blockcoh {

using BigInt = boost::multiprecision::cpp_int;

enum class BoundClass { bio, sbio };

inline std::string to_string(BoundClass c) { return c == BoundClass::bio ? "bio" : "sbio"; }

/// Upper bound on the number of Kraus operators a BIO/SBIO decomposition
/// needs for a given partition. per_level[i] is C_{i+1} (0-based position i).
struct BoundReport {
  BlockPartition partition;
  BoundClass bound_class;
  std::vector<BigInt> per_level;
  BigInt total;
};

/// Largest block count accepted by the SBIO injective-tuple enumeration.
inline constexpr std::size_t kMaxSbioBlocks = 8;

namespace detail {

/// 2^(a*b) - 1, the number of nonempty supports of an a x b block.
inline BigInt nonempty_supports(std::size_t a, std::size_t b) {
  BigInt v = 1;
  v <<= static_cast<unsigned>(a * b);
  return v - 1;
}

/// Sum over injective assignments of row blocks to column blocks
/// first..k-1 of the product of nonempty_supports(d_row, d_col).
inline BigInt injective_tuple_sum(std::span<const std::size_t> dims, std::size_t column,
                                  std::vector<bool>& used) {
  if (column == dims.size()) return 1;
  BigInt sum = 0;
  for (std::size_t row = 0; row < dims.size(); ++row) {
    if (used[row]) continue;
    used[row] = true;
    sum += nonempty_supports(dims[row], dims[column]) * injective_tuple_sum(dims, column + 1, used);
    used[row] = false;
  }
  return sum;
}

}  // namespace detail

/// C_i = [sum_j (2^{d_j d_i} - 1)] * C_{i+1}, with C_{k+1} = 1.
inline BoundReport bio_bound(const BlockPartition& p) {
  const auto dims = p.dims();
  const std::size_t k = dims.size();
  BoundReport r{p, BoundClass::bio, std::vector<BigInt>(k), 0};
  BigInt next = 1;
  for (std::size_t i = k; i-- > 0;) {
    BigInt column_choices = 0;
    for (std::size_t j = 0; j < k; ++j) column_choices += detail::nonempty_supports(dims[j], dims[i]);
    r.per_level[i] = column_choices * next;
    next = r.per_level[i];
  }
  for (const auto& c : r.per_level) r.total += c;
  return r;
}

/// C_p = sum over injective (i_p, ..., i_k) of prod_l (2^{d_{i_l} d_l} - 1).
inline BoundReport sbio_bound(const BlockPartition& p, std::size_t max_blocks = kMaxSbioBlocks) {
  const auto dims = p.dims();
  const std::size_t k = dims.size();
  if (k > max_blocks)
    throw std::invalid_argument("sbio_bound: " + std::to_string(k) + " blocks exceeds enumeration cap of " +
                                std::to_string(max_blocks));
  BoundReport r{p, BoundClass::sbio, std::vector<BigInt>(k), 0};
  std::vector<bool> used(k, false);
  for (std::size_t start = 0; start < k; ++start) r.per_level[start] = detail::injective_tuple_sum(dims, start, used);
  for (const auto& c : r.per_level) r.total += c;
  return r;
}

inline BoundReport kraus_bound(BoundClass c, const BlockPartition& p) {
  return c == BoundClass::bio ? bio_bound(p) : sbio_bound(p);
}

/// d (d^d - 1) / (d - 1): the rank-one BIO count.
inline BigInt rank_one_bio_closed_form(std::size_t d) {
  BigInt dd = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(d));
  return BigInt(d) * (dd - 1) / (d - 1);
}

/// sum_{k=1}^{d} d! / (k-1)!: the rank-one SBIO count.
inline BigInt rank_one_sbio_closed_form(std::size_t d) {
  BigInt sum = 0;
  for (std::size_t k = 1; k <= d; ++k) {
    BigInt term = 1;
    for (std::size_t f = k; f <= d; ++f) term *= f;  // d!/(k-1)!
    sum += term;
  }
  return sum;
}

/// Both recurrences on partition (1, ..., 1) agree with the closed forms.
inline bool rank_one_reduction_check(std::size_t d) {
  if (d < 2 || d > 8) throw std::invalid_argument("rank_one_reduction_check: d must be in [2, 8]");
  const auto p = BlockPartition::rank_one(d);
  return bio_bound(p).total == rank_one_bio_closed_form(d) && sbio_bound(p).total == rank_one_sbio_closed_form(d);
}

}  // namespace blockcoh
