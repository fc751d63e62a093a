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

#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace blockcoh {

/// Ordered split d = d_1 + ... + d_k of the computational basis into
/// contiguous blocks. Block l covers indices [offset(l), offset(l) + size(l)).
class BlockPartition {
 public:
  BlockPartition() = default;

  explicit BlockPartition(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("partition must have at least one block");
    offsets_.reserve(dims_.size());
    std::size_t acc = 0;
    for (std::size_t d : dims_) {
      if (d == 0) throw std::invalid_argument("partition blocks must be positive");
      offsets_.push_back(acc);
      acc += d;
    }
    total_ = acc;
    block_of_.resize(total_);
    for (std::size_t l = 0; l < dims_.size(); ++l)
      for (std::size_t i = 0; i < dims_[l]; ++i) block_of_[offsets_[l] + i] = l;
  }

  /// Partition (1, 1, ..., 1): the rank-one (standard coherence) case.
  static BlockPartition rank_one(std::size_t d) { return BlockPartition(std::vector<std::size_t>(d, 1)); }

  /// Single block (d): every state is free.
  static BlockPartition trivial(std::size_t d) { return BlockPartition({d}); }

  std::size_t total() const noexcept { return total_; }
  std::size_t blocks() const noexcept { return dims_.size(); }
  std::size_t size(std::size_t l) const { return dims_.at(l); }
  std::size_t offset(std::size_t l) const { return offsets_.at(l); }
  std::span<const std::size_t> dims() const noexcept { return dims_; }
  std::span<const std::size_t> offsets() const noexcept { return offsets_; }

  bool is_rank_one() const noexcept { return dims_.size() == total_; }

  /// Block number containing a computational basis index.
  std::size_t block_of_index(std::size_t basis_index) const {
    if (basis_index >= total_)
      throw std::out_of_range("basis index " + std::to_string(basis_index) +
                              " out of range for dimension " + std::to_string(total_));
    return block_of_[basis_index];
  }

  bool same_block(std::size_t x, std::size_t y) const { return block_of_index(x) == block_of_index(y); }

  std::string to_string() const {
    std::string s;
    for (std::size_t l = 0; l < dims_.size(); ++l) {
      if (l) s += ',';
      s += std::to_string(dims_[l]);
    }
    return s;
  }

  friend bool operator==(const BlockPartition& a, const BlockPartition& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> block_of_;
  std::size_t total_ = 0;
};

inline std::size_t block_of_index(const BlockPartition& p, std::size_t basis_index) {
  return p.block_of_index(basis_index);
}

/// Parses "2,3" into a partition.
inline BlockPartition parse_partition(const std::string& text) {
  std::vector<std::size_t> dims;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    std::string item = text.substr(pos, next - pos);
    if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos)
      throw std::invalid_argument("malformed partition '" + text + "'");
    dims.push_back(std::stoul(item));
    pos = next + 1;
  }
  return BlockPartition(std::move(dims));
}

/// All ordered partitions (compositions) of d.
inline std::vector<BlockPartition> compositions(std::size_t d) {
  std::vector<BlockPartition> out;
  if (d == 0) return out;
  // Bit b of mask set means a cut after position b.
  for (std::size_t mask = 0; mask < (std::size_t{1} << (d - 1)); ++mask) {
    std::vector<std::size_t> dims;
    std::size_t run = 1;
    for (std::size_t b = 0; b + 1 < d; ++b) {
      if (mask & (std::size_t{1} << b)) {
        dims.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    dims.push_back(run);
    out.emplace_back(std::move(dims));
  }
  return out;
}

}  // namespace blockcoh
