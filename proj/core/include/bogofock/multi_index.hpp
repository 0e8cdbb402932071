// Copyright 2026 The bogofock Authors
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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bogofock {

/// Vector of non-negative integers used for Fock occupations and for
/// derivative orders. The total (sum of entries) is cached.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  static MultiIndex zeros(std::size_t size);
  static MultiIndex unit(std::size_t size, std::size_t position);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int total() const { return total_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const { return entries_; }

  /// Entry-wise maximum; sizes must match.
  int max_entry() const;

  /// Concatenation (this, other), used to build the Fock (n, m[, k]) index.
  MultiIndex concat(const MultiIndex& other) const;

  /// True when every entry is <= the corresponding entry of `bound`.
  bool dominated_by(const MultiIndex& bound) const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> entries_;
  int total_ = 0;
};

/// All multi-indices u with 0 <= u <= bound entry-wise, in row-major order
/// (last entry fastest).
std::vector<MultiIndex> enumerate_box(const MultiIndex& bound);

/// All multi-indices of the given size whose total is <= max_total, ordered
/// by total and then lexicographically.
std::vector<MultiIndex> enumerate_simplex(std::size_t size, int max_total);

}  // namespace bogofock
