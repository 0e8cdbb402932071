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

#include "bogofock/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bogofock/errors.hpp"

namespace bogofock {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw DomainError("MultiIndex entries must be non-negative");
  }
  total_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::zeros(std::size_t size) {
  return MultiIndex(std::vector<int>(size, 0));
}

MultiIndex MultiIndex::unit(std::size_t size, std::size_t position) {
  std::vector<int> v(size, 0);
  v.at(position) = 1;
  return MultiIndex(std::move(v));
}

int MultiIndex::max_entry() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

MultiIndex MultiIndex::concat(const MultiIndex& other) const {
  std::vector<int> v(entries_);
  v.insert(v.end(), other.entries_.begin(), other.entries_.end());
  return MultiIndex(std::move(v));
}

bool MultiIndex::dominated_by(const MultiIndex& bound) const {
  if (bound.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] > bound.entries_[i]) return false;
  }
  return true;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ']';
  return os.str();
}

std::vector<MultiIndex> enumerate_box(const MultiIndex& bound) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(bound.size(), 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t pos = bound.size();
    while (pos > 0) {
      --pos;
      if (cur[pos] < bound[pos]) {
        ++cur[pos];
        std::fill(cur.begin() + static_cast<std::ptrdiff_t>(pos) + 1, cur.end(), 0);
        break;
      }
      if (pos == 0) return out;
    }
    if (bound.size() == 0) return out;
  }
}

namespace {

void fill_simplex(std::vector<int>& cur, std::size_t pos, int remaining,
                  std::vector<MultiIndex>& out) {
  if (pos == cur.size()) {
    out.emplace_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[pos] = e;
    fill_simplex(cur, pos + 1, remaining - e, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> enumerate_simplex(std::size_t size, int max_total) {
  std::vector<MultiIndex> out;
  if (max_total < 0) return out;
  std::vector<int> cur(size, 0);
  fill_simplex(cur, 0, max_total, out);
  std::stable_sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return a.total() < b.total();
  });
  return out;
}

}  // namespace bogofock
