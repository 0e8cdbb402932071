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

#include <string>
#include <string_view>
#include <vector>

#include "bogofock/bogoliubov.hpp"

namespace bogofock {

/// A transform source: either explicit (S, R, t) or an ordered list of
/// elementary factors.
struct OpList {
  std::size_t n_modes = 0;
  std::vector<ElementaryOp> ops;
};

/// Serializes {"n_modes", "S", "R", "t"} with complex entries as [re, im]
/// pairs and matrices row-major. Doubles are written with round-trip
/// precision so parse_transform(to_json(T)) reproduces T bit for bit.
std::string transform_to_json(const BogoliubovTransform& transform);

/// Parses the format written by transform_to_json(). Throws ParseError on
/// malformed input and ShapeError on inconsistent dimensions. No
/// symplectic check is made.
BogoliubovTransform parse_transform(std::string_view text);

/// Serializes {"n_modes": N, "ops": [{"type": ..., ...}, ...]}.
std::string ops_to_json(const OpList& list);

/// Parses an op list. "n_modes" is optional when at least one op fixes it.
OpList parse_ops(std::string_view text);

}  // namespace bogofock
