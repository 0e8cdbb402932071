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
#include <functional>

namespace bogofock {

/// Worker count used when a caller passes 0 threads. Reads the
/// BOGOFOCK_THREADS environment variable (a positive integer cap) and falls
/// back to std::thread::hardware_concurrency().
std::size_t default_worker_count();

/// Runs body(i) for i in [begin, end) on up to `threads` workers using
/// contiguous static chunks. `body` must only write to locations owned by i.
void parallel_for(std::size_t begin, std::size_t end, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace bogofock
