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

#include <benchmark/benchmark.h>

#include <random>

#include "bogofock/hermite.hpp"
#include "bogofock/husimi.hpp"
#include "bogofock/oracle.hpp"

namespace bogofock {
namespace {

struct Inputs {
  CVector mu;
  CMatrix w;
};

Inputs random_inputs(std::size_t m) {
  const auto h = gaussian_qfunction(random_transform(m / 2, 0.8, 1.0, 1));
  return {h.mu, h.v_matrix};
}

MultiIndex spread(std::size_t m, int total) {
  std::vector<int> v(m, total / static_cast<int>(m));
  for (int j = 0; j < total % static_cast<int>(m); ++j) ++v[static_cast<std::size_t>(j)];
  return MultiIndex(v);
}

void BM_MhpRecursion(benchmark::State& state) {
  const auto in = random_inputs(4);
  const MultiIndex v = spread(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mhp_recursion(v, in.mu, in.w));
}
BENCHMARK(BM_MhpRecursion)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_MhpDirect(benchmark::State& state) {
  const auto in = random_inputs(4);
  const MultiIndex v = spread(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mhp_direct(v, in.mu, in.w));
}
BENCHMARK(BM_MhpDirect)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_ElementBlock(benchmark::State& state) {
  const auto h = gaussian_qfunction(random_transform(2, 0.8, 1.0, 2));
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(element_block(h, MultiIndex{bound, bound}, MultiIndex{2, 2}));
  }
}
BENCHMARK(BM_ElementBlock)->Arg(8)->Arg(16)->Arg(32);

void BM_OracleColumns(benchmark::State& state) {
  const auto ops = random_ops(2, 0.8, 1.0, 3);
  const auto cutoff = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transform_columns(ops, 2, cutoff, 6));
}
BENCHMARK(BM_OracleColumns)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace bogofock

BENCHMARK_MAIN();
