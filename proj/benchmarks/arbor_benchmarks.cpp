/*
 * Copyright 2026 The Arbor Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <random>

#include "arbor/adjunction.hpp"
#include "arbor/decide.hpp"
#include "arbor/ef_comonad.hpp"
#include "arbor/environment.hpp"
#include "arbor/extension.hpp"
#include "arbor/homomorphism.hpp"

namespace {

using namespace arbor;

Structure random_digraph(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(density);
  StructureBuilder b(Vocabulary{{"R", 2}});
  for (std::size_t i = 0; i < n; ++i) b.add("v" + std::to_string(100 + i));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (edge(rng)) b.relate(0, {x, y});
    }
  }
  return std::move(b).build();
}

void BM_FindHomomorphism(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Structure a = random_digraph(n, 0.3, 1);
  const Structure b = random_digraph(n, 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(find_homomorphism(a, b));
}
BENCHMARK(BM_FindHomomorphism)->Arg(6)->Arg(10)->Arg(14);

void BM_EFBuild(benchmark::State& state) {
  const Structure a = random_digraph(4, 0.4, 3);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ef_adjoint_R(a, k));
}
BENCHMARK(BM_EFBuild)->Arg(2)->Arg(3)->Arg(4);

void BM_DecideEquiv(benchmark::State& state) {
  const Structure a = random_digraph(3, 0.4, 4);
  const int k = static_cast<int>(state.range(0));
  const Structure g = ef_adjoint_G(a, k).g;
  for (auto _ : state) benchmark::DoNotOptimize(decide_equiv(a, g, k));
}
BENCHMARK(BM_DecideEquiv)->Arg(2)->Arg(3);

void BM_ExtendOnce(benchmark::State& state) {
  const Structure a = random_digraph(3, 0.4, 5);
  const EnvironmentFamily env = default_environment(a.vocabulary(), 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(extend_once(a, 2, env));
}
BENCHMARK(BM_ExtendOnce)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
