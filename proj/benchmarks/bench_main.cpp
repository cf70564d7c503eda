// Copyright 2026 The qlattice Authors
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

#include <map>
#include <random>

#include "qlattice/determinant.hpp"
#include "qlattice/gorenstein.hpp"
#include "qlattice/incidence.hpp"
#include "qlattice/lattice.hpp"

namespace {

using qlattice::Field;

// Incidence matrices keyed by (q, n), built once per process.
const qlattice::IncidencePair& incidence(std::uint32_t q, std::size_t n) {
  static std::map<std::pair<std::uint32_t, std::size_t>, qlattice::IncidencePair> cache;
  auto it = cache.find({q, n});
  if (it == cache.end()) it = cache.emplace(std::pair{q, n}, qlattice::build_incidence(n, Field::of_order(q))).first;
  return it->second;
}

void BM_DetExactIncidence(benchmark::State& state) {
  const auto& pair = incidence(static_cast<std::uint32_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(qlattice::det_exact(pair.A));
  state.counters["N"] = static_cast<double>(pair.size());
}
BENCHMARK(BM_DetExactIncidence)->Args({2, 6})->Args({2, 7})->Args({3, 5})->Args({2, 8})->Args({3, 6})
    ->Unit(benchmark::kMillisecond);

void BM_DetModularIncidence(benchmark::State& state) {
  const auto& pair = incidence(static_cast<std::uint32_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(qlattice::det_modular(pair.A));
  state.counters["N"] = static_cast<double>(pair.size());
}
BENCHMARK(BM_DetModularIncidence)->Args({2, 6})->Args({2, 7})->Args({3, 5})->Args({2, 8})->Args({3, 6})
    ->Unit(benchmark::kMillisecond);

void BM_DetRandom(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  const auto n = static_cast<std::size_t>(state.range(0));
  qlattice::IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  const bool modular = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(modular ? qlattice::det_modular(m) : qlattice::det_exact(m));
}
BENCHMARK(BM_DetRandom)->ArgsProduct({{12, 64, 128}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_MatMulIncidence(benchmark::State& state) {
  const auto& pair = incidence(static_cast<std::uint32_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(qlattice::mat_mul(pair.A, pair.B));
}
BENCHMARK(BM_MatMulIncidence)->Args({2, 8})->Args({3, 6})->Unit(benchmark::kMillisecond);

void BM_BuildIncidence(benchmark::State& state) {
  const auto field = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qlattice::build_incidence(static_cast<std::size_t>(state.range(1)), field));
}
BENCHMARK(BM_BuildIncidence)->Args({2, 8})->Args({3, 6})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_EnumLevel(benchmark::State& state) {
  const auto field = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(qlattice::enum_level(n, n / 2, field));
}
BENCHMARK(BM_EnumLevel)->Args({2, 6})->Args({3, 4})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_BasisSet(benchmark::State& state) {
  const auto field = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(qlattice::build_basis_set(static_cast<std::size_t>(state.range(1)), field));
}
BENCHMARK(BM_BasisSet)->Args({2, 4})->Args({3, 3})->Args({2, 5})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
