// Copyright 2026 The qcss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "qcss/cyclic.h"
#include "qcss/enlarge.h"

namespace {

qcss::BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<qcss::BitVector> data;
    for (std::size_t r = 0; r < rows; ++r) {
        qcss::BitVector v(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            v.set(c, (rng() & 1) != 0);
        }
        data.push_back(std::move(v));
    }
    return qcss::BitMatrix(cols, std::move(data));
}

void BM_Rref(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    auto m = random_matrix(n, n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcss::rref(m));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_ClassicalEnumeration(benchmark::State &state) {
    auto code = qcss::bch_code(qcss::bch_spec(31, 1, 7));
    auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcss::min_distance_enumerate(code, threads));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << code.k()));
}
BENCHMARK(BM_ClassicalEnumeration)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_ColumnSearch(benchmark::State &state) {
    auto code = qcss::extend_parity(qcss::bch_code(qcss::bch_spec(63, 1, 5)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcss::min_distance_column_search(code, 1'000'000'000));
    }
}
BENCHMARK(BM_ColumnSearch)->Unit(benchmark::kMillisecond);

void BM_QuantumDistance(benchmark::State &state) {
    auto c = qcss::extend_parity(qcss::bch_code(qcss::bch_spec(15, 1, 3)));
    auto rec = qcss::enlarge(c, qcss::even_weight_code(16));
    auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcss::quantum_distance(rec.quantum, std::uint64_t{1} << 28, threads));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << 26));
}
BENCHMARK(BM_QuantumDistance)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_Enlarge(benchmark::State &state) {
    auto c = qcss::extend_parity(qcss::bch_code(qcss::bch_spec(127, 1, 9)));
    auto cp = qcss::extend_parity(qcss::bch_code(qcss::bch_spec(127, 1, 7)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcss::enlarge(c, cp));
    }
}
BENCHMARK(BM_Enlarge)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
