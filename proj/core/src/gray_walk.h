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

#ifndef QCSS_SRC_GRAY_WALK_H_
#define QCSS_SRC_GRAY_WALK_H_

// Sharded Gray-code enumeration of a row space.
//
// Each row is a fixed block of `Words` 64-bit words. The top `shard_bits`
// rows are fixed per shard, the remaining rows are walked in Gray order so
// that each step costs one row XOR. Shards are independent and their
// evaluators are merged by the caller.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <type_traits>
#include <vector>

#include "qcss/error.h"

namespace qcss::detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Visits every nonzero combination in one shard. `eval(block)` is called
// with a pointer to the current combination's `Words` words.
template <std::size_t Words, class Eval>
void gray_walk_shard(const std::vector<std::uint64_t> &rows, std::size_t count, std::size_t shard_bits,
                     std::uint64_t shard, Eval &eval) {
    std::array<std::uint64_t, Words> acc{};
    const std::size_t low = count - shard_bits;
    for (std::size_t b = 0; b < shard_bits; ++b) {
        if ((shard >> b) & 1U) {
            const std::uint64_t *row = &rows[(low + b) * Words];
            for (std::size_t w = 0; w < Words; ++w) {
                acc[w] ^= row[w];
            }
        }
    }
    if (shard != 0) {
        eval(acc.data());
    }
    const std::uint64_t steps = std::uint64_t{1} << low;
    for (std::uint64_t i = 1; i < steps; ++i) {
        const std::uint64_t *row = &rows[static_cast<std::size_t>(std::countr_zero(i)) * Words];
        for (std::size_t w = 0; w < Words; ++w) {
            acc[w] ^= row[w];
        }
        eval(acc.data());
    }
}

// Runs all shards over `threads` workers; each worker owns one evaluator
// made by `make()`; the evaluators are returned for reduction.
template <std::size_t Words, class Make>
auto gray_walk(const std::vector<std::uint64_t> &rows, std::size_t count, unsigned threads, Make make) {
    using Eval = std::invoke_result_t<Make>;
    std::size_t shard_bits = count >= 20 ? std::min<std::size_t>(count - 12, 10) : 0;
    const std::uint64_t shards = std::uint64_t{1} << shard_bits;
    unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), shards));

    std::vector<Eval> evals;
    evals.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        evals.push_back(make());
    }
    std::atomic<std::uint64_t> next{0};
    auto work = [&](Eval &eval) {
        for (std::uint64_t s = next++; s < shards; s = next++) {
            gray_walk_shard<Words>(rows, count, shard_bits, s, eval);
        }
    };
    if (workers == 1) {
        work(evals[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back(work, std::ref(evals[t]));
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    return evals;
}

inline constexpr std::size_t kMaxPackedWords = 8;

template <class F>
decltype(auto) dispatch_words(std::size_t words, F &&f) {
    switch (words) {
        case 1:
            return f(std::integral_constant<std::size_t, 1>{});
        case 2:
            return f(std::integral_constant<std::size_t, 2>{});
        case 3:
            return f(std::integral_constant<std::size_t, 3>{});
        case 4:
            return f(std::integral_constant<std::size_t, 4>{});
        case 5:
            return f(std::integral_constant<std::size_t, 5>{});
        case 6:
            return f(std::integral_constant<std::size_t, 6>{});
        case 7:
            return f(std::integral_constant<std::size_t, 7>{});
        case 8:
            return f(std::integral_constant<std::size_t, 8>{});
        default:
            throw Error(Errc::invalid_argument, "vectors wider than 512 bits are not supported by the search engine");
    }
}

}  // namespace qcss::detail

#endif  // QCSS_SRC_GRAY_WALK_H_
