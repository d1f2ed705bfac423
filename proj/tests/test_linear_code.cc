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

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "qcss/cyclic.h"
#include "qcss/linear_code.h"
#include "test_util.h"

namespace {

using qcss::DistanceMethod;
using qcss::Errc;
using qcss::LinearCode;

LinearCode hamming7() {
    return qcss::bch_code(qcss::bch_spec(7, 1, 3));
}

LinearCode random_code(std::mt19937_64 &rng, std::size_t k, std::size_t n) {
    return LinearCode::from_generator(oracle::random_matrix(rng, k, n, 0.4));
}

TEST(LinearCode, GeneratorAndCheckAgree) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + trial % 60;
        auto c = random_code(rng, 1 + trial % n, n);
        EXPECT_EQ(c.k() + c.check().rows(), n);
        EXPECT_EQ(qcss::rank(c.generator()), c.k());
        if (c.k() > 0 && c.check().rows() > 0) {
            EXPECT_TRUE((c.generator() * c.check().transpose()).is_zero());
        }
        auto d = qcss::dual(c);
        EXPECT_EQ(d.k(), n - c.k());
        EXPECT_TRUE(qcss::row_space_equal(qcss::dual(d).generator(), c.generator()));
        EXPECT_TRUE(qcss::row_space_equal(LinearCode::from_check(c.check()).generator(), c.generator()));
    }
}

TEST(LinearCode, Containment) {
    auto h = hamming7();
    EXPECT_TRUE(qcss::contains(h, qcss::dual(h)));
    EXPECT_FALSE(qcss::contains(qcss::dual(h), h));
    EXPECT_TRUE(qcss::contains(qcss::even_weight_code(8), qcss::extend_parity(h)));
    EXPECT_ERRC(qcss::contains(h, qcss::even_weight_code(8)), Errc::length_mismatch);
}

TEST(LinearCode, ParityExtensionAndPuncture) {
    auto ext = qcss::extend_parity(hamming7());
    EXPECT_EQ(ext.n(), 8u);
    EXPECT_EQ(ext.k(), 4u);
    EXPECT_EQ(ext.designed_distance(), 4u);
    for (const auto &w : oracle::span(oracle::to_rows(ext.generator()), 8)) {
        EXPECT_EQ(oracle::weight(w) % 2, 0u);
    }
    auto back = qcss::puncture_last(ext);
    EXPECT_TRUE(qcss::row_space_equal(back.generator(), hamming7().generator()));
    EXPECT_EQ(back.designed_distance(), 3u);
}

TEST(LinearCode, SmallFamilies) {
    EXPECT_EQ(qcss::even_weight_code(9).k(), 8u);
    EXPECT_EQ(qcss::even_weight_code(9).distance(), 2u);
    EXPECT_EQ(qcss::repetition_code(5).k(), 1u);
    EXPECT_EQ(qcss::min_distance(qcss::repetition_code(5)).distance, 5u);
    EXPECT_ERRC(qcss::even_weight_code(1), Errc::invalid_argument);
    EXPECT_EQ(qcss::min_distance(qcss::even_weight_code(40)).distance, 2u);
}

TEST(MinDistance, EnumerationMatchesOracle) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 4 + trial % 40;
        std::size_t k = 1 + trial % std::min<std::size_t>(n - 1, 10);
        auto c = random_code(rng, k, n);
        if (c.k() == 0) {
            continue;
        }
        EXPECT_EQ(qcss::min_distance_enumerate(c, 1 + trial % 3), oracle::min_distance(c.generator()));
    }
}

// Codes with 2^k large enough to shard the Gray walk over many workers.
TEST(MinDistance, ShardedEnumerationIsThreadIndependent) {
    std::mt19937_64 rng(13);
    for (std::size_t n : {40u, 70u, 130u, 300u}) {
        auto c = random_code(rng, 22, n);
        auto one = qcss::min_distance_enumerate(c, 1);
        EXPECT_EQ(qcss::min_distance_enumerate(c, 4), one);
        EXPECT_EQ(qcss::min_distance_enumerate(c, 0), one);
    }
}

TEST(MinDistance, ColumnSearchMatchesEnumeration) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 8 + trial % 30;
        auto c = random_code(rng, n / 2, n);
        if (c.k() == 0 || c.k() == n) {
            continue;
        }
        auto d = qcss::min_distance_column_search(c, 1'000'000'000);
        ASSERT_TRUE(d.has_value());
        EXPECT_EQ(*d, qcss::min_distance_enumerate(c, 1));
    }
}

TEST(MinDistance, SelectsMethodByCaps) {
    auto c = qcss::bch_code(qcss::bch_spec(31, 1, 7));
    auto full = qcss::min_distance(c);
    EXPECT_EQ(full.method, DistanceMethod::enumeration);
    EXPECT_EQ(full.distance, 7u);

    auto search = qcss::min_distance(c, {16, 1'000'000'000, 0});
    EXPECT_EQ(search.method, DistanceMethod::column_search);
    EXPECT_EQ(search.distance, 7u);

    auto capped = qcss::min_distance(c, {16, 10, 0});
    EXPECT_EQ(capped.method, DistanceMethod::unverified);
    EXPECT_FALSE(capped.verified());
    EXPECT_EQ(capped.lower_bound, 7u);
}

TEST(MinDistance, ClassicalSpotChecks) {
    struct Case {
        std::size_t n, delta;
        bool extend;
        std::size_t k, d;
    };
    for (auto c : std::vector<Case>{{7, 3, false, 4, 3},
                                    {7, 3, true, 4, 4},
                                    {15, 3, false, 11, 3},
                                    {15, 3, true, 11, 4},
                                    {21, 5, false, 12, 5},
                                    {21, 5, true, 12, 6},
                                    {31, 7, false, 16, 7}}) {
        auto code = qcss::bch_code(qcss::bch_spec(c.n, 1, c.delta));
        if (c.extend) {
            code = qcss::extend_parity(code);
        }
        EXPECT_EQ(code.k(), c.k);
        EXPECT_EQ(qcss::min_distance_enumerate(code), c.d) << c.n << " " << c.delta;
    }
}

TEST(MinDistance, ZeroCode) {
    auto zero = LinearCode::from_generator(qcss::BitMatrix(0, 5));
    EXPECT_EQ(zero.k(), 0u);
    EXPECT_EQ(qcss::min_distance(zero).method, DistanceMethod::empty_code);
    EXPECT_ERRC(qcss::min_distance_enumerate(zero), Errc::invalid_argument);
}

}  // namespace
