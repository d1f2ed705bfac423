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
#include "qcss/bit_matrix.h"
#include "qcss/bit_vector.h"
#include "test_util.h"

namespace {

using qcss::BitMatrix;
using qcss::BitVector;
using qcss::Errc;

TEST(BitVector, StringRoundTrip) {
    auto v = BitVector::from_string("1011000001");
    EXPECT_EQ(v.size(), 10u);
    EXPECT_EQ(v.weight(), 4u);
    EXPECT_EQ(v.to_string(), "1011000001");
    EXPECT_TRUE(v.get(0));
    EXPECT_FALSE(v.get(1));
    EXPECT_EQ(v.first_set(), 0u);
    EXPECT_ERRC(BitVector::from_string("10a"), Errc::parse_error);
}

TEST(BitVector, BoundsAndLengthChecks) {
    BitVector v(70);
    EXPECT_ERRC(v.get(70), Errc::dimension_mismatch);
    EXPECT_ERRC(v.set(100), Errc::dimension_mismatch);
    EXPECT_ERRC(v ^= BitVector(69), Errc::dimension_mismatch);
    EXPECT_ERRC(v.dot(BitVector(71)), Errc::dimension_mismatch);
    EXPECT_TRUE(v.is_zero());
    EXPECT_FALSE(v.first_set().has_value());
}

TEST(BitVector, WordBoundary) {
    BitVector v(130);
    v.set(63);
    v.set(64);
    v.set(129);
    EXPECT_EQ(v.weight(), 3u);
    EXPECT_EQ(v.slice(60, 70).to_string(), "0001100000");
    auto joined = v.slice(0, 64).concat(v.slice(64, 130));
    EXPECT_EQ(joined, v);
    v.flip(129);
    EXPECT_EQ(v.weight(), 2u);
    EXPECT_EQ(v.words().size(), 3u);
    EXPECT_EQ(v.words()[2], 0u);
}

TEST(BitVector, DotAndXor) {
    auto a = BitVector::from_string("110101");
    auto b = BitVector::from_string("011100");
    EXPECT_EQ((a ^ b).to_string(), "101001");
    EXPECT_EQ((a & b).to_string(), "010100");
    EXPECT_EQ((a | b).to_string(), "111101");
    EXPECT_FALSE(a.dot(b));
    EXPECT_TRUE(a.dot(BitVector::from_string("100000")));
}

TEST(BitMatrix, ShapeValidation) {
    EXPECT_ERRC(BitMatrix(3, {BitVector(4)}), Errc::dimension_mismatch);
    auto a = BitMatrix::from_strings({"101", "011"});
    EXPECT_ERRC(a * a, Errc::dimension_mismatch);
    EXPECT_ERRC(a + BitMatrix(3, 3), Errc::dimension_mismatch);
    EXPECT_ERRC(inverse(a), Errc::singular_matrix);
    EXPECT_ERRC(inverse(BitMatrix::from_strings({"11", "11"})), Errc::singular_matrix);
}

TEST(BitMatrix, RrefOfSmallMatrix) {
    auto m = BitMatrix::from_strings({"1101", "0110", "1011"});
    auto e = rref(m);
    EXPECT_EQ(e.rank, 2u);
    EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(e.matrix.rows(), 3u);
    EXPECT_EQ(e.matrix.to_strings(), (std::vector<std::string>{"1011", "0110", "0000"}));
}

TEST(BitMatrix, RandomAgreesWithOracle) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::size_t> dim(1, 90);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t r = dim(rng), c = dim(rng), k = dim(rng);
        auto a = oracle::random_matrix(rng, r, c, trial % 3 == 0 ? 0.1 : 0.5);
        auto b = oracle::random_matrix(rng, c, k);
        EXPECT_EQ(rank(a), oracle::rank(oracle::to_rows(a)));
        EXPECT_EQ(oracle::to_rows(a * b), oracle::multiply(oracle::to_rows(a), oracle::to_rows(b), k));
        EXPECT_EQ(a.transpose().transpose(), a);
        EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
    }
}

// The identities behind dual codes: K = ker(M) satisfies M K^T = 0,
// dim K = cols - rank M and ker(ker(M)) spans the row space of M.
TEST(BitMatrix, KernelIdentitiesOnRandomMatrices) {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::size_t> dim(1, 80);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        auto m = oracle::random_matrix(rng, r, c, trial % 4 == 0 ? 0.08 : 0.5);
        auto k = kernel(m);
        ASSERT_EQ(k.cols(), c);
        EXPECT_EQ(k.rows(), c - rank(m));
        EXPECT_EQ(rank(k), k.rows());
        if (k.rows() > 0) {
            EXPECT_TRUE((m * k.transpose()).is_zero());
        }
        EXPECT_TRUE(row_space_equal(kernel(k), m));
    }
}

TEST(BitMatrix, InverseOfRandomInvertible) {
    std::mt19937_64 rng(3);
    int inverted = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = 1 + trial % 70;
        auto m = oracle::random_matrix(rng, n, n);
        if (rank(m) != n) {
            EXPECT_ERRC(inverse(m), Errc::singular_matrix);
            continue;
        }
        auto inv = inverse(m);
        EXPECT_EQ(m * inv, BitMatrix::identity(n));
        EXPECT_EQ(inv * m, BitMatrix::identity(n));
        ++inverted;
    }
    EXPECT_GT(inverted, 50);
}

TEST(BitMatrix, QuotientBasis) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 5 + trial % 40;
        auto inner = oracle::random_matrix(rng, n / 3, n);
        auto extra = oracle::random_matrix(rng, n / 4 + 1, n);
        auto outer = vstack(extra, inner);
        auto q = quotient_basis(outer, inner);
        EXPECT_EQ(q.rows(), rank(outer) - rank(inner));
        EXPECT_EQ(rank(vstack(inner, q)), rank(outer));
        for (auto row : q.row_vectors()) {
            EXPECT_TRUE(row_space_contains(outer, row));
        }
    }
}

TEST(BitMatrix, StackingAndVectorProduct) {
    auto a = BitMatrix::from_strings({"10", "01"});
    auto b = BitMatrix::from_strings({"11", "00"});
    EXPECT_EQ(hstack(a, b).to_strings(), (std::vector<std::string>{"1011", "0100"}));
    EXPECT_EQ(vstack(a, b).rows(), 4u);
    EXPECT_EQ(multiply(BitVector::from_string("11"), b).to_string(), "11");
    EXPECT_EQ(a.with_bit_flipped(0, 1).to_strings(), (std::vector<std::string>{"11", "01"}));
    EXPECT_EQ(row_basis(vstack(a, a)).rows(), 2u);
}

}  // namespace
