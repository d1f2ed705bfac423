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

#include "qcss/cyclic.h"
#include "qcss/enlarge.h"
#include "test_util.h"

namespace {

using qcss::BitMatrix;
using qcss::BitVector;
using qcss::Errc;
using qcss::LinearCode;

LinearCode extended_bch(std::size_t n, std::size_t delta) {
    return qcss::extend_parity(qcss::bch_code(qcss::bch_spec(n, 1, delta)));
}

// The defining identities of the construction, checked on the record.
void expect_invariants(const qcss::EnlargementRecord &r) {
    const auto &q = r.quantum;
    const auto &h = q.stabilizer();
    const auto &g = q.generator();
    EXPECT_TRUE((h.x * h.z.transpose() + h.z * h.x.transpose()).is_zero());
    EXPECT_TRUE((h.x * g.z.transpose() + h.z * g.x.transpose()).is_zero());
    BitMatrix pairing = r.extra_checks * r.coset_reps.transpose();
    EXPECT_EQ(r.a_tilde * r.extra_checks * (r.a * r.coset_reps).transpose(), pairing);
    EXPECT_EQ(qcss::rank(pairing), pairing.rows());
    EXPECT_TRUE(qcss::row_space_equal(r.coset_reps, r.a * r.coset_reps));
    EXPECT_TRUE(qcss::is_fixed_point_free(r.a));
    EXPECT_EQ(q.k(), r.c.k() + r.c_prime.k() - q.n());
    EXPECT_EQ(qcss::rank(g.combined()), g.rows());
    EXPECT_EQ(qcss::rank(h.combined()), h.rows());
}

TEST(Enlarge, DistanceArithmetic) {
    EXPECT_EQ(qcss::three_halves_ceil(2), 3u);
    EXPECT_EQ(qcss::three_halves_ceil(3), 5u);
    EXPECT_EQ(qcss::three_halves_ceil(10), 15u);
    EXPECT_EQ(qcss::enlarged_distance(4, 2), 3u);
    EXPECT_EQ(qcss::enlarged_distance(6, 4), 6u);
    EXPECT_EQ(qcss::enlarged_distance(16, 10), 15u);
    EXPECT_EQ(qcss::enlarged_distance(12, 10), 12u);
}

// Exhaustive over all 2^s vectors: only u = 0 satisfies u A = u.
TEST(Enlarge, ShiftMapIsFixedPointFree) {
    for (std::size_t s = 2; s <= 12; ++s) {
        auto a = qcss::fixed_point_free_map(s);
        ASSERT_TRUE(qcss::is_fixed_point_free(a));
        EXPECT_EQ(qcss::rank(a + BitMatrix::identity(s)), s);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
            BitVector u(s);
            for (std::size_t i = 0; i < s; ++i) {
                u.set(i, ((mask >> i) & 1) != 0);
            }
            ASSERT_NE(qcss::multiply(u, a), u) << s << " " << mask;
        }
    }
    EXPECT_ERRC(qcss::fixed_point_free_map(1), Errc::size_too_small);
    EXPECT_FALSE(qcss::is_fixed_point_free(BitMatrix::identity(3)));
}

TEST(Enlarge, EightQubitCode) {
    auto r = qcss::enlarge(extended_bch(7, 3), qcss::even_weight_code(8));
    EXPECT_EQ(r.quantum.n(), 8u);
    EXPECT_EQ(r.quantum.k(), 3u);
    EXPECT_EQ(r.quantum.claimed_distance(), 3u);
    EXPECT_EQ(r.basis, qcss::DistanceBasis::designed);
    expect_invariants(r);
    auto d = qcss::quantum_distance(r.quantum);
    EXPECT_EQ(d.distance, 3u);
    EXPECT_EQ(d.pure, true);
}

TEST(Enlarge, VerifiedDistancesGiveVerifiedBasis) {
    auto c = extended_bch(7, 3).with_distance(4);
    auto r = qcss::enlarge(c, qcss::even_weight_code(8));
    EXPECT_EQ(r.basis, qcss::DistanceBasis::verified);
}

TEST(Enlarge, TableCodesSatisfyInvariants) {
    struct Case {
        std::size_t n, delta, delta_prime, k, k_prime, K, D;
    };
    for (auto c : std::vector<Case>{{15, 3, 0, 11, 15, 10, 3},
                                    {31, 5, 3, 21, 26, 15, 6},
                                    {31, 7, 5, 16, 21, 5, 8},
                                    {21, 5, 0, 12, 21, 11, 3},
                                    {21, 5, 3, 12, 15, 5, 6},
                                    {63, 7, 5, 45, 51, 32, 8}}) {
        auto cc = extended_bch(c.n, c.delta);
        auto cp = c.delta_prime == 0 ? qcss::even_weight_code(c.n + 1) : extended_bch(c.n, c.delta_prime);
        EXPECT_EQ(cc.k(), c.k);
        EXPECT_EQ(cp.k(), c.k_prime);
        auto r = qcss::enlarge(cc, cp);
        EXPECT_EQ(r.quantum.k(), c.K);
        EXPECT_EQ(r.quantum.claimed_distance(), c.D) << c.n << " " << c.delta;
        expect_invariants(r);
    }
}

TEST(Enlarge, CosetComplementAndExtraChecks) {
    auto c = extended_bch(15, 5);
    auto cp = extended_bch(15, 3);
    auto d = qcss::coset_complement(c, cp);
    auto b = qcss::extra_check_rows(c, cp);
    EXPECT_EQ(d.rows(), cp.k() - c.k());
    EXPECT_EQ(b.rows(), cp.k() - c.k());
    EXPECT_TRUE((c.generator() * b.transpose()).is_zero());
    EXPECT_TRUE((cp.check() * d.transpose()).is_zero());
    EXPECT_ERRC(qcss::coset_complement(cp, c), Errc::not_a_subcode);
}

TEST(Enlarge, Preconditions) {
    auto hamming8 = extended_bch(7, 3);
    auto not_dual = extended_bch(15, 7);
    EXPECT_ERRC(qcss::enlarge(not_dual, qcss::even_weight_code(16)), Errc::dual_condition_violated);
    EXPECT_ERRC(qcss::enlarge(extended_bch(15, 3), extended_bch(15, 5)), Errc::not_a_subcode);
    EXPECT_ERRC(qcss::enlarge(hamming8, hamming8), Errc::insufficient_enlargement);
    EXPECT_ERRC(qcss::enlarge(hamming8, qcss::even_weight_code(9)), Errc::length_mismatch);
}

TEST(Enlarge, UnextendedVariant) {
    auto r = qcss::enlarge(extended_bch(31, 5), extended_bch(31, 3));
    auto u = qcss::unextended_variant(r);
    EXPECT_EQ(u.quantum.n(), 31u);
    EXPECT_EQ(u.quantum.k(), 16u);
    EXPECT_EQ(u.quantum.claimed_distance(), 5u);
    expect_invariants(u);
    auto small = qcss::enlarge(extended_bch(7, 3), qcss::even_weight_code(8));
    EXPECT_ERRC(qcss::unextended_variant(small), Errc::not_applicable);
}

}  // namespace
