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

#include "qcss/enlarge.h"

#include <utility>
#include <vector>

#include "qcss/error.h"

namespace qcss {

namespace {

void require_invariant(bool ok, const std::string &what) {
    if (!ok) {
        throw Error(Errc::construction_invariant, what);
    }
}

}  // namespace

BitMatrix coset_complement(const LinearCode &c, const LinearCode &c_prime) {
    if (c.n() != c_prime.n()) {
        throw Error(Errc::length_mismatch, "C and C' differ in length");
    }
    if (!contains(c_prime, c)) {
        throw Error(Errc::not_a_subcode, "C is not contained in C'");
    }
    if (c_prime.k() < c.k()) {
        throw Error(Errc::dimension_order, "k' < k");
    }
    BitMatrix reps = quotient_basis(c_prime.generator(), c.generator());
    require_invariant(reps.rows() == c_prime.k() - c.k(), "coset representatives have the wrong count");
    return reps;
}

BitMatrix extra_check_rows(const LinearCode &c, const LinearCode &c_prime) {
    // C' contains C, so the checks of C' are among the checks of C.
    return quotient_basis(c.check(), c_prime.check());
}

BitMatrix fixed_point_free_map(std::size_t size) {
    if (size < 2) {
        throw Error(Errc::size_too_small, "a fixed-point-free map needs at least 2 rows, got " + std::to_string(size));
    }
    std::vector<BitVector> rows;
    rows.reserve(size);
    for (std::size_t i = 0; i + 1 < size; ++i) {
        BitVector row(size);
        row.set(i + 1);
        rows.push_back(std::move(row));
    }
    BitVector last(size);
    last.set(0);
    last.set(1);
    rows.push_back(std::move(last));
    BitMatrix a(size, std::move(rows));
    require_invariant(is_fixed_point_free(a), "shift map is not fixed-point free");
    return a;
}

bool is_fixed_point_free(const BitMatrix &a) {
    if (!a.is_square()) {
        return false;
    }
    const std::size_t n = a.rows();
    return rank(a) == n && rank(a + BitMatrix::identity(n)) == n;
}

BitMatrix compensating_map(const BitMatrix &a, const BitMatrix &extra_checks, const BitMatrix &coset_reps) {
    BitMatrix pairing = extra_checks * coset_reps.transpose();
    BitMatrix pairing_inv = inverse(pairing);
    BitMatrix a_t_inv = inverse(a.transpose());
    BitMatrix a_tilde = pairing * a_t_inv * pairing_inv;
    BitMatrix lhs = a_tilde * extra_checks * (a * coset_reps).transpose();
    require_invariant(lhs == pairing, "A~ B (A D)^T != B D^T");
    return a_tilde;
}

EnlargementRecord enlarge(const LinearCode &c, const LinearCode &c_prime) {
    if (c.n() != c_prime.n()) {
        throw Error(Errc::length_mismatch, "C and C' differ in length");
    }
    if (!contains(c, dual(c))) {
        throw Error(Errc::dual_condition_violated, "C does not contain its dual");
    }
    if (!contains(c_prime, c)) {
        throw Error(Errc::not_a_subcode, "C is not contained in C'");
    }
    if (c_prime.k() <= c.k() + 1) {
        throw Error(Errc::insufficient_enlargement, "need k' > k + 1, got k = " + std::to_string(c.k()) +
                                                        ", k' = " + std::to_string(c_prime.k()));
    }
    const std::size_t n = c.n();
    const std::size_t extra = c_prime.k() - c.k();

    BitMatrix d = coset_complement(c, c_prime);
    BitMatrix b = extra_check_rows(c, c_prime);
    require_invariant(b.rows() == extra, "B has the wrong number of rows");
    BitMatrix a = fixed_point_free_map(extra);
    BitMatrix ad = a * d;
    require_invariant(row_space_equal(d, ad), "D and A D span different spaces");
    require_invariant(rank(vstack(c.generator(), d)) == c_prime.k(), "G and D do not generate C'");
    require_invariant(rank(vstack(c_prime.check(), b)) == n - c.k(), "{H', B} does not check C");
    BitMatrix a_tilde = compensating_map(a, b, d);

    const BitMatrix &g = c.generator();
    const BitMatrix &hp = c_prime.check();
    SymplecticMatrix generator = vstack(vstack(SymplecticMatrix(d, ad), SymplecticMatrix(g, BitMatrix(c.k(), n))),
                                        SymplecticMatrix(BitMatrix(c.k(), n), g));
    SymplecticMatrix stabilizer =
        vstack(vstack(SymplecticMatrix(a_tilde * b, b), SymplecticMatrix(hp, BitMatrix(hp.rows(), n))),
               SymplecticMatrix(BitMatrix(hp.rows(), n), hp));

    std::optional<std::size_t> claimed;
    DistanceBasis basis = DistanceBasis::unknown;
    if (c.distance() && c_prime.distance()) {
        claimed = enlarged_distance(*c.distance(), *c_prime.distance());
        basis = DistanceBasis::verified;
    } else if (auto dd = c.best_known_distance(), dp = c_prime.best_known_distance(); dd && dp) {
        claimed = enlarged_distance(*dd, *dp);
        basis = DistanceBasis::designed;
    }
    StabilizerCode quantum(std::move(generator), std::move(stabilizer), claimed);
    auto check = commutation_check(quantum);
    if (!check.ok()) {
        throw Error(Errc::commutation_violated, "enlarged stabilizer fails the commutation conditions");
    }
    require_invariant(quantum.k() == c.k() + c_prime.k() - n, "K != k + k' - n");
    return EnlargementRecord{c, c_prime, std::move(d), std::move(b), hp, std::move(a), std::move(a_tilde),
                             std::move(quantum), basis};
}

EnlargementRecord unextended_variant(const EnlargementRecord &record) {
    auto claimed = record.quantum.claimed_distance();
    if (!claimed || *claimed <= 3) {
        throw Error(Errc::not_applicable, "the unextended variant needs D > 3");
    }
    LinearCode c = puncture_last(record.c);
    LinearCode c_prime = puncture_last(record.c_prime);
    EnlargementRecord out = enlarge(c, c_prime);
    const std::size_t n = record.quantum.n();
    const std::size_t k = record.quantum.k();
    require_invariant(out.quantum.n() == n - 1 && out.quantum.k() == k + 1,
                      "unextended variant is not [[n-1, K+1]]");
    require_invariant(out.quantum.claimed_distance() == *claimed - 1, "unextended variant distance is not D - 1");
    return out;
}

}  // namespace qcss
