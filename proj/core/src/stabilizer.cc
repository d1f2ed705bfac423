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

#include "qcss/stabilizer.h"

#include <algorithm>
#include <limits>
#include <utility>

#include "gray_walk.h"
#include "qcss/error.h"

namespace qcss {

SymplecticVector::SymplecticVector(BitVector x_part, BitVector z_part) : x(std::move(x_part)), z(std::move(z_part)) {
    if (x.size() != z.size()) {
        throw Error(Errc::length_mismatch, "x and z parts differ in length");
    }
}

std::size_t symplectic_weight(const SymplecticVector &v) {
    return (v.x | v.z).weight();
}

bool symplectic_inner(const SymplecticVector &a, const SymplecticVector &b) {
    if (a.n() != b.n()) {
        throw Error(Errc::length_mismatch, "symplectic vectors on different numbers of qubits");
    }
    return a.x.dot(b.z) != a.z.dot(b.x);
}

SymplecticMatrix::SymplecticMatrix(BitMatrix x_part, BitMatrix z_part) : x(std::move(x_part)), z(std::move(z_part)) {
    if (x.rows() != z.rows() || x.cols() != z.cols()) {
        throw Error(Errc::dimension_mismatch, "x and z blocks differ in shape");
    }
}

SymplecticMatrix vstack(const SymplecticMatrix &a, const SymplecticMatrix &b) {
    return SymplecticMatrix(vstack(a.x, b.x), vstack(a.z, b.z));
}

StabilizerCode::StabilizerCode(SymplecticMatrix generator, SymplecticMatrix stabilizer,
                               std::optional<std::size_t> claimed_distance)
    : generator_(std::move(generator)), stabilizer_(std::move(stabilizer)), claimed_(claimed_distance) {
    const std::size_t n = generator_.n();
    if (stabilizer_.n() != n && stabilizer_.rows() != 0) {
        throw Error(Errc::dimension_mismatch, "generator and stabilizer act on different qubit counts");
    }
    if (stabilizer_.rows() == 0 && stabilizer_.n() != n) {
        stabilizer_ = SymplecticMatrix(BitMatrix(0, n), BitMatrix(0, n));
    }
    if (generator_.rows() < n || generator_.rows() + stabilizer_.rows() != 2 * n) {
        throw Error(Errc::dimension_mismatch, "generator has " + std::to_string(generator_.rows()) +
                                                  " rows and stabilizer " + std::to_string(stabilizer_.rows()) +
                                                  "; expected n + K and n - K for n = " + std::to_string(n));
    }
}

StabilizerCode StabilizerCode::from_stabilizer(const SymplecticMatrix &stabilizer,
                                               std::optional<std::size_t> claimed_distance) {
    const std::size_t n = stabilizer.n();
    BitMatrix basis = row_basis(stabilizer.combined());
    std::vector<BitVector> sx;
    std::vector<BitVector> sz;
    for (const auto &row : basis.row_vectors()) {
        sx.push_back(row.slice(0, n));
        sz.push_back(row.slice(n, 2 * n));
    }
    SymplecticMatrix stab(BitMatrix(n, sx), BitMatrix(n, sz));
    // (u_x | u_z) commutes with (h_x | h_z) iff (h_z | h_x) . (u_x | u_z) = 0.
    BitMatrix dual = kernel(hstack(stab.z, stab.x));
    std::vector<BitVector> gx;
    std::vector<BitVector> gz;
    for (const auto &row : dual.row_vectors()) {
        gx.push_back(row.slice(0, n));
        gz.push_back(row.slice(n, 2 * n));
    }
    return StabilizerCode(SymplecticMatrix(BitMatrix(n, gx), BitMatrix(n, gz)), std::move(stab), claimed_distance);
}

StabilizerCode StabilizerCode::with_claimed_distance(std::size_t d) const {
    StabilizerCode out = *this;
    out.claimed_ = d;
    return out;
}

CommutationCheck commutation_check(const StabilizerCode &code) {
    const auto &h = code.stabilizer();
    const auto &g = code.generator();
    CommutationCheck check;
    if (h.rows() == 0) {
        check.stabilizer_commutes = true;
        check.stabilizer_annihilates_generator = true;
        return check;
    }
    check.stabilizer_commutes = (h.x * h.z.transpose() + h.z * h.x.transpose()).is_zero();
    check.stabilizer_annihilates_generator = (h.x * g.z.transpose() + h.z * g.x.transpose()).is_zero();
    return check;
}

StabilizerCode css(const LinearCode &c1, const LinearCode &c2) {
    if (c1.n() != c2.n()) {
        throw Error(Errc::length_mismatch, "CSS input codes differ in length");
    }
    if (!contains(c2, dual(c1))) {
        throw Error(Errc::dual_condition_violated, "C1^perp is not contained in C2");
    }
    const std::size_t n = c1.n();
    SymplecticMatrix generator = vstack(SymplecticMatrix(c1.generator(), BitMatrix(c1.k(), n)),
                                        SymplecticMatrix(BitMatrix(c2.k(), n), c2.generator()));
    SymplecticMatrix stabilizer = vstack(SymplecticMatrix(c2.check(), BitMatrix(c2.check().rows(), n)),
                                         SymplecticMatrix(BitMatrix(c1.check().rows(), n), c1.check()));
    std::optional<std::size_t> claimed;
    if (auto d1 = c1.best_known_distance(), d2 = c2.best_known_distance(); d1 && d2) {
        claimed = std::min(*d1, *d2);
    }
    StabilizerCode code(std::move(generator), std::move(stabilizer), claimed);
    if (!check_commutativity(code)) {
        throw Error(Errc::commutation_violated, "CSS construction produced a non-commuting stabilizer");
    }
    return code;
}

QuantumDistanceResult quantum_distance(const StabilizerCode &code, std::uint64_t cap, unsigned threads) {
    QuantumDistanceResult result;
    const std::size_t n = code.n();
    BitMatrix basis = row_basis(code.generator().combined());
    const std::size_t count = basis.rows();
    if (count == 0 || count > 62 || (std::uint64_t{1} << count) > cap) {
        return result;
    }
    std::vector<SymplecticVector> rows;
    rows.reserve(count);
    for (const auto &r : basis.row_vectors()) {
        rows.emplace_back(r.slice(0, n), r.slice(n, 2 * n));
    }
    const std::size_t part = BitVector::words_for(n);
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    struct Best {
        std::size_t all = kNone;
        std::size_t outside = kNone;
    };
    Best best = detail::dispatch_words(part, [&](auto width) {
        constexpr std::size_t W = decltype(width)::value;
        constexpr std::size_t Words = 2 * W + 1;
        std::vector<std::uint64_t> packed(count * Words, 0);
        for (std::size_t i = 0; i < count; ++i) {
            std::uint64_t *dst = &packed[i * Words];
            auto xs = rows[i].x.words();
            auto zs = rows[i].z.words();
            std::copy(xs.begin(), xs.end(), dst);
            std::copy(zs.begin(), zs.end(), dst + W);
            std::uint64_t gram = 0;
            for (std::size_t j = 0; j < count; ++j) {
                if (symplectic_inner(rows[i], rows[j])) {
                    gram |= std::uint64_t{1} << j;
                }
            }
            dst[2 * W] = gram;
        }
        struct Eval {
            Best best;
            void operator()(const std::uint64_t *v) {
                std::size_t w = 0;
                for (std::size_t i = 0; i < W; ++i) {
                    w += static_cast<std::size_t>(std::popcount(v[i] | v[W + i]));
                }
                best.all = std::min(best.all, w);
                // A nonzero Gram syndrome means some generator anticommutes
                // with this vector, so it lies outside the dual.
                if (v[2 * W] != 0 && w < best.outside) {
                    best.outside = w;
                }
            }
        };
        auto evals = detail::gray_walk<Words>(packed, count, threads, [] { return Eval{}; });
        Best merged;
        for (const auto &e : evals) {
            merged.all = std::min(merged.all, e.best.all);
            merged.outside = std::min(merged.outside, e.best.outside);
        }
        return merged;
    });

    result.enumerated = (std::uint64_t{1} << count) - 1;
    result.min_weight_all = best.all;
    result.distance = best.outside == kNone ? best.all : best.outside;
    result.pure = *result.min_weight_all == *result.distance;
    return result;
}

std::vector<std::string> to_pauli_strings(const SymplecticMatrix &m) {
    static constexpr char kSymbols[2][2] = {{'I', 'Z'}, {'X', 'Y'}};
    std::vector<std::string> out;
    out.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::string s(m.n(), 'I');
        for (std::size_t q = 0; q < m.n(); ++q) {
            s[q] = kSymbols[m.x.get(r, q)][m.z.get(r, q)];
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::string> to_pauli_strings(const StabilizerCode &code) {
    return to_pauli_strings(code.stabilizer());
}

SymplecticMatrix from_pauli_strings(const std::vector<std::string> &rows, std::size_t n) {
    std::vector<BitVector> xs;
    std::vector<BitVector> zs;
    for (const auto &s : rows) {
        if (s.size() != n) {
            throw Error(Errc::parse_error, "Pauli string of length " + std::to_string(s.size()) + ", expected " +
                                               std::to_string(n));
        }
        BitVector x(n);
        BitVector z(n);
        for (std::size_t q = 0; q < n; ++q) {
            switch (s[q]) {
                case 'I':
                    break;
                case 'X':
                    x.set(q);
                    break;
                case 'Z':
                    z.set(q);
                    break;
                case 'Y':
                    x.set(q);
                    z.set(q);
                    break;
                default:
                    throw Error(Errc::parse_error, std::string("invalid Pauli symbol '") + s[q] + "'");
            }
        }
        xs.push_back(std::move(x));
        zs.push_back(std::move(z));
    }
    return SymplecticMatrix(BitMatrix(n, std::move(xs)), BitMatrix(n, std::move(zs)));
}

}  // namespace qcss
