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

#ifndef QCSS_STABILIZER_H_
#define QCSS_STABILIZER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcss/bit_matrix.h"
#include "qcss/linear_code.h"

namespace qcss {

/// A Pauli operator on n qubits in binary form (u_x | u_z).
struct SymplecticVector {
    BitVector x;
    BitVector z;

    SymplecticVector() = default;
    SymplecticVector(BitVector x_part, BitVector z_part);

    std::size_t n() const noexcept {
        return x.size();
    }
};

/// Number of qubits on which the operator acts: wt(u_x OR u_z).
std::size_t symplectic_weight(const SymplecticVector &v);

/// u_x . v_z + u_z . v_x mod 2. Throws Errc::length_mismatch.
bool symplectic_inner(const SymplecticVector &a, const SymplecticVector &b);

/// Paired matrices (M_x | M_z) with the same shape.
struct SymplecticMatrix {
    BitMatrix x;
    BitMatrix z;

    SymplecticMatrix() = default;
    SymplecticMatrix(BitMatrix x_part, BitMatrix z_part);

    std::size_t rows() const noexcept {
        return x.rows();
    }
    std::size_t n() const noexcept {
        return x.cols();
    }
    SymplecticVector row(std::size_t i) const {
        return {x.row(i), z.row(i)};
    }
    /// The rows as 2n-bit vectors (x part first).
    BitMatrix combined() const {
        return hstack(x, z);
    }
};

SymplecticMatrix vstack(const SymplecticMatrix &a, const SymplecticMatrix &b);

/// A stabilizer code with n + K generator rows and n - K stabilizer rows.
/// The stabilizer is the symplectic dual of the generator's row space.
class StabilizerCode {
   public:
    /// Checks row counts only; commutativity is left to check_commutativity
    /// so that deliberately broken codes can be represented.
    StabilizerCode(SymplecticMatrix generator, SymplecticMatrix stabilizer,
                   std::optional<std::size_t> claimed_distance = std::nullopt);

    /// Recovers the generator as the symplectic dual of the stabilizer rows.
    static StabilizerCode from_stabilizer(const SymplecticMatrix &stabilizer,
                                          std::optional<std::size_t> claimed_distance = std::nullopt);

    std::size_t n() const noexcept {
        return generator_.n();
    }
    /// Number of logical qubits K.
    std::size_t k() const noexcept {
        return generator_.rows() - n();
    }
    const SymplecticMatrix &generator() const noexcept {
        return generator_;
    }
    const SymplecticMatrix &stabilizer() const noexcept {
        return stabilizer_;
    }
    std::optional<std::size_t> claimed_distance() const noexcept {
        return claimed_;
    }
    StabilizerCode with_claimed_distance(std::size_t d) const;

   private:
    SymplecticMatrix generator_;
    SymplecticMatrix stabilizer_;
    std::optional<std::size_t> claimed_;
};

struct CommutationCheck {
    /// H_x H_z^T + H_z H_x^T = 0
    bool stabilizer_commutes = false;
    /// H_x G_z^T + H_z G_x^T = 0
    bool stabilizer_annihilates_generator = false;

    bool ok() const noexcept {
        return stabilizer_commutes && stabilizer_annihilates_generator;
    }
};

CommutationCheck commutation_check(const StabilizerCode &code);

inline bool check_commutativity(const StabilizerCode &code) {
    return commutation_check(code).ok();
}

/// Builds the block-diagonal code from C1, C2 with C1^perp inside C2.
/// Throws Errc::dual_condition_violated otherwise.
StabilizerCode css(const LinearCode &c1, const LinearCode &c2);

struct QuantumDistanceResult {
    /// Minimum weight over the code minus its symplectic dual. For K = 0 the
    /// two coincide and this is the minimum nonzero weight.
    std::optional<std::size_t> distance;
    /// Minimum weight over all nonzero vectors of the code.
    std::optional<std::size_t> min_weight_all;
    std::optional<bool> pure;
    std::uint64_t enumerated = 0;

    bool verified() const noexcept {
        return distance.has_value();
    }
};

/// Enumerates the 2^(n+K) vectors of the generator row space when that fits
/// `cap`. Membership in the dual is decided from each vector's message via
/// the Gram matrix of symplectic products, maintained incrementally.
QuantumDistanceResult quantum_distance(const StabilizerCode &code, std::uint64_t cap = std::uint64_t{1} << 28,
                                       unsigned threads = 0);

/// One string per row: (0,0) -> I, (1,0) -> X, (0,1) -> Z, (1,1) -> Y.
std::vector<std::string> to_pauli_strings(const SymplecticMatrix &m);
/// The stabilizer rows of `code`.
std::vector<std::string> to_pauli_strings(const StabilizerCode &code);
/// Inverse of to_pauli_strings; all strings must have length n.
SymplecticMatrix from_pauli_strings(const std::vector<std::string> &rows, std::size_t n);

}  // namespace qcss

#endif  // QCSS_STABILIZER_H_
