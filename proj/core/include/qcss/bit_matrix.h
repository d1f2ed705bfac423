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

#ifndef QCSS_BIT_MATRIX_H_
#define QCSS_BIT_MATRIX_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcss/bit_vector.h"

namespace qcss {

/// Dense row-major matrix over GF(2). Values are never modified in place by
/// the free functions below; every operation returns a new matrix.
class BitMatrix {
   public:
    BitMatrix() = default;
    /// A rows x cols zero matrix.
    BitMatrix(std::size_t rows, std::size_t cols);
    /// Takes ownership of `rows`; each must have exactly `cols` bits.
    BitMatrix(std::size_t cols, std::vector<BitVector> rows);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
    static BitMatrix from_strings(std::span<const std::string> rows, std::size_t cols);

    std::size_t rows() const noexcept {
        return rows_.size();
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    const BitVector &row(std::size_t i) const {
        return rows_.at(i);
    }
    std::span<const BitVector> row_vectors() const noexcept {
        return rows_;
    }
    bool get(std::size_t r, std::size_t c) const {
        return rows_.at(r).get(c);
    }

    bool is_zero() const noexcept;
    bool is_square() const noexcept {
        return rows() == cols_;
    }
    BitMatrix transpose() const;
    BitMatrix with_bit_flipped(std::size_t r, std::size_t c) const;
    /// Rows [begin, end) as a new matrix.
    BitMatrix row_range(std::size_t begin, std::size_t end) const;
    std::vector<std::string> to_strings() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

BitMatrix multiply(const BitMatrix &a, const BitMatrix &b);
BitMatrix add(const BitMatrix &a, const BitMatrix &b);
inline BitMatrix transpose(const BitMatrix &m) {
    return m.transpose();
}
inline BitMatrix operator*(const BitMatrix &a, const BitMatrix &b) {
    return multiply(a, b);
}
inline BitMatrix operator+(const BitMatrix &a, const BitMatrix &b) {
    return add(a, b);
}

/// Row vector times matrix: the combination of m's rows selected by v.
BitVector multiply(const BitVector &v, const BitMatrix &m);

/// Stacks b's rows beneath a's.
BitMatrix vstack(const BitMatrix &a, const BitMatrix &b);
/// Places b's columns to the right of a's.
BitMatrix hstack(const BitMatrix &a, const BitMatrix &b);

struct Echelon {
    /// Same shape as the input; the first `rank` rows are the nonzero rows
    /// in reduced row-echelon form, the rest are zero.
    BitMatrix matrix;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

Echelon rref(const BitMatrix &m);
std::size_t rank(const BitMatrix &m);

/// The nonzero rows of rref(m): the canonical basis of m's row space.
BitMatrix row_basis(const BitMatrix &m);

/// A basis of {v : m * v^T = 0}, with cols(m) - rank(m) rows.
BitMatrix kernel(const BitMatrix &m);

/// Throws Errc::singular_matrix when m is not square and full rank.
BitMatrix inverse(const BitMatrix &m);

bool row_space_contains(const BitMatrix &m, const BitVector &v);
bool row_space_equal(const BitMatrix &a, const BitMatrix &b);

/// Rows of `outer` reduced modulo the row space of `inner`, returned as the
/// canonical basis of the quotient. When inner's row space lies inside
/// outer's, this has rank(outer) - rank(inner) rows and together with inner
/// spans outer.
BitMatrix quotient_basis(const BitMatrix &outer, const BitMatrix &inner);

}  // namespace qcss

#endif  // QCSS_BIT_MATRIX_H_
