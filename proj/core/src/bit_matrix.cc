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

#include "qcss/bit_matrix.h"

#include <utility>

#include "qcss/error.h"

namespace qcss {

namespace {

void require(bool condition, const std::string &what) {
    if (!condition) {
        throw Error(Errc::dimension_mismatch, what);
    }
}

// Reduces v against an echelon basis in place (pivot columns cleared).
void reduce(BitVector &v, const Echelon &e) {
    for (std::size_t i = 0; i < e.rank; ++i) {
        if (v.get(e.pivots[i])) {
            v ^= e.matrix.row(i);
        }
    }
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {
}

BitMatrix::BitMatrix(std::size_t cols, std::vector<BitVector> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        require(r.size() == cols_, "row length " + std::to_string(r.size()) + " != " + std::to_string(cols_));
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.rows_[i].set(i);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> out;
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    for (auto r : rows) {
        out.push_back(BitVector::from_string(r));
    }
    return BitMatrix(cols, std::move(out));
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows, std::size_t cols) {
    std::vector<BitVector> out;
    for (const auto &r : rows) {
        out.push_back(BitVector::from_string(r));
    }
    return BitMatrix(cols, std::move(out));
}

bool BitMatrix::is_zero() const noexcept {
    for (const auto &r : rows_) {
        if (!r.is_zero()) {
            return false;
        }
    }
    return true;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        const auto &row = rows_[r];
        for (std::size_t c = 0; c < cols_; ++c) {
            if (row.get(c)) {
                t.rows_[c].set(r);
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::with_bit_flipped(std::size_t r, std::size_t c) const {
    BitMatrix out = *this;
    out.rows_.at(r).flip(c);
    return out;
}

BitMatrix BitMatrix::row_range(std::size_t begin, std::size_t end) const {
    require(begin <= end && end <= rows(), "row range out of bounds");
    return BitMatrix(cols_, std::vector<BitVector>(rows_.begin() + static_cast<std::ptrdiff_t>(begin),
                                                   rows_.begin() + static_cast<std::ptrdiff_t>(end)));
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows());
    for (const auto &r : rows_) {
        out.push_back(r.to_string());
    }
    return out;
}

BitMatrix multiply(const BitMatrix &a, const BitMatrix &b) {
    require(a.cols() == b.rows(), "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                      " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    std::vector<BitVector> out;
    out.reserve(a.rows());
    for (const auto &row : a.row_vectors()) {
        out.push_back(multiply(row, b));
    }
    return BitMatrix(b.cols(), std::move(out));
}

BitVector multiply(const BitVector &v, const BitMatrix &m) {
    require(v.size() == m.rows(), "vector length does not match matrix rows");
    BitVector acc(m.cols());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.get(i)) {
            acc ^= m.row(i);
        }
    }
    return acc;
}

BitMatrix add(const BitMatrix &a, const BitMatrix &b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "cannot add matrices of different shape");
    std::vector<BitVector> out(a.row_vectors().begin(), a.row_vectors().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] ^= b.row(i);
    }
    return BitMatrix(a.cols(), std::move(out));
}

BitMatrix vstack(const BitMatrix &a, const BitMatrix &b) {
    require(a.cols() == b.cols(), "cannot stack matrices of different width");
    std::vector<BitVector> out(a.row_vectors().begin(), a.row_vectors().end());
    out.insert(out.end(), b.row_vectors().begin(), b.row_vectors().end());
    return BitMatrix(a.cols(), std::move(out));
}

BitMatrix hstack(const BitMatrix &a, const BitMatrix &b) {
    require(a.rows() == b.rows(), "cannot join matrices with different row counts");
    std::vector<BitVector> out;
    out.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out.push_back(a.row(i).concat(b.row(i)));
    }
    return BitMatrix(a.cols() + b.cols(), std::move(out));
}

Echelon rref(const BitMatrix &m) {
    std::vector<BitVector> rows(m.row_vectors().begin(), m.row_vectors().end());
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && !rows[pivot].get(c)) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i].get(c)) {
                rows[i] ^= rows[r];
            }
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.rank = r;
    e.matrix = BitMatrix(m.cols(), std::move(rows));
    return e;
}

std::size_t rank(const BitMatrix &m) {
    return rref(m).rank;
}

BitMatrix row_basis(const BitMatrix &m) {
    Echelon e = rref(m);
    return e.matrix.row_range(0, e.rank);
}

BitMatrix kernel(const BitMatrix &m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(m.cols());
        v.set(f);
        for (std::size_t i = 0; i < e.rank; ++i) {
            if (e.matrix.get(i, f)) {
                v.set(e.pivots[i]);
            }
        }
        basis.push_back(std::move(v));
    }
    return BitMatrix(m.cols(), std::move(basis));
}

BitMatrix inverse(const BitMatrix &m) {
    if (!m.is_square()) {
        throw Error(Errc::singular_matrix, "only square matrices are invertible");
    }
    std::size_t n = m.rows();
    Echelon e = rref(hstack(m, BitMatrix::identity(n)));
    if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
        throw Error(Errc::singular_matrix, "matrix of size " + std::to_string(n) + " is singular");
    }
    std::vector<BitVector> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(e.matrix.row(i).slice(n, 2 * n));
    }
    return BitMatrix(n, std::move(out));
}

bool row_space_contains(const BitMatrix &m, const BitVector &v) {
    require(v.size() == m.cols(), "vector length does not match matrix width");
    Echelon e = rref(m);
    BitVector residue = v;
    reduce(residue, e);
    return residue.is_zero();
}

bool row_space_equal(const BitMatrix &a, const BitMatrix &b) {
    require(a.cols() == b.cols(), "cannot compare row spaces of different width");
    return row_basis(a) == row_basis(b);
}

BitMatrix quotient_basis(const BitMatrix &outer, const BitMatrix &inner) {
    require(outer.cols() == inner.cols(), "quotient of matrices with different width");
    Echelon e = rref(inner);
    std::vector<BitVector> reduced;
    reduced.reserve(outer.rows());
    for (const auto &row : outer.row_vectors()) {
        BitVector v = row;
        reduce(v, e);
        reduced.push_back(std::move(v));
    }
    return row_basis(BitMatrix(outer.cols(), std::move(reduced)));
}

}  // namespace qcss
