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

// Independent reference implementations used by the tests. They work on
// plain std::vector<int> and loops, sharing no code with the library.

#ifndef QCSS_TESTS_ORACLES_H_
#define QCSS_TESTS_ORACLES_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qcss/bit_matrix.h"

namespace oracle {

using Rows = std::vector<std::vector<int>>;

inline Rows to_rows(const qcss::BitMatrix &m) {
    Rows out(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out[r][c] = m.get(r, c) ? 1 : 0;
        }
    }
    return out;
}

inline std::size_t rank(Rows a) {
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) {
            ++p;
        }
        if (p == a.size()) {
            continue;
        }
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r != rank && a[r][c] == 1) {
                for (std::size_t j = 0; j < cols; ++j) {
                    a[r][j] ^= a[rank][j];
                }
            }
        }
        ++rank;
    }
    return rank;
}

inline Rows multiply(const Rows &a, const Rows &b, std::size_t b_cols) {
    Rows out(a.size(), std::vector<int>(b_cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k]) {
                for (std::size_t j = 0; j < b_cols; ++j) {
                    out[i][j] ^= b[k][j];
                }
            }
        }
    }
    return out;
}

/// Every linear combination of the rows, including zero.
inline std::vector<std::vector<int>> span(const Rows &g, std::size_t n) {
    std::set<std::vector<int>> words;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
        std::vector<int> w(n, 0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if ((mask >> i) & 1) {
                for (std::size_t j = 0; j < n; ++j) {
                    w[j] ^= g[i][j];
                }
            }
        }
        words.insert(w);
    }
    return {words.begin(), words.end()};
}

inline std::size_t weight(const std::vector<int> &w) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), 1));
}

/// Minimum nonzero weight of the row space; 0 for the zero code.
inline std::size_t min_distance(const qcss::BitMatrix &g) {
    std::size_t best = 0;
    for (const auto &w : span(to_rows(g), g.cols())) {
        std::size_t wt = weight(w);
        if (wt > 0 && (best == 0 || wt < best)) {
            best = wt;
        }
    }
    return best;
}

struct QuantumOracle {
    std::size_t distance = 0;
    std::size_t min_weight_all = 0;
};

/// Brute force over the row space of the 2n-column generator [Gx | Gz]:
/// the distance is the least symplectic weight of a vector that fails to
/// commute with some generator row.
inline QuantumOracle quantum_distance(const qcss::BitMatrix &gx, const qcss::BitMatrix &gz) {
    const std::size_t n = gx.cols();
    Rows g = to_rows(qcss::hstack(gx, gz));
    QuantumOracle out;
    out.distance = n + 1;
    out.min_weight_all = n + 1;
    for (const auto &w : span(g, 2 * n)) {
        std::size_t wt = 0;
        for (std::size_t j = 0; j < n; ++j) {
            wt += (w[j] | w[n + j]) ? 1 : 0;
        }
        if (wt == 0) {
            continue;
        }
        out.min_weight_all = std::min(out.min_weight_all, wt);
        bool in_dual = true;
        for (const auto &row : g) {
            int s = 0;
            for (std::size_t j = 0; j < n; ++j) {
                s ^= (w[j] & row[n + j]) ^ (w[n + j] & row[j]);
            }
            in_dual = in_dual && s == 0;
        }
        if (!in_dual) {
            out.distance = std::min(out.distance, wt);
        }
    }
    if (out.distance == n + 1) {
        out.distance = out.min_weight_all;
    }
    return out;
}

/// Cyclotomic cosets by repeated doubling, as sorted sets.
inline std::vector<std::vector<std::size_t>> cosets(std::size_t n) {
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) {
            continue;
        }
        std::vector<std::size_t> c;
        std::size_t x = s;
        do {
            seen[x] = true;
            c.push_back(x);
            x = (2 * x) % n;
        } while (x != s);
        std::sort(c.begin(), c.end());
        out.push_back(c);
    }
    return out;
}

/// Shift-and-add multiplication modulo an irreducible of degree m.
inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned m) {
    std::uint32_t r = 0;
    while (b != 0) {
        if (b & 1) {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if (a & (1u << m)) {
            a ^= modulus;
        }
    }
    return r;
}

inline qcss::BitMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, double p = 0.5) {
    std::bernoulli_distribution bit(p);
    std::vector<qcss::BitVector> data;
    for (std::size_t r = 0; r < rows; ++r) {
        qcss::BitVector v(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            if (bit(rng)) {
                v.set(c);
            }
        }
        data.push_back(v);
    }
    return qcss::BitMatrix(cols, std::move(data));
}

}  // namespace oracle

#endif  // QCSS_TESTS_ORACLES_H_
