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

#include "qcss/linear_code.h"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gray_walk.h"
#include "qcss/error.h"

namespace qcss {

namespace {

BitMatrix full_rank_rows(const BitMatrix &m) {
    return rank(m) == m.rows() ? m : row_basis(m);
}

BitMatrix all_ones_row(std::size_t n) {
    BitVector ones(n);
    for (std::size_t i = 0; i < n; ++i) {
        ones.set(i);
    }
    return BitMatrix(n, {ones});
}

// C(n, r) saturated at the u64 maximum.
std::uint64_t binomial(std::size_t n, std::size_t r) {
    if (r > n) {
        return 0;
    }
    r = std::min(r, n - r);
    __extension__ using Wide = unsigned __int128;
    Wide acc = 1;
    for (std::size_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(acc);
}

struct MinWeight {
    std::size_t words;
    std::size_t best = std::numeric_limits<std::size_t>::max();

    template <std::size_t W>
    void visit(const std::uint64_t *v) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < W; ++i) {
            w += static_cast<std::size_t>(std::popcount(v[i]));
        }
        best = std::min(best, w);
    }
};

// Depth-first search over column subsets of increasing index; at the last
// level a hash lookup finds any later column equal to the running sum.
class ColumnSearch {
   public:
    explicit ColumnSearch(const BitMatrix &check) : columns_(check.transpose()) {
        for (std::size_t j = 0; j < columns_.rows(); ++j) {
            by_value_[columns_.row(j)].push_back(j);
        }
    }

    bool exists(std::size_t weight, std::uint64_t &work) {
        BitVector zero(columns_.cols());
        if (weight == 1) {
            ++work;
            return by_value_.count(zero) != 0;
        }
        return descend(zero, 0, weight - 1, work);
    }

   private:
    // `remaining` more columns to choose from index `from` before the final
    // lookup.
    bool descend(const BitVector &sum, std::size_t from, std::size_t remaining, std::uint64_t &work) {
        if (remaining == 0) {
            ++work;
            auto it = by_value_.find(sum);
            if (it == by_value_.end()) {
                return false;
            }
            return std::any_of(it->second.begin(), it->second.end(), [&](std::size_t j) { return j >= from; });
        }
        for (std::size_t j = from; j + remaining < columns_.rows() + 1; ++j) {
            if (descend(sum ^ columns_.row(j), j + 1, remaining - 1, work)) {
                return true;
            }
        }
        return false;
    }

    BitMatrix columns_;
    std::unordered_map<BitVector, std::vector<std::size_t>, BitVectorHash> by_value_;
};

}  // namespace

LinearCode::LinearCode(BitMatrix generator, BitMatrix check)
    : generator_(std::move(generator)), check_(std::move(check)) {
}

LinearCode LinearCode::from_generator(const BitMatrix &generator) {
    BitMatrix g = full_rank_rows(generator);
    BitMatrix h = kernel(g);
    return LinearCode(std::move(g), std::move(h));
}

LinearCode LinearCode::from_check(const BitMatrix &check) {
    BitMatrix h = full_rank_rows(check);
    BitMatrix g = kernel(h);
    return LinearCode(std::move(g), std::move(h));
}

LinearCode LinearCode::with_distance(std::size_t d) const {
    LinearCode out = *this;
    out.distance_ = d;
    return out;
}

LinearCode LinearCode::with_designed_distance(std::size_t d) const {
    LinearCode out = *this;
    out.designed_ = d;
    return out;
}

LinearCode dual(const LinearCode &c) {
    return LinearCode::from_generator(c.check());
}

bool contains(const LinearCode &outer, const LinearCode &inner) {
    if (outer.n() != inner.n()) {
        throw Error(Errc::length_mismatch,
                    "codes of length " + std::to_string(outer.n()) + " and " + std::to_string(inner.n()));
    }
    for (const auto &word : inner.generator().row_vectors()) {
        for (const auto &parity : outer.check().row_vectors()) {
            if (word.dot(parity)) {
                return false;
            }
        }
    }
    return true;
}

LinearCode extend_parity(const LinearCode &c) {
    std::vector<BitVector> rows;
    rows.reserve(c.k());
    for (const auto &row : c.generator().row_vectors()) {
        BitVector parity(1);
        parity.set(0, row.weight() % 2 == 1);
        rows.push_back(row.concat(parity));
    }
    LinearCode out = LinearCode::from_generator(BitMatrix(c.n() + 1, std::move(rows)));
    auto bump = [](std::size_t d) { return d % 2 == 1 ? d + 1 : d; };
    if (c.distance()) {
        out = out.with_distance(bump(*c.distance()));
    }
    if (c.designed_distance()) {
        out = out.with_designed_distance(bump(*c.designed_distance()));
    }
    return out;
}

LinearCode puncture_last(const LinearCode &c) {
    if (c.n() == 0) {
        throw Error(Errc::invalid_argument, "cannot puncture a length-0 code");
    }
    std::vector<BitVector> rows;
    rows.reserve(c.k());
    for (const auto &row : c.generator().row_vectors()) {
        rows.push_back(row.slice(0, c.n() - 1));
    }
    LinearCode out = LinearCode::from_generator(BitMatrix(c.n() - 1, std::move(rows)));
    if (auto d = c.best_known_distance(); d && *d > 1) {
        out = out.with_designed_distance(*d - 1);
    }
    return out;
}

LinearCode even_weight_code(std::size_t n) {
    if (n < 2) {
        throw Error(Errc::invalid_argument, "even-weight code needs n >= 2");
    }
    return LinearCode::from_check(all_ones_row(n)).with_distance(2).with_designed_distance(2);
}

LinearCode repetition_code(std::size_t n) {
    if (n < 1) {
        throw Error(Errc::invalid_argument, "repetition code needs n >= 1");
    }
    return LinearCode::from_generator(all_ones_row(n)).with_distance(n).with_designed_distance(n);
}

std::size_t min_distance_enumerate(const LinearCode &c, unsigned threads) {
    if (c.k() == 0) {
        throw Error(Errc::invalid_argument, "the zero code has no nonzero codeword");
    }
    if (c.k() >= 63) {
        throw Error(Errc::invalid_argument, "too many codewords to enumerate");
    }
    const std::size_t words = BitVector::words_for(c.n());
    return detail::dispatch_words(words, [&](auto width) {
        constexpr std::size_t W = decltype(width)::value;
        std::vector<std::uint64_t> rows(c.k() * W, 0);
        for (std::size_t i = 0; i < c.k(); ++i) {
            auto src = c.generator().row(i).words();
            std::copy(src.begin(), src.end(), rows.begin() + static_cast<std::ptrdiff_t>(i * W));
        }
        struct Eval {
            MinWeight state{W};
            void operator()(const std::uint64_t *v) {
                state.visit<W>(v);
            }
        };
        auto evals = detail::gray_walk<W>(rows, c.k(), threads, [] { return Eval{}; });
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (const auto &e : evals) {
            best = std::min(best, e.state.best);
        }
        return best;
    });
}

std::optional<std::size_t> min_distance_column_search(const LinearCode &c, std::uint64_t subset_cap,
                                                      std::size_t *proven_lower_bound, std::uint64_t *work) {
    std::uint64_t spent = 0;
    ColumnSearch search(c.check());
    std::size_t w = 1;
    for (; w <= c.n(); ++w) {
        // The final column is a hash lookup, so the cost is C(n, w - 1).
        std::uint64_t cost = binomial(c.n(), w - 1);
        if (cost > subset_cap || spent > subset_cap - cost) {
            break;
        }
        if (search.exists(w, spent)) {
            if (proven_lower_bound) {
                *proven_lower_bound = w;
            }
            if (work) {
                *work = spent;
            }
            return w;
        }
    }
    if (proven_lower_bound) {
        *proven_lower_bound = w;
    }
    if (work) {
        *work = spent;
    }
    return std::nullopt;
}

DistanceResult min_distance(const LinearCode &c, const DistanceCaps &caps) {
    DistanceResult result;
    if (c.k() == 0) {
        result.method = DistanceMethod::empty_code;
        return result;
    }
    if (c.k() < 63 && (std::uint64_t{1} << c.k()) <= caps.codewords) {
        std::size_t d = min_distance_enumerate(c, caps.threads);
        result.distance = d;
        result.lower_bound = d;
        result.method = DistanceMethod::enumeration;
        result.work = std::uint64_t{1} << c.k();
        return result;
    }
    std::size_t proven = 1;
    std::uint64_t work = 0;
    auto d = min_distance_column_search(c, caps.subsets, &proven, &work);
    result.work = work;
    if (d) {
        result.distance = d;
        result.lower_bound = *d;
        result.method = DistanceMethod::column_search;
        return result;
    }
    result.method = DistanceMethod::unverified;
    result.lower_bound = std::max(proven, c.designed_distance().value_or(0));
    return result;
}

}  // namespace qcss
