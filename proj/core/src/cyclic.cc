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

#include "qcss/cyclic.h"

#include <algorithm>
#include <set>

#include "qcss/error.h"

namespace qcss {

namespace {

void require_odd(std::size_t n) {
    if (n % 2 == 0) {
        throw Error(Errc::even_length, "cyclotomic cosets over GF(2) need odd n, got " + std::to_string(n));
    }
}

}  // namespace

bool CyclotomicCoset::contains(std::size_t value) const {
    return std::binary_search(elements.begin(), elements.end(), value);
}

CyclotomicCoset cyclotomic_coset(std::size_t n, std::size_t s) {
    require_odd(n);
    if (s >= n) {
        throw Error(Errc::invalid_argument, "coset exponent must be below n");
    }
    CyclotomicCoset c;
    c.n = n;
    std::size_t x = s;
    do {
        c.elements.push_back(x);
        x = (2 * x) % n;
    } while (x != s);
    std::sort(c.elements.begin(), c.elements.end());
    c.representative = c.elements.front();
    return c;
}

std::vector<CyclotomicCoset> cyclotomic_cosets(std::size_t n) {
    require_odd(n);
    std::vector<bool> seen(n, false);
    std::vector<CyclotomicCoset> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) {
            continue;
        }
        out.push_back(cyclotomic_coset(n, s));
        for (auto e : out.back().elements) {
            seen[e] = true;
        }
    }
    return out;
}

bool BchSpec::in_defining_set(std::size_t i) const {
    return std::binary_search(defining_set.begin(), defining_set.end(), i % n);
}

std::size_t BchSpec::bch_bound() const {
    std::size_t run = 0;
    while (run < n && in_defining_set(b + run)) {
        ++run;
    }
    return run + 1;
}

BchSpec bch_spec(std::size_t n, std::size_t b, std::size_t delta) {
    require_odd(n);
    if (delta < 2) {
        throw Error(Errc::invalid_argument, "designed distance must be at least 2");
    }
    BchSpec spec;
    spec.n = n;
    spec.b = b;
    spec.delta = delta;
    std::set<std::size_t> members;
    std::set<std::size_t> reps;
    for (std::size_t s = b; s <= b + delta - 2; ++s) {
        std::size_t e = s % n;
        if (members.count(e)) {
            continue;
        }
        auto c = cyclotomic_coset(n, e);
        reps.insert(c.representative);
        members.insert(c.elements.begin(), c.elements.end());
    }
    spec.defining_set.assign(members.begin(), members.end());
    spec.cosets.assign(reps.begin(), reps.end());
    spec.k = n - spec.defining_set.size();
    return spec;
}

Poly2 bch_generator_polynomial(const BchSpec &spec, const RootOfUnity &root) {
    if (root.n != spec.n) {
        throw Error(Errc::invalid_argument, "root of unity order does not match code length");
    }
    Poly2 g = Poly2::from_bits(1);
    for (auto s : spec.cosets) {
        g = g * minimal_polynomial(root.alpha, s, spec.n);
    }
    return g;
}

Poly2 bch_generator_polynomial(const BchSpec &spec) {
    return bch_generator_polynomial(spec, nth_root_of_unity(spec.n));
}

LinearCode bch_code(const BchSpec &spec, const RootOfUnity &root) {
    Poly2 g = bch_generator_polynomial(spec, root);
    if (g.degree() != static_cast<long>(spec.n - spec.k)) {
        throw Error(Errc::construction_invariant, "deg g(x) = " + std::to_string(g.degree()) +
                                                      " but the defining set has " +
                                                      std::to_string(spec.n - spec.k) + " elements");
    }
    BitVector base = g.to_bits(spec.n);
    std::vector<BitVector> rows;
    rows.reserve(spec.k);
    for (std::size_t shift = 0; shift < spec.k; ++shift) {
        BitVector row(spec.n);
        for (long i = 0; i <= g.degree(); ++i) {
            if (base.get(static_cast<std::size_t>(i))) {
                row.set(static_cast<std::size_t>(i) + shift);
            }
        }
        rows.push_back(std::move(row));
    }
    return LinearCode::from_generator(BitMatrix(spec.n, std::move(rows))).with_designed_distance(spec.bch_bound());
}

LinearCode bch_code(const BchSpec &spec) {
    return bch_code(spec, nth_root_of_unity(spec.n));
}

bool is_dual_containing(const BchSpec &spec) {
    for (auto i : spec.defining_set) {
        if (spec.in_defining_set((spec.n - i) % spec.n)) {
            return false;
        }
    }
    return true;
}

std::size_t max_dual_containing_delta(std::size_t n) {
    require_odd(n);
    std::size_t best = 1;
    for (std::size_t delta = 2; delta <= n + 1; ++delta) {
        if (!is_dual_containing(bch_spec(n, 1, delta))) {
            break;
        }
        best = delta;
    }
    return best;
}

bool is_primitive_length(std::size_t n) {
    return n >= 1 && ((n + 1) & n) == 0;
}

std::vector<std::size_t> scan_nonprimitive(std::size_t limit) {
    std::vector<std::size_t> out;
    for (std::size_t n = 3; n <= limit; n += 2) {
        auto c1 = cyclotomic_coset(n, 1);
        bool excluded = c1.contains(n - 1);
        // A self-reciprocal coset has even size, and coset sizes divide |C_1|.
        if (c1.size() % 2 == 1 && excluded) {
            throw Error(Errc::construction_invariant, "odd-size C_1 contains -1 mod " + std::to_string(n));
        }
        if (!excluded) {
            out.push_back(n);
        }
    }
    return out;
}

std::vector<std::size_t> scan_small_cosets(std::size_t lo, std::size_t hi, std::size_t max_coset_size) {
    std::vector<std::size_t> out;
    for (auto n : scan_nonprimitive(hi)) {
        if (n <= lo || is_primitive_length(n)) {
            continue;
        }
        if (cyclotomic_coset(n, 1).size() <= max_coset_size) {
            out.push_back(n);
        }
    }
    return out;
}

}  // namespace qcss
