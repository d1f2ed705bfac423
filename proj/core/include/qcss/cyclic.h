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

#ifndef QCSS_CYCLIC_H_
#define QCSS_CYCLIC_H_

#include <cstddef>
#include <vector>

#include "qcss/gf2m.h"
#include "qcss/linear_code.h"

namespace qcss {

/// Doubling orbit {s, 2s, 4s, ...} mod n, stored sorted.
struct CyclotomicCoset {
    std::size_t n = 0;
    /// Smallest element.
    std::size_t representative = 0;
    std::vector<std::size_t> elements;

    std::size_t size() const noexcept {
        return elements.size();
    }
    bool contains(std::size_t value) const;
};

/// Throws Errc::even_length for even n and Errc::invalid_argument for s >= n.
CyclotomicCoset cyclotomic_coset(std::size_t n, std::size_t s);

/// All cosets mod n ordered by representative; they partition {0, ..., n-1}.
std::vector<CyclotomicCoset> cyclotomic_cosets(std::size_t n);

/// A BCH code described by its defining set: the union of the cosets of
/// b, b+1, ..., b+delta-2.
struct BchSpec {
    std::size_t n = 0;
    std::size_t b = 1;
    std::size_t delta = 2;
    /// Sorted union of cosets.
    std::vector<std::size_t> defining_set;
    /// Representatives of the distinct cosets making up the defining set.
    std::vector<std::size_t> cosets;
    std::size_t k = 0;

    bool in_defining_set(std::size_t i) const;
    /// One more than the longest run b, b+1, ... inside the defining set.
    /// May exceed `delta` when the cosets happen to cover more consecutive
    /// exponents than requested.
    std::size_t bch_bound() const;
};

/// Throws Errc::even_length for even n, Errc::invalid_argument for delta < 2.
BchSpec bch_spec(std::size_t n, std::size_t b, std::size_t delta);

/// g(x) = product of the minimal polynomials of alpha^s over the distinct
/// cosets of the defining set.
Poly2 bch_generator_polynomial(const BchSpec &spec, const RootOfUnity &root);
Poly2 bch_generator_polynomial(const BchSpec &spec);

/// The cyclic code generated by g(x): k = n - deg g cyclic shifts of g as
/// rows. Designed distance is set to spec.bch_bound().
LinearCode bch_code(const BchSpec &spec, const RootOfUnity &root);
LinearCode bch_code(const BchSpec &spec);

/// True iff no i in the defining set has (n - i) mod n in the defining set,
/// which makes the code contain its dual.
bool is_dual_containing(const BchSpec &spec);

/// Largest delta for which the narrow-sense code of length n is
/// dual-containing (1 if none with delta >= 2 is).
std::size_t max_dual_containing_delta(std::size_t n);

bool is_primitive_length(std::size_t n);

/// Odd n in (1, limit] whose coset C_1 does not contain n - 1.
std::vector<std::size_t> scan_nonprimitive(std::size_t limit);

/// Non-primitive lengths from scan_nonprimitive in (lo, hi] whose coset C_1
/// has at most `max_coset_size` elements. A small C_1 gives a high-rate
/// first dual-containing code.
std::vector<std::size_t> scan_small_cosets(std::size_t lo, std::size_t hi, std::size_t max_coset_size);

}  // namespace qcss

#endif  // QCSS_CYCLIC_H_
