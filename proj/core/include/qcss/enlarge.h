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

#ifndef QCSS_ENLARGE_H_
#define QCSS_ENLARGE_H_

#include <cstddef>
#include <optional>

#include "qcss/bit_matrix.h"
#include "qcss/linear_code.h"
#include "qcss/stabilizer.h"

namespace qcss {

/// Whether the claimed quantum distance was computed from verified classical
/// distances or from designed (lower-bound) distances.
enum class DistanceBasis { verified, designed, unknown };

/// Every intermediate of the enlarged construction, kept for verification.
///
/// With G generating C, the quantum generator is
///     ( D | A D )
///     ( G |  0  )
///     ( 0 |  G  )
/// and the stabilizer is
///     ( A~ B | B  )
///     (  H'  | 0  )
///     (  0   | H' )
/// where H' checks C', {H', B} checks C, and A~ = B D^T (A^T)^-1 (B D^T)^-1.
struct EnlargementRecord {
    LinearCode c;
    LinearCode c_prime;
    /// (k' - k) x n coset representatives of C' / C.
    BitMatrix coset_reps;
    /// (k' - k) x n checks of C that are not checks of C'.
    BitMatrix extra_checks;
    /// (n - k') x n checks of C'.
    BitMatrix h_prime;
    /// (k' - k) square fixed-point-free map.
    BitMatrix a;
    BitMatrix a_tilde;
    StabilizerCode quantum;
    DistanceBasis basis = DistanceBasis::unknown;
};

/// ceil(3 d' / 2) in integer arithmetic.
constexpr std::size_t three_halves_ceil(std::size_t d) {
    return (3 * d + 1) / 2;
}

/// min(d, ceil(3 d' / 2)).
constexpr std::size_t enlarged_distance(std::size_t d, std::size_t d_prime) {
    return d < three_halves_ceil(d_prime) ? d : three_halves_ceil(d_prime);
}

/// Rows completing a generator of C to a generator of C': the reduced basis
/// of C' modulo C. Throws Errc::not_a_subcode or Errc::dimension_order.
BitMatrix coset_complement(const LinearCode &c, const LinearCode &c_prime);

/// Rows that together with the checks of C' check C.
BitMatrix extra_check_rows(const LinearCode &c, const LinearCode &c_prime);

/// The cyclic-shift map: row i has a single 1 in column i + 1, the last row
/// is 1100...0. Throws Errc::size_too_small for size < 2.
BitMatrix fixed_point_free_map(std::size_t size);

/// True iff a and a + I are both invertible, i.e. u a = u only for u = 0.
bool is_fixed_point_free(const BitMatrix &a);

/// B D^T (A^T)^-1 (B D^T)^-1, checked to satisfy A~ B (A D)^T = B D^T.
/// Throws Errc::singular_matrix when B D^T or A is singular.
BitMatrix compensating_map(const BitMatrix &a, const BitMatrix &extra_checks, const BitMatrix &coset_reps);

/// Builds the enlarged code from a dual-containing C inside C' with
/// k' > k + 1. Every algebraic invariant is re-checked; a failure throws
/// Errc::construction_invariant or Errc::commutation_violated.
EnlargementRecord enlarge(const LinearCode &c, const LinearCode &c_prime);

/// Repeats the construction on both codes punctured at the last coordinate
/// (undoing a parity extension) and checks the result is
/// [[n-1, K+1, D-1]]. Throws Errc::not_applicable when D <= 3.
EnlargementRecord unextended_variant(const EnlargementRecord &record);

}  // namespace qcss

#endif  // QCSS_ENLARGE_H_
