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

#ifndef QCSS_LINEAR_CODE_H_
#define QCSS_LINEAR_CODE_H_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "qcss/bit_matrix.h"

namespace qcss {

/// A binary linear [n, k] code held as a full-rank generator matrix together
/// with a full-rank check matrix, generator * check^T = 0.
///
/// `distance` is only ever set from an exhaustive computation (or by a caller
/// who has one); `designed_distance` is a proven lower bound such as the BCH
/// bound.
class LinearCode {
   public:
    /// Rows need not be independent; a dependent set is replaced by its
    /// reduced basis.
    static LinearCode from_generator(const BitMatrix &generator);
    static LinearCode from_check(const BitMatrix &check);

    std::size_t n() const noexcept {
        return generator_.cols();
    }
    std::size_t k() const noexcept {
        return generator_.rows();
    }
    const BitMatrix &generator() const noexcept {
        return generator_;
    }
    const BitMatrix &check() const noexcept {
        return check_;
    }
    std::optional<std::size_t> distance() const noexcept {
        return distance_;
    }
    std::optional<std::size_t> designed_distance() const noexcept {
        return designed_;
    }
    /// The verified distance when known, else the designed one.
    std::optional<std::size_t> best_known_distance() const noexcept {
        return distance_ ? distance_ : designed_;
    }

    LinearCode with_distance(std::size_t d) const;
    LinearCode with_designed_distance(std::size_t d) const;

   private:
    LinearCode(BitMatrix generator, BitMatrix check);

    BitMatrix generator_;
    BitMatrix check_;
    std::optional<std::size_t> distance_;
    std::optional<std::size_t> designed_;
};

/// Generator and check swapped; distances are dropped.
LinearCode dual(const LinearCode &c);

/// True iff every codeword of `inner` is a codeword of `outer`.
/// Throws Errc::length_mismatch for different n.
bool contains(const LinearCode &outer, const LinearCode &inner);

/// Appends an overall parity bit to every codeword.
LinearCode extend_parity(const LinearCode &c);

/// Deletes the last coordinate. Applied to an extended code this recovers the
/// code it was extended from.
LinearCode puncture_last(const LinearCode &c);

/// The [n, n-1, 2] code of all even-weight words.
LinearCode even_weight_code(std::size_t n);

/// The [n, 1, n] code spanned by the all-ones word.
LinearCode repetition_code(std::size_t n);

struct DistanceCaps {
    /// Largest 2^k for which all codewords are enumerated.
    std::uint64_t codewords = std::uint64_t{1} << 28;
    /// Largest number of check-matrix column subsets examined.
    std::uint64_t subsets = 1'000'000'000;
    /// 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
};

enum class DistanceMethod { enumeration, column_search, unverified, empty_code };

struct DistanceResult {
    /// Exact minimum distance when verified.
    std::optional<std::size_t> distance;
    /// Proven lower bound: exact distance, or the best of the designed
    /// distance and what a partial column search ruled out.
    std::size_t lower_bound = 0;
    DistanceMethod method = DistanceMethod::unverified;
    std::uint64_t work = 0;

    bool verified() const noexcept {
        return distance.has_value();
    }
};

/// Exact minimum distance by Gray-code enumeration when 2^k fits the
/// codeword cap, otherwise by searching for the smallest set of dependent
/// check-matrix columns while the subset count fits; otherwise unverified.
DistanceResult min_distance(const LinearCode &c, const DistanceCaps &caps = {});

/// Always enumerates all 2^k codewords (sharded over threads).
std::size_t min_distance_enumerate(const LinearCode &c, unsigned threads = 0);

/// Smallest w such that some w columns of the check matrix sum to zero,
/// giving up once more than `subset_cap` subsets would be needed. On give-up
/// returns nullopt and stores the weight proven impossible-below in
/// *proven_lower_bound.
std::optional<std::size_t> min_distance_column_search(const LinearCode &c, std::uint64_t subset_cap,
                                                      std::size_t *proven_lower_bound = nullptr,
                                                      std::uint64_t *work = nullptr);

}  // namespace qcss

#endif  // QCSS_LINEAR_CODE_H_
