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

#ifndef QCSS_BIT_VECTOR_H_
#define QCSS_BIT_VECTOR_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcss {

/// A fixed-length string of bits packed into 64-bit words.
///
/// Bit i lives in word i / 64 at position i % 64. Bits past size() are kept
/// zero so that word-wise equality, hashing and popcount need no masking.
class BitVector {
   public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t length);

    /// Parses a string of '0'/'1' characters; character i becomes bit i.
    static BitVector from_string(std::string_view bits);
    /// Copies `words`, clearing any bits at or beyond `length`.
    static BitVector from_words(std::size_t length, std::span<const Word> words);

    static constexpr std::size_t words_for(std::size_t bits) noexcept {
        return (bits + kWordBits - 1) / kWordBits;
    }

    std::size_t size() const noexcept {
        return length_;
    }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;
    std::optional<std::size_t> first_set() const noexcept;

    /// Parity of the bitwise AND (the GF(2) dot product).
    bool dot(const BitVector &other) const;

    /// The vector formed by this one followed by `tail`.
    BitVector concat(const BitVector &tail) const;
    /// Bits [begin, end) as a new vector.
    BitVector slice(std::size_t begin, std::size_t end) const;

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);

    friend BitVector operator^(BitVector a, const BitVector &b) {
        return a ^= b;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        return a &= b;
    }
    friend BitVector operator|(BitVector a, const BitVector &b) {
        return a |= b;
    }
    bool operator==(const BitVector &other) const = default;

    std::span<const Word> words() const noexcept {
        return words_;
    }
    std::string to_string() const;

   private:
    void require_same_size(const BitVector &other) const;

    std::size_t length_ = 0;
    std::vector<Word> words_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector &v) const noexcept;
};

}  // namespace qcss

#endif  // QCSS_BIT_VECTOR_H_
