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

#include "qcss/bit_vector.h"

#include "qcss/error.h"

namespace qcss {

BitVector::BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw Error(Errc::parse_error, "bit string may only contain '0' and '1'");
        }
    }
    return v;
}

BitVector BitVector::from_words(std::size_t length, std::span<const Word> words) {
    BitVector v(length);
    std::size_t count = std::min(words.size(), v.words_.size());
    for (std::size_t i = 0; i < count; ++i) {
        v.words_[i] = words[i];
    }
    if (length % kWordBits != 0 && !v.words_.empty()) {
        v.words_.back() &= (Word{1} << (length % kWordBits)) - 1;
    }
    return v;
}

bool BitVector::get(std::size_t i) const {
    if (i >= length_) {
        throw Error(Errc::dimension_mismatch, "bit index out of range");
    }
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVector::set(std::size_t i, bool value) {
    if (i >= length_) {
        throw Error(Errc::dimension_mismatch, "bit index out of range");
    }
    Word mask = Word{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

void BitVector::flip(std::size_t i) {
    if (i >= length_) {
        throw Error(Errc::dimension_mismatch, "bit index out of range");
    }
    words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

std::size_t BitVector::weight() const noexcept {
    std::size_t total = 0;
    for (Word w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool BitVector::is_zero() const noexcept {
    for (Word w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

std::optional<std::size_t> BitVector::first_set() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] != 0) {
            return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
        }
    }
    return std::nullopt;
}

bool BitVector::dot(const BitVector &other) const {
    require_same_size(other);
    Word acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        acc ^= words_[i] & other.words_[i];
    }
    return std::popcount(acc) & 1;
}

BitVector BitVector::concat(const BitVector &tail) const {
    BitVector out(length_ + tail.length_);
    std::copy(words_.begin(), words_.end(), out.words_.begin());
    for (std::size_t i = 0; i < tail.length_; ++i) {
        if (tail.get(i)) {
            out.set(length_ + i);
        }
    }
    return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t end) const {
    if (begin > end || end > length_) {
        throw Error(Errc::dimension_mismatch, "slice bounds out of range");
    }
    BitVector out(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        if (get(i)) {
            out.set(i - begin);
        }
    }
    return out;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_size(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require_same_size(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    require_same_size(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

std::string BitVector::to_string() const {
    std::string out(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

void BitVector::require_same_size(const BitVector &other) const {
    if (length_ != other.length_) {
        throw Error(Errc::dimension_mismatch,
                    "bit vectors of length " + std::to_string(length_) + " and " +
                        std::to_string(other.length_));
    }
}

std::size_t BitVectorHash::operator()(const BitVector &v) const noexcept {
    std::size_t h = v.size() * 0x9E3779B97F4A7C15ULL;
    for (auto w : v.words()) {
        h ^= static_cast<std::size_t>(w) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace qcss
