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

#ifndef QCSS_GF2M_H_
#define QCSS_GF2M_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>

#include "qcss/bit_vector.h"

namespace qcss {

/// Polynomial over GF(2). Coefficient i multiplies x^i; the stored bit vector
/// is trimmed so its last bit is the leading coefficient.
class Poly2 {
   public:
    Poly2() = default;

    static Poly2 from_bits(std::uint64_t bits);
    static Poly2 from_exponents(std::initializer_list<std::size_t> exponents);
    static Poly2 from_coefficients(const BitVector &coefficients);
    static Poly2 monomial(std::size_t degree);

    /// -1 for the zero polynomial.
    long degree() const noexcept {
        return static_cast<long>(coeffs_.size()) - 1;
    }
    bool is_zero() const noexcept {
        return coeffs_.size() == 0;
    }
    bool coefficient(std::size_t i) const noexcept {
        return i < coeffs_.size() && coeffs_.get(i);
    }
    std::size_t weight() const noexcept {
        return coeffs_.weight();
    }
    /// Coefficient vector padded (or truncated) to `length` bits.
    BitVector to_bits(std::size_t length) const;
    /// Human-readable form, highest power first, e.g. "x^3 + x + 1".
    std::string to_string() const;

    friend Poly2 operator+(const Poly2 &a, const Poly2 &b);
    friend Poly2 operator*(const Poly2 &a, const Poly2 &b);
    bool operator==(const Poly2 &other) const = default;

   private:
    void normalize();
    BitVector coeffs_;
};

/// Quotient and remainder of a / b. Throws Errc::invalid_argument if b = 0.
std::pair<Poly2, Poly2> divmod(const Poly2 &a, const Poly2 &b);

/// GF(2^m) realised as GF(2)[x] / (modulus). Polynomials are bit-encoded with
/// the low bit holding the constant term.
struct FieldContext {
    unsigned m = 1;
    std::uint32_t modulus = 0b11;
    std::uint32_t generator = 1;

    std::uint32_t size() const noexcept {
        return std::uint32_t{1} << m;
    }
    /// Order of the multiplicative group, 2^m - 1.
    std::uint64_t group_order() const noexcept {
        return (std::uint64_t{1} << m) - 1;
    }
};

using FieldPtr = std::shared_ptr<const FieldContext>;

inline constexpr unsigned kMaxFieldDegree = 16;

bool is_irreducible(std::uint32_t poly);
/// Smallest bit-encoded irreducible polynomial of degree m.
std::uint32_t least_irreducible(unsigned m);

/// Field with the least irreducible modulus and least primitive generator.
/// Throws Errc::unsupported_degree outside 1..16.
FieldPtr make_field(unsigned m);
/// Field with an explicit modulus, which must be irreducible of degree m.
FieldPtr make_field(unsigned m, std::uint32_t modulus);

class FieldElement {
   public:
    FieldElement(FieldPtr field, std::uint32_t value);

    static FieldElement zero(FieldPtr field) {
        return FieldElement(std::move(field), 0);
    }
    static FieldElement one(FieldPtr field) {
        return FieldElement(std::move(field), 1);
    }
    static FieldElement generator(const FieldPtr &field) {
        return FieldElement(field, field->generator);
    }

    const FieldContext &field() const noexcept {
        return *field_;
    }
    const FieldPtr &field_ptr() const noexcept {
        return field_;
    }
    std::uint32_t value() const noexcept {
        return value_;
    }
    bool is_zero() const noexcept {
        return value_ == 0;
    }
    bool is_binary() const noexcept {
        return value_ <= 1;
    }

    FieldElement pow(std::uint64_t exponent) const;
    FieldElement inverse() const;
    /// Least e > 0 with this^e = 1. Throws for zero.
    std::uint64_t order() const;

    friend FieldElement operator+(const FieldElement &a, const FieldElement &b);
    friend FieldElement operator*(const FieldElement &a, const FieldElement &b);
    bool operator==(const FieldElement &other) const;

   private:
    FieldPtr field_;
    std::uint32_t value_;
};

FieldElement field_mul(const FieldElement &a, const FieldElement &b);
FieldElement field_pow(const FieldElement &a, std::uint64_t exponent);

/// Multiplicative order of 2 modulo odd n (n = 1 gives 1).
unsigned order_of_two_mod(std::size_t n);

struct RootOfUnity {
    std::size_t n = 1;
    FieldPtr field;
    FieldElement alpha;
};

/// An element of exact order n in GF(2^m), m = ord_n(2), taken as
/// generator^((2^m - 1) / n). Throws Errc::even_length for even n.
RootOfUnity nth_root_of_unity(std::size_t n);
/// Same, inside a caller-supplied field whose group order n must divide.
RootOfUnity nth_root_of_unity(std::size_t n, const FieldPtr &field);

/// prod over the conjugates beta, beta^2, beta^4, ... of (x - beta), where
/// beta = alpha^s. Throws Errc::coefficient_not_binary if the product does
/// not land in GF(2)[x].
Poly2 minimal_polynomial(const FieldElement &alpha, std::size_t s, std::size_t n);

/// Evaluates a GF(2) polynomial at a field element.
FieldElement evaluate(const Poly2 &p, const FieldElement &x);

}  // namespace qcss

#endif  // QCSS_GF2M_H_
