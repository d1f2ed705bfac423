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

#include "qcss/gf2m.h"

#include <vector>

#include "qcss/error.h"

namespace qcss {

namespace {

int bit_width32(std::uint64_t v) {
    return static_cast<int>(std::bit_width(v));
}

// Remainder of carry-less division a mod b, b != 0.
std::uint64_t clmod(std::uint64_t a, std::uint64_t b) {
    int db = bit_width32(b) - 1;
    for (int da = bit_width32(a) - 1; da >= db; da = bit_width32(a) - 1) {
        a ^= b << (da - db);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

std::uint32_t raw_mul(const FieldContext &f, std::uint32_t a, std::uint32_t b) {
    std::uint64_t product = 0;
    std::uint64_t shifted = a;
    while (b != 0) {
        if (b & 1U) {
            product ^= shifted;
        }
        shifted <<= 1;
        b >>= 1;
    }
    return static_cast<std::uint32_t>(clmod(product, f.modulus));
}

std::uint32_t raw_pow(const FieldContext &f, std::uint32_t base, std::uint64_t e) {
    std::uint32_t result = 1;
    while (e != 0) {
        if (e & 1U) {
            result = raw_mul(f, result, base);
        }
        base = raw_mul(f, base, base);
        e >>= 1;
    }
    return result;
}

bool is_primitive(const FieldContext &f, std::uint32_t g) {
    if (g == 0) {
        return false;
    }
    std::uint64_t order = f.group_order();
    if (raw_pow(f, g, order) != 1) {
        return false;
    }
    for (auto p : prime_factors(order)) {
        if (raw_pow(f, g, order / p) == 1) {
            return false;
        }
    }
    return true;
}

void require_degree(unsigned m) {
    if (m < 1 || m > kMaxFieldDegree) {
        throw Error(Errc::unsupported_degree, "field degree " + std::to_string(m) + " outside 1.." +
                                                  std::to_string(kMaxFieldDegree));
    }
}

void require_same_field(const FieldElement &a, const FieldElement &b) {
    const auto &fa = a.field();
    const auto &fb = b.field();
    if (&fa != &fb && (fa.m != fb.m || fa.modulus != fb.modulus)) {
        throw Error(Errc::context_mismatch, "field elements belong to different fields");
    }
}

}  // namespace

// Poly2

Poly2 Poly2::from_bits(std::uint64_t bits) {
    Poly2 p;
    p.coeffs_ = BitVector::from_words(64, std::span<const BitVector::Word>(&bits, 1));
    p.normalize();
    return p;
}

Poly2 Poly2::from_exponents(std::initializer_list<std::size_t> exponents) {
    std::size_t top = 0;
    for (auto e : exponents) {
        top = std::max(top, e);
    }
    BitVector c(exponents.size() == 0 ? 0 : top + 1);
    for (auto e : exponents) {
        c.flip(e);
    }
    return from_coefficients(c);
}

Poly2 Poly2::from_coefficients(const BitVector &coefficients) {
    Poly2 p;
    p.coeffs_ = coefficients;
    p.normalize();
    return p;
}

Poly2 Poly2::monomial(std::size_t degree) {
    BitVector c(degree + 1);
    c.set(degree);
    return from_coefficients(c);
}

void Poly2::normalize() {
    std::size_t len = coeffs_.size();
    while (len > 0 && !coeffs_.get(len - 1)) {
        --len;
    }
    if (len != coeffs_.size()) {
        coeffs_ = coeffs_.slice(0, len);
    }
}

BitVector Poly2::to_bits(std::size_t length) const {
    BitVector out(length);
    for (std::size_t i = 0; i < std::min(length, coeffs_.size()); ++i) {
        if (coeffs_.get(i)) {
            out.set(i);
        }
    }
    return out;
}

std::string Poly2::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        if (!coeffs_.get(static_cast<std::size_t>(i))) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        if (i == 0) {
            out += "1";
        } else if (i == 1) {
            out += "x";
        } else {
            out += "x^" + std::to_string(i);
        }
    }
    return out;
}

Poly2 operator+(const Poly2 &a, const Poly2 &b) {
    std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
    return Poly2::from_coefficients(a.to_bits(len) ^ b.to_bits(len));
}

Poly2 operator*(const Poly2 &a, const Poly2 &b) {
    if (a.is_zero() || b.is_zero()) {
        return Poly2();
    }
    std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
    BitVector acc(len);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (!a.coeffs_.get(i)) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_.get(j)) {
                acc.flip(i + j);
            }
        }
    }
    return Poly2::from_coefficients(acc);
}

std::pair<Poly2, Poly2> divmod(const Poly2 &a, const Poly2 &b) {
    if (b.is_zero()) {
        throw Error(Errc::invalid_argument, "polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {Poly2(), a};
    }
    auto db = static_cast<std::size_t>(b.degree());
    auto da = static_cast<std::size_t>(a.degree());
    BitVector rem = a.to_bits(da + 1);
    BitVector quot(da - db + 1);
    BitVector divisor = b.to_bits(db + 1);
    for (std::size_t top = da + 1; top-- > db;) {
        if (!rem.get(top)) {
            continue;
        }
        std::size_t shift = top - db;
        quot.set(shift);
        for (std::size_t j = 0; j <= db; ++j) {
            if (divisor.get(j)) {
                rem.flip(shift + j);
            }
        }
    }
    return {Poly2::from_coefficients(quot), Poly2::from_coefficients(rem)};
}

// Field construction

bool is_irreducible(std::uint32_t poly) {
    int degree = bit_width32(poly) - 1;
    if (degree < 1) {
        return false;
    }
    // Trial division by every polynomial of degree 1 .. degree / 2.
    std::uint64_t limit = std::uint64_t{1} << (degree / 2 + 1);
    for (std::uint64_t d = 2; d < limit; ++d) {
        if (clmod(poly, d) == 0) {
            return false;
        }
    }
    return true;
}

std::uint32_t least_irreducible(unsigned m) {
    require_degree(m);
    for (std::uint32_t p = std::uint32_t{1} << m; p < (std::uint32_t{2} << m); ++p) {
        if (is_irreducible(p)) {
            return p;
        }
    }
    throw Error(Errc::construction_invariant, "no irreducible polynomial found");
}

FieldPtr make_field(unsigned m) {
    require_degree(m);
    return make_field(m, least_irreducible(m));
}

FieldPtr make_field(unsigned m, std::uint32_t modulus) {
    require_degree(m);
    if (bit_width32(modulus) - 1 != static_cast<int>(m) || !is_irreducible(modulus)) {
        throw Error(Errc::invalid_argument, "modulus is not an irreducible polynomial of degree " + std::to_string(m));
    }
    auto field = std::make_shared<FieldContext>();
    field->m = m;
    field->modulus = modulus;
    field->generator = 0;
    for (std::uint32_t g = 1; g < field->size(); ++g) {
        if (is_primitive(*field, g)) {
            field->generator = g;
            break;
        }
    }
    if (field->generator == 0) {
        throw Error(Errc::construction_invariant, "field has no primitive element");
    }
    return field;
}

// FieldElement

FieldElement::FieldElement(FieldPtr field, std::uint32_t value) : field_(std::move(field)), value_(value) {
    if (!field_ || value_ >= field_->size()) {
        throw Error(Errc::invalid_argument, "field element value out of range");
    }
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
    return FieldElement(field_, raw_pow(*field_, value_, exponent));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) {
        throw Error(Errc::domain_error, "zero has no multiplicative inverse");
    }
    return pow(field_->group_order() - 1);
}

std::uint64_t FieldElement::order() const {
    if (is_zero()) {
        throw Error(Errc::domain_error, "zero has no multiplicative order");
    }
    std::uint64_t e = field_->group_order();
    for (auto p : prime_factors(e)) {
        while (e % p == 0 && raw_pow(*field_, value_, e / p) == 1) {
            e /= p;
        }
    }
    return e;
}

FieldElement operator+(const FieldElement &a, const FieldElement &b) {
    require_same_field(a, b);
    return FieldElement(a.field_, a.value_ ^ b.value_);
}

FieldElement operator*(const FieldElement &a, const FieldElement &b) {
    require_same_field(a, b);
    return FieldElement(a.field_, raw_mul(*a.field_, a.value_, b.value_));
}

bool FieldElement::operator==(const FieldElement &other) const {
    require_same_field(*this, other);
    return value_ == other.value_;
}

FieldElement field_mul(const FieldElement &a, const FieldElement &b) {
    return a * b;
}

FieldElement field_pow(const FieldElement &a, std::uint64_t exponent) {
    return a.pow(exponent);
}

unsigned order_of_two_mod(std::size_t n) {
    if (n % 2 == 0) {
        throw Error(Errc::even_length, "2 has no multiplicative order modulo even n = " + std::to_string(n));
    }
    if (n == 1) {
        return 1;
    }
    unsigned m = 1;
    std::size_t value = 2 % n;
    while (value != 1) {
        value = (value * 2) % n;
        ++m;
    }
    return m;
}

RootOfUnity nth_root_of_unity(std::size_t n) {
    if (n % 2 == 0) {
        throw Error(Errc::even_length, "no n-th root of unity over GF(2) for even n = " + std::to_string(n));
    }
    unsigned m = order_of_two_mod(n);
    require_degree(m);
    return nth_root_of_unity(n, make_field(m));
}

RootOfUnity nth_root_of_unity(std::size_t n, const FieldPtr &field) {
    if (n % 2 == 0) {
        throw Error(Errc::even_length, "no n-th root of unity over GF(2) for even n = " + std::to_string(n));
    }
    if (n == 0 || field->group_order() % n != 0) {
        throw Error(Errc::invalid_argument,
                    std::to_string(n) + " does not divide the multiplicative group order of GF(2^" +
                        std::to_string(field->m) + ")");
    }
    FieldElement alpha = FieldElement::generator(field).pow(field->group_order() / n);
    return RootOfUnity{n, field, alpha};
}

Poly2 minimal_polynomial(const FieldElement &alpha, std::size_t s, std::size_t n) {
    if (n == 0 || s >= n) {
        throw Error(Errc::invalid_argument, "exponent must satisfy 0 <= s < n");
    }
    if (!alpha.pow(n).is_binary() || alpha.pow(n).value() != 1) {
        throw Error(Errc::invalid_argument, "alpha is not an n-th root of unity");
    }
    const FieldPtr &field = alpha.field_ptr();
    FieldElement beta = alpha.pow(s);
    std::vector<FieldElement> conjugates;
    FieldElement c = beta;
    do {
        conjugates.push_back(c);
        c = c * c;
    } while (!(c == beta));

    // coefficients[i] multiplies x^i
    std::vector<FieldElement> coefficients{FieldElement::one(field)};
    for (const auto &root : conjugates) {
        std::vector<FieldElement> next(coefficients.size() + 1, FieldElement::zero(field));
        for (std::size_t i = 0; i < coefficients.size(); ++i) {
            next[i + 1] = next[i + 1] + coefficients[i];
            next[i] = next[i] + root * coefficients[i];
        }
        coefficients = std::move(next);
    }
    BitVector bits(coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (!coefficients[i].is_binary()) {
            throw Error(Errc::coefficient_not_binary,
                        "coefficient of x^" + std::to_string(i) + " in M^(" + std::to_string(s) + ") is not in GF(2)");
        }
        if (coefficients[i].value() == 1) {
            bits.set(i);
        }
    }
    return Poly2::from_coefficients(bits);
}

FieldElement evaluate(const Poly2 &p, const FieldElement &x) {
    FieldElement acc = FieldElement::zero(x.field_ptr());
    for (long i = p.degree(); i >= 0; --i) {
        acc = acc * x;
        if (p.coefficient(static_cast<std::size_t>(i))) {
            acc = acc + FieldElement::one(x.field_ptr());
        }
    }
    return acc;
}

}  // namespace qcss
