/*
   Copyright 2026 The polyrank authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "polyrank/field.hpp"

#include <cctype>

namespace polyrank {

namespace {

constexpr std::uint32_t kMaxModulus = 0x7FFFFFFFu;  // largest allowed prime, 2^31 - 1

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;  // < 2^62 since mod < 2^31
        exp >>= 1;
    }
    return result;
}

// Inverse of a mod p via the extended Euclidean algorithm; a in [1, p), p prime.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t r0 = a, r1 = p;
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        const std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        const std::int64_t s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    s0 %= p;
    if (s0 < 0) s0 += p;
    return static_cast<std::uint32_t>(s0);
}

}  // namespace

bool is_prime_u32(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t small : {2u, 3u, 5u, 7u}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    std::uint64_t d = n - 1;
    int twos = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++twos;
    }
    for (std::uint64_t witness : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = pow_mod(witness, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < twos; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t modulus) {
    if (modulus < 2 || modulus > kMaxModulus || !is_prime_u32(modulus)) {
        throw BadField("modulus " + std::to_string(modulus) + " is not a prime in [2, 2^31)");
    }
    return FieldSpec(FieldKind::PrimeField, modulus);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.empty()) throw BadField("empty field selection");
    std::uint64_t value = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw BadField("field must be \"Q\" or a decimal prime, got \"" + std::string(text) + "\"");
        }
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > kMaxModulus) throw BadField("modulus out of range: " + std::string(text));
    }
    return prime_field(static_cast<std::uint32_t>(value));
}

std::string FieldSpec::str() const {
    return is_rationals() ? "Q" : std::to_string(modulus_);
}

FieldScalar FieldScalar::zero(const FieldSpec& spec) {
    if (spec.is_prime_field()) return FieldScalar(spec, std::uint32_t{0});
    return FieldScalar(spec, mpq_class(0));
}

FieldScalar FieldScalar::one(const FieldSpec& spec) {
    if (spec.is_prime_field()) return FieldScalar(spec, std::uint32_t{1});
    return FieldScalar(spec, mpq_class(1));
}

FieldScalar FieldScalar::from_integer(const FieldSpec& spec, long long value) {
    if (spec.is_prime_field()) {
        const std::int64_t p = spec.modulus();
        std::int64_t r = value % p;
        if (r < 0) r += p;
        return FieldScalar(spec, static_cast<std::uint32_t>(r));
    }
    mpq_class q;
    q = static_cast<long>(value);
    return FieldScalar(spec, std::move(q));
}

FieldScalar FieldScalar::from_fraction(const FieldSpec& spec, long long num, long long den) {
    if (den == 0) throw DivisionByZero("fraction with zero denominator");
    if (spec.is_prime_field()) {
        return from_integer(spec, num) / from_integer(spec, den);
    }
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return FieldScalar(spec, std::move(q));
}

FieldScalar FieldScalar::from_residue(const FieldSpec& spec, std::uint64_t value) {
    if (!spec.is_prime_field()) throw DomainMismatch("from_residue requires a prime field");
    return FieldScalar(spec, static_cast<std::uint32_t>(value % spec.modulus()));
}

FieldScalar FieldScalar::from_rational(const FieldSpec& spec, mpq_class value) {
    if (!spec.is_rationals()) throw DomainMismatch("from_rational requires the rationals");
    value.canonicalize();
    return FieldScalar(spec, std::move(value));
}

bool FieldScalar::is_zero() const noexcept {
    if (spec_.is_prime_field()) return res() == 0;
    return sgn(rat()) == 0;
}

bool FieldScalar::is_one() const noexcept {
    if (spec_.is_prime_field()) return res() == 1;
    return rat() == 1;
}

std::uint32_t FieldScalar::residue() const {
    if (!spec_.is_prime_field()) throw DomainMismatch("residue() requires a prime field element");
    return res();
}

mpz_class FieldScalar::numerator() const {
    if (!spec_.is_rationals()) throw DomainMismatch("numerator() requires a rational");
    return rat().get_num();
}

mpz_class FieldScalar::denominator() const {
    if (!spec_.is_rationals()) throw DomainMismatch("denominator() requires a rational");
    return rat().get_den();
}

void FieldScalar::require_same_spec(const FieldScalar& other) const {
    if (spec_ != other.spec_) {
        throw DomainMismatch("cannot combine elements of " + spec_.str() + " and " + other.spec_.str());
    }
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + spec_.str());
    if (spec_.is_prime_field()) {
        return FieldScalar(spec_, inverse_mod(res(), spec_.modulus()));
    }
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), rat().get_mpq_t());
    return FieldScalar(spec_, std::move(inv));
}

FieldScalar FieldScalar::operator-() const {
    if (spec_.is_prime_field()) {
        const std::uint32_t p = spec_.modulus();
        const std::uint32_t r = res();
        return FieldScalar(spec_, r == 0 ? 0 : p - r);
    }
    return FieldScalar(spec_, mpq_class(-rat()));
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& rhs) {
    require_same_spec(rhs);
    if (spec_.is_prime_field()) {
        const std::uint64_t sum = static_cast<std::uint64_t>(res()) + rhs.res();
        value_ = static_cast<std::uint32_t>(sum % spec_.modulus());
    } else {
        rat() += rhs.rat();
    }
    return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& rhs) {
    require_same_spec(rhs);
    if (spec_.is_prime_field()) {
        const std::uint64_t p = spec_.modulus();
        const std::uint64_t diff = static_cast<std::uint64_t>(res()) + p - rhs.res();
        value_ = static_cast<std::uint32_t>(diff % p);
    } else {
        rat() -= rhs.rat();
    }
    return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& rhs) {
    require_same_spec(rhs);
    if (spec_.is_prime_field()) {
        const std::uint64_t prod = static_cast<std::uint64_t>(res()) * rhs.res();
        value_ = static_cast<std::uint32_t>(prod % spec_.modulus());
    } else {
        rat() *= rhs.rat();
    }
    return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& rhs) {
    return *this *= rhs.inverse();
}

bool operator==(const FieldScalar& a, const FieldScalar& b) {
    a.require_same_spec(b);
    if (a.spec_.is_prime_field()) return a.res() == b.res();
    return a.rat() == b.rat();
}

std::string FieldScalar::str() const {
    if (spec_.is_prime_field()) return std::to_string(res());
    return rat().get_str();
}

}  // namespace polyrank
