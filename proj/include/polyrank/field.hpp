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

#ifndef POLYRANK_FIELD_HPP
#define POLYRANK_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "polyrank/errors.hpp"

namespace polyrank {

/// Deterministic Miller-Rabin for the 31-bit range (witnesses 2, 3, 5, 7 suffice below 3'215'031'751).
bool is_prime_u32(std::uint32_t n) noexcept;

enum class FieldKind { Rationals, PrimeField };

/// Coefficient domain descriptor: the rationals Q or a prime field GF(p) with 2 <= p < 2^31.
///
/// Immutable 8-byte value; every scalar, polynomial and matrix carries one and
/// refuses to combine with values from a different domain.
class FieldSpec {
   public:
    static FieldSpec rationals() noexcept { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec prime_field(std::uint32_t modulus);
    /// Parses the selection string used by CLI flags and file headers: "Q" or a decimal prime.
    static FieldSpec parse(std::string_view text);

    FieldKind kind() const noexcept { return kind_; }
    bool is_rationals() const noexcept { return kind_ == FieldKind::Rationals; }
    bool is_prime_field() const noexcept { return kind_ == FieldKind::PrimeField; }
    /// Prime modulus p for GF(p); 0 for the rationals.
    std::uint32_t modulus() const noexcept { return modulus_; }
    /// Field characteristic: 0 for the rationals, p for GF(p).
    std::uint32_t characteristic() const noexcept { return modulus_; }
    /// Inverse of parse(): "Q" or the decimal modulus.
    std::string str() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) noexcept = default;

   private:
    FieldSpec(FieldKind kind, std::uint32_t modulus) noexcept : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::uint32_t modulus_;
};

/// An exact field element: a canonical residue in [0, p) over GF(p), or a fully
/// reduced fraction with positive denominator over Q.  Immutable in spirit: all
/// operations return fresh values and never mutate their operands.
class FieldScalar {
   public:
    static FieldScalar zero(const FieldSpec& spec);
    static FieldScalar one(const FieldSpec& spec);
    static FieldScalar from_integer(const FieldSpec& spec, long long value);
    /// num/den interpreted in the domain (den inverted mod p over GF(p)).
    static FieldScalar from_fraction(const FieldSpec& spec, long long num, long long den);
    /// GF(p) element from an unsigned value, reduced mod p.
    static FieldScalar from_residue(const FieldSpec& spec, std::uint64_t value);
    /// Rational from an mpq value; canonicalized on entry.
    static FieldScalar from_rational(const FieldSpec& spec, mpq_class value);

    const FieldSpec& spec() const noexcept { return spec_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    std::uint32_t residue() const;  // GF(p) only
    mpz_class numerator() const;    // Q only
    mpz_class denominator() const;  // Q only

    FieldScalar inverse() const;  // throws DivisionByZero on zero
    FieldScalar operator-() const;

    FieldScalar& operator+=(const FieldScalar& rhs);
    FieldScalar& operator-=(const FieldScalar& rhs);
    FieldScalar& operator*=(const FieldScalar& rhs);
    FieldScalar& operator/=(const FieldScalar& rhs);

    friend FieldScalar operator+(FieldScalar lhs, const FieldScalar& rhs) { return lhs += rhs; }
    friend FieldScalar operator-(FieldScalar lhs, const FieldScalar& rhs) { return lhs -= rhs; }
    friend FieldScalar operator*(FieldScalar lhs, const FieldScalar& rhs) { return lhs *= rhs; }
    friend FieldScalar operator/(FieldScalar lhs, const FieldScalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const FieldScalar& a, const FieldScalar& b);
    friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

    /// Canonical text form: decimal residue, or "a" / "a/b" for rationals.
    std::string str() const;

   private:
    FieldScalar(FieldSpec spec, std::uint32_t residue) : spec_(spec), value_(residue) {}
    FieldScalar(FieldSpec spec, mpq_class value) : spec_(spec), value_(std::move(value)) {}

    void require_same_spec(const FieldScalar& other) const;
    const mpq_class& rat() const { return std::get<mpq_class>(value_); }
    mpq_class& rat() { return std::get<mpq_class>(value_); }
    std::uint32_t res() const { return std::get<std::uint32_t>(value_); }

    FieldSpec spec_;
    std::variant<std::uint32_t, mpq_class> value_;
};

}  // namespace polyrank

#endif  // POLYRANK_FIELD_HPP
