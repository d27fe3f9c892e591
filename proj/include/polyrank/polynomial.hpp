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

#ifndef POLYRANK_POLYNOMIAL_HPP
#define POLYRANK_POLYNOMIAL_HPP

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyrank/field.hpp"

namespace polyrank {

/// Univariate polynomial over a fixed coefficient domain, stored as ascending
/// coefficients in canonical form: the highest-index coefficient is nonzero and
/// the zero polynomial has an empty coefficient list.
class Polynomial {
   public:
    /// degree() of the zero polynomial (stands in for "negative infinity").
    static constexpr int kZeroDegree = -1;

    explicit Polynomial(const FieldSpec& spec) : spec_(spec) {}

    static Polynomial zero(const FieldSpec& spec) { return Polynomial(spec); }
    static Polynomial one(const FieldSpec& spec);
    static Polynomial variable(const FieldSpec& spec);  // the monomial x
    static Polynomial constant(FieldScalar value);
    /// Builds from ascending coefficients, stripping trailing zeros.
    static Polynomial from_coefficients(const FieldSpec& spec, std::vector<FieldScalar> ascending);
    /// Test/CLI convenience: ascending integer coefficients mapped into the domain.
    static Polynomial from_integers(const FieldSpec& spec, std::initializer_list<long long> ascending);

    const FieldSpec& spec() const noexcept { return spec_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const;
    bool is_monic() const;  // false for the zero polynomial
    bool is_constant() const noexcept { return degree() <= 0; }

    /// Coefficient of x^i; zero beyond the degree.
    FieldScalar coefficient(std::size_t i) const;
    /// Throws Error on the zero polynomial.
    FieldScalar leading_coefficient() const;
    const std::vector<FieldScalar>& coefficients() const noexcept { return coeffs_; }

    Polynomial monic() const;  // zero stays zero
    Polynomial scaled(const FieldScalar& c) const;
    Polynomial operator-() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Ascending coefficients, space-separated; "0" for the zero polynomial.
    std::string str() const;

   private:
    void prune();

    FieldSpec spec_;
    std::vector<FieldScalar> coeffs_;
};

/// Euclidean division: num = den * quotient + remainder, deg(remainder) < deg(den).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

/// Division known to be exact; throws Error if a nonzero remainder shows up.
Polynomial exact_quotient(const Polynomial& num, const Polynomial& den);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

bool are_coprime(const Polynomial& f, const Polynomial& g);

/// True iff every unordered pair of the (nonempty) sequence is coprime.
bool pairwise_coprime(std::span<const Polynomial> polys);

/// True iff p and q differ by a nonzero scalar factor (both zero counts).
bool monic_associates(const Polynomial& p, const Polynomial& q);

/// Full output of the extended Euclidean algorithm on (f, g), bundled with the
/// cofactors used by the rank certificate.  Satisfies, exactly:
///   f*coeff_f + coeff_g*g == gcd
///   g == cofactor_g * gcd          f == gcd * cofactor_f
///   lcm * gcd  ==  f * g  up to a nonzero scalar (monic associates)
/// gcd and lcm are monic (zero in the degenerate all-zero cases).  The Bezout
/// pair is the minimal-degree one produced by Euclidean back-substitution:
/// deg(coeff_f) < deg(g) - deg(gcd) and deg(coeff_g) < deg(f) - deg(gcd)
/// whenever both inputs are nonzero and neither divides the other.
///
/// JSON certificate keys: gcd="D", lcm="M", coeff_f="phi1", coeff_g="phi2",
/// cofactor_g="psi1", cofactor_f="psi2".
struct BezoutCertificate {
    Polynomial f;
    Polynomial g;
    Polynomial gcd;
    Polynomial lcm;
    Polynomial coeff_f;
    Polynomial coeff_g;
    Polynomial cofactor_g;
    Polynomial cofactor_f;
};

BezoutCertificate extended_gcd(const Polynomial& f, const Polynomial& g);

}  // namespace polyrank

#endif  // POLYRANK_POLYNOMIAL_HPP
