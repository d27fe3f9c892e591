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

#include "polyrank/polynomial.hpp"

namespace polyrank {

namespace {

void require_same_spec(const Polynomial& a, const Polynomial& b) {
    if (a.spec() != b.spec()) {
        throw DomainMismatch("cannot combine polynomials over " + a.spec().str() + " and " + b.spec().str());
    }
}

}  // namespace

void Polynomial::prune() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::one(const FieldSpec& spec) {
    return constant(FieldScalar::one(spec));
}

Polynomial Polynomial::variable(const FieldSpec& spec) {
    Polynomial p(spec);
    p.coeffs_.push_back(FieldScalar::zero(spec));
    p.coeffs_.push_back(FieldScalar::one(spec));
    return p;
}

Polynomial Polynomial::constant(FieldScalar value) {
    Polynomial p(value.spec());
    p.coeffs_.push_back(std::move(value));
    p.prune();
    return p;
}

Polynomial Polynomial::from_coefficients(const FieldSpec& spec, std::vector<FieldScalar> ascending) {
    Polynomial p(spec);
    for (const FieldScalar& c : ascending) {
        if (c.spec() != spec) throw DomainMismatch("coefficient domain differs from polynomial domain");
    }
    p.coeffs_ = std::move(ascending);
    p.prune();
    return p;
}

Polynomial Polynomial::from_integers(const FieldSpec& spec, std::initializer_list<long long> ascending) {
    std::vector<FieldScalar> coeffs;
    coeffs.reserve(ascending.size());
    for (long long v : ascending) coeffs.push_back(FieldScalar::from_integer(spec, v));
    return from_coefficients(spec, std::move(coeffs));
}

bool Polynomial::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0].is_one();
}

bool Polynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back().is_one();
}

FieldScalar Polynomial::coefficient(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return FieldScalar::zero(spec_);
}

FieldScalar Polynomial::leading_coefficient() const {
    if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::monic() const {
    if (is_zero() || coeffs_.back().is_one()) return *this;
    return scaled(coeffs_.back().inverse());
}

Polynomial Polynomial::scaled(const FieldScalar& c) const {
    if (c.spec() != spec_) throw DomainMismatch("scalar domain differs from polynomial domain");
    Polynomial out(spec_);
    if (c.is_zero()) return out;
    out.coeffs_.reserve(coeffs_.size());
    for (const FieldScalar& a : coeffs_) out.coeffs_.push_back(a * c);
    out.prune();
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(spec_);
    out.coeffs_.reserve(coeffs_.size());
    for (const FieldScalar& a : coeffs_) out.coeffs_.push_back(-a);
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_spec(a, b);
    Polynomial out(a.spec_);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    out.coeffs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.coeffs_.push_back(a.coefficient(i) + b.coefficient(i));
    out.prune();
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_spec(a, b);
    Polynomial out(a.spec_);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    out.coeffs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.coeffs_.push_back(a.coefficient(i) - b.coefficient(i));
    out.prune();
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_spec(a, b);
    Polynomial out(a.spec_);
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, FieldScalar::zero(a.spec_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    out.prune();
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    require_same_spec(a, b);
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] != b.coeffs_[i]) return false;
    }
    return true;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) out += ' ';
        out += coeffs_[i].str();
    }
    return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    require_same_spec(num, den);
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    const FieldSpec& spec = num.spec();
    const int dn = num.degree();
    const int dd = den.degree();
    if (dn < dd) return {Polynomial::zero(spec), num};

    std::vector<FieldScalar> rem(num.coefficients());
    std::vector<FieldScalar> quot(static_cast<std::size_t>(dn - dd) + 1, FieldScalar::zero(spec));
    const FieldScalar lead_inv = den.leading_coefficient().inverse();

    for (int i = dn; i >= dd; --i) {
        const FieldScalar c = rem[static_cast<std::size_t>(i)] * lead_inv;
        if (c.is_zero()) continue;
        quot[static_cast<std::size_t>(i - dd)] = c;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(i - dd + j)] -= c * den.coefficient(static_cast<std::size_t>(j));
        }
    }
    return {Polynomial::from_coefficients(spec, std::move(quot)),
            Polynomial::from_coefficients(spec, std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& num, const Polynomial& den) {
    auto [quotient, remainder] = divmod(num, den);
    if (!remainder.is_zero()) throw Error("division expected to be exact left a remainder");
    return quotient;
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    require_same_spec(f, g);
    Polynomial a = f, b = g;
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool are_coprime(const Polynomial& f, const Polynomial& g) {
    return gcd(f, g).degree() == 0;
}

bool pairwise_coprime(std::span<const Polynomial> polys) {
    if (polys.empty()) throw Error("pairwise_coprime: empty sequence");
    for (std::size_t i = 1; i < polys.size(); ++i) {
        if (polys[i].spec() != polys[0].spec()) {
            throw DomainMismatch("pairwise_coprime: mixed coefficient domains");
        }
    }
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            if (!are_coprime(polys[i], polys[j])) return false;
        }
    }
    return true;
}

bool monic_associates(const Polynomial& p, const Polynomial& q) {
    require_same_spec(p, q);
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    return p.monic() == q.monic();
}

BezoutCertificate extended_gcd(const Polynomial& f, const Polynomial& g) {
    require_same_spec(f, g);
    const FieldSpec& spec = f.spec();
    const Polynomial zero = Polynomial::zero(spec);

    if (f.is_zero() && g.is_zero()) {
        return {f, g, zero, zero, zero, zero, zero, zero};
    }

    Polynomial r0 = f, r1 = g;
    Polynomial s0 = Polynomial::one(spec), s1 = zero;
    Polynomial t0 = zero, t1 = Polynomial::one(spec);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }

    const FieldScalar lead_inv = r0.leading_coefficient().inverse();
    Polynomial monic_gcd = r0.scaled(lead_inv);
    Polynomial coeff_f = s0.scaled(lead_inv);
    Polynomial coeff_g = t0.scaled(lead_inv);
    Polynomial cofactor_g = exact_quotient(g, monic_gcd);
    Polynomial cofactor_f = exact_quotient(f, monic_gcd);
    Polynomial lcm = (f.is_zero() || g.is_zero()) ? zero : exact_quotient(f * g, monic_gcd).monic();

    return {f, g,
            std::move(monic_gcd), std::move(lcm),
            std::move(coeff_f),   std::move(coeff_g),
            std::move(cofactor_g), std::move(cofactor_f)};
}

}  // namespace polyrank
