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

#include "polyrank/classifiers.hpp"

#include "polyrank/rank_theorem.hpp"
#include "polyrank/spectral.hpp"

namespace polyrank {

namespace {

void require_square(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("classification requires a square matrix");
}

void refuse_characteristic_two(const Matrix& a, const char* what) {
    if (a.spec().characteristic() == 2) {
        throw CharacteristicTwo(std::string(what) + " is not classified over characteristic 2");
    }
}

// Fresh rank of p(A); records it under the given expression label.
std::size_t expr_rank(const Matrix& a, const Polynomial& p, const std::string& label,
                      std::map<std::string, std::size_t>& ranks) {
    const std::size_t r = rank(horner_eval(p, a));
    ranks[label] = r;
    return r;
}

}  // namespace

std::string_view property_name(MatrixProperty p) {
    switch (p) {
        case MatrixProperty::Idempotent: return "idempotent";
        case MatrixProperty::Involutive: return "involutive";
        case MatrixProperty::Tripotent: return "tripotent";
        case MatrixProperty::A3EqualsA5: return "a3a5";
        case MatrixProperty::CharFactorRankSum: return "charfactors";
        case MatrixProperty::SplitRankIdentity: return "app5";
    }
    throw Error("unknown matrix property");
}

ClassificationReport classify_idempotent(const Matrix& a) {
    require_square(a);
    const FieldSpec& spec = a.spec();
    const std::size_t n = a.rows();

    ClassificationReport report{MatrixProperty::Idempotent, n, spec, false, {}, {}};
    report.direct_check = (a * a == a);

    const std::size_t r_a = expr_rank(a, Polynomial::variable(spec), "A", report.ranks_used);
    const std::size_t r_ia =
        expr_rank(a, Polynomial::from_integers(spec, {1, -1}), "I-A", report.ranks_used);
    report.statements.push_back({"rank A + rank(I-A) = n", r_a + r_ia == n});
    return report;
}

ClassificationReport classify_involutive(const Matrix& a) {
    require_square(a);
    refuse_characteristic_two(a, "involutivity");
    const FieldSpec& spec = a.spec();
    const std::size_t n = a.rows();

    ClassificationReport report{MatrixProperty::Involutive, n, spec, false, {}, {}};
    report.direct_check = (a * a == Matrix::identity(spec, n));

    const std::size_t r_ima =
        expr_rank(a, Polynomial::from_integers(spec, {1, -1}), "I-A", report.ranks_used);
    const std::size_t r_ipa =
        expr_rank(a, Polynomial::from_integers(spec, {1, 1}), "I+A", report.ranks_used);
    report.statements.push_back({"rank(I-A) + rank(I+A) = n", r_ima + r_ipa == n});
    return report;
}

ClassificationReport classify_tripotent(const Matrix& a) {
    require_square(a);
    refuse_characteristic_two(a, "tripotency");
    const FieldSpec& spec = a.spec();
    const std::size_t n = a.rows();

    ClassificationReport report{MatrixProperty::Tripotent, n, spec, false, {}, {}};
    report.direct_check = (matrix_power(a, 3) == a);

    // Each statement recomputes its own evaluations and ranks.
    {
        const std::size_t r1 = expr_rank(a, Polynomial::variable(spec), "A", report.ranks_used);
        const std::size_t r2 =
            expr_rank(a, Polynomial::from_integers(spec, {1, 0, -1}), "I-A^2", report.ranks_used);
        report.statements.push_back({"rank A + rank(I-A^2) = n", r1 + r2 == n});
    }
    {
        const std::size_t r1 =
            expr_rank(a, Polynomial::from_integers(spec, {1, -1}), "I-A", report.ranks_used);
        const std::size_t r2 =
            expr_rank(a, Polynomial::from_integers(spec, {0, 1, 1}), "A+A^2", report.ranks_used);
        report.statements.push_back({"rank(I-A) + rank(A+A^2) = n", r1 + r2 == n});
    }
    {
        const std::size_t r1 = expr_rank(a, Polynomial::variable(spec), "A", report.ranks_used);
        const std::size_t r2 =
            expr_rank(a, Polynomial::from_integers(spec, {1, -1}), "I-A", report.ranks_used);
        const std::size_t r3 =
            expr_rank(a, Polynomial::from_integers(spec, {1, 1}), "I+A", report.ranks_used);
        report.statements.push_back({"rank A + rank(I-A) + rank(I+A) = 2n", r1 + r2 + r3 == 2 * n});
    }
    return report;
}

ClassificationReport classify_a3a5(const Matrix& a) {
    require_square(a);
    refuse_characteristic_two(a, "the A^3 = A^5 family");
    const FieldSpec& spec = a.spec();
    const std::size_t n = a.rows();

    ClassificationReport report{MatrixProperty::A3EqualsA5, n, spec, false, {}, {}};
    report.direct_check = (matrix_power(a, 3) == matrix_power(a, 5));

    const Polynomial a3 = Polynomial::from_integers(spec, {0, 0, 0, 1});
    const Polynomial i_m_a2 = Polynomial::from_integers(spec, {1, 0, -1});
    const Polynomial i_m_a = Polynomial::from_integers(spec, {1, -1});
    const Polynomial i_p_a = Polynomial::from_integers(spec, {1, 1});
    const Polynomial a3_p_a4 = Polynomial::from_integers(spec, {0, 0, 0, 1, 1});
    const Polynomial a3_m_a4 = Polynomial::from_integers(spec, {0, 0, 0, 1, -1});
    const Polynomial a_m_a2 = Polynomial::from_integers(spec, {0, 1, -1});
    const Polynomial a_p_a2 = Polynomial::from_integers(spec, {0, 1, 1});
    const Polynomial just_a = Polynomial::variable(spec);

    {
        const std::size_t r1 = expr_rank(a, a3, "A^3", report.ranks_used);
        const std::size_t r2 = expr_rank(a, i_m_a2, "I-A^2", report.ranks_used);
        report.statements.push_back({"rank A^3 + rank(I-A^2) = n", r1 + r2 == n});
    }
    {
        const std::size_t r1 = expr_rank(a, i_m_a, "I-A", report.ranks_used);
        const std::size_t r2 = expr_rank(a, a3_p_a4, "A^3+A^4", report.ranks_used);
        report.statements.push_back({"rank(I-A) + rank(A^3+A^4) = n", r1 + r2 == n});
    }
    {
        const std::size_t r1 = expr_rank(a, i_p_a, "I+A", report.ranks_used);
        const std::size_t r2 = expr_rank(a, a3_m_a4, "A^3-A^4", report.ranks_used);
        report.statements.push_back({"rank(I+A) + rank(A^3-A^4) = n", r1 + r2 == n});
    }
    {
        const std::size_t r1 = expr_rank(a, a3, "A^3", report.ranks_used);
        const std::size_t r2 = expr_rank(a, i_m_a, "I-A", report.ranks_used);
        const std::size_t r3 = expr_rank(a, i_p_a, "I+A", report.ranks_used);
        report.statements.push_back({"rank A^3 + rank(I-A) + rank(I+A) = 2n", r1 + r2 + r3 == 2 * n});
    }
    {
        const std::size_t r1 = expr_rank(a, a_m_a2, "A-A^2", report.ranks_used);
        const std::size_t r2 = expr_rank(a, a3_p_a4, "A^3+A^4", report.ranks_used);
        const std::size_t r3 = expr_rank(a, just_a, "A", report.ranks_used);
        report.statements.push_back({"rank(A-A^2) + rank(A^3+A^4) = rank A", r1 + r2 == r3});
    }
    {
        const std::size_t r1 = expr_rank(a, a_p_a2, "A+A^2", report.ranks_used);
        const std::size_t r2 = expr_rank(a, a3_m_a4, "A^3-A^4", report.ranks_used);
        const std::size_t r3 = expr_rank(a, just_a, "A", report.ranks_used);
        report.statements.push_back({"rank(A+A^2) + rank(A^3-A^4) = rank A", r1 + r2 == r3});
    }
    {
        const std::size_t r1 = expr_rank(a, a3_p_a4, "A^3+A^4", report.ranks_used);
        const std::size_t r2 = expr_rank(a, a3_m_a4, "A^3-A^4", report.ranks_used);
        const std::size_t r3 = expr_rank(a, a3, "A^3", report.ranks_used);
        report.statements.push_back({"rank(A^3+A^4) + rank(A^3-A^4) = rank A^3", r1 + r2 == r3});
    }
    return report;
}

ClassificationReport charfactor_rank_sum(const Matrix& a, std::span<const Polynomial> factors) {
    require_square(a);
    const FieldSpec& spec = a.spec();
    const std::size_t n = a.rows();

    if (factors.empty()) throw NotCharPolyFactorization("empty factor list");
    for (const Polynomial& p : factors) {
        if (p.spec() != spec) throw DomainMismatch("factor domain differs from matrix domain");
    }
    if (!pairwise_coprime(factors)) throw NotPairwiseCoprime("factors are not pairwise coprime");

    Polynomial product = Polynomial::one(spec);
    for (const Polynomial& p : factors) product = product * p;
    const Polynomial char_poly = characteristic_polynomial(a);
    if (product.is_zero() || product.monic() != char_poly) {
        throw NotCharPolyFactorization("product of factors is not the characteristic polynomial");
    }

    ClassificationReport report{MatrixProperty::CharFactorRankSum, n, spec, false, {}, {}};
    std::size_t total = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        total += expr_rank(a, factors[i], "f" + std::to_string(i + 1), report.ranks_used);
    }
    const std::size_t k = factors.size();
    report.statements.push_back(
        {"sum of rank f_i(A) = (k-1)n", total == (k - 1) * n});
    report.direct_check = report.statements.front().holds;  // no separate defining equation
    return report;
}

ClassificationReport split_rank_identity(const Matrix& a) {
    require_square(a);
    const FieldSpec& spec = a.spec();

    const RankIdentityCertificate cert = build_certificate(
        a, Polynomial::from_integers(spec, {0, 1, 1}), Polynomial::from_integers(spec, {0, 1, -1}));

    ClassificationReport report{MatrixProperty::SplitRankIdentity, a.rows(), spec, false, {}, {}};
    report.ranks_used["A+A^2"] = cert.rank_f;
    report.ranks_used["A-A^2"] = cert.rank_g;
    report.ranks_used["D(A)"] = cert.rank_gcd;
    report.ranks_used["M(A)"] = cert.rank_lcm;
    report.statements.push_back(
        {"rank(A+A^2) + rank(A-A^2) = rank D(A) + rank M(A)", cert.rank_identity_holds()});
    report.direct_check = report.statements.front().holds;  // unconditional identity
    return report;
}

}  // namespace polyrank
