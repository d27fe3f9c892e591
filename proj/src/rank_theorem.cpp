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

#include "polyrank/rank_theorem.hpp"

#include "polyrank/spectral.hpp"

namespace polyrank {

namespace {

void require_inputs(const Matrix& a, const Polynomial& f, const Polynomial& g) {
    if (!a.is_square()) throw DimensionMismatch("certificate construction requires a square matrix");
    if (f.spec() != a.spec() || g.spec() != a.spec()) {
        throw DomainMismatch("matrix and polynomial domains differ");
    }
}

}  // namespace

RankIdentityCertificate build_certificate(const Matrix& a, const Polynomial& f, const Polynomial& g) {
    require_inputs(a, f, g);
    const FieldSpec& spec = a.spec();
    const std::size_t n = a.rows();

    BezoutCertificate bezout = extended_gcd(f, g);

    Matrix f_eval = horner_eval(f, a);
    Matrix g_eval = horner_eval(g, a);
    Matrix gcd_eval = horner_eval(bezout.gcd, a);
    // (f*g/D)(A): exact associate of M(A), see header.
    Matrix lcm_eval = horner_eval(bezout.cofactor_g * f, a);

    Matrix coeff_f_eval = horner_eval(bezout.coeff_f, a);
    Matrix coeff_g_eval = horner_eval(bezout.coeff_g, a);
    Matrix cofactor_f_eval = horner_eval(bezout.cofactor_f, a);
    Matrix cofactor_g_eval = horner_eval(bezout.cofactor_g, a);

    const Matrix zero = Matrix::zeros(spec, n, n);
    const Matrix id = Matrix::identity(spec, n);

    Matrix block_diag = block2x2(f_eval, zero, zero, g_eval);
    Matrix block_anti = block2x2(zero, gcd_eval, -lcm_eval, zero);
    Matrix col_op_first = block2x2(id, coeff_f_eval, zero, id);
    Matrix row_op_first = block2x2(id, coeff_g_eval, zero, id);
    Matrix col_op_second = block2x2(id, zero, -cofactor_f_eval, id);
    Matrix row_op_second = block2x2(id, zero, -cofactor_g_eval, id);

    const std::size_t rank_f = rank(f_eval);
    const std::size_t rank_g = rank(g_eval);
    const std::size_t rank_gcd = rank(gcd_eval);
    const std::size_t rank_lcm = rank(lcm_eval);

    return RankIdentityCertificate{std::move(bezout),
                                   std::move(f_eval),
                                   std::move(g_eval),
                                   std::move(gcd_eval),
                                   std::move(lcm_eval),
                                   std::move(block_diag),
                                   std::move(block_anti),
                                   std::move(col_op_first),
                                   std::move(col_op_second),
                                   std::move(row_op_first),
                                   std::move(row_op_second),
                                   rank_f,
                                   rank_g,
                                   rank_gcd,
                                   rank_lcm};
}

VerificationResult verify_certificate(const RankIdentityCertificate& cert) {
    VerificationResult result;
    auto check = [&result](bool ok, const char* name) {
        if (!ok) result.failures.emplace_back(name);
    };

    try {
        const FieldSpec& spec = cert.f_eval.spec();
        const std::size_t n = cert.order();

        // Shape sanity first; everything below relies on it.
        bool shapes_ok = n >= 1;
        for (const Matrix* m : {&cert.f_eval, &cert.g_eval, &cert.gcd_eval, &cert.lcm_eval}) {
            shapes_ok = shapes_ok && m->rows() == n && m->cols() == n && m->spec() == spec;
        }
        for (const Matrix* m : {&cert.block_diag, &cert.block_anti, &cert.col_op_first,
                                &cert.col_op_second, &cert.row_op_first, &cert.row_op_second}) {
            shapes_ok = shapes_ok && m->rows() == 2 * n && m->cols() == 2 * n && m->spec() == spec;
        }
        const BezoutCertificate& bz = cert.bezout;
        for (const Polynomial* p : {&bz.f, &bz.g, &bz.gcd, &bz.lcm, &bz.coeff_f, &bz.coeff_g,
                                    &bz.cofactor_g, &bz.cofactor_f}) {
            shapes_ok = shapes_ok && p->spec() == spec;
        }
        if (!shapes_ok) {
            result.failures.emplace_back("shape");
            return result;
        }

        // Polynomial layer.
        check(bz.f * bz.coeff_f + bz.coeff_g * bz.g == bz.gcd, "bezout_poly");
        check(bz.g == bz.cofactor_g * bz.gcd, "cofactor_g_poly");
        check(bz.f == bz.gcd * bz.cofactor_f, "cofactor_f_poly");
        check(bz.gcd.is_zero() ? bz.f.is_zero() && bz.g.is_zero() : bz.gcd.is_monic(), "gcd_monic");
        check(bz.lcm.is_zero() ? bz.f.is_zero() || bz.g.is_zero() : bz.lcm.is_monic(), "lcm_monic");
        check(monic_associates(bz.lcm * bz.gcd, bz.f * bz.g), "gcd_lcm_associate");

        // Block structure.
        const Matrix zero = Matrix::zeros(spec, n, n);
        const Matrix id = Matrix::identity(spec, n);
        check(cert.block_diag == block2x2(cert.f_eval, zero, zero, cert.g_eval), "block_diag_structure");
        check(cert.block_anti == block2x2(zero, cert.gcd_eval, -cert.lcm_eval, zero),
              "block_anti_structure");

        const Matrix coeff_f_eval = cert.col_op_first.block(0, n, n, n);
        const Matrix coeff_g_eval = cert.row_op_first.block(0, n, n, n);
        const Matrix cofactor_f_eval = -cert.col_op_second.block(n, 0, n, n);
        const Matrix cofactor_g_eval = -cert.row_op_second.block(n, 0, n, n);
        check(cert.col_op_first == block2x2(id, coeff_f_eval, zero, id) &&
                  cert.row_op_first == block2x2(id, coeff_g_eval, zero, id) &&
                  cert.col_op_second == block2x2(id, zero, -cofactor_f_eval, id) &&
                  cert.row_op_second == block2x2(id, zero, -cofactor_g_eval, id),
              "transform_structure");

        // Matrix images of the polynomial identities.
        check(cert.f_eval * coeff_f_eval + coeff_g_eval * cert.g_eval == cert.gcd_eval, "bezout_matrix");
        check(cert.g_eval == cofactor_g_eval * cert.gcd_eval, "cofactor_g_matrix");
        check(cert.f_eval == cert.gcd_eval * cofactor_f_eval, "cofactor_f_matrix");
        check(cert.lcm_eval == cofactor_g_eval * cert.f_eval, "lcm_matrix");

        // The closing factorization.
        check(cert.block_anti == cert.row_op_second * cert.row_op_first * cert.block_diag *
                                     cert.col_op_first * cert.col_op_second,
              "factorization");

        // Ranks, recomputed by fresh elimination.
        check(rank(cert.f_eval) == cert.rank_f, "rank_f");
        check(rank(cert.g_eval) == cert.rank_g, "rank_g");
        check(rank(cert.gcd_eval) == cert.rank_gcd, "rank_gcd");
        check(rank(cert.lcm_eval) == cert.rank_lcm, "rank_lcm");
        check(rank(cert.block_diag) == cert.rank_f + cert.rank_g, "rank_block_diag");
        check(rank(cert.block_anti) == cert.rank_gcd + cert.rank_lcm, "rank_block_anti");
        check(cert.rank_f + cert.rank_g == cert.rank_gcd + cert.rank_lcm, "rank_identity");
    } catch (const Error&) {
        result.failures.emplace_back("internal_inconsistency");
    }
    return result;
}

AnnihilationCheck annihilation_rank_check(const Matrix& a, const Polynomial& f, const Polynomial& g) {
    require_inputs(a, f, g);
    BezoutCertificate bezout = extended_gcd(f, g);
    const std::size_t rank_f = rank(horner_eval(f, a));
    const std::size_t rank_g = rank(horner_eval(g, a));
    const std::size_t rank_gcd = rank(horner_eval(bezout.gcd, a));
    const bool annihilates = horner_eval(bezout.lcm, a).is_zero();
    return AnnihilationCheck{rank_f + rank_g == rank_gcd, annihilates};
}

MinpolyCheck minpoly_rank_check(const Matrix& a, const Polynomial& f, const Polynomial& g) {
    require_inputs(a, f, g);
    BezoutCertificate bezout = extended_gcd(f, g);
    const std::size_t rank_f = rank(horner_eval(f, a));
    const std::size_t rank_g = rank(horner_eval(g, a));
    const std::size_t rank_gcd = rank(horner_eval(bezout.gcd, a));
    const Polynomial min_poly = minimal_polynomial(a);
    // divides() accepts a zero lcm: everything divides the zero polynomial.
    return MinpolyCheck{rank_f + rank_g == rank_gcd, divides(min_poly, bezout.lcm)};
}

CoprimeRelationCheck coprime_rank_check(const Matrix& a, const Polynomial& f, const Polynomial& g) {
    require_inputs(a, f, g);
    const std::size_t n = a.rows();
    const Matrix f_eval = horner_eval(f, a);
    const Matrix g_eval = horner_eval(g, a);
    const bool relation = rank(f_eval * g_eval) + n == rank(f_eval) + rank(g_eval);
    return CoprimeRelationCheck{relation, are_coprime(f, g)};
}

std::optional<Matrix> coprimality_witness(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() && g.is_zero()) throw BothZero("coprimality witness undefined for (0, 0)");
    const Polynomial d = gcd(f, g);
    if (d.degree() == 0) return std::nullopt;
    return companion_matrix(d);
}

CoprimeAnnihilationCheck coprime_annihilation_check(const Matrix& a, const Polynomial& f,
                                                    const Polynomial& g) {
    require_inputs(a, f, g);
    if (!are_coprime(f, g)) throw NotCoprime("inputs share a nonconstant factor");
    const std::size_t n = a.rows();
    const Matrix f_eval = horner_eval(f, a);
    const Matrix g_eval = horner_eval(g, a);
    return CoprimeAnnihilationCheck{(f_eval * g_eval).is_zero(), rank(f_eval) + rank(g_eval) == n};
}

}  // namespace polyrank
