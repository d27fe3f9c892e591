#include <doctest.h>

#include <algorithm>

#include "polyrank/fuzz.hpp"
#include "polyrank/rank_theorem.hpp"

using namespace polyrank;

namespace {
const FieldSpec kQ = FieldSpec::rationals();

bool names(const VerificationResult& result, const char* invariant) {
    return std::find(result.failures.begin(), result.failures.end(), invariant) !=
           result.failures.end();
}
}  // namespace

TEST_CASE("certificate on an idempotent diagonal") {
    const Matrix a = Matrix::from_integers(kQ, {{1, 0}, {0, 0}});
    const RankIdentityCertificate cert =
        build_certificate(a, Polynomial::variable(kQ), Polynomial::from_integers(kQ, {1, -1}));
    CHECK(cert.rank_f == 1);
    CHECK(cert.rank_g == 1);
    CHECK(cert.rank_gcd == 2);  // gcd is 1, so D(A) = I
    CHECK(cert.rank_lcm == 0);  // A idempotent annihilates x^2 - x
    CHECK(cert.rank_identity_holds());
    CHECK(verify_certificate(cert).ok());
}

TEST_CASE("certificate with the split polynomials x+x^2 and x-x^2") {
    Xorshift64Star rng(83);
    const Matrix a = random_matrix(rng, kQ, 4);
    const RankIdentityCertificate cert = build_certificate(
        a, Polynomial::from_integers(kQ, {0, 1, 1}), Polynomial::from_integers(kQ, {0, 1, -1}));
    CHECK(cert.bezout.gcd == Polynomial::variable(kQ));
    CHECK(cert.bezout.lcm == Polynomial::from_integers(kQ, {0, -1, 0, 1}));
    // the identity instance: rank(A+A^2) + rank(A-A^2) == rank A + rank(A-A^3)
    CHECK(cert.rank_f + cert.rank_g == cert.rank_gcd + cert.rank_lcm);
    CHECK(cert.gcd_eval == a);
    CHECK(cert.lcm_eval == horner_eval(Polynomial::from_integers(kQ, {0, 1, 0, -1}), a));
    CHECK(verify_certificate(cert).ok());
}

TEST_CASE("certificate on a nilpotent companion block over GF(5)") {
    const FieldSpec gf5 = FieldSpec::prime_field(5);
    const Matrix a = companion_matrix(Polynomial::from_integers(gf5, {0, 0, 0, 1}));
    const RankIdentityCertificate cert = build_certificate(
        a, Polynomial::variable(gf5), Polynomial::from_integers(gf5, {0, 0, 1}));
    CHECK(cert.bezout.gcd == Polynomial::variable(gf5));
    CHECK(cert.bezout.lcm == Polynomial::from_integers(gf5, {0, 0, 1}));
    CHECK(cert.rank_f == 2);
    CHECK(cert.rank_g == 1);
    CHECK(cert.rank_gcd == 2);
    CHECK(cert.rank_lcm == 1);
    CHECK(verify_certificate(cert).ok());
}

TEST_CASE("verification catches tampering") {
    const Matrix a = Matrix::from_integers(kQ, {{1, 2}, {3, 4}});
    const Polynomial f = Polynomial::from_integers(kQ, {0, 1, 1});
    const Polynomial g = Polynomial::from_integers(kQ, {1, -1});
    {
        RankIdentityCertificate cert = build_certificate(a, f, g);
        cert.block_diag(0, 0) += FieldScalar::one(kQ);
        const VerificationResult verdict = verify_certificate(cert);
        CHECK_FALSE(verdict.ok());
        CHECK(names(verdict, "factorization"));
    }
    {
        RankIdentityCertificate cert = build_certificate(a, f, g);
        cert.rank_lcm += 1;
        const VerificationResult verdict = verify_certificate(cert);
        CHECK_FALSE(verdict.ok());
        CHECK(names(verdict, "rank_identity"));
        CHECK(names(verdict, "rank_lcm"));
    }
    {
        RankIdentityCertificate cert = build_certificate(a, f, g);
        cert.col_op_first(0, 0) += FieldScalar::one(kQ);  // break the unit diagonal
        const VerificationResult verdict = verify_certificate(cert);
        CHECK_FALSE(verdict.ok());
        CHECK(names(verdict, "transform_structure"));
    }
}

TEST_CASE("the rank identity holds on randomized inputs") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) {
        const FieldSpec spec = FieldSpec::prime_field(p);
        Xorshift64Star rng(p * 31);
        for (int i = 0; i < 60; ++i) {
            const std::size_t n = 1 + rng.below(8);
            const Matrix a = random_matrix(rng, spec, n);
            const Polynomial f = random_polynomial(rng, spec, 0, 6);
            const Polynomial g = random_polynomial(rng, spec, 0, 6);
            const RankIdentityCertificate cert = build_certificate(a, f, g);
            CHECK(cert.rank_identity_holds());
            CHECK(theorem_contract_failures(cert).empty());
        }
    }
    Xorshift64Star rng(12);
    for (int i = 0; i < 15; ++i) {
        const std::size_t n = 1 + rng.below(5);
        const Matrix a = random_matrix(rng, kQ, n);
        const Polynomial f = random_polynomial(rng, kQ, 0, 5);
        const Polynomial g = random_polynomial(rng, kQ, 0, 5);
        CHECK(theorem_contract_failures(build_certificate(a, f, g)).empty());
    }
}

TEST_CASE("degenerate inputs: zero polynomials and 1x1 matrices") {
    Xorshift64Star rng(29);
    const Matrix a = random_matrix(rng, kQ, 3);
    const Polynomial zero = Polynomial::zero(kQ);
    const Polynomial f = Polynomial::from_integers(kQ, {2, 0, 1});
    CHECK(theorem_contract_failures(build_certificate(a, f, zero)).empty());
    CHECK(theorem_contract_failures(build_certificate(a, zero, f)).empty());
    CHECK(theorem_contract_failures(build_certificate(a, zero, zero)).empty());

    const Matrix one_by_one = Matrix::from_integers(kQ, {{3}});
    CHECK(theorem_contract_failures(
              build_certificate(one_by_one, Polynomial::variable(kQ), f))
              .empty());
}

TEST_CASE("annihilation check (lcm vanishes iff ranks collapse to the gcd)") {
    const Polynomial f = Polynomial::variable(kQ);
    const Polynomial g = Polynomial::from_integers(kQ, {1, -1});
    {
        const AnnihilationCheck c = annihilation_rank_check(
            Matrix::from_integers(kQ, {{1, 0}, {0, 0}}), f, g);
        CHECK(c.rank_collapse);
        CHECK(c.lcm_annihilates);
    }
    {
        const AnnihilationCheck c = annihilation_rank_check(Matrix::identity(kQ, 2), f, g);
        CHECK(c.rank_collapse);
        CHECK(c.lcm_annihilates);
    }
    {
        const AnnihilationCheck c = annihilation_rank_check(
            Matrix::from_integers(kQ, {{2, 0}, {0, 2}}), f, g);
        CHECK_FALSE(c.rank_collapse);
        CHECK_FALSE(c.lcm_annihilates);
    }
}

TEST_CASE("minimal polynomial variant of the annihilation check") {
    {
        const MinpolyCheck c = minpoly_rank_check(Matrix::from_integers(kQ, {{1, 0}, {0, 0}}),
                                                  Polynomial::variable(kQ),
                                                  Polynomial::from_integers(kQ, {1, -1}));
        CHECK(c.rank_collapse);
        CHECK(c.minpoly_divides_lcm);
    }
    {
        // nilpotent of index 3, f = g = x: lcm = x, m = x^3 does not divide it
        const Matrix a = companion_matrix(Polynomial::from_integers(kQ, {0, 0, 0, 1}));
        const MinpolyCheck c = minpoly_rank_check(a, Polynomial::variable(kQ),
                                                  Polynomial::variable(kQ));
        CHECK_FALSE(c.rank_collapse);
        CHECK_FALSE(c.minpoly_divides_lcm);
    }
    {
        // zero matrix: m = x divides any lcm with a zero constant term
        const Matrix a = Matrix::zeros(kQ, 3, 3);
        const MinpolyCheck c = minpoly_rank_check(a, Polynomial::variable(kQ),
                                                  Polynomial::from_integers(kQ, {0, 1, 1}));
        CHECK(c.rank_collapse);
        CHECK(c.minpoly_divides_lcm);
    }
}

TEST_CASE("coprime rank relation") {
    Xorshift64Star rng(101);
    const Polynomial f = Polynomial::from_integers(kQ, {1, -1});
    const Polynomial g = Polynomial::from_integers(kQ, {1, 1});
    for (int i = 0; i < 20; ++i) {
        const Matrix a = random_matrix(rng, kQ, 1 + rng.below(5));
        const CoprimeRelationCheck c = coprime_rank_check(a, f, g);
        CHECK(c.coprime);
        CHECK(c.relation_holds);
    }

    // equality can hold by accident for non-coprime pairs on a particular A,
    // which is exactly why the converse needs a witness matrix
    const CoprimeRelationCheck accidental =
        coprime_rank_check(Matrix::identity(kQ, 2), Polynomial::variable(kQ),
                           Polynomial::variable(kQ));
    CHECK_FALSE(accidental.coprime);
    CHECK(accidental.relation_holds);
    const CoprimeRelationCheck accidental2 = coprime_rank_check(
        companion_matrix(Polynomial::from_integers(kQ, {0, 0, 1})), Polynomial::variable(kQ),
        Polynomial::variable(kQ));
    CHECK_FALSE(accidental2.coprime);
    CHECK(accidental2.relation_holds);  // rank(A^2) + 2 == 2 == rank A + rank A
}

TEST_CASE("coprimality witness") {
    CHECK_FALSE(coprimality_witness(Polynomial::variable(kQ),
                                    Polynomial::from_integers(kQ, {1, -1}))
                    .has_value());

    {
        // f = x^2, g = x^3: witness is the 2x2 nilpotent companion of x^2
        const Polynomial f = Polynomial::from_integers(kQ, {0, 0, 1});
        const Polynomial g = Polynomial::from_integers(kQ, {0, 0, 0, 1});
        const std::optional<Matrix> w = coprimality_witness(f, g);
        REQUIRE(w.has_value());
        CHECK(*w == Matrix::from_integers(kQ, {{0, 0}, {1, 0}}));
        CHECK(horner_eval(f, *w).is_zero());
        CHECK(horner_eval(g, *w).is_zero());
        CHECK_FALSE(coprime_rank_check(*w, f, g).relation_holds);
    }
    {
        const Polynomial f = Polynomial::from_integers(kQ, {-1, 1});
        const std::optional<Matrix> w = coprimality_witness(f, f);
        REQUIRE(w.has_value());
        CHECK(*w == Matrix::from_integers(kQ, {{1}}));
        CHECK_FALSE(coprime_rank_check(*w, f, f).relation_holds);
    }
    {
        // the "accidental equality" pair from above still gets a violating witness
        const Polynomial x = Polynomial::variable(kQ);
        const Polynomial x2 = Polynomial::from_integers(kQ, {0, 0, 1});
        const std::optional<Matrix> w = coprimality_witness(x2, x2);
        REQUIRE(w.has_value());
        CHECK_FALSE(coprime_rank_check(*w, x2, x2).relation_holds);
        CHECK(coprimality_witness(x, x).has_value());
    }
    CHECK_THROWS_AS(coprimality_witness(Polynomial::zero(kQ), Polynomial::zero(kQ)), BothZero);
}

TEST_CASE("coprime annihilation check") {
    const Polynomial f = Polynomial::variable(kQ);
    const Polynomial g = Polynomial::from_integers(kQ, {1, -1});
    {
        const CoprimeAnnihilationCheck c =
            coprime_annihilation_check(Matrix::from_integers(kQ, {{1, 0}, {0, 0}}), f, g);
        CHECK(c.product_zero);
        CHECK(c.ranks_sum_to_order);
    }
    {
        const CoprimeAnnihilationCheck c =
            coprime_annihilation_check(Matrix::from_integers(kQ, {{2, 0}, {0, 0}}), f, g);
        CHECK_FALSE(c.product_zero);
        CHECK_FALSE(c.ranks_sum_to_order);
    }
    const FieldSpec gf5 = FieldSpec::prime_field(5);
    CHECK_THROWS_AS(coprime_annihilation_check(Matrix::identity(gf5, 2),
                                               Polynomial::variable(gf5),
                                               Polynomial::variable(gf5)),
                    NotCoprime);
}

TEST_CASE("corollary equivalence contracts on mixed generators") {
    for (const FieldSpec& spec :
         {kQ, FieldSpec::prime_field(2), FieldSpec::prime_field(5), FieldSpec::prime_field(101)}) {
        Xorshift64Star rng(spec.is_rationals() ? 500 : spec.modulus());
        for (int i = 0; i < 30; ++i) {
            const std::size_t n = 1 + rng.below(5);
            const GeneratorKind kind = i % 3 == 0   ? GeneratorKind::Idempotent
                                       : i % 3 == 1 ? GeneratorKind::Nilpotent
                                                    : GeneratorKind::Generic;
            const Matrix a = random_with_property(rng, spec, n, kind);
            Polynomial f = random_polynomial(rng, spec, 0, 4);
            Polynomial g = random_polynomial(rng, spec, 0, 4);
            if (i % 4 == 0) {
                // force a shared factor so the witness path runs too
                const Polynomial common = random_polynomial(rng, spec, 1, 2);
                f = f * common;
                g = g * common;
            }
            CHECK(corollary_contract_failures(a, f, g).empty());
        }
    }
}

TEST_CASE("input validation") {
    const Matrix rect = Matrix::zeros(kQ, 2, 3);
    CHECK_THROWS_AS(build_certificate(rect, Polynomial::one(kQ), Polynomial::one(kQ)),
                    DimensionMismatch);
    const FieldSpec gf5 = FieldSpec::prime_field(5);
    CHECK_THROWS_AS(build_certificate(Matrix::identity(gf5, 2), Polynomial::one(kQ),
                                      Polynomial::one(kQ)),
                    DomainMismatch);
}
