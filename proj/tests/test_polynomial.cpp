#include <doctest.h>

#include <array>

#include "polyrank/fuzz.hpp"
#include "polyrank/polynomial.hpp"

using namespace polyrank;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
}

TEST_CASE("ring arithmetic") {
    const Polynomial one_plus_x = Polynomial::from_integers(kQ, {1, 1});
    const Polynomial one_minus_x = Polynomial::from_integers(kQ, {1, -1});
    CHECK(one_plus_x * one_minus_x == Polynomial::from_integers(kQ, {1, 0, -1}));

    const Polynomial p = Polynomial::from_integers(kQ, {3, 0, 2});
    CHECK(p + Polynomial::zero(kQ) == p);

    const FieldSpec gf2 = FieldSpec::prime_field(2);
    const Polynomial q = Polynomial::from_integers(gf2, {1, 1});
    CHECK((q + q).is_zero());
}

TEST_CASE("canonical form and the degree sentinel") {
    CHECK(Polynomial::zero(kQ).degree() == Polynomial::kZeroDegree);
    CHECK(Polynomial::from_integers(kQ, {0, 0, 0}).degree() == Polynomial::kZeroDegree);
    CHECK(Polynomial::from_integers(kQ, {5, 1, 0, 0}).degree() == 1);
    CHECK(Polynomial::one(kQ).degree() == 0);
    CHECK(Polynomial::variable(kQ).degree() == 1);
    CHECK_THROWS_AS(Polynomial::zero(kQ).leading_coefficient(), Error);
}

TEST_CASE("euclidean division") {
    const Polynomial x2_minus_1 = Polynomial::from_integers(kQ, {-1, 0, 1});
    const Polynomial x_minus_1 = Polynomial::from_integers(kQ, {-1, 1});
    {
        auto [quot, rem] = divmod(x2_minus_1, x_minus_1);
        CHECK(quot == Polynomial::from_integers(kQ, {1, 1}));
        CHECK(rem.is_zero());
    }
    {
        // long division by hand: x^2 = 1 * (x^2 - 1) + 1
        const Polynomial x2 = Polynomial::from_integers(kQ, {0, 0, 1});
        auto [quot, rem] = divmod(x2, x2_minus_1);
        CHECK(quot == Polynomial::one(kQ));
        CHECK(rem == Polynomial::one(kQ));
        CHECK(x2 == x2_minus_1 * quot + rem);
    }
    {
        const Polynomial p = Polynomial::from_integers(kQ, {4, -2, 7});
        auto [quot, rem] = divmod(p, Polynomial::one(kQ));
        CHECK(quot == p);
        CHECK(rem.is_zero());
    }
    CHECK_THROWS_AS(divmod(x2_minus_1, Polynomial::zero(kQ)), DivisionByZero);
}

TEST_CASE("divmod round-trip on random pairs") {
    for (const FieldSpec& spec : {kQ, FieldSpec::prime_field(5), FieldSpec::prime_field(2)}) {
        Xorshift64Star rng(99);
        for (int i = 0; i < 100; ++i) {
            const Polynomial p = random_polynomial(rng, spec, 0, 7);
            const Polynomial q = random_polynomial(rng, spec, 0, 5);
            auto [quot, rem] = divmod(p, q);
            CHECK(p == q * quot + rem);
            CHECK(rem.degree() < q.degree());
        }
    }
}

TEST_CASE("extended gcd on the worked examples") {
    {
        // f = x, g = 1 - x: coprime, lcm is the monic associate of x - x^2
        const BezoutCertificate cert =
            extended_gcd(Polynomial::variable(kQ), Polynomial::from_integers(kQ, {1, -1}));
        CHECK(cert.gcd == Polynomial::one(kQ));
        CHECK(cert.lcm == Polynomial::from_integers(kQ, {0, -1, 1}));  // x^2 - x
    }
    {
        // f = x + x^2, g = x - x^2: gcd x, lcm the monic associate of x - x^3
        const BezoutCertificate cert = extended_gcd(Polynomial::from_integers(kQ, {0, 1, 1}),
                                                    Polynomial::from_integers(kQ, {0, 1, -1}));
        CHECK(cert.gcd == Polynomial::variable(kQ));
        CHECK(cert.lcm == Polynomial::from_integers(kQ, {0, -1, 0, 1}));  // x^3 - x
    }
    {
        // f = x^2, g = x^2 - 1: checked by x^2 * 1 + (-1) * (x^2 - 1) = 1
        const BezoutCertificate cert = extended_gcd(Polynomial::from_integers(kQ, {0, 0, 1}),
                                                    Polynomial::from_integers(kQ, {-1, 0, 1}));
        CHECK(cert.gcd == Polynomial::one(kQ));
        CHECK(cert.coeff_f == Polynomial::one(kQ));
        CHECK(cert.coeff_g == Polynomial::from_integers(kQ, {-1}));
    }
}

TEST_CASE("zero-polynomial conventions") {
    const Polynomial f = Polynomial::from_integers(kQ, {2, 0, 4});  // 2 + 4x^2
    const Polynomial zero = Polynomial::zero(kQ);
    {
        const BezoutCertificate cert = extended_gcd(f, zero);
        CHECK(cert.gcd == f.monic());
        CHECK(cert.lcm.is_zero());
        CHECK(cert.f * cert.coeff_f + cert.coeff_g * cert.g == cert.gcd);
        CHECK(cert.g == cert.cofactor_g * cert.gcd);
        CHECK(cert.f == cert.gcd * cert.cofactor_f);
    }
    {
        const BezoutCertificate cert = extended_gcd(zero, f);
        CHECK(cert.gcd == f.monic());
        CHECK(cert.lcm.is_zero());
        CHECK(cert.f * cert.coeff_f + cert.coeff_g * cert.g == cert.gcd);
    }
    {
        const BezoutCertificate cert = extended_gcd(zero, zero);
        CHECK(cert.gcd.is_zero());
        CHECK(cert.lcm.is_zero());
    }
}

TEST_CASE("extended gcd invariants on random pairs") {
    for (const FieldSpec& spec : {kQ, FieldSpec::prime_field(2), FieldSpec::prime_field(7)}) {
        Xorshift64Star rng(5);
        for (int i = 0; i < 150; ++i) {
            const Polynomial f = random_polynomial(rng, spec, 0, 6);
            const Polynomial g = random_polynomial(rng, spec, 0, 6);
            const BezoutCertificate cert = extended_gcd(f, g);

            CHECK(cert.f * cert.coeff_f + cert.coeff_g * cert.g == cert.gcd);
            CHECK(cert.g == cert.cofactor_g * cert.gcd);
            CHECK(cert.f == cert.gcd * cert.cofactor_f);
            CHECK(cert.gcd.is_monic());
            CHECK(cert.lcm.is_monic());
            CHECK(monic_associates(cert.lcm * cert.gcd, f * g));

            // divisibility both ways
            CHECK(divmod(f, cert.gcd).second.is_zero());
            CHECK(divmod(g, cert.gcd).second.is_zero());
            CHECK(divmod(cert.lcm, f.monic()).second.is_zero());
            CHECK(divmod(cert.lcm, g.monic()).second.is_zero());

            // minimal-degree Bezout pair, when the bound applies
            const bool f_divides_g = divmod(g, f).second.is_zero();
            const bool g_divides_f = divmod(f, g).second.is_zero();
            if (!f_divides_g && !g_divides_f) {
                CHECK(cert.coeff_f.degree() < g.degree() - cert.gcd.degree());
                CHECK(cert.coeff_g.degree() < f.degree() - cert.gcd.degree());
            }

            // gcd symmetry and scaling invariance
            CHECK(extended_gcd(g, f).gcd == cert.gcd);
            const FieldScalar c = FieldScalar::from_integer(spec, 3);
            if (!c.is_zero()) CHECK(gcd(f.scaled(c), g) == cert.gcd);
        }
    }
}

TEST_CASE("coprimality") {
    const Polynomial one_minus_x = Polynomial::from_integers(kQ, {1, -1});
    const Polynomial one_plus_x = Polynomial::from_integers(kQ, {1, 1});
    CHECK(are_coprime(one_minus_x, one_plus_x));

    const FieldSpec gf2 = FieldSpec::prime_field(2);
    CHECK_FALSE(are_coprime(Polynomial::from_integers(gf2, {1, 1}),
                            Polynomial::from_integers(gf2, {1, 1})));

    CHECK_FALSE(are_coprime(Polynomial::variable(kQ), Polynomial::from_integers(kQ, {0, 0, 1})));
}

TEST_CASE("pairwise coprimality") {
    const std::array<Polynomial, 3> distinct = {Polynomial::variable(kQ),
                                                Polynomial::from_integers(kQ, {-1, 1}),
                                                Polynomial::from_integers(kQ, {1, 1})};
    CHECK(pairwise_coprime(distinct));

    const std::array<Polynomial, 2> sharing = {Polynomial::variable(kQ),
                                               Polynomial::from_integers(kQ, {0, -1, 1})};
    CHECK_FALSE(pairwise_coprime(sharing));

    const std::array<Polynomial, 1> single = {Polynomial::variable(kQ)};
    CHECK(pairwise_coprime(single));

    CHECK_THROWS_AS(pairwise_coprime(std::span<const Polynomial>{}), Error);
}

TEST_CASE("polynomial text form") {
    CHECK(Polynomial::from_integers(kQ, {0, 1, 1}).str() == "0 1 1");
    CHECK(Polynomial::zero(kQ).str() == "0");
    const FieldSpec gf5 = FieldSpec::prime_field(5);
    CHECK(Polynomial::from_integers(gf5, {0, -1, 0, 1}).str() == "0 4 0 1");
}
