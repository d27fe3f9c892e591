// Acceptance suite: every criterion below runs at full trial counts with exact
// equality as the only tolerance, and prints one [PASS]/[FAIL] line.  Criteria
// share no state except the spectral counters carried from the criterion-1
// trial loop into the criterion-6 summary, as those checks are defined over
// the same trials.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polyrank/classifiers.hpp"
#include "polyrank/fuzz.hpp"
#include "polyrank/io.hpp"
#include "polyrank/rank_theorem.hpp"
#include "polyrank/spectral.hpp"

using namespace polyrank;

namespace {

void report_line(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d [%s] %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

struct Counter {
    std::size_t total = 0;
    std::size_t violations = 0;
    void tally(bool ok) {
        ++total;
        if (!ok) ++violations;
    }
    bool clean() const { return violations == 0; }
    std::string summary() const {
        return std::to_string(total - violations) + "/" + std::to_string(total) + " checks exact";
    }
};

// Carried from the criterion 1-3 loop into criterion 6.
Counter g_minpoly_on_main_trials;

const std::vector<FieldSpec> kAllFields = {
    FieldSpec::prime_field(2),   FieldSpec::prime_field(3), FieldSpec::prime_field(5),
    FieldSpec::prime_field(7),   FieldSpec::prime_field(101),
    FieldSpec::rationals()};

bool contains(const std::vector<std::string>& names, const char* wanted) {
    for (const std::string& n : names) {
        if (n == wanted) return true;
    }
    return false;
}

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(POLYRANK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe)) output.append(buffer, got);
    return {WEXITSTATUS(pclose(pipe)), output};
}

}  // namespace

TEST_CASE("criteria 1-3: rank identity, factorization and Bezout layers at full scale") {
    Counter identity_counter, factorization_counter, bezout_counter;

    for (const FieldSpec& spec : kAllFields) {
        const std::size_t trials = spec.is_rationals() ? 200 : 1000;
        Xorshift64Star seeder(spec.is_rationals() ? 0x51u : spec.modulus());
        for (std::size_t trial = 0; trial < trials; ++trial) {
            Xorshift64Star rng(seeder.next() ^ trial);
            const std::size_t n = 1 + rng.below(8);
            const Matrix a = random_matrix(rng, spec, n);
            const Polynomial f = random_polynomial(rng, spec, 0, 6);
            const Polynomial g = random_polynomial(rng, spec, 0, 6);

            const RankIdentityCertificate cert = build_certificate(a, f, g);
            const std::vector<std::string> failed = theorem_contract_failures(cert);

            identity_counter.tally(!contains(failed, "rank_identity"));
            factorization_counter.tally(!contains(failed, "factorization") &&
                                        !contains(failed, "rank_block_diag") &&
                                        !contains(failed, "rank_block_anti") &&
                                        !contains(failed, "certificate_verify"));
            bezout_counter.tally(!contains(failed, "bezout_poly") &&
                                 !contains(failed, "bezout_matrix") &&
                                 !contains(failed, "cofactor_f") &&
                                 !contains(failed, "cofactor_g") &&
                                 !contains(failed, "gcd_lcm_associate"));

            // criterion 6 tail: minimal polynomial behavior on the same trials
            const Polynomial min_poly = minimal_polynomial(a);
            g_minpoly_on_main_trials.tally(horner_eval(min_poly, a).is_zero() &&
                                           divides(min_poly, characteristic_polynomial(a)));
        }
    }

    report_line(1, identity_counter.clean(),
                "rank f(A)+rank g(A) == rank D(A)+rank M(A): " + identity_counter.summary() +
                    " (1000 per prime field, 200 over Q, n<=8, deg<=6)");
    report_line(2, factorization_counter.clean(),
                "C == L2*L1*B*C1*C2 with block ranks matching: " + factorization_counter.summary());
    report_line(3, bezout_counter.clean(),
                "Bezout identity, matrix image, cofactors, M*D ~ f*g: " + bezout_counter.summary());
    CHECK(identity_counter.clean());
    CHECK(factorization_counter.clean());
    CHECK(bezout_counter.clean());
}

TEST_CASE("criterion 4: corollary equivalences on 500 mixed trials") {
    const std::vector<GeneratorKind> kinds = {GeneratorKind::Idempotent, GeneratorKind::Tripotent,
                                              GeneratorKind::Nilpotent, GeneratorKind::Generic,
                                              GeneratorKind::Companion};
    Counter pair_agreement, coprime_forward, witness_violations;
    std::size_t coprime_trials = 0, noncoprime_trials = 0;

    Xorshift64Star seeder(0xC04);
    for (std::size_t trial = 0; trial < 500; ++trial) {
        Xorshift64Star rng(seeder.next() ^ trial);
        const FieldSpec& spec = kAllFields[trial % kAllFields.size()];
        const std::size_t n = 1 + rng.below(6);
        const Matrix a = random_with_property(rng, spec, n, kinds[trial % kinds.size()]);
        Polynomial f = random_polynomial(rng, spec, 0, 4);
        Polynomial g = random_polynomial(rng, spec, 0, 4);
        if (trial % 3 == 0) {
            const Polynomial common = random_polynomial(rng, spec, 1, 2);
            f = f * common;
            g = g * common;
        }

        const AnnihilationCheck ann = annihilation_rank_check(a, f, g);
        const MinpolyCheck mp = minpoly_rank_check(a, f, g);
        bool agree = ann.consistent() && mp.consistent() &&
                     mp.minpoly_divides_lcm == ann.lcm_annihilates;

        const CoprimeRelationCheck rel = coprime_rank_check(a, f, g);
        if (rel.coprime) {
            ++coprime_trials;
            agree = agree && coprime_annihilation_check(a, f, g).consistent();
            coprime_forward.tally(rel.relation_holds);
        } else {
            ++noncoprime_trials;
            const std::optional<Matrix> witness = coprimality_witness(f, g);
            witness_violations.tally(witness.has_value() &&
                                     !coprime_rank_check(*witness, f, g).relation_holds);
        }
        pair_agreement.tally(agree);
    }

    const bool pass = pair_agreement.clean() && coprime_forward.clean() &&
                      witness_violations.clean() && coprime_trials > 0 && noncoprime_trials > 0;
    report_line(4, pass,
                "corollary boolean pairs agree: " + pair_agreement.summary() + "; relation in " +
                    std::to_string(coprime_trials) + " coprime trials: " +
                    coprime_forward.summary() + "; witness violations in " +
                    std::to_string(noncoprime_trials) + " non-coprime trials: " +
                    witness_violations.summary());
    CHECK(pass);
}

TEST_CASE("criterion 5: application equivalences on 500 mixed-polarity trials each") {
    const std::vector<FieldSpec> odd_fields = {FieldSpec::prime_field(3), FieldSpec::prime_field(5),
                                               FieldSpec::prime_field(7),
                                               FieldSpec::prime_field(101), FieldSpec::rationals()};
    bool all_pass = true;
    std::string detail;

    struct ClassifierCase {
        const char* name;
        GeneratorKind satisfying;
        const std::vector<FieldSpec>* fields;
        ClassificationReport (*run)(const Matrix&);
    };
    const ClassifierCase cases[] = {
        {"idempotent", GeneratorKind::Idempotent, &kAllFields, classify_idempotent},
        {"involutive", GeneratorKind::Involutive, &odd_fields, classify_involutive},
        {"tripotent", GeneratorKind::Tripotent, &odd_fields, classify_tripotent},
        {"a3a5", GeneratorKind::Tripotent, &odd_fields, classify_a3a5},
    };

    for (const ClassifierCase& c : cases) {
        Counter agreement;
        std::size_t holds_count = 0, fails_count = 0;
        Xorshift64Star seeder(0xC05 + static_cast<std::uint64_t>(c.satisfying));
        for (std::size_t trial = 0; trial < 500; ++trial) {
            Xorshift64Star rng(seeder.next() ^ trial);
            const FieldSpec& spec = (*c.fields)[trial % c.fields->size()];
            const std::size_t n = 1 + rng.below(6);
            const GeneratorKind kind = trial % 2 == 0 ? c.satisfying : GeneratorKind::Generic;
            const Matrix a = random_with_property(rng, spec, n, kind);
            const ClassificationReport report = c.run(a);
            agreement.tally(report.all_statements_agree());
            (report.direct_check ? holds_count : fails_count) += 1;
        }
        const bool polarity = holds_count > 0 && fails_count > 0;
        all_pass = all_pass && agreement.clean() && polarity;
        detail += std::string(c.name) + " " + agreement.summary() + " (" +
                  std::to_string(holds_count) + " holding / " + std::to_string(fails_count) +
                  " violating); ";
    }

    // the unconditional split identity, GF(2) included
    {
        Counter split;
        Xorshift64Star seeder(0xC06);
        for (std::size_t trial = 0; trial < 500; ++trial) {
            Xorshift64Star rng(seeder.next() ^ trial);
            const FieldSpec& spec = kAllFields[trial % kAllFields.size()];
            const std::size_t n = 1 + rng.below(6);
            const Matrix a = random_matrix(rng, spec, n);
            split.tally(split_rank_identity(a).statements.front().holds);
        }
        all_pass = all_pass && split.clean();
        detail += "app5 " + split.summary() + "; ";
    }

    // coprime characteristic factorizations, constructed so preconditions pass
    {
        Counter factored;
        Xorshift64Star seeder(0xC07);
        for (std::size_t trial = 0; trial < 500; ++trial) {
            Xorshift64Star rng(seeder.next() ^ trial);
            const FieldSpec& spec = kAllFields[trial % kAllFields.size()];
            if (trial % 2 == 0) {
                // k = 1: the characteristic polynomial itself (Cayley-Hamilton)
                const std::size_t n = 1 + rng.below(5);
                const Matrix a = random_matrix(rng, spec, n);
                const std::vector<Polynomial> factors{characteristic_polynomial(a)};
                factored.tally(charfactor_rank_sum(a, factors).statements.front().holds);
            } else {
                // distinct monic linear factors, companion of their product
                const std::size_t max_k = spec.is_prime_field()
                                              ? std::min<std::size_t>(3, spec.modulus())
                                              : 3;
                const std::size_t k = 1 + rng.below(max_k);
                std::vector<Polynomial> factors;
                Polynomial product = Polynomial::one(spec);
                for (std::size_t i = 0; i < k; ++i) {
                    const FieldScalar root = FieldScalar::from_integer(spec, static_cast<long long>(i));
                    factors.push_back(Polynomial::from_coefficients(
                        spec, {-root, FieldScalar::one(spec)}));
                    product = product * factors.back();
                }
                auto [s, s_inv] = random_invertible_pair(rng, spec, product.degree());
                const Matrix a = s * companion_matrix(product) * s_inv;
                factored.tally(charfactor_rank_sum(a, factors).statements.front().holds);
            }
        }
        all_pass = all_pass && factored.clean();
        detail += "charfactors " + factored.summary();
    }

    report_line(5, all_pass, detail);
    CHECK(all_pass);
}

TEST_CASE("criterion 6: spectral oracles") {
    Counter leibniz;
    for (const FieldSpec& spec : {FieldSpec::prime_field(5), FieldSpec::rationals()}) {
        Xorshift64Star seeder(spec.is_rationals() ? 0x61u : 0x62u);
        for (std::size_t trial = 0; trial < 100; ++trial) {
            Xorshift64Star rng(seeder.next() ^ trial);
            const std::size_t n = 1 + rng.below(4);
            const Matrix a = random_matrix(rng, spec, n);
            leibniz.tally(characteristic_polynomial(a) == oracles::leibniz_char_poly(a));
        }
    }

    Counter minimality;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const FieldSpec spec = FieldSpec::prime_field(p);
        Xorshift64Star seeder(0x63u + p);
        for (std::size_t trial = 0; trial < 34; ++trial) {
            Xorshift64Star rng(seeder.next() ^ trial);
            const std::size_t n = 1 + rng.below(4);
            const Matrix a = random_matrix(rng, spec, n);
            minimality.tally(oracles::no_monic_annihilator_below(a, minimal_polynomial(a).degree()));
        }
    }

    const bool pass =
        leibniz.clean() && minimality.clean() && g_minpoly_on_main_trials.clean() &&
        g_minpoly_on_main_trials.total == 5200;  // runs after the criterion 1-3 loop
    report_line(6, pass,
                "char poly vs Leibniz oracle: " + leibniz.summary() +
                    "; min poly minimality enumeration: " + minimality.summary() +
                    "; annihilation+divisibility on main trials: " +
                    g_minpoly_on_main_trials.summary());
    CHECK(pass);
}

TEST_CASE("criterion 7: determinism, replay and certificate round-trip") {
    bool pass = true;

    // byte-identical fuzz reports across runs and thread counts (elapsed aside)
    const std::string flags = "fuzz --field 3 --n 1..5 --deg 0..4 --trials 60 --seed 2026";
    const CliResult first = run_cli(flags);
    const CliResult second = run_cli(flags);
    const CliResult threaded = run_cli(flags + " --threads 4");
    pass = pass && first.exit_code == 0 && second.exit_code == 0 && threaded.exit_code == 0;

    nlohmann::json ja = nlohmann::json::parse(first.output);
    nlohmann::json jb = nlohmann::json::parse(second.output);
    nlohmann::json jc = nlohmann::json::parse(threaded.output);
    const bool failures_identical =
        ja.at("failures").dump() == jb.at("failures").dump() &&
        ja.at("failures").dump() == jc.at("failures").dump();
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    jc.erase("elapsed_ms");
    const bool rerun_identical = ja.dump() == jb.dump();
    // thread-count invariance, the echoed thread count itself aside
    ja["config"].erase("threads");
    jc["config"].erase("threads");
    const bool reports_identical = rerun_identical && ja.dump() == jc.dump();
    pass = pass && failures_identical && reports_identical;

    // certificate JSON written by one process, re-verified from the file here
    const auto dir = std::filesystem::temp_directory_path();
    const auto matrix_path = dir / "polyrank_acceptance_matrix.txt";
    const auto cert_path = dir / "polyrank_acceptance_cert.json";
    {
        Xorshift64Star rng(0x71);
        const Matrix a = random_matrix(rng, FieldSpec::prime_field(7), 4);
        std::ofstream out(matrix_path);
        out << format_matrix(a);
    }
    const CliResult verify = run_cli("verify --matrix " + matrix_path.string() +
                                     " --f \"0 1 1\" --g \"0 1 -1\" --cert-out " +
                                     cert_path.string());
    pass = pass && verify.exit_code == 0;

    std::ifstream in(cert_path);
    bool roundtrip = false;
    if (in.good()) {
        nlohmann::json j;
        in >> j;
        roundtrip = verify_certificate(certificate_from_json(j)).ok() && j.at("verified").get<bool>();
    }
    pass = pass && roundtrip;

    report_line(7, pass,
                std::string("fuzz reports byte-identical across runs and thread counts: ") +
                    (reports_identical ? "yes" : "no") +
                    "; certificate JSON re-verified from file: " + (roundtrip ? "yes" : "no"));
    CHECK(pass);
}
