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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyrank/classifiers.hpp"
#include "polyrank/fuzz.hpp"
#include "polyrank/io.hpp"
#include "polyrank/rank_theorem.hpp"
#include "polyrank/spectral.hpp"

namespace {

// Exit codes: 0 = all contracts agree, 1 = contract violation (a bug, not a
// user error), 2 = usage or parse problem.
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct RangeOption {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

// "LO..HI" or a single value.
RangeOption parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const std::size_t v = std::stoull(text);
            return {v, v};
        }
        return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw polyrank::ConfigError("bad range \"" + text + "\", expected LO..HI");
    }
}

std::vector<polyrank::Polynomial> parse_factor_list(const std::string& text,
                                                    const polyrank::FieldSpec& spec) {
    std::vector<polyrank::Polynomial> factors;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        if (semi == std::string::npos) semi = text.size();
        factors.push_back(polyrank::parse_polynomial(text.substr(start, semi - start), spec));
        start = semi + 1;
    }
    return factors;
}

int cmd_verify(const std::string& matrix_path, const std::string& f_text, const std::string& g_text,
               const std::string& cert_out, bool json_output) {
    const polyrank::Matrix a = polyrank::parse_matrix_file(matrix_path);
    const polyrank::Polynomial f = polyrank::parse_polynomial(f_text, a.spec());
    const polyrank::Polynomial g = polyrank::parse_polynomial(g_text, a.spec());

    const polyrank::RankIdentityCertificate cert = polyrank::build_certificate(a, f, g);
    const polyrank::VerificationResult verdict = polyrank::verify_certificate(cert);

    if (!cert_out.empty()) {
        std::ofstream out(cert_out);
        if (!out) throw polyrank::ConfigError("cannot write \"" + cert_out + "\"");
        out << polyrank::certificate_to_json(cert, verdict.ok()).dump(2) << '\n';
    }

    if (json_output) {
        std::cout << polyrank::certificate_to_json(cert, verdict.ok()).dump(2) << '\n';
    } else {
        std::cout << "field: " << a.spec().str() << "  n: " << cert.order() << '\n'
                  << "f: " << f.str() << '\n'
                  << "g: " << g.str() << '\n'
                  << "D = gcd(f,g): " << cert.bezout.gcd.str() << '\n'
                  << "M = lcm(f,g): " << cert.bezout.lcm.str() << '\n'
                  << "rank f(A) = " << cert.rank_f << '\n'
                  << "rank g(A) = " << cert.rank_g << '\n'
                  << "rank D(A) = " << cert.rank_gcd << '\n'
                  << "rank M(A) = " << cert.rank_lcm << '\n'
                  << "identity: " << cert.rank_f << " + " << cert.rank_g << " == " << cert.rank_gcd
                  << " + " << cert.rank_lcm << '\n'
                  << "verified: " << (verdict.ok() ? "yes" : "no") << '\n';
        for (const std::string& name : verdict.failures) {
            std::cout << "failed invariant: " << name << '\n';
        }
    }
    return verdict.ok() ? kOk : kViolation;
}

int cmd_classify(const std::string& matrix_path, const std::string& property,
                 const std::string& factor_text) {
    const polyrank::Matrix a = polyrank::parse_matrix_file(matrix_path);

    polyrank::ClassificationReport report = [&] {
        if (property == "idempotent") return polyrank::classify_idempotent(a);
        if (property == "involutive") return polyrank::classify_involutive(a);
        if (property == "tripotent") return polyrank::classify_tripotent(a);
        if (property == "a3a5") return polyrank::classify_a3a5(a);
        if (property == "app5") return polyrank::split_rank_identity(a);
        if (property == "charfactors") {
            if (factor_text.empty()) {
                throw polyrank::ConfigError("--factors is required for charfactors");
            }
            return polyrank::charfactor_rank_sum(a, parse_factor_list(factor_text, a.spec()));
        }
        throw polyrank::ConfigError("unknown property \"" + property + "\"");
    }();

    std::cout << polyrank::report_to_json(report).dump(2) << '\n';
    return report.all_statements_agree() ? kOk : kViolation;
}

int cmd_fuzz(polyrank::FuzzConfig config) {
    config.validate();
    const polyrank::FuzzReport report = polyrank::run_fuzz(config);
    std::cout << polyrank::fuzz_report_to_json(report).dump(2) << '\n';
    return report.failures.empty() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rank identities for matrix polynomials over Q and GF(p)"};
    app.require_subcommand(1);

    std::string matrix_path, f_text, g_text, cert_out, property, factor_text;
    bool json_output = false;

    CLI::App* verify = app.add_subcommand("verify", "build and verify a rank identity certificate");
    verify->add_option("--matrix", matrix_path, "matrix file")->required();
    verify->add_option("--f", f_text, "ascending coefficients of f")->required();
    verify->add_option("--g", g_text, "ascending coefficients of g")->required();
    verify->add_option("--cert-out", cert_out, "write the certificate JSON here");
    verify->add_flag("--json", json_output, "print the certificate JSON instead of text");

    CLI::App* classify = app.add_subcommand("classify", "rank-based matrix property classifiers");
    classify->add_option("--matrix", matrix_path, "matrix file")->required();
    classify
        ->add_option("--property", property,
                     "one of idempotent, involutive, tripotent, a3a5, charfactors, app5")
        ->required();
    classify->add_option("--factors", factor_text, "semicolon-separated polynomials (charfactors)");
    classify->add_flag("--json", json_output, "reports are always JSON; accepted for symmetry");

    CLI::App* minpoly = app.add_subcommand("minpoly", "minimal polynomial of a matrix");
    minpoly->add_option("--matrix", matrix_path, "matrix file")->required();
    CLI::App* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of a matrix");
    charpoly->add_option("--matrix", matrix_path, "matrix file")->required();
    CLI::App* rank_cmd = app.add_subcommand("rank", "exact rank of a matrix");
    rank_cmd->add_option("--matrix", matrix_path, "matrix file")->required();

    CLI::App* fuzz = app.add_subcommand("fuzz", "seeded randomized contract fuzzing");
    std::string field_text = "Q", n_range = "1..6", deg_range = "0..5", generator_list;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    fuzz->add_option("--field", field_text, "Q or a prime modulus")->required();
    fuzz->add_option("--n", n_range, "matrix order range LO..HI");
    fuzz->add_option("--deg", deg_range, "polynomial degree range LO..HI");
    fuzz->add_option("--trials", trials, "number of trials");
    fuzz->add_option("--seed", seed, "64-bit seed");
    fuzz->add_option("--generators", generator_list,
                     "comma-separated subset of generic, idempotent, involutive, tripotent, "
                     "nilpotent, companion");
    fuzz->add_option("--threads", threads, "worker threads (result is schedule-independent)");
    fuzz->add_flag("--json", json_output, "reports are always JSON; accepted for symmetry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(matrix_path, f_text, g_text, cert_out, json_output);
        if (classify->parsed()) return cmd_classify(matrix_path, property, factor_text);
        if (minpoly->parsed()) {
            std::cout << polyrank::format_polynomial(
                             polyrank::minimal_polynomial(polyrank::parse_matrix_file(matrix_path)))
                      << '\n';
            return kOk;
        }
        if (charpoly->parsed()) {
            std::cout << polyrank::format_polynomial(polyrank::characteristic_polynomial(
                             polyrank::parse_matrix_file(matrix_path)))
                      << '\n';
            return kOk;
        }
        if (rank_cmd->parsed()) {
            std::cout << polyrank::rank(polyrank::parse_matrix_file(matrix_path)) << '\n';
            return kOk;
        }
        if (fuzz->parsed()) {
            polyrank::FuzzConfig config;
            config.field = polyrank::FieldSpec::parse(field_text);
            const RangeOption n = parse_range(n_range);
            config.n_min = n.lo;
            config.n_max = n.hi;
            const RangeOption deg = parse_range(deg_range);
            config.deg_min = static_cast<int>(deg.lo);
            config.deg_max = static_cast<int>(deg.hi);
            config.trials = trials;
            config.seed = seed;
            config.threads = threads;
            if (!generator_list.empty()) {
                std::size_t start = 0;
                while (start <= generator_list.size()) {
                    std::size_t comma = generator_list.find(',', start);
                    if (comma == std::string::npos) comma = generator_list.size();
                    config.generators.push_back(
                        polyrank::parse_generator(generator_list.substr(start, comma - start)));
                    start = comma + 1;
                }
            }
            return cmd_fuzz(std::move(config));
        }
    } catch (const polyrank::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const polyrank::BadField& e) {
        std::cerr << "bad field: " << e.what() << '\n';
        return kUsage;
    } catch (const polyrank::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kUsage;
    } catch (const polyrank::CharacteristicTwo& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kUsage;
    } catch (const polyrank::NotPairwiseCoprime& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kUsage;
    } catch (const polyrank::NotCharPolyFactorization& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kUsage;
    } catch (const polyrank::NotCoprime& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kUsage;
    } catch (const polyrank::DimensionMismatch& e) {
        std::cerr << "bad input: " << e.what() << '\n';
        return kUsage;
    } catch (const polyrank::DomainMismatch& e) {
        std::cerr << "bad input: " << e.what() << '\n';
        return kUsage;
    } catch (const polyrank::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kViolation;
    }
    return kUsage;
}
