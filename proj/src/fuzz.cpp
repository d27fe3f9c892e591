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

#include "polyrank/fuzz.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "polyrank/classifiers.hpp"
#include "polyrank/io.hpp"
#include "polyrank/spectral.hpp"

namespace polyrank {

std::string_view generator_name(GeneratorKind g) {
    switch (g) {
        case GeneratorKind::Generic: return "generic";
        case GeneratorKind::Idempotent: return "idempotent";
        case GeneratorKind::Involutive: return "involutive";
        case GeneratorKind::Tripotent: return "tripotent";
        case GeneratorKind::Nilpotent: return "nilpotent";
        case GeneratorKind::Companion: return "companion";
    }
    throw Error("unknown generator kind");
}

GeneratorKind parse_generator(std::string_view name) {
    for (GeneratorKind g : {GeneratorKind::Generic, GeneratorKind::Idempotent,
                            GeneratorKind::Involutive, GeneratorKind::Tripotent,
                            GeneratorKind::Nilpotent, GeneratorKind::Companion}) {
        if (generator_name(g) == name) return g;
    }
    throw ConfigError("unknown generator \"" + std::string(name) + "\"");
}

FieldScalar random_scalar(Xorshift64Star& rng, const FieldSpec& spec) {
    if (spec.is_prime_field()) return FieldScalar::from_residue(spec, rng.below(spec.modulus()));
    const long long num = rng.range(-9, 9);
    const long long den = rng.range(1, 9);
    return FieldScalar::from_fraction(spec, num, den);
}

namespace {

FieldScalar random_nonzero_scalar(Xorshift64Star& rng, const FieldSpec& spec) {
    if (spec.is_prime_field()) {
        return FieldScalar::from_residue(spec, 1 + rng.below(spec.modulus() - 1));
    }
    long long num = rng.range(1, 9);
    if (rng.below(2) == 1) num = -num;
    return FieldScalar::from_fraction(spec, num, rng.range(1, 9));
}

}  // namespace

Polynomial random_polynomial(Xorshift64Star& rng, const FieldSpec& spec, int deg_min, int deg_max) {
    const int degree = static_cast<int>(rng.range(deg_min, deg_max));
    std::vector<FieldScalar> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) coeffs.push_back(random_scalar(rng, spec));
    coeffs.push_back(random_nonzero_scalar(rng, spec));
    return Polynomial::from_coefficients(spec, std::move(coeffs));
}

Matrix random_matrix(Xorshift64Star& rng, const FieldSpec& spec, std::size_t n) {
    Matrix m = Matrix::zeros(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(rng, spec);
    }
    return m;
}

std::pair<Matrix, Matrix> random_invertible_pair(Xorshift64Star& rng, const FieldSpec& spec,
                                                 std::size_t n) {
    Matrix s = Matrix::identity(spec, n);
    Matrix s_inv = Matrix::identity(spec, n);
    if (n < 2) return {s, s_inv};

    const std::size_t ops = 3 * n;
    for (std::size_t k = 0; k < ops; ++k) {
        const std::size_t i = rng.below(n);
        std::size_t j = rng.below(n - 1);
        if (j >= i) ++j;
        if (rng.below(2) == 0) {
            // swap rows i and j of S; swap the matching columns of S^-1
            for (std::size_t c = 0; c < n; ++c) std::swap(s(i, c), s(j, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(s_inv(r, i), s_inv(r, j));
        } else {
            // row j += c * row i on S; column i -= c * column j on S^-1
            FieldScalar c = spec.is_prime_field()
                                ? random_nonzero_scalar(rng, spec)
                                : FieldScalar::from_integer(spec, rng.below(2) == 0 ? 1 : -1);
            for (std::size_t col = 0; col < n; ++col) s(j, col) += c * s(i, col);
            for (std::size_t row = 0; row < n; ++row) s_inv(row, i) -= c * s_inv(row, j);
        }
    }
    return {s, s_inv};
}

Matrix random_with_property(Xorshift64Star& rng, const FieldSpec& spec, std::size_t n,
                            GeneratorKind kind) {
    const FieldScalar zero = FieldScalar::zero(spec);
    const FieldScalar one = FieldScalar::one(spec);
    const FieldScalar minus_one = -one;

    switch (kind) {
        case GeneratorKind::Generic:
            return random_matrix(rng, spec, n);
        case GeneratorKind::Companion: {
            // Random monic polynomial of degree n.
            std::vector<FieldScalar> coeffs;
            coeffs.reserve(n + 1);
            for (std::size_t i = 0; i < n; ++i) coeffs.push_back(random_scalar(rng, spec));
            coeffs.push_back(one);
            return companion_matrix(Polynomial::from_coefficients(spec, std::move(coeffs)));
        }
        default:
            break;
    }

    Matrix canon = Matrix::zeros(spec, n, n);
    switch (kind) {
        case GeneratorKind::Idempotent: {
            const std::size_t ones = rng.below(n + 1);
            for (std::size_t i = 0; i < ones; ++i) canon(i, i) = one;
            break;
        }
        case GeneratorKind::Involutive: {
            if (spec.characteristic() == 2) {
                // Permutation involution: transposition blocks and fixed points.
                std::size_t i = 0;
                while (i < n) {
                    if (i + 1 < n && rng.below(2) == 0) {
                        canon(i, i + 1) = one;
                        canon(i + 1, i) = one;
                        i += 2;
                    } else {
                        canon(i, i) = one;
                        ++i;
                    }
                }
            } else {
                for (std::size_t i = 0; i < n; ++i) canon(i, i) = rng.below(2) == 0 ? one : minus_one;
            }
            break;
        }
        case GeneratorKind::Tripotent: {
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t pick = rng.below(3);
                canon(i, i) = pick == 0 ? zero : (pick == 1 ? one : minus_one);
            }
            break;
        }
        case GeneratorKind::Nilpotent: {
            for (std::size_t i = 1; i < n; ++i) {
                if (rng.below(2) == 0) canon(i, i - 1) = one;
            }
            break;
        }
        default:
            throw Error("unhandled generator kind");
    }

    auto [s, s_inv] = random_invertible_pair(rng, spec, n);
    return s * canon * s_inv;
}

std::vector<std::string> theorem_contract_failures(const RankIdentityCertificate& cert) {
    std::vector<std::string> failures;
    auto check = [&failures](bool ok, const char* name) {
        if (!ok) failures.emplace_back(name);
    };
    const BezoutCertificate& bz = cert.bezout;

    check(cert.rank_identity_holds(), "rank_identity");
    check(cert.block_anti == cert.row_op_second * cert.row_op_first * cert.block_diag *
                                 cert.col_op_first * cert.col_op_second,
          "factorization");
    check(rank(cert.block_diag) == cert.rank_f + cert.rank_g, "rank_block_diag");
    check(rank(cert.block_anti) == cert.rank_gcd + cert.rank_lcm, "rank_block_anti");
    check(bz.f * bz.coeff_f + bz.coeff_g * bz.g == bz.gcd, "bezout_poly");

    const std::size_t n = cert.order();
    const Matrix coeff_f_eval = cert.col_op_first.block(0, n, n, n);
    const Matrix coeff_g_eval = cert.row_op_first.block(0, n, n, n);
    const Matrix cofactor_f_eval = -cert.col_op_second.block(n, 0, n, n);
    const Matrix cofactor_g_eval = -cert.row_op_second.block(n, 0, n, n);
    check(cert.f_eval * coeff_f_eval + coeff_g_eval * cert.g_eval == cert.gcd_eval, "bezout_matrix");
    check(cert.g_eval == cofactor_g_eval * cert.gcd_eval, "cofactor_g");
    check(cert.f_eval == cert.gcd_eval * cofactor_f_eval, "cofactor_f");
    check(monic_associates(bz.lcm * bz.gcd, bz.f * bz.g), "gcd_lcm_associate");
    check(verify_certificate(cert).ok(), "certificate_verify");
    return failures;
}

std::vector<std::string> corollary_contract_failures(const Matrix& a, const Polynomial& f,
                                                     const Polynomial& g) {
    std::vector<std::string> failures;
    auto check = [&failures](bool ok, const char* name) {
        if (!ok) failures.emplace_back(name);
    };

    const AnnihilationCheck ann = annihilation_rank_check(a, f, g);
    check(ann.consistent(), "annihilation_equiv");
    const MinpolyCheck mp = minpoly_rank_check(a, f, g);
    check(mp.consistent(), "minpoly_divisibility_equiv");
    check(mp.minpoly_divides_lcm == ann.lcm_annihilates, "minpoly_bridge");

    const CoprimeRelationCheck rel = coprime_rank_check(a, f, g);
    if (rel.coprime) {
        check(rel.relation_holds, "coprime_rank_relation");
        check(coprime_annihilation_check(a, f, g).consistent(), "coprime_annihilation_equiv");
        check(!coprimality_witness(f, g).has_value(), "noncoprime_witness");
    } else if (!(f.is_zero() && g.is_zero())) {
        const std::optional<Matrix> witness = coprimality_witness(f, g);
        check(witness.has_value() && !coprime_rank_check(*witness, f, g).relation_holds,
              "noncoprime_witness");
    }
    return failures;
}

std::vector<std::string> classifier_contract_failures(const Matrix& a) {
    std::vector<std::string> failures;
    auto check = [&failures](bool ok, const char* name) {
        if (!ok) failures.emplace_back(name);
    };

    check(classify_idempotent(a).all_statements_agree(), "classifier_idempotent");
    if (a.spec().characteristic() != 2) {
        check(classify_involutive(a).all_statements_agree(), "classifier_involutive");
        check(classify_tripotent(a).all_statements_agree(), "classifier_tripotent");
        check(classify_a3a5(a).all_statements_agree(), "classifier_a3a5");
    }
    check(split_rank_identity(a).statements.front().holds, "split_rank_identity");

    // Cayley-Hamilton as the one-factor case of the coprime factor rank sum.
    const std::vector<Polynomial> factors{characteristic_polynomial(a)};
    check(charfactor_rank_sum(a, factors).statements.front().holds, "charpoly_factor_rank");
    return failures;
}

std::vector<std::string> spectral_contract_failures(const Matrix& a) {
    std::vector<std::string> failures;
    const Polynomial min_poly = minimal_polynomial(a);
    if (!horner_eval(min_poly, a).is_zero()) failures.emplace_back("minpoly_annihilates");
    if (!divides(min_poly, characteristic_polynomial(a))) {
        failures.emplace_back("minpoly_divides_charpoly");
    }
    return failures;
}

std::vector<std::string> check_all_contracts(const Matrix& a, const Polynomial& f,
                                             const Polynomial& g) {
    std::vector<std::string> failures = theorem_contract_failures(build_certificate(a, f, g));
    for (auto&& more : {corollary_contract_failures(a, f, g), classifier_contract_failures(a),
                        spectral_contract_failures(a)}) {
        failures.insert(failures.end(), more.begin(), more.end());
    }
    return failures;
}

void FuzzConfig::validate() const {
    if (trials < 1) throw ConfigError("trials must be at least 1");
    if (n_min < 1 || n_min > n_max) throw ConfigError("empty matrix order range");
    if (n_max > order_cap) {
        throw ConfigError("matrix order exceeds the cap of " + std::to_string(order_cap));
    }
    if (deg_min < 0 || deg_min > deg_max) throw ConfigError("empty degree range");
    if (threads < 1) throw ConfigError("threads must be at least 1");
}

namespace {

std::vector<GeneratorKind> effective_generators(const FuzzConfig& config) {
    if (!config.generators.empty()) return config.generators;
    return {GeneratorKind::Generic,   GeneratorKind::Idempotent, GeneratorKind::Involutive,
            GeneratorKind::Tripotent, GeneratorKind::Nilpotent,  GeneratorKind::Companion};
}

void run_one_trial(const FuzzConfig& config, const std::vector<GeneratorKind>& generators,
                   std::size_t trial, std::vector<FuzzFailure>& out) {
    Xorshift64Star rng(config.seed ^ static_cast<std::uint64_t>(trial));
    const std::size_t n =
        config.n_min + static_cast<std::size_t>(rng.below(config.n_max - config.n_min + 1));
    const GeneratorKind kind = generators[rng.below(generators.size())];
    const Matrix a = random_with_property(rng, config.field, n, kind);
    const Polynomial f = random_polynomial(rng, config.field, config.deg_min, config.deg_max);
    const Polynomial g = random_polynomial(rng, config.field, config.deg_min, config.deg_max);

    for (std::string& contract : check_all_contracts(a, f, g)) {
        out.push_back(FuzzFailure{trial, std::move(contract), config.field.str(), format_matrix(a),
                                  f.str(), g.str()});
    }
}

}  // namespace

FuzzReport run_fuzz(const FuzzConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    const std::vector<GeneratorKind> generators = effective_generators(config);

    FuzzReport report;
    report.config = config;
    report.trials_run = config.trials;

    if (config.threads == 1) {
        for (std::size_t trial = 0; trial < config.trials; ++trial) {
            run_one_trial(config, generators, trial, report.failures);
        }
    } else {
        const unsigned worker_count = config.threads;
        std::vector<std::vector<FuzzFailure>> partial(worker_count);
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w) {
            workers.emplace_back([&, w]() {
                for (std::size_t trial = w; trial < config.trials; trial += worker_count) {
                    run_one_trial(config, generators, trial, partial[w]);
                }
            });
        }
        for (std::thread& t : workers) t.join();
        for (auto& chunk : partial) {
            report.failures.insert(report.failures.end(), std::make_move_iterator(chunk.begin()),
                                   std::make_move_iterator(chunk.end()));
        }
    }

    std::sort(report.failures.begin(), report.failures.end(),
              [](const FuzzFailure& a, const FuzzFailure& b) {
                  return a.trial != b.trial ? a.trial < b.trial : a.contract < b.contract;
              });

    report.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count());
    return report;
}

nlohmann::json fuzz_report_to_json(const FuzzReport& report) {
    nlohmann::json generators = nlohmann::json::array();
    for (GeneratorKind g : report.config.generators) generators.push_back(std::string(generator_name(g)));

    nlohmann::json failures = nlohmann::json::array();
    for (const FuzzFailure& f : report.failures) {
        failures.push_back({{"trial", f.trial},
                            {"contract", f.contract},
                            {"inputs",
                             {{"field", f.field}, {"matrix", f.matrix_text}, {"f", f.f_text},
                              {"g", f.g_text}}}});
    }

    return nlohmann::json{{"config",
                           {{"field", report.config.field.str()},
                            {"n_min", report.config.n_min},
                            {"n_max", report.config.n_max},
                            {"deg_min", report.config.deg_min},
                            {"deg_max", report.config.deg_max},
                            {"trials", report.config.trials},
                            {"seed", report.config.seed},
                            {"generators", std::move(generators)},
                            {"threads", report.config.threads}}},
                          {"trials_run", report.trials_run},
                          {"failures", std::move(failures)},
                          {"elapsed_ms", report.elapsed_ms}};
}

}  // namespace polyrank
