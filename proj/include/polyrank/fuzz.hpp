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

#ifndef POLYRANK_FUZZ_HPP
#define POLYRANK_FUZZ_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyrank/matrix.hpp"
#include "polyrank/polynomial.hpp"
#include "polyrank/rank_theorem.hpp"

namespace polyrank {

/// xorshift64* generator (Vigna's variant):
///   x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;  return x * 0x2545F4914F6CDD1D
/// The state must be nonzero; a zero seed is remapped to 0x9E3779B97F4A7C15.
/// Fuzz trial i runs on the child seed (seed XOR i), so serial and parallel
/// schedules draw identical values.
class Xorshift64Star {
   public:
    static constexpr std::uint64_t kZeroSeedReplacement = 0x9E3779B97F4A7C15ull;

    explicit Xorshift64Star(std::uint64_t seed) noexcept
        : state_(seed == 0 ? kZeroSeedReplacement : seed) {}

    std::uint64_t next() noexcept {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }

    /// Uniform-enough draw in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

    /// Inclusive range draw.
    std::int64_t range(std::int64_t lo, std::int64_t hi) noexcept {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

   private:
    std::uint64_t state_;
};

enum class GeneratorKind { Generic, Idempotent, Involutive, Tripotent, Nilpotent, Companion };

std::string_view generator_name(GeneratorKind g);
GeneratorKind parse_generator(std::string_view name);  // throws ConfigError

/// Random field element; rationals draw numerator in [-9, 9] and denominator
/// in [1, 9] to keep elimination entries desk-scale.
FieldScalar random_scalar(Xorshift64Star& rng, const FieldSpec& spec);

/// Random polynomial with degree uniform in [deg_min, deg_max] and a nonzero
/// leading coefficient.
Polynomial random_polynomial(Xorshift64Star& rng, const FieldSpec& spec, int deg_min, int deg_max);

Matrix random_matrix(Xorshift64Star& rng, const FieldSpec& spec, std::size_t n);

/// (S, S^-1) built from random elementary row operations, so the inverse is
/// exact by construction.
std::pair<Matrix, Matrix> random_invertible_pair(Xorshift64Star& rng, const FieldSpec& spec,
                                                 std::size_t n);

/// Canonical form of the requested kind conjugated by a random invertible
/// matrix (Generic and Companion skip the conjugation).
Matrix random_with_property(Xorshift64Star& rng, const FieldSpec& spec, std::size_t n,
                            GeneratorKind kind);

/// Contract batteries.  Each returns the names of violated contracts; a
/// correct build returns empty vectors on every input.
std::vector<std::string> theorem_contract_failures(const RankIdentityCertificate& cert);
std::vector<std::string> corollary_contract_failures(const Matrix& a, const Polynomial& f,
                                                     const Polynomial& g);
std::vector<std::string> classifier_contract_failures(const Matrix& a);
std::vector<std::string> spectral_contract_failures(const Matrix& a);
/// Union of all batteries on one (A, f, g) draw.
std::vector<std::string> check_all_contracts(const Matrix& a, const Polynomial& f,
                                             const Polynomial& g);

struct FuzzConfig {
    FieldSpec field = FieldSpec::rationals();
    std::size_t n_min = 1;
    std::size_t n_max = 6;
    int deg_min = 0;
    int deg_max = 5;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::vector<GeneratorKind> generators;  // empty means all kinds
    unsigned threads = 1;
    std::size_t order_cap = 64;

    void validate() const;  // throws ConfigError
};

struct FuzzFailure {
    std::size_t trial;
    std::string contract;
    std::string field;
    std::string matrix_text;
    std::string f_text;
    std::string g_text;
};

struct FuzzReport {
    FuzzConfig config;
    std::size_t trials_run = 0;
    std::vector<FuzzFailure> failures;  // sorted by (trial, contract)
    std::uint64_t elapsed_ms = 0;
};

/// Runs the configured number of independent trials (possibly across threads;
/// the outcome is schedule-independent) and aggregates failures.
FuzzReport run_fuzz(const FuzzConfig& config);

/// Deterministic except for the "elapsed_ms" field.
nlohmann::json fuzz_report_to_json(const FuzzReport& report);

}  // namespace polyrank

#endif  // POLYRANK_FUZZ_HPP
