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

#ifndef POLYRANK_CLASSIFIERS_HPP
#define POLYRANK_CLASSIFIERS_HPP

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyrank/matrix.hpp"
#include "polyrank/polynomial.hpp"

namespace polyrank {

enum class MatrixProperty {
    Idempotent,         // A^2 == A
    Involutive,         // A^2 == I
    Tripotent,          // A^3 == A
    A3EqualsA5,         // A^3 == A^5
    CharFactorRankSum,  // coprime factorization of the characteristic polynomial
    SplitRankIdentity,  // rank(A+A^2) + rank(A-A^2) == rank D(A) + rank M(A)
};

/// CLI/JSON token: idempotent, involutive, tripotent, a3a5, charfactors, app5.
std::string_view property_name(MatrixProperty p);

struct Statement {
    std::string label;
    bool holds;
};

/// Outcome of one classifier: the defining matrix equation evaluated directly
/// (where one exists; otherwise direct_check mirrors the lone statement) next
/// to every equivalent rank statement, each computed from scratch with its own
/// polynomial evaluations and eliminations.
struct ClassificationReport {
    MatrixProperty property;
    std::size_t order;  // n
    FieldSpec field;
    bool direct_check;
    std::vector<Statement> statements;
    std::map<std::string, std::size_t> ranks_used;

    /// The equivalence contract: every rank statement agrees with direct_check.
    bool all_statements_agree() const noexcept {
        for (const Statement& s : statements) {
            if (s.holds != direct_check) return false;
        }
        return true;
    }
};

/// A^2 == A  iff  rank A + rank(I - A) == n.
ClassificationReport classify_idempotent(const Matrix& a);

/// A^2 == I  iff  rank(I - A) + rank(I + A) == n.  Characteristic 2 refused.
ClassificationReport classify_involutive(const Matrix& a);

/// A^3 == A  iff each of three rank statements.  Characteristic 2 refused.
ClassificationReport classify_tripotent(const Matrix& a);

/// A^3 == A^5  iff each of seven rank statements.  Characteristic 2 refused.
ClassificationReport classify_a3a5(const Matrix& a);

/// For pairwise-coprime factors with product equal (up to a nonzero scalar) to
/// the characteristic polynomial of A:  sum of rank f_i(A) == (k - 1) * n.
/// Throws NotPairwiseCoprime / NotCharPolyFactorization when the preconditions
/// fail; the statement itself always holds once they pass.
ClassificationReport charfactor_rank_sum(const Matrix& a, std::span<const Polynomial> factors);

/// The unconditional identity obtained from f = x + x^2, g = x - x^2:
/// rank(A+A^2) + rank(A-A^2) == rank D(A) + rank M(A).  Over fields of
/// characteristic != 2 this reads rank(A+A^2) + rank(A-A^2) == rank A +
/// rank(A-A^3); over GF(2) the gcd degenerates and the identity still holds.
ClassificationReport split_rank_identity(const Matrix& a);

}  // namespace polyrank

#endif  // POLYRANK_CLASSIFIERS_HPP
