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

#ifndef POLYRANK_RANK_THEOREM_HPP
#define POLYRANK_RANK_THEOREM_HPP

#include <optional>
#include <string>
#include <vector>

#include "polyrank/matrix.hpp"
#include "polyrank/polynomial.hpp"

namespace polyrank {

/// Constructive witness of the rank identity
///
///     rank f(A) + rank g(A) == rank D(A) + rank M(A)
///
/// where D = gcd(f, g) and M = lcm(f, g).  The certificate stores the Bezout
/// data, the four n x n evaluations, six 2n x 2n block matrices and the four
/// ranks, so that a verifier can re-check everything without re-deriving any
/// of it (and in particular from a JSON file produced by another process).
///
/// The block matrices realize the factorization
///
///     block_anti == row_op_second * row_op_first * block_diag * col_op_first * col_op_second
///
/// with
///     block_diag    = [[f(A), 0], [0, g(A)]]                       (JSON "B")
///     block_anti    = [[0, D(A)], [-(f*g/D)(A), 0]]                (JSON "C")
///     col_op_first  = [[I, coeff_f(A)], [0, I]]                    (JSON "C1")
///     row_op_first  = [[I, coeff_g(A)], [0, I]]                    (JSON "L1")
///     col_op_second = [[I, 0], [-cofactor_f(A), I]]                (JSON "C2")
///     row_op_second = [[I, 0], [-cofactor_g(A), I]]                (JSON "L2")
///
/// The four transformation matrices are unit block-triangular, hence
/// invertible, which forces rank(block_diag) == rank(block_anti).
///
/// lcm_eval holds (f*g/D)(A) = cofactor_g(A)*f(A): the scalar multiple of
/// M(A) that makes the factorization exact even though M itself is kept
/// monic.  Ranks are unaffected because the factor is a nonzero scalar.
struct RankIdentityCertificate {
    BezoutCertificate bezout;

    Matrix f_eval;    // f(A)
    Matrix g_eval;    // g(A)
    Matrix gcd_eval;  // D(A)
    Matrix lcm_eval;  // (f*g/D)(A), associate of M(A)

    Matrix block_diag;     // JSON "B"
    Matrix block_anti;     // JSON "C"
    Matrix col_op_first;   // JSON "C1"
    Matrix col_op_second;  // JSON "C2"
    Matrix row_op_first;   // JSON "L1"
    Matrix row_op_second;  // JSON "L2"

    std::size_t rank_f;
    std::size_t rank_g;
    std::size_t rank_gcd;
    std::size_t rank_lcm;

    std::size_t order() const noexcept { return f_eval.rows(); }
    bool rank_identity_holds() const noexcept { return rank_f + rank_g == rank_gcd + rank_lcm; }
};

/// Evaluates the six polynomial matrices, assembles the block factorization and
/// computes the four ranks.  A must be square over the same domain as f and g.
RankIdentityCertificate build_certificate(const Matrix& a, const Polynomial& f, const Polynomial& g);

/// Result of re-checking a certificate; empty failure list means valid.
struct VerificationResult {
    std::vector<std::string> failures;
    bool ok() const noexcept { return failures.empty(); }
    explicit operator bool() const noexcept { return ok(); }
};

/// Re-checks every certificate invariant from scratch: the polynomial-level
/// Bezout identities, the block structure, the factorization equality, and all
/// ranks by fresh elimination.  Never throws; problems come back by name.
VerificationResult verify_certificate(const RankIdentityCertificate& cert);

/// M(A) == 0  iff  rank f(A) + rank g(A) == rank D(A).  Both sides evaluated
/// independently; they must agree on every input.
struct AnnihilationCheck {
    bool rank_collapse;     // rank f(A) + rank g(A) == rank D(A)
    bool lcm_annihilates;   // M(A) == 0
    bool consistent() const noexcept { return rank_collapse == lcm_annihilates; }
};
AnnihilationCheck annihilation_rank_check(const Matrix& a, const Polynomial& f, const Polynomial& g);

/// Same left-hand side, with M(A) == 0 replaced by the divisibility of the
/// lcm by the minimal polynomial of A.
struct MinpolyCheck {
    bool rank_collapse;
    bool minpoly_divides_lcm;  // m_A | M
    bool consistent() const noexcept { return rank_collapse == minpoly_divides_lcm; }
};
MinpolyCheck minpoly_rank_check(const Matrix& a, const Polynomial& f, const Polynomial& g);

/// rank(f(A)*g(A)) + n == rank f(A) + rank g(A), next to the coprimality of
/// (f, g).  Coprime implies the relation for every A; the converse holds only
/// quantified over all matrices, which coprimality_witness makes testable.
struct CoprimeRelationCheck {
    bool relation_holds;
    bool coprime;
};
CoprimeRelationCheck coprime_rank_check(const Matrix& a, const Polynomial& f, const Polynomial& g);

/// For non-coprime (f, g): the companion matrix of gcd(f, g), on which both
/// polynomials vanish and the coprime rank relation demonstrably fails.
/// Returns nothing when f and g are coprime; throws BothZero on (0, 0).
std::optional<Matrix> coprimality_witness(const Polynomial& f, const Polynomial& g);

/// For coprime f, g:  f(A)*g(A) == 0  iff  rank f(A) + rank g(A) == n.
/// Throws NotCoprime otherwise.
struct CoprimeAnnihilationCheck {
    bool product_zero;
    bool ranks_sum_to_order;
    bool consistent() const noexcept { return product_zero == ranks_sum_to_order; }
};
CoprimeAnnihilationCheck coprime_annihilation_check(const Matrix& a, const Polynomial& f,
                                                    const Polynomial& g);

}  // namespace polyrank

#endif  // POLYRANK_RANK_THEOREM_HPP
