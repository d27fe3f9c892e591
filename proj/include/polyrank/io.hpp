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

#ifndef POLYRANK_IO_HPP
#define POLYRANK_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "polyrank/classifiers.hpp"
#include "polyrank/matrix.hpp"
#include "polyrank/polynomial.hpp"
#include "polyrank/rank_theorem.hpp"

namespace polyrank {

/// One field element: a decimal residue over GF(p) (reduced mod p on entry),
/// or "a" / "a/b" with positive denominator over Q.
FieldScalar parse_scalar(std::string_view text, const FieldSpec& spec);

/// Whitespace-separated ascending coefficients; trailing zeros are stripped.
Polynomial parse_polynomial(std::string_view text, const FieldSpec& spec);

/// Inverse of parse_polynomial; the zero polynomial prints as "0".
std::string format_polynomial(const Polynomial& p);

/// Matrix text format:
///   line 1: "field Q" or "field <p>"
///   line 2: "<nrows> <ncols>"
///   then nrows lines of ncols whitespace-separated entries.
Matrix parse_matrix(std::istream& in);
Matrix parse_matrix_file(const std::string& path);
std::string format_matrix(const Matrix& m);

/// Certificate JSON: field, n, the eight polynomials (ascending coefficient
/// string arrays under keys f, g, D, M, phi1, phi2, psi1, psi2), the six block
/// matrices (row arrays of entry strings under B, C, C1, C2, L1, L2), the four
/// ranks and a "verified" flag.
nlohmann::json certificate_to_json(const RankIdentityCertificate& cert, bool verified);

/// Rebuilds a certificate from its JSON form.  The n x n evaluations are read
/// back out of the B and C blocks; nothing is recomputed, so a tampered file
/// still parses and verify_certificate does the judging.
RankIdentityCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ClassificationReport& report);

}  // namespace polyrank

#endif  // POLYRANK_IO_HPP
