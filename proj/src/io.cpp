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

#include "polyrank/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace polyrank {

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) tokens.emplace_back(text.substr(start, i - start));
    }
    return tokens;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Signed decimal integer syntax: [+-]?digits.
bool integer_syntax(std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    return all_digits(s);
}

}  // namespace

FieldScalar parse_scalar(std::string_view text, const FieldSpec& spec) {
    if (text.empty()) throw ParseError("empty field element");

    if (spec.is_prime_field()) {
        std::string_view digits = text;
        bool negate = false;
        if (digits[0] == '+' || digits[0] == '-') {
            negate = digits[0] == '-';
            digits.remove_prefix(1);
        }
        if (!all_digits(digits)) throw ParseError("bad field element \"" + std::string(text) + "\"");
        const std::uint64_t p = spec.modulus();
        std::uint64_t acc = 0;
        for (char c : digits) acc = (acc * 10 + static_cast<std::uint64_t>(c - '0')) % p;
        if (negate && acc != 0) acc = p - acc;
        return FieldScalar::from_residue(spec, acc);
    }

    const std::size_t slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    if (!integer_syntax(num_part)) throw ParseError("bad rational \"" + std::string(text) + "\"");
    if (num_part[0] == '+') num_part.remove_prefix(1);
    mpz_class num(std::string(num_part), 10);
    mpz_class den(1);
    if (slash != std::string_view::npos) {
        std::string_view den_part = text.substr(slash + 1);
        if (!all_digits(den_part)) throw ParseError("bad denominator in \"" + std::string(text) + "\"");
        den = mpz_class(std::string(den_part), 10);
        if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
    mpq_class value(num, den);
    value.canonicalize();
    return FieldScalar::from_rational(spec, std::move(value));
}

Polynomial parse_polynomial(std::string_view text, const FieldSpec& spec) {
    const std::vector<std::string> tokens = split_tokens(text);
    if (tokens.empty()) throw ParseError("polynomial needs at least one coefficient");
    std::vector<FieldScalar> coeffs;
    coeffs.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        try {
            coeffs.push_back(parse_scalar(tokens[i], spec));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()), 0, i + 1);
        }
    }
    return Polynomial::from_coefficients(spec, std::move(coeffs));
}

std::string format_polynomial(const Polynomial& p) {
    return p.str();
}

Matrix parse_matrix(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw ParseError("missing field header", 1);
    ++line_no;
    std::vector<std::string> header = split_tokens(line);
    if (header.size() != 2 || header[0] != "field") {
        throw ParseError("expected \"field Q\" or \"field <p>\"", line_no);
    }
    const FieldSpec spec = FieldSpec::parse(header[1]);

    if (!std::getline(in, line)) throw ParseError("missing dimension line", 2);
    ++line_no;
    std::vector<std::string> dims = split_tokens(line);
    if (dims.size() != 2 || !all_digits(dims[0]) || !all_digits(dims[1])) {
        throw ParseError("expected \"<nrows> <ncols>\"", line_no);
    }
    std::size_t nrows = 0, ncols = 0;
    try {
        nrows = std::stoull(dims[0]);
        ncols = std::stoull(dims[1]);
    } catch (const std::exception&) {
        throw ParseError("dimensions out of range", line_no);
    }
    if (nrows == 0 || ncols == 0) throw ParseError("dimensions must be at least 1", line_no);
    if (nrows > 65536 || ncols > 65536) throw ParseError("dimensions too large", line_no);

    std::vector<std::vector<FieldScalar>> rows;
    rows.reserve(nrows);
    for (std::size_t r = 0; r < nrows; ++r) {
        if (!std::getline(in, line)) throw ParseError("missing matrix row", line_no + 1);
        ++line_no;
        std::vector<std::string> tokens = split_tokens(line);
        if (tokens.empty()) {
            --r;  // tolerate stray blank lines between rows
            continue;
        }
        if (tokens.size() != ncols) {
            throw DimensionMismatch("row on line " + std::to_string(line_no) + " has " +
                                    std::to_string(tokens.size()) + " entries, expected " +
                                    std::to_string(ncols));
        }
        std::vector<FieldScalar> row;
        row.reserve(ncols);
        for (std::size_t c = 0; c < ncols; ++c) {
            try {
                row.push_back(parse_scalar(tokens[c], spec));
            } catch (const ParseError& e) {
                throw ParseError(std::string(e.what()), line_no, c + 1);
            }
        }
        rows.push_back(std::move(row));
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!split_tokens(line).empty()) throw ParseError("unexpected trailing content", line_no);
    }
    return Matrix::from_rows(spec, rows);
}

Matrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    return parse_matrix(in);
}

std::string format_matrix(const Matrix& m) {
    std::ostringstream out;
    out << "field " << m.spec().str() << '\n' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ' ';
            out << m(i, j).str();
        }
        out << '\n';
    }
    return out.str();
}

namespace {

nlohmann::json poly_to_json(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const FieldScalar& c : p.coefficients()) arr.push_back(c.str());
    return arr;
}

Polynomial poly_from_json(const nlohmann::json& j, const FieldSpec& spec) {
    if (!j.is_array()) throw ParseError("polynomial must be a JSON array of coefficient strings");
    std::vector<FieldScalar> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(parse_scalar(c.get<std::string>(), spec));
    return Polynomial::from_coefficients(spec, std::move(coeffs));
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, const FieldSpec& spec) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty JSON array of rows");
    std::vector<std::vector<FieldScalar>> rows;
    rows.reserve(j.size());
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError("matrix row must be a JSON array");
        std::vector<FieldScalar> out;
        out.reserve(row.size());
        for (const auto& entry : row) out.push_back(parse_scalar(entry.get<std::string>(), spec));
        rows.push_back(std::move(out));
    }
    return Matrix::from_rows(spec, rows);
}

}  // namespace

nlohmann::json certificate_to_json(const RankIdentityCertificate& cert, bool verified) {
    nlohmann::json j;
    j["field"] = cert.f_eval.spec().str();
    j["n"] = cert.order();
    j["f"] = poly_to_json(cert.bezout.f);
    j["g"] = poly_to_json(cert.bezout.g);
    j["D"] = poly_to_json(cert.bezout.gcd);
    j["M"] = poly_to_json(cert.bezout.lcm);
    j["phi1"] = poly_to_json(cert.bezout.coeff_f);
    j["phi2"] = poly_to_json(cert.bezout.coeff_g);
    j["psi1"] = poly_to_json(cert.bezout.cofactor_g);
    j["psi2"] = poly_to_json(cert.bezout.cofactor_f);
    j["B"] = matrix_to_json(cert.block_diag);
    j["C"] = matrix_to_json(cert.block_anti);
    j["C1"] = matrix_to_json(cert.col_op_first);
    j["C2"] = matrix_to_json(cert.col_op_second);
    j["L1"] = matrix_to_json(cert.row_op_first);
    j["L2"] = matrix_to_json(cert.row_op_second);
    j["ranks"] = {{"f", cert.rank_f}, {"g", cert.rank_g}, {"D", cert.rank_gcd}, {"M", cert.rank_lcm}};
    j["verified"] = verified;
    return j;
}

RankIdentityCertificate certificate_from_json(const nlohmann::json& j) {
    try {
        const FieldSpec spec = FieldSpec::parse(j.at("field").get<std::string>());
        const std::size_t n = j.at("n").get<std::size_t>();
        if (n == 0) throw ParseError("certificate order must be at least 1");

        BezoutCertificate bezout{
            poly_from_json(j.at("f"), spec),    poly_from_json(j.at("g"), spec),
            poly_from_json(j.at("D"), spec),    poly_from_json(j.at("M"), spec),
            poly_from_json(j.at("phi1"), spec), poly_from_json(j.at("phi2"), spec),
            poly_from_json(j.at("psi1"), spec), poly_from_json(j.at("psi2"), spec)};

        Matrix block_diag = matrix_from_json(j.at("B"), spec);
        Matrix block_anti = matrix_from_json(j.at("C"), spec);
        Matrix col_op_first = matrix_from_json(j.at("C1"), spec);
        Matrix col_op_second = matrix_from_json(j.at("C2"), spec);
        Matrix row_op_first = matrix_from_json(j.at("L1"), spec);
        Matrix row_op_second = matrix_from_json(j.at("L2"), spec);
        for (const Matrix* m : {&block_diag, &block_anti, &col_op_first, &col_op_second,
                                &row_op_first, &row_op_second}) {
            if (m->rows() != 2 * n || m->cols() != 2 * n) {
                throw ParseError("block matrix is not 2n x 2n");
            }
        }

        Matrix f_eval = block_diag.block(0, 0, n, n);
        Matrix g_eval = block_diag.block(n, n, n, n);
        Matrix gcd_eval = block_anti.block(0, n, n, n);
        Matrix lcm_eval = -block_anti.block(n, 0, n, n);

        const nlohmann::json& ranks = j.at("ranks");
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
                                       ranks.at("f").get<std::size_t>(),
                                       ranks.at("g").get<std::size_t>(),
                                       ranks.at("D").get<std::size_t>(),
                                       ranks.at("M").get<std::size_t>()};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed certificate JSON: ") + e.what());
    }
}

nlohmann::json report_to_json(const ClassificationReport& report) {
    nlohmann::json j;
    j["property"] = std::string(property_name(report.property));
    j["n"] = report.order;
    j["field"] = report.field.str();
    j["direct_check"] = report.direct_check;
    nlohmann::json statements = nlohmann::json::array();
    for (const Statement& s : report.statements) {
        statements.push_back({{"label", s.label}, {"holds", s.holds}});
    }
    j["statements"] = std::move(statements);
    nlohmann::json ranks = nlohmann::json::object();
    for (const auto& [label, r] : report.ranks_used) ranks[label] = r;
    j["ranks"] = std::move(ranks);
    return j;
}

}  // namespace polyrank
