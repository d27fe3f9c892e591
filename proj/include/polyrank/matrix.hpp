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

#ifndef POLYRANK_MATRIX_HPP
#define POLYRANK_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "polyrank/field.hpp"
#include "polyrank/polynomial.hpp"

namespace polyrank {

/// Dense row-major matrix over a fixed coefficient domain.  Entries are exact
/// field elements; all operations are pure and never mutate their operands.
class Matrix {
   public:
    static Matrix zeros(const FieldSpec& spec, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldSpec& spec, std::size_t n);
    static Matrix diagonal(const FieldSpec& spec, const std::vector<FieldScalar>& entries);
    static Matrix from_rows(const FieldSpec& spec, const std::vector<std::vector<FieldScalar>>& rows);
    /// Test/CLI convenience: integer entries mapped into the domain.
    static Matrix from_integers(const FieldSpec& spec,
                                std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldSpec& spec() const noexcept { return spec_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_zero() const noexcept;

    const FieldScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    FieldScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    Matrix transpose() const;
    Matrix scaled(const FieldScalar& c) const;
    /// Copy of the rows x cols submatrix anchored at (row0, col0).
    Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
    Matrix operator-() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    /// Throws DomainMismatch across domains; shape mismatch compares unequal.
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

   private:
    Matrix(FieldSpec spec, std::size_t rows, std::size_t cols, std::vector<FieldScalar> data)
        : spec_(spec), rows_(rows), cols_(cols), data_(std::move(data)) {}

    FieldSpec spec_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldScalar> data_;
};

/// Exact rank by Gaussian elimination over the field.  The pivot is the first
/// nonzero entry scanning down the current column; no magnitude pivoting is
/// needed in exact arithmetic, and the scan order keeps results deterministic.
std::size_t rank(const Matrix& m);

/// p(A) by Horner's scheme; the constant term contributes c0 * I, and the zero
/// polynomial maps to the zero matrix.
Matrix horner_eval(const Polynomial& p, const Matrix& a);

/// Assembles [[top_left, top_right], [bottom_left, bottom_right]]; all four
/// blocks must be square of equal order over one domain.
Matrix block2x2(const Matrix& top_left, const Matrix& top_right,
                const Matrix& bottom_left, const Matrix& bottom_right);

/// Companion matrix of a monic polynomial of degree d >= 1: ones on the
/// subdiagonal, negated coefficients in the last column.  Its characteristic
/// and minimal polynomials both equal p.
Matrix companion_matrix(const Polynomial& p);

/// A^exponent by repeated multiplication; A^0 = I.
Matrix matrix_power(const Matrix& a, unsigned exponent);

}  // namespace polyrank

#endif  // POLYRANK_MATRIX_HPP
