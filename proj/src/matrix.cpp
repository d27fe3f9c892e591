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

#include "polyrank/matrix.hpp"

#include <string>

namespace polyrank {

namespace {

void require_same_spec(const Matrix& a, const Matrix& b) {
    if (a.spec() != b.spec()) {
        throw DomainMismatch("cannot combine matrices over " + a.spec().str() + " and " + b.spec().str());
    }
}

void require_nonempty(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be at least 1x1");
}

}  // namespace

Matrix Matrix::zeros(const FieldSpec& spec, std::size_t rows, std::size_t cols) {
    require_nonempty(rows, cols);
    return Matrix(spec, rows, cols, std::vector<FieldScalar>(rows * cols, FieldScalar::zero(spec)));
}

Matrix Matrix::identity(const FieldSpec& spec, std::size_t n) {
    Matrix m = zeros(spec, n, n);
    const FieldScalar one = FieldScalar::one(spec);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
}

Matrix Matrix::diagonal(const FieldSpec& spec, const std::vector<FieldScalar>& entries) {
    Matrix m = zeros(spec, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].spec() != spec) throw DomainMismatch("diagonal entry domain differs");
        m(i, i) = entries[i];
    }
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& spec, const std::vector<std::vector<FieldScalar>>& rows) {
    if (rows.empty() || rows[0].empty()) throw DimensionMismatch("matrix dimensions must be at least 1x1");
    const std::size_t cols = rows[0].size();
    std::vector<FieldScalar> data;
    data.reserve(rows.size() * cols);
    for (const auto& row : rows) {
        if (row.size() != cols) throw DimensionMismatch("ragged row in matrix construction");
        for (const FieldScalar& e : row) {
            if (e.spec() != spec) throw DomainMismatch("entry domain differs from matrix domain");
            data.push_back(e);
        }
    }
    return Matrix(spec, rows.size(), cols, std::move(data));
}

Matrix Matrix::from_integers(const FieldSpec& spec,
                             std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<FieldScalar>> converted;
    converted.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<FieldScalar> r;
        r.reserve(row.size());
        for (long long v : row) r.push_back(FieldScalar::from_integer(spec, v));
        converted.push_back(std::move(r));
    }
    return from_rows(spec, converted);
}

bool Matrix::is_zero() const noexcept {
    for (const FieldScalar& e : data_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix out = zeros(spec_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
}

Matrix Matrix::scaled(const FieldScalar& c) const {
    if (c.spec() != spec_) throw DomainMismatch("scalar domain differs from matrix domain");
    Matrix out = *this;
    for (FieldScalar& e : out.data_) e *= c;
    return out;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    require_nonempty(rows, cols);
    if (row0 + rows > rows_ || col0 + cols > cols_) throw DimensionMismatch("block exceeds matrix bounds");
    Matrix out = zeros(spec_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
    }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (FieldScalar& e : out.data_) e = -e;
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_spec(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix addition shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_spec(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix subtraction shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_spec(a, b);
    if (a.cols_ != b.rows_) {
        throw DimensionMismatch("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
    }
    Matrix out = Matrix::zeros(a.spec_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FieldScalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    require_same_spec(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
        if (a.data_[i] != b.data_[i]) return false;
    }
    return true;
}

std::size_t rank(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    // Work on a mutable copy of the entries.
    std::vector<std::vector<FieldScalar>> a;
    a.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<FieldScalar> row;
        row.reserve(cols);
        for (std::size_t j = 0; j < cols; ++j) row.push_back(m(i, j));
        a.push_back(std::move(row));
    }

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t found = rows;
        for (std::size_t i = pivot_row; i < rows; ++i) {
            if (!a[i][col].is_zero()) {
                found = i;
                break;
            }
        }
        if (found == rows) continue;
        if (found != pivot_row) std::swap(a[found], a[pivot_row]);

        const FieldScalar pivot_inv = a[pivot_row][col].inverse();
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            if (a[i][col].is_zero()) continue;
            const FieldScalar factor = a[i][col] * pivot_inv;
            for (std::size_t j = col; j < cols; ++j) {
                a[i][j] -= factor * a[pivot_row][j];
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

Matrix horner_eval(const Polynomial& p, const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("polynomial evaluation requires a square matrix");
    if (p.spec() != a.spec()) {
        throw DomainMismatch("polynomial and matrix domains differ: " + p.spec().str() + " vs " + a.spec().str());
    }
    const std::size_t n = a.rows();
    if (p.is_zero()) return Matrix::zeros(a.spec(), n, n);

    const int d = p.degree();
    Matrix result = Matrix::zeros(a.spec(), n, n);
    for (std::size_t i = 0; i < n; ++i) result(i, i) = p.coefficient(static_cast<std::size_t>(d));
    for (int k = d - 1; k >= 0; --k) {
        result = result * a;
        const FieldScalar c = p.coefficient(static_cast<std::size_t>(k));
        if (!c.is_zero()) {
            for (std::size_t i = 0; i < n; ++i) result(i, i) += c;
        }
    }
    return result;
}

Matrix block2x2(const Matrix& top_left, const Matrix& top_right,
                const Matrix& bottom_left, const Matrix& bottom_right) {
    const std::size_t n = top_left.rows();
    for (const Matrix* m : {&top_left, &top_right, &bottom_left, &bottom_right}) {
        if (!m->is_square() || m->rows() != n) {
            throw DimensionMismatch("block2x2 requires four square blocks of equal order");
        }
        if (m->spec() != top_left.spec()) throw DomainMismatch("block2x2 blocks over different domains");
    }
    Matrix out = Matrix::zeros(top_left.spec(), 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = top_left(i, j);
            out(i, n + j) = top_right(i, j);
            out(n + i, j) = bottom_left(i, j);
            out(n + i, n + j) = bottom_right(i, j);
        }
    }
    return out;
}

Matrix companion_matrix(const Polynomial& p) {
    if (!p.is_monic()) throw NotMonic("companion matrix requires a monic polynomial");
    const int d = p.degree();
    if (d < 1) throw DegreeTooSmall("companion matrix requires degree >= 1");
    const std::size_t n = static_cast<std::size_t>(d);
    Matrix out = Matrix::zeros(p.spec(), n, n);
    const FieldScalar one = FieldScalar::one(p.spec());
    for (std::size_t i = 1; i < n; ++i) out(i, i - 1) = one;
    for (std::size_t i = 0; i < n; ++i) out(i, n - 1) = -p.coefficient(i);
    return out;
}

Matrix matrix_power(const Matrix& a, unsigned exponent) {
    if (!a.is_square()) throw DimensionMismatch("matrix power requires a square matrix");
    Matrix result = Matrix::identity(a.spec(), a.rows());
    for (unsigned i = 0; i < exponent; ++i) result = result * a;
    return result;
}

}  // namespace polyrank
