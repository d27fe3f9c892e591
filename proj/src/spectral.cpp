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

#include "polyrank/spectral.hpp"

#include <algorithm>

namespace polyrank {

Polynomial characteristic_polynomial(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("characteristic polynomial requires a square matrix");
    const FieldSpec& spec = a.spec();
    const std::size_t n = a.rows();
    const FieldScalar zero = FieldScalar::zero(spec);

    // Coefficients of the characteristic polynomial of the leading principal
    // r x r submatrix, highest degree first.  Start with x - a00.
    std::vector<FieldScalar> coeffs;
    coeffs.reserve(n + 1);
    coeffs.push_back(FieldScalar::one(spec));
    coeffs.push_back(-a(0, 0));

    for (std::size_t r = 1; r < n; ++r) {
        // Extend from order r to order r + 1.  With the split
        //   [ A_r  col ]
        //   [ row  d   ]
        // the new coefficient vector is a lower-triangular Toeplitz product
        // whose defining column is (1, -d, -row*col, -row*A_r*col, ...).
        std::vector<FieldScalar> toeplitz;
        toeplitz.reserve(r + 2);
        toeplitz.push_back(FieldScalar::one(spec));
        toeplitz.push_back(-a(r, r));

        std::vector<FieldScalar> krylov;  // A_r^k * col
        krylov.reserve(r);
        for (std::size_t i = 0; i < r; ++i) krylov.push_back(a(i, r));

        for (std::size_t k = 0; k < r; ++k) {
            FieldScalar dot = zero;
            for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * krylov[i];
            toeplitz.push_back(-dot);
            if (k + 1 < r) {
                std::vector<FieldScalar> next(r, zero);
                for (std::size_t i = 0; i < r; ++i) {
                    for (std::size_t j = 0; j < r; ++j) next[i] += a(i, j) * krylov[j];
                }
                krylov = std::move(next);
            }
        }

        std::vector<FieldScalar> next(r + 2, zero);
        for (std::size_t i = 0; i <= r + 1; ++i) {
            const std::size_t jmax = std::min(i, r);
            for (std::size_t j = 0; j <= jmax; ++j) next[i] += toeplitz[i - j] * coeffs[j];
        }
        coeffs = std::move(next);
    }

    std::reverse(coeffs.begin(), coeffs.end());
    return Polynomial::from_coefficients(spec, std::move(coeffs));
}

Polynomial minimal_polynomial(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("minimal polynomial requires a square matrix");
    const FieldSpec& spec = a.spec();
    const std::size_t n = a.rows();
    const std::size_t dim = n * n;
    const FieldScalar zero = FieldScalar::zero(spec);

    struct BasisRow {
        std::vector<FieldScalar> row;   // reduced vectorized power, leading entry 1
        std::size_t lead;               // index of that leading entry
        std::vector<FieldScalar> comb;  // expresses row in terms of vec(A^0..A^j)
    };
    std::vector<BasisRow> basis;

    Matrix power = Matrix::identity(spec, n);
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<FieldScalar> vec;
        vec.reserve(dim);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) vec.push_back(power(i, j));
        }
        std::vector<FieldScalar> comb(k + 1, zero);
        comb[k] = FieldScalar::one(spec);

        // Forward elimination against the basis collected so far.  Each basis
        // row has zeros at all earlier leads, so one pass suffices.
        for (const BasisRow& b : basis) {
            const FieldScalar factor = vec[b.lead];
            if (factor.is_zero()) continue;
            for (std::size_t i = b.lead; i < dim; ++i) vec[i] -= factor * b.row[i];
            for (std::size_t i = 0; i < b.comb.size(); ++i) comb[i] -= factor * b.comb[i];
        }

        std::size_t lead = dim;
        for (std::size_t i = 0; i < dim; ++i) {
            if (!vec[i].is_zero()) {
                lead = i;
                break;
            }
        }
        if (lead == dim) {
            // vec(A^k) depends on lower powers; comb[k] stayed 1, so the
            // dependency is already monic in ascending order.
            return Polynomial::from_coefficients(spec, std::move(comb));
        }

        const FieldScalar lead_inv = vec[lead].inverse();
        for (std::size_t i = lead; i < dim; ++i) vec[i] *= lead_inv;
        for (FieldScalar& c : comb) c *= lead_inv;
        basis.push_back(BasisRow{std::move(vec), lead, std::move(comb)});

        if (k < n) power = power * a;
    }
    throw Error("minimal polynomial search exceeded the matrix order");  // unreachable
}

bool divides(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero()) throw DivisionByZero("divisibility test by the zero polynomial");
    return divmod(q, p).second.is_zero();
}

SpectralData spectral_data(const Matrix& a) {
    return SpectralData{a.rows(), characteristic_polynomial(a), minimal_polynomial(a)};
}

}  // namespace polyrank
