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

#ifndef POLYRANK_SPECTRAL_HPP
#define POLYRANK_SPECTRAL_HPP

#include "polyrank/matrix.hpp"
#include "polyrank/polynomial.hpp"

namespace polyrank {

/// Monic characteristic polynomial det(x*I - A) of a square matrix, computed by
/// the Samuelson-Berkowitz recursion.  Division-free, so it works uniformly
/// over every supported field including GF(2) and GF(3).
Polynomial characteristic_polynomial(const Matrix& a);

/// Monic minimal polynomial: the vectorized powers I, A, A^2, ... are fed into
/// an incremental exact elimination until the first linear dependency, whose
/// coefficients are the polynomial.  Termination at degree <= n is guaranteed
/// because the characteristic polynomial annihilates A.
Polynomial minimal_polynomial(const Matrix& a);

/// True iff p divides q (q mod p == 0).  Throws DivisionByZero when p == 0.
bool divides(const Polynomial& p, const Polynomial& q);

/// Characteristic and minimal polynomial of one matrix, bundled.
/// min divides char, and both annihilate the matrix.
struct SpectralData {
    std::size_t order;
    Polynomial characteristic;
    Polynomial minimal;
};

SpectralData spectral_data(const Matrix& a);

}  // namespace polyrank

#endif  // POLYRANK_SPECTRAL_HPP
