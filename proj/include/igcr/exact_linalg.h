// Copyright 2026 The igcr Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact integer and rational linear algebra: determinants, inverses, Smith
// normal form and canonical residues. All functions are pure.

#ifndef IGCR_EXACT_LINALG_H_
#define IGCR_EXACT_LINALG_H_

#include <cstddef>
#include <optional>
#include <span>

#include "igcr/matrix.h"
#include "igcr/rational.h"

namespace igcr {

// Bareiss fraction-free elimination. Throws DimensionError if not square.
Integer Determinant(const IntMatrix& m);

// Gauss-Jordan over the rationals. Throws SingularMatrixError.
RationalMatrix InvertRationalMatrix(const IntMatrix& m);
RationalMatrix InvertRationalMatrix(const RationalMatrix& m);

// Row rank over Q. When the rows are dependent, `dependent_row` receives the
// first row that lies in the span of the rows before it.
std::size_t Rank(const IntMatrix& m,
                 std::optional<std::size_t>* dependent_row = nullptr);

// S * M * T = diag(w), S and T unimodular, w_j | w_{j+1}, all w_j > 0.
struct SmithNormalForm {
  IntMatrix s;
  IntMatrix t;
  IntVector w;
};

// Elementary row/column reduction with explicit S and T. Defined for square
// nonsingular input only; throws UnsupportedInputError for zero or singular
// matrices and DimensionError for non-square ones.
SmithNormalForm ComputeSmithNormalForm(const IntMatrix& m);

// out_j in [0, w_j) with out_j == v_j (mod w_j). Throws DomainError if any
// w_j <= 0 and DimensionError on length mismatch.
IntVector CanonicalMod(std::span<const Integer> v, std::span<const Integer> w);

}  // namespace igcr

#endif  // IGCR_EXACT_LINALG_H_
