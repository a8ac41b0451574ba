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

#include "igcr/exact_linalg.h"

#include <cassert>
#include <string>

#include "igcr/errors.h"

namespace igcr {

Integer Determinant(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.SwapRows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RationalMatrix InvertRationalMatrix(const RationalMatrix& m) {
  if (!m.square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::Identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, k)) == 0) ++p;
    if (p == n) throw SingularMatrixError("matrix is singular");
    a.SwapRows(k, p);
    inv.SwapRows(k, p);
    const Rational pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(a(i, k)) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RationalMatrix InvertRationalMatrix(const IntMatrix& m) {
  return InvertRationalMatrix(ToRational(m));
}

std::size_t Rank(const IntMatrix& m,
                 std::optional<std::size_t>* dependent_row) {
  // Rows are inserted one at a time into an echelon basis so the first row
  // that reduces to zero is the first dependent one.
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> pivots;
  if (dependent_row != nullptr) dependent_row->reset();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Rational> v(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) v[c] = m(r, c);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const std::size_t pc = pivots[k];
      if (sgn(v[pc]) == 0) continue;
      const Rational f = v[pc] / basis[k][pc];
      for (std::size_t c = 0; c < m.cols(); ++c) v[c] -= f * basis[k][c];
    }
    std::size_t pc = 0;
    while (pc < v.size() && sgn(v[pc]) == 0) ++pc;
    if (pc == v.size()) {
      if (dependent_row != nullptr && !dependent_row->has_value()) {
        *dependent_row = r;
      }
      continue;
    }
    // Keep the basis fully reduced on pivot columns.
    for (auto& b : basis) {
      if (sgn(b[pc]) == 0) continue;
      const Rational f = b[pc] / v[pc];
      for (std::size_t c = 0; c < m.cols(); ++c) b[c] -= f * v[c];
    }
    basis.push_back(std::move(v));
    pivots.push_back(pc);
  }
  return basis.size();
}

namespace {

// Elementary operations on the working matrix mirrored into S (rows) and T
// (columns) so that work == S * input * T holds throughout.
class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& m)
      : work_(m),
        s_(IntMatrix::Identity(m.rows())),
        t_(IntMatrix::Identity(m.cols())) {}

  void Run() {
    const std::size_t n = work_.rows();
    for (std::size_t k = 0; k < n; ++k) {
      if (!MovePivot(k)) {
        throw UnsupportedInputError(
            "Smith normal form requires a nonsingular matrix");
      }
      while (!ReduceAt(k)) {
        MovePivot(k);
      }
      if (sgn(work_(k, k)) < 0) NegateRow(k);
    }
    Normalize();
  }

  SmithNormalForm Take() {
    SmithNormalForm out;
    out.w.resize(work_.rows());
    for (std::size_t k = 0; k < work_.rows(); ++k) out.w[k] = work_(k, k);
    out.s = std::move(s_);
    out.t = std::move(t_);
    return out;
  }

 private:
  // Brings the smallest nonzero |entry| of the trailing block to (k, k).
  bool MovePivot(std::size_t k) {
    const std::size_t n = work_.rows();
    std::size_t best_r = n, best_c = n;
    for (std::size_t r = k; r < n; ++r) {
      for (std::size_t c = k; c < n; ++c) {
        if (sgn(work_(r, c)) == 0) continue;
        if (best_r == n ||
            mpz_cmpabs(work_(r, c).get_mpz_t(), work_(best_r, best_c).get_mpz_t()) < 0) {
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best_r == n) return false;
    work_.SwapRows(k, best_r);
    s_.SwapRows(k, best_r);
    work_.SwapCols(k, best_c);
    t_.SwapCols(k, best_c);
    return true;
  }

  // Clears row and column k against the pivot. Returns false when a new,
  // strictly smaller pivot candidate appeared and another pass is needed.
  bool ReduceAt(std::size_t k) {
    const std::size_t n = work_.rows();
    bool clean = true;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(work_(i, k)) == 0) continue;
      const Integer q = work_(i, k) / work_(k, k);
      AddRowMultiple(i, k, -q);
      if (sgn(work_(i, k)) != 0) clean = false;
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (sgn(work_(k, j)) == 0) continue;
      const Integer q = work_(k, j) / work_(k, k);
      AddColMultiple(j, k, -q);
      if (sgn(work_(k, j)) != 0) clean = false;
    }
    if (!clean) return false;
    // Divisibility: every trailing entry must be a multiple of the pivot.
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!mpz_divisible_p(work_(i, j).get_mpz_t(),
                             work_(k, k).get_mpz_t())) {
          AddRowMultiple(k, i, 1);
          return false;
        }
      }
    }
    return true;
  }

  // S is only determined up to U with U * D * V = D. Row k may absorb
  // multiples of (w_k / w_i) * row i for i < k if T absorbs the matching
  // column operation; use that freedom to shrink S against the first column
  // where row i is nonzero modulo w_i. Leaves work_ == D untouched.
  void Normalize() {
    const std::size_t n = work_.rows();
    for (std::size_t i = 0; i < n; ++i) {
      const Integer& wi = work_(i, i);
      if (wi == 1) continue;
      std::size_t p = 0;
      while (p < n && sgn(FloorMod(s_(i, p), wi)) == 0) ++p;
      if (p == n) continue;
      for (std::size_t k = i + 1; k < n; ++k) {
        const Integer r = work_(k, k) / wi;
        Integer g = r * s_(i, p);
        Integer q = FloorDiv(s_(k, p), abs(g));
        if (sgn(g) < 0) q = -q;
        if (sgn(q) == 0) continue;
        for (std::size_t c = 0; c < n; ++c) s_(k, c) -= q * r * s_(i, c);
        for (std::size_t row = 0; row < n; ++row) t_(row, i) += q * t_(row, k);
      }
    }
  }

  // row[dst] += f * row[src]
  void AddRowMultiple(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t c = 0; c < work_.cols(); ++c) {
      work_(dst, c) += f * work_(src, c);
    }
    for (std::size_t c = 0; c < s_.cols(); ++c) s_(dst, c) += f * s_(src, c);
  }

  // col[dst] += f * col[src]
  void AddColMultiple(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t r = 0; r < work_.rows(); ++r) {
      work_(r, dst) += f * work_(r, src);
    }
    for (std::size_t r = 0; r < t_.rows(); ++r) t_(r, dst) += f * t_(r, src);
  }

  void NegateRow(std::size_t k) {
    for (std::size_t c = 0; c < work_.cols(); ++c) work_(k, c) = -work_(k, c);
    for (std::size_t c = 0; c < s_.cols(); ++c) s_(k, c) = -s_(k, c);
  }

  IntMatrix work_;
  IntMatrix s_;
  IntMatrix t_;
};

}  // namespace

SmithNormalForm ComputeSmithNormalForm(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("Smith normal form of non-square matrix");
  if (m.rows() == 0) throw UnsupportedInputError("empty matrix");
  bool any_nonzero = false;
  for (std::size_t r = 0; r < m.rows() && !any_nonzero; ++r) {
    for (const auto& e : m.row(r)) {
      if (sgn(e) != 0) {
        any_nonzero = true;
        break;
      }
    }
  }
  if (!any_nonzero) throw UnsupportedInputError("zero matrix has no SNF here");
  SmithReducer reducer(m);
  reducer.Run();
  return reducer.Take();
}

IntVector CanonicalMod(std::span<const Integer> v, std::span<const Integer> w) {
  if (v.size() != w.size()) throw DimensionError("canonical_mod length");
  IntVector out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(w[j]) <= 0) {
      throw DomainError("modulus w[" + std::to_string(j) + "] must be positive");
    }
    out[j] = FloorMod(v[j], w[j]);
  }
  return out;
}

}  // namespace igcr
