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

// The equality-form integer program min{c'x : Ax = b, x >= 0, x integer},
// its LP relaxation, and basis-level operations on it.
//
// Column indices are 0-based throughout the library; the CLI and instance
// documents use 1-based indices.

#ifndef IGCR_LP_H_
#define IGCR_LP_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "igcr/matrix.h"
#include "igcr/rational.h"
#include "igcr/simplex.h"

namespace igcr {

inline constexpr std::size_t kDefaultBasisCap = 1'000'000;

class IpInstance {
 public:
  // Validates dimensions, m <= n, and full row rank. Throws ValidationError
  // naming the first dependent row on rank deficiency.
  IpInstance(IntMatrix a, IntVector b, RationalVector c);

  const IntMatrix& a() const { return a_; }
  const IntVector& b() const { return b_; }
  const RationalVector& c() const { return c_; }
  std::size_t m() const { return a_.rows(); }
  std::size_t n() const { return a_.cols(); }

  friend bool operator==(const IpInstance&, const IpInstance&) = default;

 private:
  IntMatrix a_;
  IntVector b_;
  RationalVector c_;
};

// An m-subset of columns with nonsingular A_B, together with cached
// derived data.
class Basis {
 public:
  // `indices` may be given in any order; they are stored sorted. Throws
  // DomainError for wrong size, repeats or out-of-range indices and
  // SingularMatrixError when A_B is singular.
  Basis(const IpInstance& instance, std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const { return indices_; }
  const std::vector<std::size_t>& nonbasic() const { return nonbasic_; }
  const IntMatrix& basis_matrix() const { return a_b_; }
  const IntMatrix& nonbasic_matrix() const { return a_n_; }
  const RationalMatrix& inverse() const { return inverse_; }
  const Integer& determinant() const { return det_; }

  // 1-based "{3, 4}" rendering.
  std::string Label() const;

  friend bool operator==(const Basis& x, const Basis& y) {
    return x.indices_ == y.indices_;
  }
  friend bool operator<(const Basis& x, const Basis& y) {
    return x.indices_ < y.indices_;
  }

 private:
  std::vector<std::size_t> indices_;
  std::vector<std::size_t> nonbasic_;
  IntMatrix a_b_;
  IntMatrix a_n_;
  RationalMatrix inverse_;
  Integer det_;
};

struct LpSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  RationalVector x;
  Rational value;
  std::optional<Basis> basis;
};

// Exact LP relaxation optimum of `instance` under `objective`.
LpSolution SolveLpSimplex(const IpInstance& instance,
                          std::span<const Rational> objective);

// x_B = A_B^{-1} b, x_N = 0.
RationalVector BasicSolution(const IpInstance& instance, const Basis& basis);

// d_N - (d_B' A_B^{-1} A_N)', one entry per nonbasic column in order.
RationalVector ReducedCosts(const IpInstance& instance, const Basis& basis,
                            std::span<const Rational> d);

// Row vector d_B' A_B^{-1} b; the constant term of the corner objective.
Rational BasisObjectiveConstant(const IpInstance& instance, const Basis& basis,
                                std::span<const Rational> d);

// All bases with A_B^{-1} b >= 0 (degenerate ones included), lexicographic.
// Throws CapacityError once more than `cap` are found.
std::vector<Basis> EnumerateFeasibleBases(const IpInstance& instance,
                                          std::size_t cap = kDefaultBasisCap);

}  // namespace igcr

#endif  // IGCR_LP_H_
