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

// The corner relaxation of a basis B: the integer program with the
// nonnegativity of x_B dropped. Solved exactly through the group graph, plus
// brute-force enumerators used as independent oracles.

#ifndef IGCR_GCR_H_
#define IGCR_GCR_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "igcr/lp.h"
#include "igcr/rational.h"

namespace igcr {

struct GcrSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  IntVector x;   // length n, when Optimal
  Rational value;
  // d_B' A_B^{-1} b; zero for results not tied to a basis.
  Rational lp_constant;
};

// Corner relaxation optimum via the shortest-path reformulation.
GcrSolution SolveGcr(const IpInstance& instance, const Basis& basis,
                     std::span<const Rational> d);

// Enumerates x_N in {0..bound}^{n-m} satisfying S A_N x_N == S b (mod w).
// Reports Unbounded when a box point is feasible and some nonzero box point
// with zero residue has negative reduced cost (a recession ray); otherwise
// returns the best box point. Throws BoxInfeasibleError when no box point
// satisfies the congruence. Use bound >= |det A_B| for completeness.
GcrSolution BruteForceGcr(const IpInstance& instance, const Basis& basis,
                          std::span<const Rational> d, std::size_t bound);

struct ExactnessCheck {
  bool holds = false;
  // Squared L2 distance from b to the boundary of {x : A_B^{-1} x >= 0}.
  Rational lhs_squared;
  // |det A_B|^2 * max_j ||(A_N)_j||^2.
  Rational rhs_squared;
};

// Sufficient condition for the corner relaxation to be exact, compared in
// squared form so everything stays rational.
ExactnessCheck CheckCornerExactnessCondition(const IpInstance& instance,
                                             const Basis& basis);

// Per-variable upper bounds from rows whose entries are all nonnegative and
// whose right-hand side is nonnegative: x_k <= floor(b_i / A_ik). Columns not
// covered by such a row are bounded by maximizing x_k over the LP
// relaxation. Returns nullopt when some variable is unbounded.
std::optional<IntVector> ImpliedBox(const IpInstance& instance);

// All x in Z^n with 0 <= x <= box and Ax = b, in lexicographic order.
std::vector<IntVector> EnumerateIntegerPoints(const IpInstance& instance,
                                              std::span<const Integer> box);

// Exhaustive integer optimum inside `box` (or ImpliedBox when omitted).
// Throws CapacityError when no box is given and none can be derived, and
// BoxInfeasibleError when the box holds no feasible point.
GcrSolution BruteForceIp(const IpInstance& instance,
                         std::span<const Rational> d,
                         std::optional<IntVector> box = std::nullopt);

}  // namespace igcr

#endif  // IGCR_GCR_H_
