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


#ifndef IGCR_TESTS_TEST_SUPPORT_H_
#define IGCR_TESTS_TEST_SUPPORT_H_

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "igcr/group_graph.h"
#include "igcr/lp.h"
#include "igcr/matrix.h"
#include "igcr/rational.h"

namespace igcr::testing {

// Fixed seeds keep every randomized suite reproducible.
inline constexpr std::uint64_t kSeed = 20260917;

using Rng = std::mt19937_64;

long Uniform(Rng& rng, long lo, long hi);

struct RandomCaseSpec {
  std::size_t max_m = 3;
  std::size_t max_extra_cols = 3;
  long max_entry = 4;
  long max_x = 2;
  long max_det = 50;
  std::size_t max_points = 1500;
};

struct RandomCase {
  IpInstance instance;
  // An integer feasible point the instance was built around.
  IntVector x0;
  std::vector<Basis> bases;
};

// Draws one candidate; nullopt when it breaks the spec (rank deficient,
// oversized determinant or too many integer points).
std::optional<RandomCase> DrawCase(Rng& rng, const RandomCaseSpec& spec);

// Keeps drawing until `count` cases were accepted.
std::vector<RandomCase> DrawCases(Rng& rng, const RandomCaseSpec& spec,
                                  std::size_t count);

RationalVector RandomObjective(Rng& rng, std::size_t n, long bound);

IntMatrix RandomIntMatrix(Rng& rng, std::size_t rows, std::size_t cols,
                          long bound);

// Permutation expansion; independent of the library's elimination.
Integer LeibnizDeterminant(const IntMatrix& m);

// w_k = D_k / D_{k-1}, D_k the gcd of all k x k minors.
IntVector InvariantFactorsFromMinors(const IntMatrix& m);

// Minimum path cost from source to destination over walks of at most
// vertex_count arcs, by dynamic programming on walk length. nullopt when
// unreachable.
std::optional<Rational> ExhaustivePathCost(const GroupGraph& graph);

// Checks the potential certificate of the inverse corner relaxation: y over
// all vertices, y_0 = 0, y_v - y_u <= dbar_j on every arc and
// y_destination = dbar_N' x0_N.
bool IsValidPotentialCertificate(const GroupGraph& graph,
                                 std::span<const Rational> y,
                                 std::span<const Integer> x0_n);

// Reduced costs through an adjugate built from Leibniz cofactors.
RationalVector ReducedCostsByCofactors(const IpInstance& instance,
                                       const std::vector<std::size_t>& basis,
                                       std::span<const Rational> d);

IntVector Nonbasic(std::span<const Integer> x, const Basis& basis);

}  // namespace igcr::testing

#endif  // IGCR_TESTS_TEST_SUPPORT_H_
