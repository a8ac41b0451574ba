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

// Inverse optimization: given a feasible point x0 and a target objective,
// find the objective closest to the target (weighted L1 or Linf) under which
// x0 is optimal.
//
//   InverseGcr            corner relaxation of one basis, as an LP over
//                         shortest-path potentials of the group graph
//   InverseLpRelaxation   LP relaxation, via strong duality
//   InverseIpOracle       integer program, by enumerating every feasible
//                         point (ground truth for small instances)
//   MultiBasisInverse     InverseGcr over every feasible basis
//
// All results are exact; membership tests compare rationals for equality.

#ifndef IGCR_INVERSE_H_
#define IGCR_INVERSE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "igcr/lp.h"
#include "igcr/rational.h"

namespace igcr {

enum class NormKind { kL1, kLinf };

const char* ToString(NormKind kind);
// "l1" or "linf" (case-insensitive). Throws ParseError otherwise.
NormKind ParseNormKind(std::string_view text);

struct NormSpec {
  NormKind kind = NormKind::kL1;
  // Per-coordinate weights, all >= 0. Empty means all ones.
  RationalVector omega;

  // Weights expanded to length n; throws DomainError on a negative weight
  // or a length other than 0 or n.
  RationalVector Weights(std::size_t n) const;
};

// Weighted distance between two objective vectors.
Rational Distance(const NormSpec& norm, std::span<const Rational> a,
                  std::span<const Rational> b);

struct InverseResult {
  SolveStatus status = SolveStatus::kInfeasible;
  RationalVector d_star;
  Rational value;
  // Potentials per group-graph vertex (inverse GCR, lexicographic vertex
  // order) or dual multipliers per constraint row (inverse LP); empty for
  // the IP oracle.
  RationalVector certificate_y;
  std::optional<Basis> basis;
};

InverseResult InverseGcr(const IpInstance& instance, const Basis& basis,
                         std::span<const Integer> x0,
                         std::span<const Rational> target,
                         const NormSpec& norm);

InverseResult InverseLpRelaxation(const IpInstance& instance,
                                  std::span<const Rational> x0,
                                  std::span<const Rational> target,
                                  const NormSpec& norm);

// `box` defaults to ImpliedBox(instance).
InverseResult InverseIpOracle(const IpInstance& instance,
                              std::span<const Integer> x0,
                              std::span<const Rational> target,
                              const NormSpec& norm,
                              std::optional<IntVector> box = std::nullopt);

struct BasisOutcome {
  Basis basis;
  // Empty when the basis was skipped because x0_N has a negative entry.
  std::optional<InverseResult> result;
};

struct MultiBasisResult {
  std::vector<BasisOutcome> per_basis;
  InverseResult best;
};

// Solves InverseGcr at each feasible basis in lexicographic order. x0 only
// has to satisfy Ax0 = b; bases where it is not corner-feasible are listed
// as skipped. `best` is the first strict minimum (Infeasible status when
// every basis was skipped). Throws CapacityError past `cap` bases.
MultiBasisResult MultiBasisInverse(const IpInstance& instance,
                                   std::span<const Integer> x0,
                                   std::span<const Rational> target,
                                   const NormSpec& norm,
                                   std::size_t cap = kDefaultBasisCap);

// x0 is optimal for the corner relaxation of `basis` under d.
bool CheckInverseFeasible(const IpInstance& instance, const Basis& basis,
                          std::span<const Integer> x0,
                          std::span<const Rational> d);

// x0 is optimal for the LP relaxation under d.
bool CheckLpInverseFeasible(const IpInstance& instance,
                            std::span<const Rational> x0,
                            std::span<const Rational> d);

// Every basic component of x0 is strictly positive. When this holds, every
// objective under which x0 is LP-optimal also makes it optimal for the corner
// relaxation of `basis`.
bool HasPositiveBasicPart(std::span<const Integer> x0, const Basis& basis);

}  // namespace igcr

#endif  // IGCR_INVERSE_H_
