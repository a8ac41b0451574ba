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

#include "igcr/gcr.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "igcr/errors.h"
#include "igcr/exact_linalg.h"
#include "igcr/group_graph.h"

namespace igcr {
namespace {

// Upper limit on points visited by a single brute-force enumeration.
constexpr unsigned long kMaxBoxPoints = 50'000'000;

// Integer view of x_B = A_B^{-1}(b - A_N x_N): with adj = det * A_B^{-1},
// det * x_B = adj_b - adj_an * x_N.
struct IntegerBasisMap {
  Integer det;
  IntVector adj_b;
  IntMatrix adj_an;

  IntegerBasisMap(const IpInstance& instance, const Basis& basis)
      : det(basis.determinant()) {
    const std::size_t m = instance.m();
    IntMatrix adj(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) {
        const Rational v = basis.inverse()(i, k) * Rational(det);
        adj(i, k) = v.get_num();
      }
    }
    adj_b = Multiply(adj, instance.b());
    adj_an = Multiply(adj, basis.nonbasic_matrix());
  }

  // Fills det * x_B; returns whether x_B is integral.
  bool Scaled(std::span<const Integer> x_n, IntVector* scaled) const {
    bool integral = true;
    for (std::size_t i = 0; i < adj_b.size(); ++i) {
      Integer v = adj_b[i];
      for (std::size_t j = 0; j < x_n.size(); ++j) v -= adj_an(i, j) * x_n[j];
      if (!mpz_divisible_p(v.get_mpz_t(), det.get_mpz_t())) integral = false;
      (*scaled)[i] = std::move(v);
    }
    return integral;
  }
};

// Visits every vector in prod_k {0..upper_k} in lexicographic order.
template <typename Visit>
void ForEachInBox(std::span<const Integer> upper, Visit&& visit) {
  Integer total = 1;
  for (const auto& u : upper) {
    if (sgn(u) < 0) return;
    total *= u + 1;
  }
  if (cmp(total, kMaxBoxPoints) > 0) {
    throw CapacityError("search box holds " + ToString(total) + " points",
                        kMaxBoxPoints);
  }
  IntVector point(upper.size(), Integer(0));
  while (true) {
    visit(std::as_const(point));
    std::size_t k = point.size();
    while (k > 0 && point[k - 1] == upper[k - 1]) {
      point[k - 1] = 0;
      --k;
    }
    if (k == 0) return;
    point[k - 1] += 1;
  }
}

std::vector<std::size_t> FirstNonsingularColumns(const IpInstance& instance) {
  const std::size_t m = instance.m();
  const std::size_t n = instance.n();
  std::vector<std::size_t> combo(m);
  for (std::size_t i = 0; i < m; ++i) combo[i] = i;
  while (true) {
    if (sgn(Determinant(instance.a().SelectColumns(combo))) != 0) return combo;
    std::size_t i = m;
    while (i > 0 && combo[i - 1] == n - m + (i - 1)) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t k = i; k < m; ++k) combo[k] = combo[k - 1] + 1;
  }
  throw ValidationError("A has no nonsingular m x m submatrix");
}

IntVector Assemble(const Basis& basis, std::span<const Integer> x_n,
                   std::span<const Integer> x_b) {
  IntVector x(basis.indices().size() + basis.nonbasic().size());
  for (std::size_t k = 0; k < x_b.size(); ++k) x[basis.indices()[k]] = x_b[k];
  for (std::size_t j = 0; j < x_n.size(); ++j) {
    x[basis.nonbasic()[j]] = x_n[j];
  }
  return x;
}

}  // namespace

GcrSolution SolveGcr(const IpInstance& instance, const Basis& basis,
                     std::span<const Rational> d) {
  const GroupGraph graph = BuildGroupGraph(instance, basis, d);
  const PathCounts path = ShortestPath(graph);
  GcrSolution out;
  out.lp_constant = BasisObjectiveConstant(instance, basis, d);
  if (path.status == PathCounts::Status::kUnreachable) {
    out.status = SolveStatus::kInfeasible;
    return out;
  }
  if (path.status == PathCounts::Status::kUnbounded) {
    out.status = SolveStatus::kUnbounded;
    return out;
  }
  const IntegerBasisMap map(instance, basis);
  IntVector scaled(instance.m());
  if (!map.Scaled(path.counts, &scaled)) {
    throw std::logic_error("shortest path produced a non-integral x_B");
  }
  IntVector x_b(instance.m());
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    x_b[i] = scaled[i] / map.det;
  }
  out.status = SolveStatus::kOptimal;
  out.x = Assemble(basis, path.counts, x_b);
  out.value = Dot(d, out.x);
  if (out.value != path.cost + out.lp_constant) {
    throw std::logic_error("corner objective does not match path cost");
  }
  return out;
}

GcrSolution BruteForceGcr(const IpInstance& instance, const Basis& basis,
                          std::span<const Rational> d, std::size_t bound) {
  const RationalVector reduced = ReducedCosts(instance, basis, d);
  const IntegerBasisMap map(instance, basis);
  const std::size_t k = basis.nonbasic().size();
  const IntVector upper(k, Integer(static_cast<unsigned long>(bound)));

  // Zero-residue directions: x_N with A_B^{-1} A_N x_N integral.
  IntegerBasisMap ray_map = map;
  std::fill(ray_map.adj_b.begin(), ray_map.adj_b.end(), Integer(0));

  bool found = false;
  bool ray = false;
  Rational best;
  IntVector best_n;
  IntVector scaled(instance.m());
  ForEachInBox(upper, [&](const IntVector& x_n) {
    const Rational cost = Dot(reduced, x_n);
    if (map.Scaled(x_n, &scaled) && (!found || cost < best)) {
      found = true;
      best = cost;
      best_n = x_n;
    }
    if (!ray && sgn(cost) < 0 && ray_map.Scaled(x_n, &scaled)) ray = true;
  });
  if (!found) {
    throw BoxInfeasibleError("no x_N in {0.." + std::to_string(bound) +
                             "} satisfies the congruence");
  }
  GcrSolution out;
  out.lp_constant = BasisObjectiveConstant(instance, basis, d);
  if (ray) {
    out.status = SolveStatus::kUnbounded;
    return out;
  }
  map.Scaled(best_n, &scaled);
  IntVector x_b(instance.m());
  for (std::size_t i = 0; i < scaled.size(); ++i) x_b[i] = scaled[i] / map.det;
  out.status = SolveStatus::kOptimal;
  out.x = Assemble(basis, best_n, x_b);
  out.value = best + out.lp_constant;
  return out;
}

ExactnessCheck CheckCornerExactnessCondition(const IpInstance& instance,
                                             const Basis& basis) {
  const std::size_t m = instance.m();
  ExactnessCheck out;
  bool first = true;
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = basis.inverse().row(i);
    Rational rb = 0;
    Rational norm2 = 0;
    for (std::size_t k = 0; k < m; ++k) {
      rb += row[k] * Rational(instance.b()[k]);
      norm2 += row[k] * row[k];
    }
    // Outside the cone the distance to its boundary is taken as zero.
    Rational dist2 = sgn(rb) < 0 ? Rational(0) : Rational(rb * rb / norm2);
    if (first || dist2 < out.lhs_squared) out.lhs_squared = dist2;
    first = false;
  }
  Integer max_col2 = 0;
  for (std::size_t j = 0; j < basis.nonbasic().size(); ++j) {
    Integer s = 0;
    for (std::size_t r = 0; r < m; ++r) {
      s += basis.nonbasic_matrix()(r, j) * basis.nonbasic_matrix()(r, j);
    }
    if (s > max_col2) max_col2 = s;
  }
  out.rhs_squared = Rational(basis.determinant() * basis.determinant() *
                             max_col2);
  out.holds = out.lhs_squared >= out.rhs_squared;
  return out;
}

std::optional<IntVector> ImpliedBox(const IpInstance& instance) {
  const std::size_t m = instance.m();
  const std::size_t n = instance.n();
  std::vector<bool> nonneg_row(m, true);
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(instance.b()[i]) < 0) nonneg_row[i] = false;
    for (std::size_t k = 0; k < n && nonneg_row[i]; ++k) {
      if (sgn(instance.a()(i, k)) < 0) nonneg_row[i] = false;
    }
  }
  IntVector box(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<Integer> bound;
    for (std::size_t i = 0; i < m; ++i) {
      if (!nonneg_row[i] || sgn(instance.a()(i, k)) <= 0) continue;
      Integer q = FloorDiv(instance.b()[i], instance.a()(i, k));
      if (!bound.has_value() || q < *bound) bound = std::move(q);
    }
    if (!bound.has_value()) {
      RationalVector objective(n, Rational(0));
      objective[k] = -1;
      const LpSolution lp = SolveLpSimplex(instance, objective);
      if (lp.status == SolveStatus::kUnbounded) return std::nullopt;
      if (lp.status == SolveStatus::kInfeasible) {
        bound = 0;
      } else {
        const Rational top = -lp.value;
        bound = FloorDiv(top.get_num(), top.get_den());
      }
    }
    box[k] = *bound;
  }
  return box;
}

std::vector<IntVector> EnumerateIntegerPoints(const IpInstance& instance,
                                              std::span<const Integer> box) {
  if (box.size() != instance.n()) throw DimensionError("box length must be n");
  const Basis frame(instance, FirstNonsingularColumns(instance));
  const IntegerBasisMap map(instance, frame);
  IntVector upper;
  for (std::size_t col : frame.nonbasic()) upper.push_back(box[col]);

  std::vector<IntVector> points;
  IntVector scaled(instance.m());
  IntVector x_b(instance.m());
  ForEachInBox(upper, [&](const IntVector& x_n) {
    if (!map.Scaled(x_n, &scaled)) return;
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      x_b[i] = scaled[i] / map.det;
      const Integer& cap = box[frame.indices()[i]];
      if (sgn(x_b[i]) < 0 || x_b[i] > cap) return;
    }
    points.push_back(Assemble(frame, x_n, x_b));
  });
  std::sort(points.begin(), points.end());
  return points;
}

GcrSolution BruteForceIp(const IpInstance& instance,
                         std::span<const Rational> d,
                         std::optional<IntVector> box) {
  if (!box.has_value()) box = ImpliedBox(instance);
  if (!box.has_value()) {
    throw CapacityError(
        "no finite search box: the LP relaxation is unbounded in some "
        "variable; pass an explicit box",
        0);
  }
  const std::vector<IntVector> points = EnumerateIntegerPoints(instance, *box);
  if (points.empty()) {
    throw BoxInfeasibleError("no integer point of Ax = b inside the box");
  }
  GcrSolution out;
  out.status = SolveStatus::kOptimal;
  for (const IntVector& x : points) {
    const Rational v = Dot(d, x);
    if (out.x.empty() || v < out.value) {
      out.x = x;
      out.value = v;
    }
  }
  out.lp_constant = 0;
  return out;
}

}  // namespace igcr
