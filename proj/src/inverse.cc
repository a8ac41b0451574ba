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

#include "igcr/inverse.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "igcr/errors.h"
#include "igcr/gcr.h"
#include "igcr/group_graph.h"
#include "igcr/simplex.h"

namespace igcr {

const char* ToString(NormKind kind) {
  return kind == NormKind::kL1 ? "l1" : "linf";
}

NormKind ParseNormKind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "l1") return NormKind::kL1;
  if (lower == "linf") return NormKind::kLinf;
  throw ParseError("unknown norm '" + std::string(text) +
                   "' (expected l1 or linf)");
}

RationalVector NormSpec::Weights(std::size_t n) const {
  if (omega.empty()) return RationalVector(n, Rational(1));
  if (omega.size() != n) {
    throw DomainError("omega has length " + std::to_string(omega.size()) +
                      ", expected " + std::to_string(n));
  }
  for (const auto& w : omega) {
    if (sgn(w) < 0) throw DomainError("omega must be nonnegative");
  }
  return omega;
}

Rational Distance(const NormSpec& norm, std::span<const Rational> a,
                  std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("distance operand lengths");
  const RationalVector omega = norm.Weights(a.size());
  Rational out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational term = omega[i] * abs(a[i] - b[i]);
    if (norm.kind == NormKind::kL1) {
      out += term;
    } else if (term > out) {
      out = term;
    }
  }
  return out;
}

namespace {

// Shared layout for the three inverse LPs: columns [0, n) hold e, [n, 2n)
// hold f with d = target - e + f, an optional epigraph column t for Linf,
// then the problem-specific free columns.
class PerturbationModel {
 public:
  PerturbationModel(std::size_t n, const NormSpec& norm, std::size_t extra)
      : n_(n),
        linf_(norm.kind == NormKind::kLinf),
        lp_(2 * n + (linf_ ? 1 : 0) + extra) {
    const RationalVector omega = norm.Weights(n);
    if (linf_) {
      lp_.SetObjective(2 * n, 1);
      for (std::size_t i = 0; i < n; ++i) {
        RationalVector row(lp_.num_vars(), Rational(0));
        row[i] = omega[i];
        row[n + i] = omega[i];
        row[2 * n] = -1;
        lp_.AddRow(std::move(row), RowSense::kLessEqual, 0);
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        lp_.SetObjective(i, omega[i]);
        lp_.SetObjective(n + i, omega[i]);
      }
    }
    for (std::size_t k = 0; k < extra; ++k) lp_.SetFree(extra_begin() + k);
  }

  std::size_t extra_begin() const { return 2 * n_ + (linf_ ? 1 : 0); }
  RationalVector EmptyRow() const {
    return RationalVector(lp_.num_vars(), Rational(0));
  }

  // Adds coeff . d as -coeff on e and +coeff on f; returns coeff . target to
  // be moved to the right-hand side by the caller.
  void AddObjectiveTerm(std::span<const Rational> coeff,
                        RationalVector* row) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (sgn(coeff[i]) == 0) continue;
      (*row)[i] -= coeff[i];
      (*row)[n_ + i] += coeff[i];
    }
  }

  LinearProgram& lp() { return lp_; }

  struct Solved {
    RationalVector d;
    RationalVector extra;
    Rational value;
  };

  Solved Solve(std::span<const Rational> target, const NormSpec& norm) {
    const LinearProgram::Solution sol = lp_.Solve();
    if (sol.status != SolveStatus::kOptimal) {
      // The perturbation d = 0 is always feasible and the objective is
      // bounded below by zero.
      throw std::logic_error(std::string("inverse LP ended ") +
                             ToString(sol.status));
    }
    Solved out;
    out.d.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      out.d[i] = target[i] - sol.x[i] + sol.x[n_ + i];
    }
    out.extra.assign(sol.x.begin() + static_cast<std::ptrdiff_t>(extra_begin()),
                     sol.x.end());
    out.value = Distance(norm, out.d, target);
    if (out.value != sol.value) {
      throw std::logic_error("inverse LP value differs from distance of d*");
    }
    return out;
  }

 private:
  std::size_t n_;
  bool linf_;
  LinearProgram lp_;
};

void RequireLength(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw DimensionError(std::string(what) + " has length " +
                         std::to_string(got) + ", expected " +
                         std::to_string(want));
  }
}

template <typename T>
bool SatisfiesEqualities(const IpInstance& instance, std::span<const T> x) {
  for (std::size_t i = 0; i < instance.m(); ++i) {
    Rational s = 0;
    for (std::size_t k = 0; k < instance.n(); ++k) {
      s += Rational(instance.a()(i, k)) * Rational(x[k]);
    }
    if (s != Rational(instance.b()[i])) return false;
  }
  return true;
}

template <typename T>
bool Nonnegative(std::span<const T> x) {
  return std::all_of(x.begin(), x.end(),
                     [](const T& v) { return sgn(v) >= 0; });
}

bool GcrFeasible(const IpInstance& instance, const Basis& basis,
                 std::span<const Integer> x0) {
  if (!SatisfiesEqualities(instance, x0)) return false;
  for (std::size_t col : basis.nonbasic()) {
    if (sgn(x0[col]) < 0) return false;
  }
  return true;
}

}  // namespace

InverseResult InverseGcr(const IpInstance& instance, const Basis& basis,
                         std::span<const Integer> x0,
                         std::span<const Rational> target,
                         const NormSpec& norm) {
  const std::size_t n = instance.n();
  RequireLength(x0.size(), n, "x0");
  RequireLength(target.size(), n, "target");
  if (!GcrFeasible(instance, basis, x0)) {
    throw PreconditionError("x0 is not feasible for the corner relaxation of " +
                            basis.Label());
  }
  const GroupGraph graph = BuildGroupGraph(instance, basis, target);
  const std::size_t num_classes = graph.num_classes();
  const std::size_t num_vertices = graph.vertex_count();

  // reduced_op[j] maps d to the j-th reduced cost: d_N[j] - d_B' (A_B^{-1} A_N)_j.
  const RationalMatrix binv_an = Multiply(basis.inverse(),
                                          basis.nonbasic_matrix());
  std::vector<RationalVector> reduced_op(num_classes,
                                         RationalVector(n, Rational(0)));
  for (std::size_t j = 0; j < num_classes; ++j) {
    reduced_op[j][basis.nonbasic()[j]] = 1;
    for (std::size_t i = 0; i < basis.indices().size(); ++i) {
      reduced_op[j][basis.indices()[i]] -= binv_an(i, j);
    }
  }
  IntVector x0_n(num_classes);
  for (std::size_t j = 0; j < num_classes; ++j) {
    x0_n[j] = x0[basis.nonbasic()[j]];
  }
  RationalVector path_op(n, Rational(0));
  for (std::size_t j = 0; j < num_classes; ++j) {
    if (sgn(x0_n[j]) == 0) continue;
    for (std::size_t k = 0; k < n; ++k) {
      path_op[k] += reduced_op[j][k] * Rational(x0_n[j]);
    }
  }
  const RationalVector& target_reduced = graph.weights();
  const Rational target_path_cost = Dot(target_reduced, x0_n);

  // Potentials y_u for u >= 1; the source potential is fixed at zero.
  PerturbationModel model(n, norm, num_vertices - 1);
  const std::size_t y0 = model.extra_begin();
  auto y_col = [&](VertexId u) { return y0 + u - 1; };

  // y_dest = d_bar' x0_N
  {
    RationalVector row = model.EmptyRow();
    if (graph.destination() != graph.source()) {
      row[y_col(graph.destination())] += 1;
    }
    for (auto& v : row) v = -v;
    model.AddObjectiveTerm(path_op, &row);
    for (auto& v : row) v = -v;
    model.lp().AddRow(std::move(row), RowSense::kEqual, target_path_cost);
  }
  // y_v - y_u <= d_bar_j for every arc u -> v of class j.
  for (std::size_t j = 0; j < num_classes; ++j) {
    for (VertexId u = 0; u < num_vertices; ++u) {
      const VertexId v = graph.Successor(u, j);
      RationalVector row = model.EmptyRow();
      if (v != graph.source()) row[y_col(v)] += 1;
      if (u != graph.source()) row[y_col(u)] -= 1;
      for (auto& c : row) c = -c;
      model.AddObjectiveTerm(reduced_op[j], &row);
      for (auto& c : row) c = -c;
      model.lp().AddRow(std::move(row), RowSense::kLessEqual,
                        target_reduced[j]);
    }
  }

  auto solved = model.Solve(target, norm);
  InverseResult out;
  out.status = SolveStatus::kOptimal;
  out.d_star = std::move(solved.d);
  out.value = std::move(solved.value);
  out.certificate_y.reserve(num_vertices);
  out.certificate_y.emplace_back(0);
  for (auto& y : solved.extra) out.certificate_y.push_back(std::move(y));
  out.basis = basis;
  return out;
}

InverseResult InverseLpRelaxation(const IpInstance& instance,
                                  std::span<const Rational> x0,
                                  std::span<const Rational> target,
                                  const NormSpec& norm) {
  const std::size_t n = instance.n();
  const std::size_t m = instance.m();
  RequireLength(x0.size(), n, "x0");
  RequireLength(target.size(), n, "target");
  if (!SatisfiesEqualities(instance, x0) || !Nonnegative(x0)) {
    throw PreconditionError("x0 is not feasible for the LP relaxation");
  }
  PerturbationModel model(n, norm, m);
  const std::size_t y0 = model.extra_begin();

  // Dual feasibility A'y <= d, column by column.
  for (std::size_t k = 0; k < n; ++k) {
    RationalVector row = model.EmptyRow();
    for (std::size_t i = 0; i < m; ++i) row[y0 + i] = instance.a()(i, k);
    row[k] += 1;       // +e_k
    row[n + k] -= 1;   // -f_k
    model.lp().AddRow(std::move(row), RowSense::kLessEqual, target[k]);
  }
  // Zero duality gap: d'x0 - b'y = 0.
  {
    RationalVector row = model.EmptyRow();
    model.AddObjectiveTerm(x0, &row);
    for (std::size_t i = 0; i < m; ++i) row[y0 + i] = -instance.b()[i];
    model.lp().AddRow(std::move(row), RowSense::kEqual, -Dot(target, x0));
  }

  auto solved = model.Solve(target, norm);
  InverseResult out;
  out.status = SolveStatus::kOptimal;
  out.d_star = std::move(solved.d);
  out.value = std::move(solved.value);
  out.certificate_y = std::move(solved.extra);
  return out;
}

InverseResult InverseIpOracle(const IpInstance& instance,
                              std::span<const Integer> x0,
                              std::span<const Rational> target,
                              const NormSpec& norm,
                              std::optional<IntVector> box) {
  const std::size_t n = instance.n();
  RequireLength(x0.size(), n, "x0");
  RequireLength(target.size(), n, "target");
  if (!SatisfiesEqualities(instance, x0) || !Nonnegative(x0)) {
    throw PreconditionError("x0 is not feasible for the integer program");
  }
  if (!box.has_value()) box = ImpliedBox(instance);
  if (!box.has_value()) {
    throw CapacityError("no finite search box for the inverse IP oracle", 0);
  }
  RequireLength(box->size(), n, "box");
  for (std::size_t k = 0; k < n; ++k) {
    if (x0[k] > (*box)[k]) {
      throw PreconditionError("box does not contain x0 (coordinate " +
                              std::to_string(k + 1) + ")");
    }
  }

  const std::vector<IntVector> points = EnumerateIntegerPoints(instance, *box);
  PerturbationModel model(n, norm, 0);
  // d'(x - x0) >= 0 for every feasible x.
  for (const IntVector& x : points) {
    RationalVector delta(n);
    bool same = true;
    for (std::size_t k = 0; k < n; ++k) {
      delta[k] = Rational(x[k] - x0[k]);
      if (sgn(delta[k]) != 0) same = false;
    }
    if (same) continue;
    RationalVector row = model.EmptyRow();
    model.AddObjectiveTerm(delta, &row);
    model.lp().AddRow(std::move(row), RowSense::kGreaterEqual,
                      -Dot(target, delta));
  }

  auto solved = model.Solve(target, norm);
  InverseResult out;
  out.status = SolveStatus::kOptimal;
  out.d_star = std::move(solved.d);
  out.value = std::move(solved.value);
  return out;
}

MultiBasisResult MultiBasisInverse(const IpInstance& instance,
                                   std::span<const Integer> x0,
                                   std::span<const Rational> target,
                                   const NormSpec& norm, std::size_t cap) {
  RequireLength(x0.size(), instance.n(), "x0");
  if (!SatisfiesEqualities(instance, x0)) {
    throw PreconditionError("x0 does not satisfy Ax = b");
  }
  MultiBasisResult out;
  for (Basis& basis : EnumerateFeasibleBases(instance, cap)) {
    BasisOutcome outcome{basis, std::nullopt};
    const bool usable = std::all_of(
        basis.nonbasic().begin(), basis.nonbasic().end(),
        [&](std::size_t col) { return sgn(x0[col]) >= 0; });
    if (usable) {
      outcome.result = InverseGcr(instance, basis, x0, target, norm);
      if (out.best.status != SolveStatus::kOptimal ||
          outcome.result->value < out.best.value) {
        out.best = *outcome.result;
      }
    }
    out.per_basis.push_back(std::move(outcome));
  }
  return out;
}

bool CheckInverseFeasible(const IpInstance& instance, const Basis& basis,
                          std::span<const Integer> x0,
                          std::span<const Rational> d) {
  if (x0.size() != instance.n() || !GcrFeasible(instance, basis, x0)) {
    return false;
  }
  const GcrSolution gcr = SolveGcr(instance, basis, d);
  return gcr.status == SolveStatus::kOptimal && gcr.value == Dot(d, x0);
}

bool CheckLpInverseFeasible(const IpInstance& instance,
                            std::span<const Rational> x0,
                            std::span<const Rational> d) {
  if (x0.size() != instance.n() || !SatisfiesEqualities(instance, x0) ||
      !Nonnegative(x0)) {
    return false;
  }
  const LpSolution lp = SolveLpSimplex(instance, d);
  return lp.status == SolveStatus::kOptimal && lp.value == Dot(d, x0);
}

bool HasPositiveBasicPart(std::span<const Integer> x0, const Basis& basis) {
  return std::all_of(basis.indices().begin(), basis.indices().end(),
                     [&](std::size_t col) {
                       return col < x0.size() && sgn(x0[col]) > 0;
                     });
}

}  // namespace igcr
