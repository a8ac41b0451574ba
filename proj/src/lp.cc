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

#include "igcr/lp.h"

#include <algorithm>
#include <string>

#include "igcr/errors.h"
#include "igcr/exact_linalg.h"

namespace igcr {

IpInstance::IpInstance(IntMatrix a, IntVector b, RationalVector c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.rows() == 0 || a_.cols() == 0) {
    throw ValidationError("A must have at least one row and one column");
  }
  if (b_.size() != a_.rows()) {
    throw ValidationError("b has length " + std::to_string(b_.size()) +
                          " but A has " + std::to_string(a_.rows()) + " rows");
  }
  if (c_.size() != a_.cols()) {
    throw ValidationError("c has length " + std::to_string(c_.size()) +
                          " but A has " + std::to_string(a_.cols()) +
                          " columns");
  }
  if (a_.rows() > a_.cols()) {
    throw ValidationError("A has more rows than columns");
  }
  std::optional<std::size_t> dependent;
  if (Rank(a_, &dependent) < a_.rows()) {
    throw ValidationError("A is not full row rank: row " +
                          std::to_string(*dependent + 1) +
                          " is a combination of the rows above it");
  }
}

Basis::Basis(const IpInstance& instance, std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (indices_.size() != instance.m()) {
    throw DomainError("basis must have exactly " +
                      std::to_string(instance.m()) + " columns");
  }
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw DomainError("basis repeats a column");
  }
  if (!indices_.empty() && indices_.back() >= instance.n()) {
    throw DomainError("basis column " + std::to_string(indices_.back() + 1) +
                      " out of range");
  }
  for (std::size_t j = 0, k = 0; j < instance.n(); ++j) {
    if (k < indices_.size() && indices_[k] == j) {
      ++k;
    } else {
      nonbasic_.push_back(j);
    }
  }
  a_b_ = instance.a().SelectColumns(indices_);
  a_n_ = instance.a().SelectColumns(nonbasic_);
  det_ = Determinant(a_b_);
  if (sgn(det_) == 0) {
    throw SingularMatrixError("basis " + Label() + " has singular A_B");
  }
  inverse_ = InvertRationalMatrix(a_b_);
}

std::string Basis::Label() const {
  std::string out = "{";
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(indices_[k] + 1);
  }
  return out + "}";
}

LpSolution SolveLpSimplex(const IpInstance& instance,
                          std::span<const Rational> objective) {
  if (objective.size() != instance.n()) {
    throw DimensionError("objective length must equal n");
  }
  const RationalVector b = ToRational(instance.b());
  const RationalVector c(objective.begin(), objective.end());
  const StandardFormResult sf =
      SolveStandardForm(ToRational(instance.a()), b, c);
  if (!sf.redundant_rows.empty()) {
    throw ValidationError("rank deficiency detected in phase 1 at row " +
                          std::to_string(sf.redundant_rows.front() + 1));
  }
  LpSolution out;
  out.status = sf.status;
  if (sf.status != SolveStatus::kOptimal) return out;
  out.x = sf.x;
  out.value = sf.value;
  out.basis.emplace(instance, sf.basic_columns);
  return out;
}

RationalVector BasicSolution(const IpInstance& instance, const Basis& basis) {
  const RationalVector xb = Multiply(basis.inverse(), instance.b());
  RationalVector x(instance.n(), Rational(0));
  for (std::size_t k = 0; k < basis.indices().size(); ++k) {
    x[basis.indices()[k]] = xb[k];
  }
  return x;
}

RationalVector ReducedCosts(const IpInstance& instance, const Basis& basis,
                            std::span<const Rational> d) {
  if (d.size() != instance.n()) {
    throw DomainError("objective length must equal n");
  }
  const std::size_t m = instance.m();
  // Simplex multipliers pi' = d_B' A_B^{-1}.
  RationalVector pi(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& db = d[basis.indices()[i]];
    if (sgn(db) == 0) continue;
    for (std::size_t k = 0; k < m; ++k) pi[k] += db * basis.inverse()(i, k);
  }
  RationalVector out(basis.nonbasic().size());
  for (std::size_t j = 0; j < basis.nonbasic().size(); ++j) {
    const std::size_t col = basis.nonbasic()[j];
    Rational v = d[col];
    for (std::size_t k = 0; k < m; ++k) v -= pi[k] * instance.a()(k, col);
    out[j] = std::move(v);
  }
  return out;
}

Rational BasisObjectiveConstant(const IpInstance& instance, const Basis& basis,
                                std::span<const Rational> d) {
  const RationalVector x = BasicSolution(instance, basis);
  return Dot(d, x);
}

std::vector<Basis> EnumerateFeasibleBases(const IpInstance& instance,
                                          std::size_t cap) {
  if (cap == 0) throw DomainError("basis cap must be at least 1");
  const std::size_t m = instance.m();
  const std::size_t n = instance.n();
  std::vector<Basis> out;
  std::vector<std::size_t> combo(m);
  for (std::size_t i = 0; i < m; ++i) combo[i] = i;
  while (true) {
    const IntMatrix a_b = instance.a().SelectColumns(combo);
    if (sgn(Determinant(a_b)) != 0) {
      Basis basis(instance, combo);
      const RationalVector xb = Multiply(basis.inverse(), instance.b());
      const bool feasible = std::all_of(
          xb.begin(), xb.end(), [](const Rational& v) { return sgn(v) >= 0; });
      if (feasible) {
        if (out.size() == cap) {
          throw CapacityError("more than " + std::to_string(cap) +
                                  " feasible bases (reached " +
                                  std::to_string(cap + 1) + ")",
                              cap + 1);
        }
        out.push_back(std::move(basis));
      }
    }
    // Next m-combination in lexicographic order.
    std::size_t i = m;
    while (i > 0 && combo[i - 1] == n - m + (i - 1)) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t k = i; k < m; ++k) combo[k] = combo[k - 1] + 1;
  }
  return out;
}

}  // namespace igcr
