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

// Exact two-phase tableau simplex with Bland's pivoting rule.
//
// Two entry points share one engine:
//   * SolveStandardForm: min c'x s.t. Ax = b, x >= 0. Reports the final basis
//     and any constraint rows found to be redundant during phase 1.
//   * LinearProgram::Solve: a small modelling layer with free variables and
//     <=, =, >= rows, converted to standard form internally.
//
// Bland's rule (lowest-index entering column, lowest-index leaving basic
// variable among ratio ties) guarantees termination and makes the returned
// optimum a deterministic function of the input ordering.

#ifndef IGCR_SIMPLEX_H_
#define IGCR_SIMPLEX_H_

#include <cstddef>
#include <vector>

#include "igcr/matrix.h"
#include "igcr/rational.h"

namespace igcr {

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded };

const char* ToString(SolveStatus status);

struct StandardFormResult {
  SolveStatus status = SolveStatus::kInfeasible;
  RationalVector x;
  Rational value;
  // Basic column per surviving row, in row order (meaningful when Optimal).
  std::vector<std::size_t> basic_columns;
  // Input rows dropped as linear combinations of earlier ones.
  std::vector<std::size_t> redundant_rows;
  std::size_t pivots = 0;
};

StandardFormResult SolveStandardForm(const RationalMatrix& a,
                                     const RationalVector& b,
                                     const RationalVector& c);

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars)
      : objective_(num_vars), free_(num_vars, false) {}

  std::size_t num_vars() const { return objective_.size(); }
  std::size_t num_rows() const { return rows_.size(); }

  void SetObjective(std::size_t var, Rational coeff) {
    objective_.at(var) = std::move(coeff);
  }
  void SetFree(std::size_t var) { free_.at(var) = true; }

  // Coefficients are given densely; length must equal num_vars().
  void AddRow(RationalVector coeffs, RowSense sense, Rational rhs);

  struct Solution {
    SolveStatus status = SolveStatus::kInfeasible;
    RationalVector x;
    Rational value;
    std::size_t pivots = 0;
  };

  // Minimizes the objective.
  Solution Solve() const;

 private:
  struct Row {
    RationalVector coeffs;
    RowSense sense;
    Rational rhs;
  };

  RationalVector objective_;
  std::vector<bool> free_;
  std::vector<Row> rows_;
};

}  // namespace igcr

#endif  // IGCR_SIMPLEX_H_
