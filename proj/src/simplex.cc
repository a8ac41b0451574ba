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

#include "igcr/simplex.h"

#include <optional>
#include <utility>

#include "igcr/errors.h"

namespace igcr {

const char* ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

// Dense tableau. Row i reads: sum_j rows_[i][j] x_j = rhs_[i], with
// basis_[i] the column that is the i-th unit vector. cost_row_ holds the
// reduced costs for the active objective.
class Tableau {
 public:
  Tableau(const RationalMatrix& a, const RationalVector& b)
      : num_structural_(a.cols()) {
    const std::size_t m = a.rows();
    rows_.resize(m);
    rhs_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const bool flip = sgn(b[i]) < 0;
      rows_[i].resize(a.cols());
      for (std::size_t j = 0; j < a.cols(); ++j) {
        rows_[i][j] = flip ? Rational(-a(i, j)) : a(i, j);
      }
      rhs_[i] = flip ? Rational(-b[i]) : b[i];
    }
    basis_.assign(m, kNone);
  }

  // Seeds the basis with existing unit columns and appends one artificial
  // column for every row left uncovered.
  void AddArtificials() {
    const std::size_t m = rows_.size();
    std::vector<bool> row_covered(m, false);
    for (std::size_t j = 0; j < num_structural_; ++j) {
      std::optional<std::size_t> unit_row;
      bool is_unit = true;
      for (std::size_t i = 0; i < m && is_unit; ++i) {
        const int s = sgn(rows_[i][j]);
        if (s == 0) continue;
        if (unit_row.has_value() || rows_[i][j] != 1) {
          is_unit = false;
        } else {
          unit_row = i;
        }
      }
      if (is_unit && unit_row.has_value() && !row_covered[*unit_row]) {
        row_covered[*unit_row] = true;
        basis_[*unit_row] = j;
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (row_covered[i]) continue;
      const std::size_t col = num_columns();
      for (std::size_t k = 0; k < m; ++k) rows_[k].emplace_back(k == i ? 1 : 0);
      basis_[i] = col;
    }
  }

  std::size_t num_columns() const {
    return rows_.empty() ? num_structural_ : rows_[0].size();
  }
  std::size_t num_rows() const { return rows_.size(); }
  bool IsArtificial(std::size_t col) const { return col >= num_structural_; }

  // Loads reduced costs for objective `cost` (indexed by column).
  void SetObjective(const RationalVector& cost) {
    cost_ = cost;
    cost_row_.assign(num_columns(), Rational(0));
    for (std::size_t j = 0; j < num_columns(); ++j) cost_row_[j] = cost_[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < num_columns(); ++j) {
        if (sgn(rows_[i][j]) != 0) cost_row_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Runs Bland-rule pivots over columns [0, column_limit). Returns false on
  // unboundedness.
  bool Optimize(std::size_t column_limit, std::size_t* pivots) {
    while (true) {
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < column_limit; ++j) {
        if (sgn(cost_row_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == kNone) return true;
      std::size_t leaving = kNone;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][entering]) <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][entering];
        if (leaving == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == kNone) return false;
      Pivot(leaving, entering);
      ++*pivots;
    }
  }

  void Pivot(std::size_t r, std::size_t col) {
    const std::size_t n = num_columns();
    const Rational p = rows_[r][col];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(rows_[r][j]) == 0) continue;
      rows_[r][j] /= p;
      support.push_back(j);
    }
    rhs_[r] /= p;
    auto eliminate = [&](std::vector<Rational>& row, Rational* rhs) {
      if (sgn(row[col]) == 0) return;
      const Rational f = row[col];
      for (std::size_t j : support) row[j] -= f * rows_[r][j];
      if (rhs != nullptr) *rhs -= f * rhs_[r];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i], &rhs_[i]);
    }
    if (!cost_row_.empty()) eliminate(cost_row_, nullptr);
    basis_[r] = col;
  }

  // Pivots artificial columns out of the basis where possible. Rows where
  // that fails are dependent and get deleted; their input indices are
  // appended to `dropped`.
  void DriveOutArtificials(std::vector<std::size_t>* row_ids,
                           std::vector<std::size_t>* dropped,
                           std::size_t* pivots) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (!IsArtificial(basis_[i])) {
        ++i;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < num_structural_; ++j) {
        if (sgn(rows_[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col != kNone) {
        Pivot(i, col);
        ++*pivots;
        ++i;
        continue;
      }
      dropped->push_back((*row_ids)[i]);
      rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
      rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
      basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      row_ids->erase(row_ids->begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  void DropArtificialColumns() {
    for (auto& row : rows_) row.resize(num_structural_);
    if (!cost_row_.empty()) cost_row_.resize(num_structural_);
  }

  Rational ObjectiveValue() const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) v += cost_[basis_[i]] * rhs_[i];
    return v;
  }

  RationalVector Primal() const {
    RationalVector x(num_structural_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < num_structural_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

  const std::vector<std::size_t>& basis() const { return basis_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t num_structural_;
  std::vector<std::vector<Rational>> rows_;
  RationalVector rhs_;
  std::vector<std::size_t> basis_;
  RationalVector cost_;
  RationalVector cost_row_;
};

}  // namespace

StandardFormResult SolveStandardForm(const RationalMatrix& a,
                                     const RationalVector& b,
                                     const RationalVector& c) {
  if (a.rows() != b.size() || a.cols() != c.size()) {
    throw DimensionError("standard-form LP dimensions disagree");
  }
  StandardFormResult result;
  Tableau tableau(a, b);
  tableau.AddArtificials();

  // Phase 1: minimize the sum of artificials.
  RationalVector phase1_cost(tableau.num_columns(), Rational(0));
  for (std::size_t j = a.cols(); j < tableau.num_columns(); ++j) {
    phase1_cost[j] = 1;
  }
  tableau.SetObjective(phase1_cost);
  if (tableau.num_columns() > a.cols()) {
    tableau.Optimize(tableau.num_columns(), &result.pivots);
    if (sgn(tableau.ObjectiveValue()) > 0) {
      result.status = SolveStatus::kInfeasible;
      return result;
    }
  }
  std::vector<std::size_t> row_ids(a.rows());
  for (std::size_t i = 0; i < row_ids.size(); ++i) row_ids[i] = i;
  tableau.DriveOutArtificials(&row_ids, &result.redundant_rows,
                              &result.pivots);
  tableau.DropArtificialColumns();

  // Phase 2.
  tableau.SetObjective(c);
  if (!tableau.Optimize(a.cols(), &result.pivots)) {
    result.status = SolveStatus::kUnbounded;
    return result;
  }
  result.status = SolveStatus::kOptimal;
  result.x = tableau.Primal();
  result.value = tableau.ObjectiveValue();
  result.basic_columns = tableau.basis();
  return result;
}

void LinearProgram::AddRow(RationalVector coeffs, RowSense sense,
                           Rational rhs) {
  if (coeffs.size() != num_vars()) {
    throw DimensionError("row length does not match variable count");
  }
  rows_.push_back(Row{std::move(coeffs), sense, std::move(rhs)});
}

LinearProgram::Solution LinearProgram::Solve() const {
  // Column layout: one column per variable, a second (negated) column for
  // each free variable, then one slack/surplus per inequality row.
  std::vector<std::size_t> neg_column(num_vars(), 0);
  std::size_t cols = num_vars();
  for (std::size_t v = 0; v < num_vars(); ++v) {
    if (free_[v]) neg_column[v] = cols++;
  }
  std::vector<std::size_t> slack_column(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].sense != RowSense::kEqual) slack_column[r] = cols++;
  }

  RationalMatrix a(rows_.size(), cols);
  RationalVector b(rows_.size());
  RationalVector c(cols, Rational(0));
  for (std::size_t v = 0; v < num_vars(); ++v) {
    c[v] = objective_[v];
    if (free_[v]) c[neg_column[v]] = -objective_[v];
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Row& row = rows_[r];
    for (std::size_t v = 0; v < num_vars(); ++v) {
      if (sgn(row.coeffs[v]) == 0) continue;
      a(r, v) = row.coeffs[v];
      if (free_[v]) a(r, neg_column[v]) = -row.coeffs[v];
    }
    if (row.sense == RowSense::kLessEqual) a(r, slack_column[r]) = 1;
    if (row.sense == RowSense::kGreaterEqual) a(r, slack_column[r]) = -1;
    b[r] = row.rhs;
  }

  const StandardFormResult sf = SolveStandardForm(a, b, c);
  Solution out;
  out.status = sf.status;
  out.pivots = sf.pivots;
  if (sf.status != SolveStatus::kOptimal) return out;
  out.x.resize(num_vars());
  for (std::size_t v = 0; v < num_vars(); ++v) {
    out.x[v] = sf.x[v];
    if (free_[v]) out.x[v] -= sf.x[neg_column[v]];
  }
  out.value = Dot(objective_, out.x);
  return out;
}

}  // namespace igcr
