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


#include <gtest/gtest.h>

#include "igcr/errors.h"
#include "igcr/lp.h"
#include "igcr/simplex.h"
#include "test_support.h"

namespace igcr {
namespace {

Rational Q(long p, long q = 1) { return MakeRational(p, q); }

RationalVector Qs(std::initializer_list<Rational> v) { return RationalVector(v); }

IpInstance Example() {
  return IpInstance(IntMatrix{{1, 0, 2, 4}, {0, 1, 4, 4}}, IntVector{9, 15},
                    Qs({Q(0), Q(0), Q(-2), Q(-3)}));
}

TEST(StandardFormTest, SimpleOptimum) {
  const auto res = SolveStandardForm(RationalMatrix{{Q(1), Q(1)}},
                                     Qs({Q(1)}), Qs({Q(1), Q(2)}));
  ASSERT_EQ(res.status, SolveStatus::kOptimal);
  EXPECT_EQ(res.value, 1);
  EXPECT_EQ(res.x, Qs({Q(1), Q(0)}));
}

TEST(StandardFormTest, InfeasibleAndUnbounded) {
  EXPECT_EQ(SolveStandardForm(RationalMatrix{{Q(1), Q(1)}}, Qs({Q(-1)}),
                              Qs({Q(0), Q(0)}))
                .status,
            SolveStatus::kInfeasible);
  EXPECT_EQ(SolveStandardForm(RationalMatrix{{Q(1), Q(-1)}}, Qs({Q(0)}),
                              Qs({Q(-1), Q(0)}))
                .status,
            SolveStatus::kUnbounded);
}

TEST(StandardFormTest, ReportsRedundantRows) {
  const auto res = SolveStandardForm(
      RationalMatrix{{Q(1), Q(1), Q(1)}, {Q(2), Q(2), Q(2)}, {Q(1), Q(0), Q(0)}},
      Qs({Q(3), Q(6), Q(1)}), Qs({Q(0), Q(1), Q(2)}));
  ASSERT_EQ(res.status, SolveStatus::kOptimal);
  EXPECT_EQ(res.redundant_rows, std::vector<std::size_t>{1});
  EXPECT_EQ(res.value, 2);
}

// Beale's instance cycles under the textbook largest-coefficient rule.
TEST(StandardFormTest, DegenerateCyclingInstanceTerminates) {
  LinearProgram lp(4);
  const RationalVector obj = Qs({Q(-3, 4), Q(150), Q(-1, 50), Q(6)});
  for (std::size_t k = 0; k < 4; ++k) lp.SetObjective(k, obj[k]);
  lp.AddRow(Qs({Q(1, 4), Q(-60), Q(-1, 25), Q(9)}), RowSense::kLessEqual, 0);
  lp.AddRow(Qs({Q(1, 2), Q(-90), Q(-1, 50), Q(3)}), RowSense::kLessEqual, 0);
  lp.AddRow(Qs({Q(0), Q(0), Q(1), Q(0)}), RowSense::kLessEqual, 1);
  const auto sol = lp.Solve();
  ASSERT_EQ(sol.status, SolveStatus::kOptimal);
  EXPECT_EQ(sol.value, Q(-1, 20));
  EXPECT_EQ(sol.x, Qs({Q(1, 25), Q(0), Q(1), Q(0)}));
}

TEST(LinearProgramTest, InequalitiesAndFreeVariables) {
  LinearProgram lp(2);
  lp.SetObjective(0, -1);
  lp.SetObjective(1, -1);
  lp.AddRow(Qs({Q(1), Q(2)}), RowSense::kLessEqual, 4);
  lp.AddRow(Qs({Q(3), Q(1)}), RowSense::kLessEqual, 6);
  auto sol = lp.Solve();
  ASSERT_EQ(sol.status, SolveStatus::kOptimal);
  EXPECT_EQ(sol.value, Q(-14, 5));
  EXPECT_EQ(sol.x, Qs({Q(8, 5), Q(6, 5)}));

  LinearProgram free(1);
  free.SetObjective(0, 1);
  free.SetFree(0);
  free.AddRow(Qs({Q(1)}), RowSense::kGreaterEqual, -3);
  sol = free.Solve();
  ASSERT_EQ(sol.status, SolveStatus::kOptimal);
  EXPECT_EQ(sol.x, Qs({Q(-3)}));

  LinearProgram unbounded(1);
  unbounded.SetObjective(0, 1);
  unbounded.SetFree(0);
  EXPECT_EQ(unbounded.Solve().status, SolveStatus::kUnbounded);
}

TEST(IpInstanceTest, Validation) {
  EXPECT_NO_THROW(Example());
  try {
    IpInstance(IntMatrix{{1, 2, 3}, {2, 4, 6}}, IntVector{1, 2},
               Qs({Q(0), Q(0), Q(0)}));
    FAIL() << "rank deficiency accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(IpInstance(IntMatrix{{1, 2}}, IntVector{1, 2}, Qs({Q(0), Q(0)})),
               ValidationError);
  EXPECT_THROW(IpInstance(IntMatrix{{1, 2}}, IntVector{1}, Qs({Q(0)})),
               ValidationError);
  EXPECT_THROW(IpInstance(IntMatrix{{1}, {2}}, IntVector{1, 2}, Qs({Q(0)})),
               ValidationError);
}

TEST(BasisTest, DerivedDataAndErrors) {
  const IpInstance inst = Example();
  const Basis b(inst, {3, 2});
  EXPECT_EQ(b.indices(), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(b.nonbasic(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(b.determinant(), -8);
  EXPECT_EQ(b.Label(), "{3, 4}");
  EXPECT_THROW(Basis(inst, {1}), DomainError);
  EXPECT_THROW(Basis(inst, {1, 1}), DomainError);
  EXPECT_THROW(Basis(inst, {1, 7}), DomainError);
  const IpInstance singular(IntMatrix{{1, 2, 1}, {2, 4, 0}}, IntVector{1, 2},
                            Qs({Q(0), Q(0), Q(0)}));
  EXPECT_THROW(Basis(singular, {0, 1}), SingularMatrixError);
}

TEST(LpCoreTest, ExampleRelaxation) {
  const IpInstance inst = Example();
  const LpSolution lp = SolveLpSimplex(inst, inst.c());
  ASSERT_EQ(lp.status, SolveStatus::kOptimal);
  EXPECT_EQ(lp.value, Q(-33, 4));
  EXPECT_EQ(lp.x, Qs({Q(0), Q(0), Q(3), Q(3, 4)}));
  ASSERT_TRUE(lp.basis.has_value());
  EXPECT_EQ(lp.basis->Label(), "{3, 4}");
}

TEST(LpCoreTest, ExampleBasisQuantities) {
  const IpInstance inst = Example();
  EXPECT_EQ(BasicSolution(inst, Basis(inst, {1, 3})),
            Qs({Q(0), Q(6), Q(0), Q(9, 4)}));
  const Basis corner(inst, {2, 3});
  EXPECT_EQ(ReducedCosts(inst, corner, inst.c()), Qs({Q(1, 2), Q(1, 4)}));
  EXPECT_EQ(ReducedCosts(inst, corner, Qs({Q(-1), Q(0), Q(-2), Q(-3)})),
            Qs({Q(-1, 2), Q(1, 4)}));
  EXPECT_EQ(BasisObjectiveConstant(inst, corner, inst.c()), Q(-33, 4));
}

TEST(LpCoreTest, ExampleFeasibleBases) {
  const IpInstance inst = Example();
  std::vector<std::string> labels;
  for (const Basis& b : EnumerateFeasibleBases(inst)) labels.push_back(b.Label());
  EXPECT_EQ(labels, (std::vector<std::string>{"{1, 2}", "{1, 3}", "{2, 4}",
                                              "{3, 4}"}));
  try {
    EnumerateFeasibleBases(inst, 3);
    FAIL() << "cap not enforced";
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.reached(), 4u);
  }
  EXPECT_EQ(EnumerateFeasibleBases(inst, 4).size(), 4u);
}

// The simplex optimum equals the best vertex found by brute enumeration of
// bases; reduced costs agree with a cofactor-based computation.
TEST(LpCoreTest, RandomInstancesMatchVertexEnumeration) {
  testing::Rng rng(testing::kSeed + 10);
  const testing::RandomCaseSpec spec;
  for (const auto& rc : testing::DrawCases(rng, spec, 200)) {
    const IpInstance& inst = rc.instance;
    const LpSolution lp = SolveLpSimplex(inst, inst.c());
    ASSERT_EQ(lp.status, SolveStatus::kOptimal);
    ASSERT_FALSE(rc.bases.empty());
    std::optional<Rational> best;
    for (const Basis& b : rc.bases) {
      const Rational v = Dot(inst.c(), BasicSolution(inst, b));
      if (!best || v < *best) best = v;
      ASSERT_EQ(ReducedCosts(inst, b, inst.c()),
                testing::ReducedCostsByCofactors(inst, b.indices(), inst.c()));
    }
    ASSERT_EQ(lp.value, *best);
    ASSERT_EQ(Dot(inst.c(), lp.x), lp.value);
    const RationalVector ax = Multiply(inst.a(), lp.x);
    for (std::size_t r = 0; r < inst.m(); ++r) ASSERT_EQ(ax[r], inst.b()[r]);
    for (const auto& v : lp.x) ASSERT_GE(v, 0);
    ASSERT_TRUE(lp.basis.has_value());
    for (const auto& rc_j : ReducedCosts(inst, *lp.basis, inst.c())) {
      ASSERT_GE(rc_j, 0);
    }
  }
}

}  // namespace
}  // namespace igcr
