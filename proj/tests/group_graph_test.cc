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


#include "igcr/group_graph.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "igcr/errors.h"
#include "igcr/exact_linalg.h"
#include "test_support.h"

namespace igcr {
namespace {

Rational Q(long p, long q = 1) { return MakeRational(p, q); }

IpInstance Example() {
  return IpInstance(IntMatrix{{1, 0, 2, 4}, {0, 1, 4, 4}}, IntVector{9, 15},
                    RationalVector{Q(0), Q(0), Q(-2), Q(-3)});
}

TEST(GroupGraphTest, ExampleCornerGraph) {
  const IpInstance inst = Example();
  const GroupGraph g = BuildGroupGraph(inst, Basis(inst, {2, 3}), inst.c());
  EXPECT_EQ(g.vertex_count(), 8u);
  EXPECT_EQ(g.w(), (IntVector{2, 4}));
  EXPECT_EQ(g.generators(), (std::vector<IntVector>{{1, 0}, {0, 3}}));
  EXPECT_EQ(g.weights(), (RationalVector{Q(1, 2), Q(1, 4)}));
  EXPECT_EQ(g.destination_label(), (IntVector{1, 1}));
  EXPECT_EQ(g.LabelString(g.destination()), "(1, 1)");
  EXPECT_EQ(g.Label(g.Successor(g.destination(), 1)), (IntVector{1, 0}));

  const PathCounts path = ShortestPath(g);
  ASSERT_EQ(path.status, PathCounts::Status::kOptimal);
  EXPECT_EQ(path.counts, (IntVector{1, 3}));
  EXPECT_EQ(path.cost, Q(5, 4));
}

TEST(GroupGraphTest, UnimodularBasisGivesSingleVertex) {
  const IpInstance inst = Example();
  const GroupGraph g = BuildGroupGraph(inst, Basis(inst, {0, 1}),
                                       RationalVector{Q(0), Q(0), Q(1), Q(1)});
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.destination(), g.source());
  const PathCounts path = ShortestPath(g);
  ASSERT_EQ(path.status, PathCounts::Status::kOptimal);
  EXPECT_EQ(path.counts, (IntVector{0, 0}));
  EXPECT_EQ(path.cost, 0);
}

TEST(GroupGraphTest, ZeroObjectiveGivesZeroWeights) {
  const IpInstance inst = Example();
  const GroupGraph g =
      BuildGroupGraph(inst, Basis(inst, {2, 3}), RationalVector(4, Q(0)));
  EXPECT_EQ(g.weights(), (RationalVector{Q(0), Q(0)}));
}

TEST(GroupGraphTest, NegativeReducedCostIsUnbounded) {
  const IpInstance inst = Example();
  const GroupGraph g = BuildGroupGraph(inst, Basis(inst, {2, 3}),
                                       RationalVector{Q(-1), Q(0), Q(-2), Q(-3)});
  EXPECT_EQ(g.weights(), (RationalVector{Q(-1, 2), Q(1, 4)}));
  EXPECT_EQ(ShortestPath(g).status, PathCounts::Status::kUnbounded);
}

TEST(GroupGraphTest, EncodeRejectsNonCanonicalLabels) {
  const IpInstance inst = Example();
  const GroupGraph g = BuildGroupGraph(inst, Basis(inst, {2, 3}), inst.c());
  EXPECT_THROW(g.Encode(IntVector{2, 0}), DomainError);
  EXPECT_THROW(g.Encode(IntVector{0}), DomainError);
  EXPECT_EQ(g.Encode(IntVector{1, 1}), g.destination());
}

TEST(GroupGraphTest, DotExport) {
  const IpInstance inst = Example();
  const std::string dot = ToDot(BuildGroupGraph(inst, Basis(inst, {2, 3}), inst.c()));
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  std::size_t arcs = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) {
    ++arcs;
  }
  EXPECT_EQ(arcs, 16u);
  EXPECT_NE(dot.find("label=\"(1, 1)\", peripheries=2"), std::string::npos);
  EXPECT_NE(dot.find("v0 -> v4 [style=solid, label=\"1/2\"]"), std::string::npos);
  EXPECT_NE(dot.find("v0 -> v3 [style=dashed, label=\"1/4\"]"), std::string::npos);

  const IpInstance big(IntMatrix{{65, 1}}, IntVector{65}, RationalVector{Q(1), Q(1)});
  EXPECT_THROW(ToDot(BuildGroupGraph(big, Basis(big, {0}), big.c())), CapacityError);
}

// Structural invariants and path optimality against exhaustive search on
// every feasible basis of random instances.
TEST(GroupGraphTest, RandomGraphsMatchExhaustiveSearch) {
  testing::Rng rng(testing::kSeed + 20);
  const testing::RandomCaseSpec spec;
  std::size_t graphs = 0;
  for (const auto& rc : testing::DrawCases(rng, spec, 120)) {
    const IpInstance& inst = rc.instance;
    for (const Basis& basis : rc.bases) {
      const RationalVector d = testing::RandomObjective(rng, inst.n(), 4);
      const GroupGraph g = BuildGroupGraph(inst, basis, d);
      const SmithNormalForm& snf = g.snf();
      ASSERT_EQ(Integer(static_cast<unsigned long>(g.vertex_count())),
                abs(basis.determinant()));
      ASSERT_EQ(snf.w, testing::InvariantFactorsFromMinors(basis.basis_matrix()));
      const IntMatrix san = Multiply(snf.s, basis.nonbasic_matrix());
      for (std::size_t j = 0; j < g.num_classes(); ++j) {
        ASSERT_EQ(g.generators()[j], CanonicalMod(san.column(j), snf.w));
      }
      ASSERT_EQ(g.destination_label(),
                CanonicalMod(Multiply(snf.s, inst.b()), snf.w));
      ASSERT_EQ(g.weights(),
                testing::ReducedCostsByCofactors(inst, basis.indices(), d));
      for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        const IntVector label = g.Label(u);
        ASSERT_EQ(g.Encode(label), u);
        for (std::size_t j = 0; j < g.num_classes(); ++j) {
          IntVector next = label;
          for (std::size_t k = 0; k < next.size(); ++k) next[k] += g.generators()[j][k];
          ASSERT_EQ(g.Label(g.Successor(u, j)), CanonicalMod(next, snf.w));
        }
      }

      const PathCounts path = ShortestPath(g);
      const std::optional<Rational> oracle = testing::ExhaustivePathCost(g);
      const bool negative = std::any_of(g.weights().begin(), g.weights().end(),
                                        [](const Rational& w) { return sgn(w) < 0; });
      if (!oracle) {
        ASSERT_EQ(path.status, PathCounts::Status::kUnreachable);
        continue;
      }
      if (negative) {
        ASSERT_EQ(path.status, PathCounts::Status::kUnbounded);
        continue;
      }
      ASSERT_EQ(path.status, PathCounts::Status::kOptimal);
      ASSERT_EQ(path.cost, *oracle);
      Rational cost = 0;
      IntVector reached(snf.w.size());
      for (std::size_t j = 0; j < g.num_classes(); ++j) {
        ASSERT_GE(path.counts[j], 0);
        cost += g.weights()[j] * path.counts[j];
        for (std::size_t k = 0; k < reached.size(); ++k) {
          reached[k] += san(k, j) * path.counts[j];
        }
      }
      ASSERT_EQ(cost, path.cost);
      ASSERT_EQ(CanonicalMod(reached, snf.w), g.destination_label());
      ++graphs;
    }
  }
  EXPECT_GT(graphs, 100u);
}

}  // namespace
}  // namespace igcr
