// Copyright 2026 The ryserkit Authors
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

#include "ryser/peeling.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "ryser/constructions.h"
#include "test_util.h"

namespace ryser {
namespace {

using testing::Uniform;

struct OraclePeel {
  std::vector<VertexRef> deleted;
  std::vector<int> kept;
};

// Straightforward re-implementation: recount degrees from scratch each round.
OraclePeel PeelOracle(const Hypergraph& h, int threshold) {
  std::vector<bool> alive(h.num_edges(), true);
  OraclePeel out;
  while (true) {
    std::map<VertexRef, int> degree;
    for (int e = 0; e < h.num_edges(); ++e) {
      if (!alive[e]) continue;
      for (int c = 0; c < h.r(); ++c) ++degree[{c, h.edge(e)[c]}];
    }
    VertexRef best;
    int best_degree = 0;
    for (const auto& [v, d] : degree) {
      if (d > best_degree) {
        best = v;
        best_degree = d;
      }
    }
    if (best_degree < threshold) break;
    out.deleted.push_back(best);
    for (int e = 0; e < h.num_edges(); ++e) {
      if (h.EdgeContains(e, best)) alive[e] = false;
    }
  }
  for (int e = 0; e < h.num_edges(); ++e) {
    if (alive[e]) out.kept.push_back(e);
  }
  return out;
}

TEST(PeelTest, StarLosesItsCentre) {
  const Hypergraph h(2, {2, 4}, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}});
  const PeelResult p = Peel(h, 4);
  EXPECT_EQ(p.deleted, (std::vector<VertexRef>{{0, 0}}));
  EXPECT_EQ(p.deleted_degrees, (std::vector<int>{4}));
  EXPECT_EQ(p.kept_edges, (std::vector<int>{4}));
  EXPECT_EQ(p.residual.class_sizes(), h.class_sizes());
  EXPECT_EQ(p.residual.edges(), (std::vector<Edge>{{1, 0}}));
  EXPECT_EQ(p.isolated, (std::vector<VertexRef>{{1, 1}, {1, 2}, {1, 3}}));
}

TEST(PeelTest, TiesGoToLeastVertex) {
  // (0,0) and (1,1) both have degree 2.
  const Hypergraph h(2, {2, 2}, {{0, 0}, {0, 1}, {1, 1}});
  const PeelResult p = Peel(h, 2);
  EXPECT_EQ(p.deleted.front(), (VertexRef{0, 0}));
  EXPECT_EQ(p.kept_edges, (std::vector<int>{2}));
}

TEST(PeelTest, NothingToPeel) {
  const Hypergraph h(3, {1, 1, 1}, {{0, 0, 0}});
  const PeelResult p = Peel(h, 4);
  EXPECT_TRUE(p.deleted.empty());
  EXPECT_EQ(p.residual, h);
  EXPECT_TRUE(p.isolated.empty());
  EXPECT_THROW(Peel(h, 1), std::invalid_argument);
}

TEST(PeelTest, MatchesOracleOnRandomInstances) {
  std::mt19937 rng(31);
  for (int i = 0; i < 300; ++i) {
    const Hypergraph h = testing::RandomInstance(rng, Uniform(rng, 2, 6), 4, Uniform(rng, 1, 20));
    for (int threshold : {2, 3, 4}) {
      const PeelResult p = Peel(h, threshold);
      const OraclePeel o = PeelOracle(h, threshold);
      EXPECT_EQ(p.deleted, o.deleted);
      EXPECT_EQ(p.kept_edges, o.kept);
      EXPECT_EQ(p.residual.num_edges(), static_cast<int>(o.kept.size()));
      const DegreeProfile left = ComputeDegreeProfile(p.residual);
      EXPECT_LT(left.max_degree(), threshold);
      for (int d : p.deleted_degrees) EXPECT_GE(d, threshold);
    }
  }
}

TEST(BoundCurvesTest, FormulaValues) {
  CurveValues v = BoundCurves(0.0, 3);
  EXPECT_DOUBLE_EQ(v.b1, 10.0);
  EXPECT_DOUBLE_EQ(v.b2, 12.0);
  v = BoundCurves(1.0, 3);
  EXPECT_DOUBLE_EQ(v.b1, 9.0);
  EXPECT_DOUBLE_EQ(v.b2, 7.0);
  v = BoundCurves(2.0, 1);
  EXPECT_DOUBLE_EQ(v.b1, 8.0 / 3.0);
  EXPECT_DOUBLE_EQ(v.b2, 4.0 - 6.0 + 16.0 / 3.0);
  EXPECT_NO_THROW(BoundCurves(2.5, 2));
  EXPECT_THROW(BoundCurves(2.6, 2), std::domain_error);
  EXPECT_THROW(BoundCurves(-0.1, 2), std::domain_error);
  EXPECT_THROW(BoundCurves(1.0, 0), std::domain_error);
}

TEST(BoundCurvesTest, LowGamma) {
  EXPECT_DOUBLE_EQ(LowGammaBound(0.5, 10), 29.0);
  EXPECT_DOUBLE_EQ(LowGammaBound(1.0, 4), 6.0);
  EXPECT_THROW(LowGammaBound(1.5, 4), std::domain_error);
}

TEST(BoundCurvesTest, CurvesCrossAtClosedForm) {
  const double g = 1.0 + 1.0 / std::sqrt(2.0);
  const double value = 3.0 - 1.0 / std::sqrt(18.0);
  for (int r : {1, 5, 40}) {
    const CurveValues v = BoundCurves(g, r);
    EXPECT_NEAR(v.b1, value * r, 1e-9 * r);
    EXPECT_NEAR(v.b2, value * r, 1e-9 * r);
  }
}

TEST(BoundCurvesTest, BalanceMatchesGridOracle) {
  for (int r : {1, 2, 7}) {
    const CurveBalance b = BalanceCurves(r, 1.0, 2.01, 1e-4);
    const testing::GridMinimum o = testing::OracleCurveMinimum(r, 1.0, 2.01, 1e-4);
    EXPECT_NEAR(b.gamma, o.gamma, 1e-9);
    EXPECT_NEAR(b.value, o.value, 1e-9);
    EXPECT_NEAR(b.value / r, 3.0 - 1.0 / std::sqrt(18.0), 1e-4);
    EXPECT_NEAR(b.gamma, 1.0 + 1.0 / std::sqrt(2.0), 1e-3);
  }
  EXPECT_THROW(BalanceCurves(1, 1.0, 2.0, 0.0), std::domain_error);
}

TEST(DensityCheckTest, TriangleCounts) {
  const Hypergraph h = TruncatedProjectivePlane(2);
  const DensityReport d = DensityCheck(h);
  EXPECT_EQ(d.x1, 0);
  EXPECT_EQ(d.x2, 6);
  EXPECT_EQ(d.x3, 0);
  EXPECT_DOUBLE_EQ(d.alpha2, 6.0 / 9.0);
  ASSERT_EQ(d.edge_counts.size(), 4u);
  EXPECT_EQ(d.edge_counts[0], (std::array<int, 3>{0, 3, 0}));
  EXPECT_EQ(d.min_edge_slack, 0);
  EXPECT_EQ(d.aggregate_slack, 4 * (6 - 4 + 1) - 12);
  EXPECT_TRUE(d.degree_sum_holds);
  EXPECT_TRUE(d.AllHold());
}

TEST(DensityCheckTest, RejectsBadInput) {
  EXPECT_THROW(DensityCheck(Hypergraph(2, {2, 2}, {{0, 0}, {1, 1}})), std::invalid_argument);
  EXPECT_THROW(DensityCheck(TruncatedProjectivePlane(4)), std::invalid_argument);
}

TEST(DensityCheckTest, HoldsOnRandomDegreeThreeResiduals) {
  std::mt19937 rng(8);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const Hypergraph h = testing::RandomIntersecting(rng, Uniform(rng, 2, 7), 5, Uniform(rng, 1, 20));
    const Hypergraph h3 = Peel(h, 4).residual;
    const DensityReport d = DensityCheck(h3);
    EXPECT_TRUE(d.AllHold()) << Serialize(h3);
    EXPECT_EQ(d.x1 + 2 * d.x2 + 3 * d.x3, h3.num_edges() * h3.r());
    ++checked;
  }
  EXPECT_EQ(checked, 300);
}

TEST(AnalyzeTest, SingleEdge) {
  const PeelingReport rep = Analyze(Hypergraph(4, {1, 1, 1, 1}, {{0, 0, 0, 0}}));
  EXPECT_TRUE(rep.x4.empty());
  EXPECT_TRUE(rep.x3.empty());
  EXPECT_EQ(rep.h3_size(), 1);
  EXPECT_EQ(rep.h2_size(), 1);
  EXPECT_EQ(rep.gamma, Rational(1, 4));
  EXPECT_EQ(rep.assembled_cover.size, 1);
  EXPECT_TRUE(rep.AllHold());
}

TEST(AnalyzeTest, RejectsNonIntersecting) {
  EXPECT_THROW(Analyze(Hypergraph(2, {2, 2}, {{0, 0}, {1, 1}})), std::invalid_argument);
}

TEST(AnalyzeTest, ConstructionsAndPlanes) {
  for (int r = 3; r <= 6; ++r) {
    const PeelingReport rep = Analyze(ExtremalConstruction(r).hypergraph);
    EXPECT_TRUE(rep.AllHold()) << "r = " << r;
    EXPECT_GE(rep.assembled_cover.size, r - 1);
  }
  for (int q : {2, 3, 4, 5, 7}) {
    const PeelingReport rep = Analyze(TruncatedProjectivePlane(q));
    EXPECT_TRUE(rep.AllHold()) << "q = " << q;
    EXPECT_TRUE(rep.h3_cap_holds);
    EXPECT_TRUE(rep.h2_cap_holds);
  }
}

TEST(AnalyzeTest, PlaneOfOrderFive) {
  // Every vertex has degree 5; deleting class 0 vertex by vertex consumes
  // all 25 edges in five steps.
  const Hypergraph h = TruncatedProjectivePlane(5);
  const PeelingReport rep = Analyze(h);
  EXPECT_EQ(rep.x4, Peel(h, 4).deleted);
  EXPECT_EQ(rep.x4, (std::vector<VertexRef>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  EXPECT_EQ(rep.h3_size(), 0);
  EXPECT_EQ(rep.h2_size(), 0);
  EXPECT_EQ(rep.gamma, Rational(0));
  EXPECT_EQ(rep.edge_lower_bound, 20);
  EXPECT_EQ(rep.assembled_cover.size, 5);
  EXPECT_TRUE(rep.h3_cap_holds);
  EXPECT_TRUE(rep.h2_cap_holds);
  EXPECT_TRUE(rep.AllHold());
}

TEST(AnalyzeTest, InvariantsOnRandomIntersecting) {
  std::mt19937 rng(12);
  int peeled = 0;
  for (int i = 0; i < 500; ++i) {
    const int r = Uniform(rng, 2, 7);
    const Hypergraph h = testing::RandomIntersecting(rng, r, 5, Uniform(rng, 1, 24));
    const PeelingReport rep = Analyze(h);
    EXPECT_LE(rep.h3_size(), 2 * r + 1);
    EXPECT_LE(rep.h2_size(), r + 1);
    EXPECT_TRUE(rep.assembled_cover_verifies);
    EXPECT_TRUE(VerifyCover(h, rep.assembled_cover.vertices).covers);
    EXPECT_GE(rep.assembled_cover.size, CoverNumber(h).size);
    EXPECT_LE(rep.edge_lower_bound, h.num_edges());
    EXPECT_GE(3 * static_cast<int>(rep.x3.size()), rep.h3_size() - rep.h2_size());
    EXPECT_TRUE(rep.AllHold()) << Serialize(h);
    peeled += !rep.x4.empty() || !rep.x3.empty();
  }
  EXPECT_GE(peeled, 250);
}

}  // namespace
}  // namespace ryser
