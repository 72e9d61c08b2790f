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

// Two-phase greedy peeling of an intersecting r-partite hypergraph and the
// edge-count bound curves built on top of it.
//
// Phase one repeatedly deletes a vertex of degree >= 4 with all its edges,
// leaving H3 (max degree <= 3). Phase two does the same with threshold 3 on
// H3, leaving H2 (max degree <= 2). Writing |E(H3)| = gamma * r, the deleted
// sets give the two lower bounds on the edge count
//
//   b1(gamma) = (10 - gamma) / 3 * r
//   b2(gamma) = (4 - 3 gamma + 4/3 gamma^2) * r
//
// (leading terms; lower-order corrections are dropped). max(b1, b2) is
// minimized at gamma = 1 + 1/sqrt(2) where both equal (3 - 1/sqrt(18)) r.

#ifndef RYSER_PEELING_H_
#define RYSER_PEELING_H_

#include <array>
#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

#include "ryser/hypergraph.h"
#include "ryser/solvers.h"

namespace ryser {

using Rational = boost::rational<int64_t>;

struct PeelResult {
  // Surviving edges on the original vertex classes, in original order.
  // Vertices stay addressable by their original VertexRef.
  Hypergraph residual;
  std::vector<int> kept_edges;  // original indices of the residual edges
  // Deleted vertices in deletion order, with their degree at deletion time.
  std::vector<VertexRef> deleted;
  std::vector<int> deleted_degrees;
  // Vertices that had positive degree and became isolated without being
  // picked, sorted.
  std::vector<VertexRef> isolated;
};

// Repeatedly deletes a vertex of maximum current degree (ties: least
// VertexRef) while that degree is >= threshold. Throws std::invalid_argument
// if threshold < 2.
PeelResult Peel(const Hypergraph& h, int threshold);

struct CurveValues {
  double b1 = 0.0;
  double b2 = 0.0;
};

// Throws std::domain_error unless 0 <= gamma <= 2 + 1/r and r >= 1.
CurveValues BoundCurves(double gamma, int r);

// (4 - gamma) r - 6, the bound for the gamma <= 1 branch. Throws
// std::domain_error unless 0 <= gamma <= 1.
double LowGammaBound(double gamma, int r);

struct CurveBalance {
  double gamma = 0.0;
  double value = 0.0;  // max(b1, b2) at gamma
};

// Grid minimization of max(b1, b2) over [lo, hi] with the given step.
CurveBalance BalanceCurves(int r, double lo, double hi, double step);

struct DensityReport {
  int r = 0;
  int num_edges = 0;
  // x[d] = number of vertices of degree d, d = 1..3.
  int x1 = 0;
  int x2 = 0;
  int x3 = 0;
  double alpha1 = 0.0;  // x_d / r^2
  double alpha2 = 0.0;
  double alpha3 = 0.0;
  // Per edge (c1, c2, c3): how many of its vertices have degree 1, 2, 3.
  std::vector<std::array<int, 3>> edge_counts;
  // c2 + 2 c3 - (|E| - 1) per edge; every edge must meet the |E| - 1 others.
  std::vector<int> edge_slacks;
  int min_edge_slack = 0;
  // |E| (2r - |E| + 1) - (2 x1 + 2 x2).
  int64_t aggregate_slack = 0;
  bool degree_sum_holds = false;  // x1 + 2 x2 + 3 x3 == |E| r

  bool AllHold() const {
    return degree_sum_holds && min_edge_slack >= 0 && aggregate_slack >= 0;
  }
};

// Throws std::invalid_argument unless `h3` is intersecting with max degree
// <= 3.
DensityReport DensityCheck(const Hypergraph& h3);

struct PeelingReport {
  int r = 0;
  int num_edges = 0;
  std::vector<VertexRef> x4;
  std::vector<VertexRef> x3;
  Hypergraph h3;
  Hypergraph h2;
  std::vector<int> h3_edges;  // original edge indices
  std::vector<int> h2_edges;
  Rational gamma;  // |E(H3)| / r
  CurveValues curves;
  CoverCertificate assembled_cover;  // X4 + X3 + greedy pairs on H2
  bool assembled_cover_verifies = false;
  // 4 |X4| + |E(H3)|, a lower bound on the edge count.
  int edge_lower_bound = 0;
  bool h3_cap_holds = false;  // |E(H3)| <= 2r + 1
  bool h2_cap_holds = false;  // |E(H2)| <= r + 1
  bool x3_bound_holds = false;  // 3 |X3| >= |E(H3)| - |E(H2)|
  DensityReport density;  // evaluated on H3

  int h3_size() const { return h3.num_edges(); }
  int h2_size() const { return h2.num_edges(); }
  bool AllHold() const {
    return assembled_cover_verifies && h3_cap_holds && h2_cap_holds && x3_bound_holds &&
           edge_lower_bound <= num_edges && density.AllHold();
  }
};

// Throws std::invalid_argument if `h` is not intersecting.
PeelingReport Analyze(const Hypergraph& h);

}  // namespace ryser

#endif  // RYSER_PEELING_H_
