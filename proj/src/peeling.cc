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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ryser {

PeelResult Peel(const Hypergraph& h, int threshold) {
  if (threshold < 2) throw std::invalid_argument("peel threshold must be at least 2");
  const int r = h.r();
  std::vector<std::vector<int>> degree(r);
  for (int c = 0; c < r; ++c) degree[c].assign(h.class_sizes()[c], 0);
  for (const Edge& e : h.edges()) {
    for (int c = 0; c < r; ++c) ++degree[c][e[c]];
  }
  std::vector<char> alive(h.num_edges(), 1);

  PeelResult out;
  while (true) {
    VertexRef best{};
    int best_degree = -1;
    for (int c = 0; c < r; ++c) {
      for (int v = 0; v < h.class_sizes()[c]; ++v) {
        if (degree[c][v] > best_degree) {
          best_degree = degree[c][v];
          best = {c, v};
        }
      }
    }
    if (best_degree < threshold) break;

    out.deleted.push_back(best);
    out.deleted_degrees.push_back(best_degree);
    for (int e = 0; e < h.num_edges(); ++e) {
      if (!alive[e] || !h.EdgeContains(e, best)) continue;
      alive[e] = 0;
      for (int c = 0; c < r; ++c) {
        const int v = h.edge(e)[c];
        if (--degree[c][v] == 0 && !(VertexRef{c, v} == best)) out.isolated.push_back({c, v});
      }
    }
  }
  std::sort(out.isolated.begin(), out.isolated.end());

  for (int e = 0; e < h.num_edges(); ++e) {
    if (alive[e]) out.kept_edges.push_back(e);
  }
  out.residual = h.Restrict(out.kept_edges);
  return out;
}

CurveValues BoundCurves(double gamma, int r) {
  if (r < 1) throw std::domain_error("r must be positive");
  const double hi = 2.0 + 1.0 / r;
  if (!(gamma >= 0.0 && gamma <= hi)) {
    throw std::domain_error("gamma must lie in [0, 2 + 1/r]");
  }
  CurveValues out;
  out.b1 = (10.0 - gamma) / 3.0 * r;
  out.b2 = (4.0 - 3.0 * gamma + 4.0 / 3.0 * gamma * gamma) * r;
  return out;
}

double LowGammaBound(double gamma, int r) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::domain_error("gamma must lie in [0, 1]");
  return (4.0 - gamma) * r - 6.0;
}

CurveBalance BalanceCurves(int r, double lo, double hi, double step) {
  if (!(step > 0.0) || hi < lo) throw std::domain_error("bad balance grid");
  CurveBalance best{lo, INFINITY};
  const long steps = std::lround(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= steps; ++i) {
    const double gamma = lo + step * static_cast<double>(i);
    const CurveValues v = BoundCurves(gamma, r);
    const double value = std::max(v.b1, v.b2);
    if (value < best.value) best = {gamma, value};
  }
  return best;
}

DensityReport DensityCheck(const Hypergraph& h3) {
  if (!IsIntersecting(h3)) throw std::invalid_argument("density check requires an intersecting hypergraph");
  const DegreeProfile profile = ComputeDegreeProfile(h3);
  if (profile.max_degree() > 3) throw std::invalid_argument("density check requires max degree <= 3");

  DensityReport out;
  out.r = h3.r();
  out.num_edges = h3.num_edges();
  auto count = [&](int d) { return d <= profile.max_degree() ? profile.count_by_degree[d] : 0; };
  out.x1 = count(1);
  out.x2 = count(2);
  out.x3 = count(3);
  const double r2 = static_cast<double>(out.r) * out.r;
  out.alpha1 = out.x1 / r2;
  out.alpha2 = out.x2 / r2;
  out.alpha3 = out.x3 / r2;
  out.degree_sum_holds =
      static_cast<int64_t>(out.x1) + 2 * out.x2 + 3 * out.x3 == static_cast<int64_t>(out.num_edges) * out.r;

  out.min_edge_slack = 0;
  for (int e = 0; e < out.num_edges; ++e) {
    std::array<int, 3> c{0, 0, 0};
    for (int cls = 0; cls < out.r; ++cls) {
      const int d = profile.degrees[cls][h3.edge(e)[cls]];
      ++c[d - 1];
    }
    const int slack = c[1] + 2 * c[2] - (out.num_edges - 1);
    out.edge_counts.push_back(c);
    out.edge_slacks.push_back(slack);
    out.min_edge_slack = e == 0 ? slack : std::min(out.min_edge_slack, slack);
  }
  const int64_t m = out.num_edges;
  out.aggregate_slack = m * (2 * static_cast<int64_t>(out.r) - m + 1) -
                        (2 * static_cast<int64_t>(out.x1) + 2 * static_cast<int64_t>(out.x2));
  return out;
}

PeelingReport Analyze(const Hypergraph& h) {
  if (!IsIntersecting(h)) throw std::invalid_argument("peeling analysis requires an intersecting hypergraph");
  PeelingReport out;
  out.r = h.r();
  out.num_edges = h.num_edges();

  const PeelResult phase1 = Peel(h, 4);
  const PeelResult phase2 = Peel(phase1.residual, 3);
  out.x4 = phase1.deleted;
  out.x3 = phase2.deleted;
  out.h3 = phase1.residual;
  out.h2 = phase2.residual;
  out.h3_edges = phase1.kept_edges;
  for (int e : phase2.kept_edges) out.h2_edges.push_back(phase1.kept_edges[e]);

  out.gamma = Rational(out.h3.num_edges(), out.r);
  const int64_t r = out.r;
  out.h3_cap_holds = out.h3.num_edges() <= 2 * r + 1;
  out.h2_cap_holds = out.h2.num_edges() <= r + 1;
  out.x3_bound_holds =
      3 * static_cast<int64_t>(out.x3.size()) >= out.h3.num_edges() - out.h2.num_edges();
  out.edge_lower_bound = 4 * static_cast<int>(out.x4.size()) + out.h3.num_edges();

  const double gamma = boost::rational_cast<double>(out.gamma);
  if (gamma <= 2.0 + 1.0 / out.r) out.curves = BoundCurves(gamma, out.r);

  std::vector<VertexRef> cover = out.x4;
  cover.insert(cover.end(), out.x3.begin(), out.x3.end());
  const CoverCertificate pairs = GreedyPairCover(out.h2);
  cover.insert(cover.end(), pairs.vertices.begin(), pairs.vertices.end());
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  out.assembled_cover.size = static_cast<int>(cover.size());
  out.assembled_cover.vertices = std::move(cover);
  out.assembled_cover.optimal = false;
  out.assembled_cover_verifies = VerifyCover(h, out.assembled_cover.vertices).covers;

  out.density = DensityCheck(out.h3);
  return out;
}

}  // namespace ryser
