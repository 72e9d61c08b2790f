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

// Random instance generators and slow reference oracles shared by the tests.
// The oracles deliberately avoid the library's solvers.

#ifndef RYSER_TESTS_TEST_UTIL_H_
#define RYSER_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ryser/hypergraph.h"

namespace ryser::testing {

inline int Uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Edge RandomEdge(std::mt19937& rng, const std::vector<int>& sizes) {
  Edge e(sizes.size());
  for (size_t c = 0; c < sizes.size(); ++c) e[c] = Uniform(rng, 0, sizes[c] - 1);
  return e;
}

// Up to m distinct random edges; not necessarily intersecting.
inline Hypergraph RandomInstance(std::mt19937& rng, int r, int max_class, int m) {
  std::vector<int> sizes(r);
  for (int& s : sizes) s = Uniform(rng, 1, max_class);
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (int tries = 0; static_cast<int>(edges.size()) < m && tries < 50 * m; ++tries) {
    Edge e = RandomEdge(rng, sizes);
    if (seen.insert(e).second) edges.push_back(std::move(e));
  }
  return Hypergraph(r, sizes, edges);
}

// Up to m distinct edges, each meeting all earlier ones.
inline Hypergraph RandomIntersecting(std::mt19937& rng, int r, int max_class, int m) {
  std::vector<int> sizes(r);
  for (int& s : sizes) s = Uniform(rng, 1, max_class);
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (int tries = 0; static_cast<int>(edges.size()) < m && tries < 200 * m; ++tries) {
    Edge e = RandomEdge(rng, sizes);
    if (seen.count(e)) continue;
    bool ok = true;
    for (const Edge& f : edges) {
      bool meet = false;
      for (int c = 0; c < r; ++c) meet = meet || e[c] == f[c];
      ok = ok && meet;
    }
    if (!ok) continue;
    seen.insert(e);
    edges.push_back(std::move(e));
  }
  return Hypergraph(r, sizes, edges);
}

// Same instance with every class permuted at random and edges shuffled.
inline Hypergraph RandomRelabel(std::mt19937& rng, const Hypergraph& h) {
  std::vector<std::vector<int>> perm(h.r());
  for (int c = 0; c < h.r(); ++c) {
    perm[c].resize(h.class_sizes()[c]);
    std::iota(perm[c].begin(), perm[c].end(), 0);
    std::shuffle(perm[c].begin(), perm[c].end(), rng);
  }
  std::vector<Edge> edges;
  for (Edge e : h.edges()) {
    for (int c = 0; c < h.r(); ++c) e[c] = perm[c][e[c]];
    edges.push_back(std::move(e));
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Hypergraph(h.r(), h.class_sizes(), edges);
}

// Every minimum cover as a sorted vertex list, in lexicographic order, by
// trying all vertex subsets in order of size. Vertices are (class, local).
inline std::vector<std::vector<VertexRef>> OracleMinimumCovers(const Hypergraph& h) {
  std::vector<VertexRef> all;
  for (int c = 0; c < h.r(); ++c) {
    for (int v = 0; v < h.class_sizes()[c]; ++v) all.push_back({c, v});
  }
  const int n = static_cast<int>(all.size());
  for (int k = 0; k <= n; ++k) {
    std::vector<std::vector<VertexRef>> found;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<VertexRef> set;
      for (int i = 0; i < n; ++i) {
        if (pick[i]) set.push_back(all[i]);
      }
      const bool covers = std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
        return std::any_of(set.begin(), set.end(),
                           [&](const VertexRef& v) { return e[v.class_index] == v.local_index; });
      });
      if (covers) found.push_back(std::move(set));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found.empty()) {
      std::sort(found.begin(), found.end());
      return found;
    }
  }
  return {};
}

inline int OracleTau(const Hypergraph& h) {
  const auto covers = OracleMinimumCovers(h);
  return covers.empty() ? 0 : static_cast<int>(covers.front().size());
}

// Maximum matching by trying all edge subsets.
inline int OracleNu(const Hypergraph& h) {
  const int m = h.num_edges();
  int best = 0;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      for (int j = i + 1; j < m && ok; ++j) {
        if (!((mask >> i) & 1) || !((mask >> j) & 1)) continue;
        for (int c = 0; c < h.r(); ++c) ok = ok && h.edge(i)[c] != h.edge(j)[c];
      }
    }
    if (ok) best = size;
  }
  return best;
}

// Equivalence under per-class relabeling and edge reordering, by trying every
// product of class permutations.
inline bool OracleEquivalent(const Hypergraph& a, const Hypergraph& b) {
  if (a.r() != b.r() || a.class_sizes() != b.class_sizes() || a.num_edges() != b.num_edges()) {
    return false;
  }
  const int r = a.r();
  std::multiset<Edge> target(b.edges().begin(), b.edges().end());
  std::vector<std::vector<int>> perm(r);
  for (int c = 0; c < r; ++c) {
    perm[c].resize(a.class_sizes()[c]);
    std::iota(perm[c].begin(), perm[c].end(), 0);
  }
  while (true) {
    std::multiset<Edge> mapped;
    for (Edge e : a.edges()) {
      for (int c = 0; c < r; ++c) e[c] = perm[c][e[c]];
      mapped.insert(std::move(e));
    }
    if (mapped == target) return true;
    int c = 0;
    while (c < r && !std::next_permutation(perm[c].begin(), perm[c].end())) ++c;
    if (c == r) return false;
  }
}

struct GridMinimum {
  double gamma;
  double value;
};

// max(b1, b2) minimized on a grid, straight from the curve formulas.
inline GridMinimum OracleCurveMinimum(double r, double lo, double hi, double step) {
  GridMinimum best{lo, 1e300};
  const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
  for (int i = 0; i <= n; ++i) {
    const double g = lo + i * step;
    const double b1 = (10.0 - g) / 3.0 * r;
    const double b2 = (4.0 - 3.0 * g + 4.0 * g * g / 3.0) * r;
    const double v = std::max(b1, b2);
    if (v < best.value) best = {g, v};
  }
  return best;
}

}  // namespace ryser::testing

#endif  // RYSER_TESTS_TEST_UTIL_H_
