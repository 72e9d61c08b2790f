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

#include <algorithm>
#include <numeric>

#include "ryser/search.h"

namespace ryser {
namespace {

int CeilHalf(int x) { return x <= 0 ? 0 : (x + 1) / 2; }

// Vertices of class c sorted by decreasing degree, ties by local index.
std::vector<int> ByDegree(const std::vector<int>& degrees) {
  std::vector<int> order(degrees.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degrees[a] > degrees[b]; });
  return order;
}

}  // namespace

PruneVerdict PruneMaxDegree(const Hypergraph& partial, int total_edges) {
  const int budget = partial.r() - 2;
  const DegreeProfile profile = ComputeDegreeProfile(partial);
  for (int c = 0; c < partial.r(); ++c) {
    for (int v = 0; v < partial.class_sizes()[c]; ++v) {
      const int d = profile.degrees[c][v];
      if (d > 0 && 1 + CeilHalf(total_edges - d) <= budget) return {true, {{c, v}}};
    }
  }
  return {};
}

PruneVerdict PruneClassProfile(const Hypergraph& partial, int total_edges) {
  const int budget = partial.r() - 2;
  const DegreeProfile profile = ComputeDegreeProfile(partial);
  for (int c = 0; c < partial.r(); ++c) {
    const std::vector<int> order = ByDegree(profile.degrees[c]);
    int sum = 0;
    for (int k = 1; k <= static_cast<int>(order.size()); ++k) {
      const int d = profile.degrees[c][order[k - 1]];
      if (d == 0) break;
      sum += d;
      if (k >= 2 && k + CeilHalf(total_edges - sum) <= budget) {
        PruneVerdict verdict{true, {}};
        for (int i = 0; i < k; ++i) verdict.culprits.push_back({c, order[i]});
        std::sort(verdict.culprits.begin(), verdict.culprits.end());
        return verdict;
      }
    }
  }
  return {};
}

PruneVerdict PruneCoverBudget(const Hypergraph& partial, int total_edges) {
  const int budget = partial.r() - 2 - CeilHalf(total_edges - partial.num_edges());
  if (budget < 0 || !HasCoverWithin(partial, budget)) return {};
  return {true, CoverNumber(partial).vertices};
}

CoverCertificate ImpliedCover(const Hypergraph& complete, const PruneVerdict& verdict) {
  std::vector<int> missed;
  for (int e = 0; e < complete.num_edges(); ++e) {
    const bool hit = std::any_of(verdict.culprits.begin(), verdict.culprits.end(),
                                 [&](const VertexRef& v) { return complete.EdgeContains(e, v); });
    if (!hit) missed.push_back(e);
  }
  const CoverCertificate rest = GreedyPairCover(complete.Restrict(missed));
  std::vector<VertexRef> all = verdict.culprits;
  all.insert(all.end(), rest.vertices.begin(), rest.vertices.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  CoverCertificate cert;
  cert.size = static_cast<int>(all.size());
  cert.vertices = std::move(all);
  return cert;
}

}  // namespace ryser
