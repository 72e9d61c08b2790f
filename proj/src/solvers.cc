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

#include "ryser/solvers.h"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "ryser/bitset.h"

namespace ryser {
namespace {

// Incidence structure over the global vertex numbering, shared by the cover
// routines below.
class CoverSearch {
 public:
  explicit CoverSearch(const Hypergraph& h)
      : h_(h),
        num_edges_(h.num_edges()),
        num_vertices_(h.num_vertices()),
        edge_vertices_(num_edges_),
        vertex_edges_(num_vertices_, Bitset(num_edges_)),
        conflicts_(num_edges_, Bitset(num_edges_)),
        memo_(num_edges_ <= 64 ? num_vertices_ + 1 : 0) {
    std::vector<int> offsets(h.r(), 0);
    for (int c = 1; c < h.r(); ++c) offsets[c] = offsets[c - 1] + h.class_sizes()[c - 1];
    for (int e = 0; e < num_edges_; ++e) {
      for (int c = 0; c < h.r(); ++c) {
        const int v = offsets[c] + h.edge(e)[c];
        edge_vertices_[e].push_back(v);
        vertex_edges_[v].Set(e);
      }
    }
    for (int e = 0; e < num_edges_; ++e) {
      for (int v : edge_vertices_[e]) conflicts_[e] |= vertex_edges_[v];
    }
  }

  Bitset AllEdges() const { return Bitset::Full(num_edges_); }

  // Size of a greedy packing of pairwise disjoint edges from `edges`; -1 if
  // one of them has no vertex with global id >= min_vertex.
  int PackingBound(const Bitset& edges, int min_vertex) const {
    Bitset avail = edges;
    int count = 0;
    for (int e = edges.First(); e >= 0; e = edges.Next(e)) {
      if (edge_vertices_[e].back() < min_vertex) return -1;
    }
    for (int e = avail.First(); e >= 0; e = avail.First()) {
      ++count;
      avail.Subtract(conflicts_[e]);
    }
    return count;
  }

  // True iff `uncovered` can be covered by at most `budget` vertices with
  // global id >= min_vertex.
  bool Coverable(const Bitset& uncovered, int budget, int min_vertex) {
    if (uncovered.Empty()) return true;
    if (budget <= 0) return false;
    const int bound = PackingBound(uncovered, min_vertex);
    if (bound < 0 || bound > budget) return false;

    std::unordered_map<uint64_t, int>* memo = nullptr;
    if (!memo_.empty()) {
      memo = &memo_[min_vertex];
      auto it = memo->find(uncovered.Word0());
      if (it != memo->end() && it->second >= budget) return false;
    }

    const int e = uncovered.First();
    for (int v : edge_vertices_[e]) {
      if (v < min_vertex) continue;
      Bitset rest = uncovered;
      rest.Subtract(vertex_edges_[v]);
      if (Coverable(rest, budget - 1, min_vertex)) return true;
    }
    if (memo) {
      int& known = (*memo)[uncovered.Word0()];
      known = std::max(known, budget);
    }
    return false;
  }

  int Tau() {
    const Bitset all = AllEdges();
    for (int k = std::max(0, PackingBound(all, 0));; ++k) {
      if (Coverable(all, k, 0)) return k;
    }
  }

  // Least cover of size `tau` as a sorted sequence of global ids.
  std::vector<int> LeastCover(int tau) {
    std::vector<int> chosen;
    Bitset remaining = AllEdges();
    int min_vertex = 0;
    for (int slot = 0; slot < tau; ++slot) {
      bool found = false;
      for (int v = min_vertex; v < num_vertices_ && !found; ++v) {
        if (!vertex_edges_[v].Intersects(remaining)) continue;
        Bitset rest = remaining;
        rest.Subtract(vertex_edges_[v]);
        if (Coverable(rest, tau - slot - 1, v + 1)) {
          chosen.push_back(v);
          remaining = rest;
          min_vertex = v + 1;
          found = true;
        }
      }
      if (!found) throw std::logic_error("cover search lost its witness");
    }
    return chosen;
  }

  void EnumerateCovers(const Bitset& uncovered, int budget, std::vector<int>& chosen,
                       std::set<std::vector<int>>& out) const {
    if (uncovered.Empty()) {
      std::vector<int> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      out.insert(std::move(sorted));
      return;
    }
    if (budget == 0) return;
    const int bound = PackingBound(uncovered, 0);
    if (bound > budget) return;
    const int e = uncovered.First();
    for (int v : edge_vertices_[e]) {
      Bitset rest = uncovered;
      rest.Subtract(vertex_edges_[v]);
      chosen.push_back(v);
      EnumerateCovers(rest, budget - 1, chosen, out);
      chosen.pop_back();
    }
  }

  std::vector<VertexRef> ToRefs(const std::vector<int>& ids) const {
    std::vector<VertexRef> out;
    out.reserve(ids.size());
    for (int v : ids) out.push_back(h_.VertexAt(v));
    return out;
  }

 private:
  const Hypergraph& h_;
  int num_edges_;
  int num_vertices_;
  std::vector<std::vector<int>> edge_vertices_;
  std::vector<Bitset> vertex_edges_;
  std::vector<Bitset> conflicts_;
  // memo_[min_vertex][edge mask] = largest budget proven insufficient.
  std::vector<std::unordered_map<uint64_t, int>> memo_;
};

CoverCertificate MakeCover(std::vector<VertexRef> vertices, bool optimal) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  CoverCertificate cert;
  cert.size = static_cast<int>(vertices.size());
  cert.vertices = std::move(vertices);
  cert.optimal = optimal;
  return cert;
}

class MatchingSearch {
 public:
  explicit MatchingSearch(const Hypergraph& h)
      : h_(h), m_(h.num_edges()), conflicts_(m_, Bitset(m_)) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < m_; ++j) {
        if (EdgesIntersect(h.edge(i), h.edge(j))) conflicts_[i].Set(j);
      }
    }
  }

  std::vector<int> Solve() {
    std::vector<int> chosen;
    Search(Bitset::Full(m_), chosen);
    return best_;
  }

 private:
  // Matching edges use distinct vertices in every class, so the number of
  // distinct vertices any class offers bounds the remaining matching.
  int UpperBound(const Bitset& candidates) const {
    int bound = candidates.Count();
    for (int c = 0; c < h_.r() && bound > 0; ++c) {
      std::vector<char> seen(h_.class_sizes()[c], 0);
      int distinct = 0;
      for (int e = candidates.First(); e >= 0; e = candidates.Next(e)) {
        char& s = seen[h_.edge(e)[c]];
        if (!s) {
          s = 1;
          ++distinct;
        }
      }
      bound = std::min(bound, distinct);
    }
    return bound;
  }

  void Search(Bitset candidates, std::vector<int>& chosen) {
    const int e = candidates.First();
    if (e < 0) {
      if (chosen.size() > best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + UpperBound(candidates) <= best_.size()) return;
    Bitset with = candidates;
    with.Subtract(conflicts_[e]);
    chosen.push_back(e);
    Search(with, chosen);
    chosen.pop_back();
    candidates.Reset(e);
    Search(candidates, chosen);
  }

  const Hypergraph& h_;
  int m_;
  std::vector<Bitset> conflicts_;
  std::vector<int> best_;
};

}  // namespace

CoverCertificate CoverNumber(const Hypergraph& h) {
  if (h.num_edges() == 0) return MakeCover({}, true);
  CoverSearch search(h);
  const int tau = search.Tau();
  return MakeCover(search.ToRefs(search.LeastCover(tau)), true);
}

bool HasCoverWithin(const Hypergraph& h, int budget) {
  if (h.num_edges() == 0) return budget >= 0;
  CoverSearch search(h);
  return search.Coverable(search.AllEdges(), budget, 0);
}

int CoverNumberBruteForce(const Hypergraph& h) {
  const int n = h.num_vertices();
  if (n > kBruteForceMaxVertices) {
    throw InstanceTooLarge("brute-force cover oracle limited to " +
                           std::to_string(kBruteForceMaxVertices) + " vertices, got " +
                           std::to_string(n));
  }
  if (h.num_edges() == 0) return 0;
  std::vector<VertexRef> all;
  for (int c = 0; c < h.r(); ++c) {
    for (int v = 0; v < h.class_sizes()[c]; ++v) all.push_back({c, v});
  }
  // Iterate k-subsets via a selection mask permuted in lexicographic order.
  for (int k = 1; k <= n; ++k) {
    std::vector<char> pick(n, 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
      bool covers_all = true;
      for (const Edge& e : h.edges()) {
        bool hit = false;
        for (int i = 0; i < n && !hit; ++i) {
          hit = pick[i] && e[all[i].class_index] == all[i].local_index;
        }
        if (!hit) {
          covers_all = false;
          break;
        }
      }
      if (covers_all) return k;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return n;
}

MatchingCertificate MatchingNumber(const Hypergraph& h) {
  MatchingCertificate cert;
  cert.edge_indices = MatchingSearch(h).Solve();
  cert.size = static_cast<int>(cert.edge_indices.size());
  cert.optimal = true;
  return cert;
}

CoverCertificate GreedyPairCover(const Hypergraph& h) {
  if (!IsIntersecting(h)) {
    throw std::invalid_argument("greedy pair cover requires an intersecting hypergraph");
  }
  std::vector<char> covered(h.num_edges(), 0);
  std::vector<VertexRef> picked;
  auto take = [&](VertexRef v) {
    picked.push_back(v);
    for (int e = 0; e < h.num_edges(); ++e) {
      if (h.EdgeContains(e, v)) covered[e] = 1;
    }
  };
  while (true) {
    int first = -1;
    int second = -1;
    for (int e = 0; e < h.num_edges() && second < 0; ++e) {
      if (covered[e]) continue;
      (first < 0 ? first : second) = e;
    }
    if (first < 0) break;
    if (second < 0) {
      take({0, h.edge(first)[0]});
      break;
    }
    for (int c = 0; c < h.r(); ++c) {
      if (h.edge(first)[c] == h.edge(second)[c]) {
        take({c, h.edge(first)[c]});
        break;
      }
    }
  }
  return MakeCover(std::move(picked), false);
}

CoverCheck VerifyCover(const Hypergraph& h, std::span<const VertexRef> vertices) {
  for (const VertexRef& v : vertices) {
    if (!h.Contains(v)) throw std::out_of_range("vertex " + ToString(v) + " not in hypergraph");
  }
  for (int e = 0; e < h.num_edges(); ++e) {
    const bool hit = std::any_of(vertices.begin(), vertices.end(),
                                 [&](const VertexRef& v) { return h.EdgeContains(e, v); });
    if (!hit) return {false, e};
  }
  return {};
}

bool VerifyMatching(const Hypergraph& h, std::span<const int> edge_indices) {
  for (size_t i = 0; i < edge_indices.size(); ++i) {
    if (edge_indices[i] < 0 || edge_indices[i] >= h.num_edges()) return false;
    for (size_t j = 0; j < i; ++j) {
      if (edge_indices[i] == edge_indices[j]) return false;
      if (EdgesIntersect(h.edge(edge_indices[i]), h.edge(edge_indices[j]))) return false;
    }
  }
  return true;
}

std::vector<CoverCertificate> EnumerateMinimumCovers(const Hypergraph& h) {
  if (h.num_vertices() > kEnumerateMaxVertices) {
    throw InstanceTooLarge("cover enumeration limited to " +
                           std::to_string(kEnumerateMaxVertices) + " vertices");
  }
  if (h.num_edges() == 0) return {MakeCover({}, true)};
  CoverSearch search(h);
  const int tau = search.Tau();
  if (tau > kEnumerateMaxTau) {
    throw InstanceTooLarge("cover enumeration limited to tau <= " +
                           std::to_string(kEnumerateMaxTau));
  }
  std::set<std::vector<int>> found;
  std::vector<int> chosen;
  search.EnumerateCovers(search.AllEdges(), tau, chosen, found);
  std::vector<CoverCertificate> out;
  out.reserve(found.size());
  for (const auto& ids : found) out.push_back(MakeCover(search.ToRefs(ids), true));
  return out;
}

}  // namespace ryser
