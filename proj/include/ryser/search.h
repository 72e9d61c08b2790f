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

// Exhaustive search for intersecting r-partite hypergraphs with m edges and
// cover number >= r - 1, plus the counting argument that rules such
// hypergraphs out without search.

#ifndef RYSER_SEARCH_H_
#define RYSER_SEARCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ryser/hypergraph.h"
#include "ryser/solvers.h"

namespace ryser {

// ---------------------------------------------------------------------------
// Canonical forms.
//
// Two hypergraphs are equivalent when one becomes the other by relabeling
// vertices inside each class and reordering edges (classes stay in place).
// The canonical form is the lexicographically least relabeled edge sequence
// over all edge orders compatible with an iterated color refinement of the
// edges; vertices are relabeled by first appearance.

struct CanonicalForm {
  std::string key;  // compact byte encoding; equal keys <=> equivalent
  Hypergraph representative;

  std::string ToText() const;
};

// Throws std::invalid_argument if any count exceeds kMaxCanonicalValue.
CanonicalForm Canonicalize(const Hypergraph& h);
Hypergraph DecodeCanonicalKey(const std::string& key);

inline constexpr int kMaxCanonicalValue = 250;

// ---------------------------------------------------------------------------
// Pruning rules. Each looks at a partial instance that will grow to
// `total_edges` intersecting edges and rejects it when some small vertex set
// plus greedy pairs on the remaining edges would cover the completion with at
// most r - 2 vertices. All rules are monotone: degrees and covers only grow
// as edges are added, so a rejected partial has no acceptable completion.

struct PruneVerdict {
  bool reject = false;
  // Vertices whose edges are covered before greedy pairs finish the job.
  std::vector<VertexRef> culprits;
};

// A vertex of degree d with 1 + ceil((total - d) / 2) <= r - 2.
PruneVerdict PruneMaxDegree(const Hypergraph& partial, int total_edges);

// k >= 2 vertices of one class (pairwise edge-disjoint) with degree sum s and
// k + ceil((total - s) / 2) <= r - 2. Only the k largest degrees of a class
// need checking.
PruneVerdict PruneClassProfile(const Hypergraph& partial, int total_edges);

// A cover of the partial instance of size t with t + ceil((total - m) / 2)
// <= r - 2.
PruneVerdict PruneCoverBudget(const Hypergraph& partial, int total_edges);

// culprits plus GreedyPairCover of the edges they miss. On a complete
// instance a rejecting verdict yields a cover of size <= r - 2.
CoverCertificate ImpliedCover(const Hypergraph& complete, const PruneVerdict& verdict);

// ---------------------------------------------------------------------------
// Counting argument.
//
// For a hypothetical intersecting r-partite hypergraph with m edges and
// cover number >= t, with x_i vertices of degree i:
//   sum i x_i = m r                     (degree sum)
//   sum C(i,2) x_i >= C(m,2)            (every pair of edges meets)
//   sum x_i >= r t                      (every class has >= t vertices)
//   per-class degree caps               (PruneMaxDegree / PruneClassProfile)
// Adding the second and third and subtracting the first gives
//   sum C(i-1,2) x_i >= C(m,2) + r t - m r.

struct CountingResult {
  bool feasible = false;
  int max_degree = 0;  // largest degree the max-degree rule allows
  // A feasible (x_1..x_D), index = degree, the first in lexicographic order
  // of (x_2..x_D); empty if infeasible.
  std::vector<int64_t> witness;
  // Coefficients C(i-1,2) of the combined inequality, index = degree.
  std::vector<int64_t> combination;
  int64_t required = 0;    // its right-hand side
  int64_t achievable = 0;  // its maximum under the per-class caps
  bool combination_violated = false;  // achievable < required

  std::string CombinationText() const;  // e.g. "x3 + 3x4"
};

inline constexpr int kCountingMaxR = 10;
inline constexpr int kCountingMaxEdges = 30;

// Throws std::invalid_argument outside 2 <= r <= kCountingMaxR,
// 1 <= m <= kCountingMaxEdges, 1 <= target_tau <= r.
CountingResult CountingFeasibility(int r, int m, int target_tau);

// ---------------------------------------------------------------------------
// Search.

struct SearchConfig {
  int r = 0;
  int m = 0;
  int max_class_size = 0;  // 0 means m
  double timeout_seconds = 0.0;  // 0 means unlimited
  bool prune_max_degree = true;
  bool prune_class_profile = true;
  bool prune_cover_budget = true;
  int shards = 1;
};

enum class SearchStatus { kSat, kUnsat, kTimeout };
std::string ToString(SearchStatus s);

struct SearchStats {
  int64_t candidates = 0;         // intersecting, non-duplicate extensions
  int64_t non_intersecting = 0;   // extensions missing an earlier edge
  int64_t unique_forms = 0;       // distinct canonical forms reached
  int64_t duplicates = 0;         // candidates whose form was already seen
  int64_t expanded = 0;           // forms expanded or checked at the last level
  int64_t pruned_max_degree = 0;
  int64_t pruned_class_profile = 0;
  int64_t pruned_cover_budget = 0;
  std::vector<int64_t> level_sizes;  // surviving forms per edge count
  double wall_seconds = 0.0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::kUnsat;
  std::optional<Hypergraph> witness;  // canonical representative when SAT
  SearchStats stats;
};

// Throws std::invalid_argument for an invalid config.
void ValidateSearchConfig(const SearchConfig& config);

// Grows instances one edge at a time, level by level. A new edge picks, in
// each class, an existing vertex or a fresh one (so class sizes never exceed
// m), must meet every earlier edge, and survives only if its canonical form
// is new and no enabled rule rejects it. At m edges the forms are checked in
// key order and the first with cover number >= r - 1 is returned. UNSAT is
// reported only after every level is exhausted.
SearchOutcome Search(const SearchConfig& config);

}  // namespace ryser

#endif  // RYSER_SEARCH_H_
