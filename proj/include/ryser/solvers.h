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

// Exact cover number and matching number of r-partite hypergraphs, together
// with the greedy pair cover and certificate checks.
//
// All witnesses are deterministic: ties are broken lexicographically by
// (class index, local index) for vertices and by index for edges.

#ifndef RYSER_SOLVERS_H_
#define RYSER_SOLVERS_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ryser/hypergraph.h"

namespace ryser {

struct CoverCertificate {
  std::vector<VertexRef> vertices;  // sorted, no duplicates
  int size = 0;
  bool optimal = false;

  friend bool operator==(const CoverCertificate&, const CoverCertificate&) = default;
};

struct MatchingCertificate {
  std::vector<int> edge_indices;  // sorted
  int size = 0;
  bool optimal = false;
};

// Raised when an exhaustive routine is called on an instance above its guard.
class InstanceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kBruteForceMaxVertices = 24;
inline constexpr int kEnumerateMaxVertices = 40;
inline constexpr int kEnumerateMaxTau = 6;

// Minimum cover. Among all minimum covers the witness is the least one as a
// sorted sequence of vertices. Branch-and-bound over the uncovered edges:
// branch on the vertices of the lowest-index uncovered edge, bound by a greedy
// packing of pairwise disjoint uncovered edges.
CoverCertificate CoverNumber(const Hypergraph& h);

// True iff some cover uses at most `budget` vertices.
bool HasCoverWithin(const Hypergraph& h, int budget);

// Exhaustive subset enumeration by increasing size. Throws InstanceTooLarge
// above kBruteForceMaxVertices vertices.
int CoverNumberBruteForce(const Hypergraph& h);

// Maximum matching; the witness is the least maximum matching as a sorted
// sequence of edge indices.
MatchingCertificate MatchingNumber(const Hypergraph& h);

// While two or more edges are uncovered, takes the least vertex shared by the
// two lowest-index uncovered edges; a single leftover edge contributes its
// least vertex. Throws std::invalid_argument if `h` is not intersecting.
CoverCertificate GreedyPairCover(const Hypergraph& h);

struct CoverCheck {
  bool covers = true;
  std::optional<int> first_uncovered;
};

// Throws std::out_of_range for a vertex outside `h`.
CoverCheck VerifyCover(const Hypergraph& h, std::span<const VertexRef> vertices);

// True iff the indexed edges exist and are pairwise disjoint.
bool VerifyMatching(const Hypergraph& h, std::span<const int> edge_indices);

// Every cover of size exactly tau(h), sorted lexicographically. Throws
// InstanceTooLarge when tau > kEnumerateMaxTau or the vertex count exceeds
// kEnumerateMaxVertices.
std::vector<CoverCertificate> EnumerateMinimumCovers(const Hypergraph& h);

}  // namespace ryser

#endif  // RYSER_SOLVERS_H_
