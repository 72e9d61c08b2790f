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

// Explicit sparse intersecting constructions and the truncated projective
// plane family.
//
// Named vertices map to (class, local index) by their position in the class
// listing:
//
//   r=3   V1={a_1,a_2}  V2={b_1,b_2}  V3={c_1,c_2}
//   r=4   V1={a_1,a_2,a_3} ... V4={d_1,d_2,d_3}
//   r=5   integer names 1..20; name n -> ((n-1) / 4, (n-1) % 4)
//   r=6   V1={a_1,a_3,a_4,a_6,a_8}      V2={b_1,b_2,b_4,b_8,b_12}
//         V3={c_1,c_2,c_4,c_7,c_11}     V4={d_1,d_2,d_3,d_9,d_11}
//         V5={e_1,e_2,e_3,e_5,e_7}      V6={f_1,f_2,f_3,f_5,f_7}
//
// so e.g. b_8 in the r=6 instance is (1, 3).

#ifndef RYSER_CONSTRUCTIONS_H_
#define RYSER_CONSTRUCTIONS_H_

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ryser/hypergraph.h"

namespace ryser {

using NameTable = std::map<std::string, VertexRef, std::less<>>;

// Throws std::out_of_range for an unknown name.
VertexRef LookupName(const NameTable& names, std::string_view name);
std::vector<VertexRef> LookupNames(const NameTable& names,
                                   const std::vector<std::string>& list);
// Empty string if `v` has no name.
std::string NameOf(const NameTable& names, const VertexRef& v);

struct NamedHypergraph {
  Hypergraph hypergraph;
  NameTable names;
};

// The explicit extremal constructions for r in {3,4,5,6}: 3, 6, 9 and 15
// edges. Throws std::invalid_argument for any other r.
NamedHypergraph ExtremalConstruction(int r);

// The first six ("cyclic") edges of the r = 6 construction, on the full r = 6
// vertex classes.
NamedHypergraph CyclicSixEdges();

using HomogeneousTriple = std::array<int, 3>;

// Projective plane PG(2, q). Points and lines are normalized homogeneous
// triples (first nonzero coordinate 1) listed in increasing lexicographic
// order; a point lies on a line iff their dot product vanishes.
struct ProjectivePlane {
  int q = 0;
  std::vector<HomogeneousTriple> points;
  std::vector<HomogeneousTriple> lines;
  std::vector<std::vector<int>> points_on_line;  // ascending point indices
  std::vector<std::vector<int>> lines_through_point;
};

// Throws std::invalid_argument for unsupported q and std::logic_error if the
// incidence self-check fails.
ProjectivePlane BuildProjectivePlane(int q);

// Index of the point where two distinct lines meet.
int Meet(const ProjectivePlane& plane, int line_a, int line_b);

// Truncated plane: delete the point (1,0,0). The q + 1 lines through it, in
// line order, become the vertex classes (their remaining points in point
// order); the other q^2 lines, in line order, become the edges.
Hypergraph TruncatedProjectivePlane(int q);

}  // namespace ryser

#endif  // RYSER_CONSTRUCTIONS_H_
