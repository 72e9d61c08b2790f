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

#include "ryser/hypergraph.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ryser {

std::string ToString(const VertexRef& v) {
  return "(" + std::to_string(v.class_index) + "," +
         std::to_string(v.local_index) + ")";
}

int Hypergraph::num_vertices() const {
  return std::accumulate(class_sizes_.begin(), class_sizes_.end(), 0);
}

int Hypergraph::min_class_size() const {
  if (class_sizes_.empty()) return 0;
  return *std::min_element(class_sizes_.begin(), class_sizes_.end());
}

int Hypergraph::GlobalId(const VertexRef& v) const {
  int offset = 0;
  for (int c = 0; c < v.class_index; ++c) offset += class_sizes_[c];
  return offset + v.local_index;
}

VertexRef Hypergraph::VertexAt(int global_id) const {
  int c = 0;
  while (c < r_ && global_id >= class_sizes_[c]) {
    global_id -= class_sizes_[c];
    ++c;
  }
  if (c == r_) throw std::out_of_range("global vertex id out of range");
  return {c, global_id};
}

bool Hypergraph::Contains(const VertexRef& v) const {
  return v.class_index >= 0 && v.class_index < r_ && v.local_index >= 0 &&
         v.local_index < class_sizes_[v.class_index];
}

Hypergraph Hypergraph::Restrict(std::span<const int> edge_indices) const {
  std::vector<Edge> kept;
  kept.reserve(edge_indices.size());
  for (int e : edge_indices) kept.push_back(edges_.at(e));
  return Hypergraph(r_, class_sizes_, std::move(kept));
}

std::vector<Violation> Validate(const Hypergraph& h) {
  std::vector<Violation> out;
  using Kind = Violation::Kind;
  if (h.r() < 1 || static_cast<int>(h.class_sizes().size()) != h.r()) {
    out.push_back({Kind::kBadHeader, -1, -1,
                   "r must be positive and match the number of class sizes"});
    return out;
  }
  for (int c = 0; c < h.r(); ++c) {
    if (h.class_sizes()[c] < 1) {
      out.push_back({Kind::kBadClassSize, -1, c,
                     "class " + std::to_string(c) + " has non-positive size"});
    }
  }
  std::set<Edge> seen;
  for (int e = 0; e < h.num_edges(); ++e) {
    const Edge& edge = h.edge(e);
    if (static_cast<int>(edge.size()) != h.r()) {
      out.push_back({Kind::kWrongArity, e, -1,
                     "edge " + std::to_string(e) + " has " +
                         std::to_string(edge.size()) + " entries, expected " +
                         std::to_string(h.r())});
      continue;
    }
    bool in_bounds = true;
    for (int c = 0; c < h.r(); ++c) {
      if (edge[c] < 0 || edge[c] >= h.class_sizes()[c]) {
        in_bounds = false;
        out.push_back({Kind::kIndexOutOfBounds, e, c,
                       "edge " + std::to_string(e) + " class " +
                           std::to_string(c) + " index " +
                           std::to_string(edge[c]) + " out of bounds"});
      }
    }
    if (in_bounds && !seen.insert(edge).second) {
      out.push_back({Kind::kDuplicateEdge, e, -1,
                     "edge " + std::to_string(e) + " duplicates an earlier edge"});
    }
  }
  return out;
}

bool EdgesIntersect(const Edge& a, const Edge& b) {
  for (size_t c = 0; c < a.size(); ++c) {
    if (a[c] == b[c]) return true;
  }
  return false;
}

IntersectionCheck CheckIntersecting(const Hypergraph& h) {
  for (int i = 0; i < h.num_edges(); ++i) {
    for (int j = i + 1; j < h.num_edges(); ++j) {
      if (!EdgesIntersect(h.edge(i), h.edge(j))) {
        return {false, std::make_pair(i, j)};
      }
    }
  }
  return {};
}

int64_t DegreeProfile::total_degree() const {
  int64_t total = 0;
  for (const auto& cls : degrees) {
    for (int d : cls) total += d;
  }
  return total;
}

std::vector<int> DegreeProfile::ClassDegreesDescending(int class_index) const {
  std::vector<int> out = degrees[class_index];
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double DegreeProfile::Alpha(int d, int r) const {
  if (d < 0 || d > max_degree()) return 0.0;
  return static_cast<double>(count_by_degree[d]) / (static_cast<double>(r) * r);
}

DegreeProfile ComputeDegreeProfile(const Hypergraph& h) {
  DegreeProfile p;
  p.degrees.resize(h.r());
  for (int c = 0; c < h.r(); ++c) p.degrees[c].assign(h.class_sizes()[c], 0);
  for (const Edge& e : h.edges()) {
    for (int c = 0; c < h.r(); ++c) ++p.degrees[c][e[c]];
  }
  int max_degree = 0;
  for (const auto& cls : p.degrees) {
    for (int d : cls) max_degree = std::max(max_degree, d);
  }
  p.count_by_degree.assign(max_degree + 1, 0);
  for (const auto& cls : p.degrees) {
    for (int d : cls) ++p.count_by_degree[d];
  }
  p.per_edge_breakdown.reserve(h.num_edges());
  for (const Edge& e : h.edges()) {
    std::vector<int> row(max_degree + 1, 0);
    for (int c = 0; c < h.r(); ++c) ++row[p.degrees[c][e[c]]];
    p.per_edge_breakdown.push_back(std::move(row));
  }
  return p;
}

}  // namespace ryser
