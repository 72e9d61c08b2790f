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

#ifndef RYSER_HYPERGRAPH_H_
#define RYSER_HYPERGRAPH_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ryser {

// A vertex is addressed by its class and its 0-based index inside the class.
struct VertexRef {
  int class_index = 0;
  int local_index = 0;

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

std::string ToString(const VertexRef& v);

// One local index per class.
using Edge = std::vector<int>;

// An r-partite hypergraph: r vertex classes of declared sizes and a list of
// transversal edges. Instances are plain values; `Validate` reports invariant
// violations instead of the constructor rejecting them, so that malformed data
// can be inspected. Every other operation expects a valid instance.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int r, std::vector<int> class_sizes, std::vector<Edge> edges = {})
      : r_(r), class_sizes_(std::move(class_sizes)), edges_(std::move(edges)) {}

  int r() const { return r_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& class_sizes() const { return class_sizes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  // Total number of declared vertices, isolated ones included.
  int num_vertices() const;
  int min_class_size() const;

  // Global numbering: class offsets prefix-summed, so that the global order
  // coincides with the lexicographic (class, local) order.
  int GlobalId(const VertexRef& v) const;
  VertexRef VertexAt(int global_id) const;

  bool Contains(const VertexRef& v) const;
  bool EdgeContains(int e, const VertexRef& v) const {
    return edges_[e][v.class_index] == v.local_index;
  }

  void AddEdge(Edge e) { edges_.push_back(std::move(e)); }

  // Sub-hypergraph on the given edges (in the given order) with the same
  // vertex classes.
  Hypergraph Restrict(std::span<const int> edge_indices) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int r_ = 0;
  std::vector<int> class_sizes_;
  std::vector<Edge> edges_;
};

struct Violation {
  enum class Kind {
    kBadHeader,
    kBadClassSize,
    kWrongArity,
    kIndexOutOfBounds,
    kDuplicateEdge,
  };
  Kind kind;
  int edge = -1;         // offending edge, -1 if not edge related
  int class_index = -1;  // offending class, -1 if not class related
  std::string message;
};

// Empty iff every invariant of `h` holds.
std::vector<Violation> Validate(const Hypergraph& h);

struct IntersectionCheck {
  bool intersecting = true;
  // First disjoint pair in (i, j) lexicographic order, i < j.
  std::optional<std::pair<int, int>> disjoint_pair;
};

bool EdgesIntersect(const Edge& a, const Edge& b);
IntersectionCheck CheckIntersecting(const Hypergraph& h);
inline bool IsIntersecting(const Hypergraph& h) {
  return CheckIntersecting(h).intersecting;
}

struct DegreeProfile {
  // degrees[class][local].
  std::vector<std::vector<int>> degrees;
  // count_by_degree[d] = number of vertices of degree d; index 0 counts
  // isolated vertices. Size is max degree + 1.
  std::vector<int> count_by_degree;
  // per_edge_breakdown[e][d] = number of vertices of edge e having degree d,
  // for d in [0, max degree]; entry 0 is always zero.
  std::vector<std::vector<int>> per_edge_breakdown;

  int degree(const VertexRef& v) const {
    return degrees[v.class_index][v.local_index];
  }
  int max_degree() const {
    return static_cast<int>(count_by_degree.size()) - 1;
  }
  int64_t total_degree() const;
  // Degrees of one class, sorted in decreasing order.
  std::vector<int> ClassDegreesDescending(int class_index) const;
  // count_by_degree[d] / r^2.
  double Alpha(int d, int r) const;
};

DegreeProfile ComputeDegreeProfile(const Hypergraph& h);

// Text format:
//   r m
//   n_1 ... n_r
//   m lines of r local indices
// '#' lines and blank lines are ignored. Tokens may be separated by any run
// of spaces or tabs.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

Hypergraph Parse(std::string_view text);

// Canonical form: single spaces, LF line endings, no comments. Lines from
// `comments` are emitted first, each prefixed by "# ".
std::string Serialize(const Hypergraph& h,
                      std::span<const std::string> comments = {});

}  // namespace ryser

#endif  // RYSER_HYPERGRAPH_H_
