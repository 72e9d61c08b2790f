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
#include <stdexcept>
#include <string>

#include "ryser/constructions.h"
#include "ryser/finite_field.h"

namespace ryser {
namespace {

std::vector<HomogeneousTriple> NormalizedTriples(int q) {
  std::vector<HomogeneousTriple> out;
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      for (int z = 0; z < q; ++z) {
        const int lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

int Dot(const FiniteField& f, const HomogeneousTriple& a, const HomogeneousTriple& b) {
  return f.Add(f.Add(f.Mul(a[0], b[0]), f.Mul(a[1], b[1])), f.Mul(a[2], b[2]));
}

void SelfCheck(const ProjectivePlane& plane) {
  const int q = plane.q;
  const size_t n = static_cast<size_t>(q) * q + q + 1;
  auto fail = [&](const std::string& what) {
    throw std::logic_error("PG(2," + std::to_string(q) + ") self-check: " + what);
  };
  if (plane.points.size() != n || plane.lines.size() != n) fail("wrong point/line count");
  for (const auto& pts : plane.points_on_line) {
    if (static_cast<int>(pts.size()) != q + 1) fail("line with wrong point count");
  }
  for (const auto& lns : plane.lines_through_point) {
    if (static_cast<int>(lns.size()) != q + 1) fail("point on wrong number of lines");
  }
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      const auto& pa = plane.points_on_line[a];
      const auto& pb = plane.points_on_line[b];
      std::vector<int> common;
      std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                            std::back_inserter(common));
      if (common.size() != 1) fail("two lines not meeting in exactly one point");
    }
  }
}

}  // namespace

ProjectivePlane BuildProjectivePlane(int q) {
  const FiniteField field = FiniteField::OfOrder(q);
  if (!field.CheckAxioms()) throw std::logic_error("field axioms fail for q = " + std::to_string(q));

  ProjectivePlane plane;
  plane.q = q;
  plane.points = NormalizedTriples(q);
  plane.lines = plane.points;
  plane.points_on_line.resize(plane.lines.size());
  plane.lines_through_point.resize(plane.points.size());
  for (int l = 0; l < static_cast<int>(plane.lines.size()); ++l) {
    for (int p = 0; p < static_cast<int>(plane.points.size()); ++p) {
      if (Dot(field, plane.lines[l], plane.points[p]) == 0) {
        plane.points_on_line[l].push_back(p);
        plane.lines_through_point[p].push_back(l);
      }
    }
  }
  SelfCheck(plane);
  return plane;
}

int Meet(const ProjectivePlane& plane, int line_a, int line_b) {
  const auto& pa = plane.points_on_line.at(line_a);
  const auto& pb = plane.points_on_line.at(line_b);
  std::vector<int> common;
  std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(common));
  if (common.size() != 1) throw std::logic_error("lines do not meet in a single point");
  return common[0];
}

Hypergraph TruncatedProjectivePlane(int q) {
  const ProjectivePlane plane = BuildProjectivePlane(q);
  const HomogeneousTriple kDeleted = {1, 0, 0};
  const int deleted = static_cast<int>(
      std::find(plane.points.begin(), plane.points.end(), kDeleted) - plane.points.begin());

  const std::vector<int>& class_lines = plane.lines_through_point[deleted];
  std::vector<std::vector<int>> class_points;
  for (int l : class_lines) {
    std::vector<int> pts;
    for (int p : plane.points_on_line[l]) {
      if (p != deleted) pts.push_back(p);
    }
    class_points.push_back(std::move(pts));
  }

  const int r = q + 1;
  Hypergraph h(r, std::vector<int>(r, q));
  for (int l = 0; l < static_cast<int>(plane.lines.size()); ++l) {
    if (std::binary_search(class_lines.begin(), class_lines.end(), l)) continue;
    Edge e(r);
    for (int c = 0; c < r; ++c) {
      const int p = Meet(plane, l, class_lines[c]);
      const auto& pts = class_points[c];
      auto it = std::lower_bound(pts.begin(), pts.end(), p);
      if (it == pts.end() || *it != p) {
        throw std::logic_error("truncated plane: edge meets a class at the deleted point");
      }
      e[c] = static_cast<int>(it - pts.begin());
    }
    h.AddEdge(std::move(e));
  }
  if (h.num_edges() != q * q) throw std::logic_error("truncated plane: wrong edge count");
  return h;
}

}  // namespace ryser
