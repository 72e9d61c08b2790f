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
#include <set>
#include <sstream>
#include <stdexcept>

#include "ryser/search.h"

namespace ryser {
namespace {

int64_t Choose2(int64_t n) { return n * (n - 1) / 2; }
int CeilHalf(int x) { return x <= 0 ? 0 : (x + 1) / 2; }

// Counts of vertices of degree 2..D in one class (index 0 is degree 2).
using Profile = std::vector<int>;

// Does some set of k >= 1 vertices of the class force a cover with fewer than
// target_tau vertices? Degree-1 vertices are ignored; dropping them only
// relaxes the constraint.
bool Fires(const Profile& y, int m, int target_tau) {
  int k = 0;
  int sum = 0;
  for (int i = static_cast<int>(y.size()) - 1; i >= 0; --i) {
    for (int j = 0; j < y[i]; ++j) {
      ++k;
      sum += i + 2;
      if (k + CeilHalf(m - sum) <= target_tau - 1) return true;
    }
  }
  return false;
}

// All profiles of a class whose vertices are pairwise edge-disjoint (total
// degree <= m) and that no rule rejects.
void ClassProfiles(int max_degree, int m, int target_tau, Profile& y, int degree,
                   int used, std::vector<Profile>& out) {
  if (degree > max_degree) {
    if (!Fires(y, m, target_tau)) out.push_back(y);
    return;
  }
  for (int count = 0; used + count * degree <= m; ++count) {
    y[degree - 2] = count;
    ClassProfiles(max_degree, m, target_tau, y, degree + 1, used + count * degree, out);
  }
  y[degree - 2] = 0;
}

}  // namespace

std::string CountingResult::CombinationText() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < combination.size(); ++i) {
    if (combination[i] == 0) continue;
    if (!first) out << " + ";
    if (combination[i] != 1) out << combination[i];
    out << 'x' << i;
    first = false;
  }
  return first ? "0" : out.str();
}

CountingResult CountingFeasibility(int r, int m, int target_tau) {
  if (r < 2 || r > kCountingMaxR || m < 1 || m > kCountingMaxEdges || target_tau < 1 ||
      target_tau > r) {
    throw std::invalid_argument("counting feasibility supports 2 <= r <= " +
                                std::to_string(kCountingMaxR) + ", 1 <= m <= " +
                                std::to_string(kCountingMaxEdges) + ", 1 <= tau <= r");
  }
  CountingResult out;

  // Largest degree that a single vertex may have.
  int max_degree = 0;
  for (int d = 1; d <= m; ++d) {
    if (1 + CeilHalf(m - d) > target_tau - 1) max_degree = d;
  }
  out.max_degree = max_degree;
  out.combination.assign(max_degree + 1, 0);
  for (int i = 1; i <= max_degree; ++i) out.combination[i] = Choose2(i - 1);
  out.required = Choose2(m) + static_cast<int64_t>(r) * target_tau - static_cast<int64_t>(m) * r;

  // Aggregate the per-class profiles over all r classes.
  std::set<Profile> totals;
  if (max_degree >= 2) {
    std::vector<Profile> per_class;
    Profile y(max_degree - 1, 0);
    ClassProfiles(max_degree, m, target_tau, y, 2, 0, per_class);
    totals.insert(Profile(max_degree - 1, 0));
    for (int c = 0; c < r; ++c) {
      std::set<Profile> next;
      for (const Profile& t : totals) {
        for (const Profile& p : per_class) {
          Profile s = t;
          for (size_t i = 0; i < s.size(); ++i) s[i] += p[i];
          next.insert(std::move(s));
        }
      }
      totals = std::move(next);
    }
  } else {
    totals.insert(Profile{});
  }

  out.achievable = 0;
  for (const Profile& x : totals) {
    int64_t value = 0;
    for (size_t i = 0; i < x.size(); ++i) value += out.combination[i + 2] * x[i];
    out.achievable = std::max(out.achievable, value);
  }
  out.combination_violated = out.achievable < out.required;
  if (max_degree == 0) return out;  // no vertex may have positive degree

  // Exhaustive check of (x_2..x_D) against the three counting constraints.
  const int64_t degree_total = static_cast<int64_t>(m) * r;
  for (const Profile& x : totals) {
    int64_t weighted = 0;
    int64_t pairs = 0;
    int64_t vertices = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      const int64_t d = static_cast<int64_t>(i) + 2;
      weighted += d * x[i];
      pairs += Choose2(d) * x[i];
      vertices += x[i];
    }
    const int64_t x1 = degree_total - weighted;
    if (x1 < 0) continue;
    vertices += x1;
    if (pairs < Choose2(m) || vertices < static_cast<int64_t>(r) * target_tau) continue;
    out.feasible = true;
    out.witness.assign(max_degree + 1, 0);
    if (max_degree >= 1) out.witness[1] = x1;
    for (size_t i = 0; i < x.size(); ++i) out.witness[i + 2] = x[i];
    break;
  }
  return out;
}

}  // namespace ryser
