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
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ryser/search.h"

namespace ryser {
namespace {

// Ranks of `values` among their distinct values in sorted order.
template <typename T>
std::vector<int> Ranks(const std::vector<T>& values, int* num_distinct) {
  std::vector<T> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out;
  out.reserve(values.size());
  for (const T& v : values) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()));
  }
  *num_distinct = static_cast<int>(sorted.size());
  return out;
}

uint64_t Mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Edge colors from iterated refinement, starting from `color`: an edge's new
// color is its old color plus a hash of, per class, the multiset of colors of
// the edges through its vertex. Collisions only coarsen the result; it stays
// invariant under relabeling either way.
std::vector<int> RefineEdgeColors(const Hypergraph& h, std::vector<int> color) {
  const int m = h.num_edges();
  const int r = h.r();
  int num_colors = 0;
  color = Ranks(color, &num_colors);
  std::vector<std::vector<uint64_t>> vertex_hash(r);
  std::vector<std::pair<int, uint64_t>> sigs(m);
  while (num_colors < m) {
    for (int c = 0; c < r; ++c) vertex_hash[c].assign(h.class_sizes()[c], 0);
    for (int e = 0; e < m; ++e) {
      const uint64_t x = Mix(static_cast<uint64_t>(color[e]));
      for (int c = 0; c < r; ++c) vertex_hash[c][h.edge(e)[c]] += x;
    }
    for (int e = 0; e < m; ++e) {
      uint64_t sig = 0;
      for (int c = 0; c < r; ++c) sig = Mix(sig ^ vertex_hash[c][h.edge(e)[c]]);
      sigs[e] = {color[e], sig};
    }
    int distinct = 0;
    std::vector<int> next = Ranks(sigs, &distinct);
    if (distinct == num_colors) break;
    color = std::move(next);
    num_colors = distinct;
  }
  return color;
}

// Individualization and refinement. Positions are filled in order; at each
// node the placed edges are individualized, colors are refined, and the
// branching candidates are the unplaced edges of least color. Among all
// leaves the least code wins. Two leaves with equal codes give an
// automorphism, used to skip candidates in an explored orbit.
class Canonizer {
 public:
  explicit Canonizer(const Hypergraph& h) : h_(h), m_(h.num_edges()), r_(h.r()) {
    label_.resize(r_);
    for (int c = 0; c < r_; ++c) label_[c].assign(h.class_sizes()[c], -1);
    next_label_.assign(r_, 0);
    position_.assign(m_, -1);
    current_.assign(static_cast<size_t>(m_) * r_, 0);
    state_.assign(m_ + 1, 0);
    order_.assign(m_, -1);
  }

  std::vector<int> Run() {
    // The first leaf seeds the bound, then the full search only improves it.
    for (int pos = 0; pos < m_; ++pos) {
      const int e = Candidates(pos).front();
      Place(pos, e);
    }
    best_ = current_;
    best_order_ = order_;
    Reset();
    Descend(0);
    return best_;
  }

 private:
  void Reset() {
    for (auto& l : label_) std::fill(l.begin(), l.end(), -1);
    std::fill(next_label_.begin(), next_label_.end(), 0);
    std::fill(position_.begin(), position_.end(), -1);
    std::fill(state_.begin(), state_.end(), 0);
  }

  // Unplaced edges of least refined color, in index order.
  std::vector<int> Candidates(int pos) const {
    std::vector<int> color(m_);
    for (int e = 0; e < m_; ++e) color[e] = position_[e] >= 0 ? position_[e] : pos;
    color = RefineEdgeColors(h_, std::move(color));
    int least = -1;
    for (int e = 0; e < m_; ++e) {
      if (position_[e] < 0 && (least < 0 || color[e] < least)) least = color[e];
    }
    std::vector<int> out;
    for (int e = 0; e < m_; ++e) {
      if (position_[e] < 0 && color[e] == least) out.push_back(e);
    }
    return out;
  }

  // Writes edge e at position pos; returns the classes that got a new label.
  std::vector<int> Place(int pos, int e) {
    std::vector<int> fresh;
    position_[e] = pos;
    order_[pos] = e;
    for (int c = 0; c < r_; ++c) {
      int& l = label_[c][h_.edge(e)[c]];
      if (l < 0) {
        l = next_label_[c]++;
        fresh.push_back(c);
      }
      current_[static_cast<size_t>(pos) * r_ + c] = l;
    }
    return fresh;
  }

  void Unplace(int e, const std::vector<int>& fresh) {
    position_[e] = -1;
    for (int c : fresh) {
      label_[c][h_.edge(e)[c]] = -1;
      --next_label_[c];
    }
  }

  // Edge permutation taking the best leaf to the current one; both leaves
  // carry the same code, so it is an automorphism.
  void RecordAutomorphism() {
    std::vector<int> perm(m_);
    bool identity = true;
    for (int i = 0; i < m_; ++i) {
      perm[best_order_[i]] = order_[i];
      identity = identity && best_order_[i] == order_[i];
    }
    if (!identity && automorphisms_.size() < kMaxGenerators) {
      automorphisms_.push_back(std::move(perm));
    }
  }

  // Orbit representatives under the automorphisms found so far that fix the
  // first `pos` placed edges.
  std::vector<int> Orbits(int pos) const {
    std::vector<int> parent(m_);
    for (int e = 0; e < m_; ++e) parent[e] = e;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const std::vector<int>& perm : automorphisms_) {
      bool fixes = true;
      for (int i = 0; i < pos && fixes; ++i) fixes = perm[order_[i]] == order_[i];
      if (!fixes) continue;
      for (int e = 0; e < m_; ++e) {
        const int a = find(e);
        const int b = find(perm[e]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int e = 0; e < m_; ++e) parent[e] = find(e);
    return parent;
  }

  // state_[pos]: 0 if the prefix of length pos equals best_, -1 if smaller.
  void Descend(int pos) {
    if (pos == m_) {
      if (state_[pos] < 0) {
        best_ = current_;
        best_order_ = order_;
        std::fill(state_.begin(), state_.end(), 0);
      } else {
        RecordAutomorphism();
      }
      return;
    }
    std::vector<int> tried;
    size_t known = 0;
    std::vector<int> orbit;
    for (int e : Candidates(pos)) {
      if (!tried.empty()) {
        if (orbit.empty() || known != automorphisms_.size()) {
          orbit = Orbits(pos);
          known = automorphisms_.size();
        }
        if (std::any_of(tried.begin(), tried.end(), [&](int t) { return orbit[t] == orbit[e]; })) {
          continue;
        }
      }
      tried.push_back(e);
      const std::vector<int> fresh = Place(pos, e);
      int cmp = 0;
      if (state_[pos] < 0) {
        cmp = -1;
      } else {
        const auto begin = static_cast<size_t>(pos) * r_;
        for (int c = 0; c < r_ && cmp == 0; ++c) {
          const int a = current_[begin + c];
          const int b = best_[begin + c];
          cmp = a < b ? -1 : (a > b ? 1 : 0);
        }
      }
      if (cmp <= 0) {
        state_[pos + 1] = cmp;
        Descend(pos + 1);
      }
      Unplace(e, fresh);
    }
  }

  static constexpr size_t kMaxGenerators = 256;

  const Hypergraph& h_;
  int m_;
  int r_;
  std::vector<std::vector<int>> label_;
  std::vector<int> next_label_;
  std::vector<int> position_;  // -1 if unplaced
  std::vector<int> current_;
  std::vector<int> best_;
  std::vector<int> state_;
  std::vector<int> order_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> automorphisms_;
};

void PutByte(std::string& out, int v) {
  if (v < 0 || v > kMaxCanonicalValue) {
    throw std::invalid_argument("canonical form: value " + std::to_string(v) + " too large");
  }
  out.push_back(static_cast<char>(static_cast<unsigned char>(v)));
}

}  // namespace

CanonicalForm Canonicalize(const Hypergraph& h) {
  const std::vector<int> code = Canonizer(h).Run();
  CanonicalForm out;
  PutByte(out.key, h.r());
  for (int n : h.class_sizes()) PutByte(out.key, n);
  PutByte(out.key, h.num_edges());
  for (int v : code) PutByte(out.key, v);

  std::vector<Edge> edges;
  for (int e = 0; e < h.num_edges(); ++e) {
    edges.emplace_back(code.begin() + static_cast<long>(e) * h.r(),
                       code.begin() + static_cast<long>(e + 1) * h.r());
  }
  out.representative = Hypergraph(h.r(), h.class_sizes(), std::move(edges));
  return out;
}

Hypergraph DecodeCanonicalKey(const std::string& key) {
  auto at = [&](size_t i) {
    if (i >= key.size()) throw std::invalid_argument("truncated canonical key");
    return static_cast<int>(static_cast<unsigned char>(key[i]));
  };
  size_t pos = 0;
  const int r = at(pos++);
  std::vector<int> sizes;
  for (int c = 0; c < r; ++c) sizes.push_back(at(pos++));
  const int m = at(pos++);
  std::vector<Edge> edges(m, Edge(r));
  for (int e = 0; e < m; ++e) {
    for (int c = 0; c < r; ++c) edges[e][c] = at(pos++);
  }
  return Hypergraph(r, std::move(sizes), std::move(edges));
}

std::string CanonicalForm::ToText() const {
  std::ostringstream out;
  const Hypergraph& h = representative;
  out << "r" << h.r() << " n";
  for (int c = 0; c < h.r(); ++c) out << (c ? "," : "") << h.class_sizes()[c];
  out << " |";
  for (const Edge& e : h.edges()) {
    out << ' ';
    for (size_t c = 0; c < e.size(); ++c) out << (c ? "." : "") << e[c];
  }
  return out.str();
}

}  // namespace ryser
