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

#include "ryser/constructions.h"

#include <stdexcept>

namespace ryser {
namespace {

using ClassListing = std::vector<std::vector<std::string>>;
using EdgeListing = std::vector<std::vector<std::string>>;

NamedHypergraph Build(const ClassListing& classes, const EdgeListing& edges) {
  NamedHypergraph out;
  std::vector<int> sizes;
  for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
    sizes.push_back(static_cast<int>(classes[c].size()));
    for (int v = 0; v < static_cast<int>(classes[c].size()); ++v) {
      out.names.emplace(classes[c][v], VertexRef{c, v});
    }
  }
  const int r = static_cast<int>(classes.size());
  out.hypergraph = Hypergraph(r, sizes);
  for (const auto& named : edges) {
    Edge e(r, -1);
    for (const std::string& name : named) {
      const VertexRef v = LookupName(out.names, name);
      if (e[v.class_index] != -1) {
        throw std::logic_error("edge listing hits class twice at " + name);
      }
      e[v.class_index] = v.local_index;
    }
    out.hypergraph.AddEdge(std::move(e));
  }
  return out;
}

ClassListing Letters(int r, int per_class) {
  ClassListing out(r);
  for (int c = 0; c < r; ++c) {
    for (int i = 1; i <= per_class; ++i) {
      out[c].push_back(std::string(1, static_cast<char>('a' + c)) + "_" + std::to_string(i));
    }
  }
  return out;
}

const ClassListing& R6Classes() {
  static const ClassListing kClasses = {
      {"a_1", "a_3", "a_4", "a_6", "a_8"},  {"b_1", "b_2", "b_4", "b_8", "b_12"},
      {"c_1", "c_2", "c_4", "c_7", "c_11"}, {"d_1", "d_2", "d_3", "d_9", "d_11"},
      {"e_1", "e_2", "e_3", "e_5", "e_7"},  {"f_1", "f_2", "f_3", "f_5", "f_7"},
  };
  return kClasses;
}

const EdgeListing& R6Edges() {
  static const EdgeListing kEdges = {
      // Cyclic part.
      {"a_1", "b_1", "c_1", "d_1", "e_1", "f_1"},
      {"a_1", "b_2", "c_2", "d_2", "e_2", "f_2"},
      {"a_3", "b_1", "c_2", "d_3", "e_3", "f_3"},
      {"a_4", "b_4", "c_4", "d_1", "e_2", "f_3"},
      {"a_3", "b_4", "c_1", "d_2", "e_5", "f_5"},
      {"a_6", "b_2", "c_4", "d_3", "e_5", "f_1"},
      // Each of these contains a minimum cover of the cyclic part.
      {"a_1", "b_4", "c_7", "d_3", "e_7", "f_7"},
      {"a_8", "b_8", "c_2", "d_1", "e_5", "f_7"},
      {"a_8", "b_2", "c_1", "d_9", "e_7", "f_3"},
      {"a_3", "b_8", "c_7", "d_9", "e_2", "f_1"},
      // Edges that lift the cover number to 5.
      {"a_1", "b_8", "c_11", "d_11", "e_5", "f_3"},
      {"a_8", "b_12", "c_1", "d_3", "e_2", "f_3"},
      {"a_8", "b_4", "c_2", "d_11", "e_1", "f_1"},
      {"a_4", "b_8", "c_1", "d_3", "e_2", "f_1"},
      {"a_8", "b_8", "c_1", "d_3", "e_2", "f_5"},
  };
  return kEdges;
}

}  // namespace

VertexRef LookupName(const NameTable& names, std::string_view name) {
  auto it = names.find(name);
  if (it == names.end()) throw std::out_of_range("unknown vertex name " + std::string(name));
  return it->second;
}

std::vector<VertexRef> LookupNames(const NameTable& names,
                                   const std::vector<std::string>& list) {
  std::vector<VertexRef> out;
  out.reserve(list.size());
  for (const std::string& name : list) out.push_back(LookupName(names, name));
  return out;
}

std::string NameOf(const NameTable& names, const VertexRef& v) {
  for (const auto& [name, ref] : names) {
    if (ref == v) return name;
  }
  return {};
}

NamedHypergraph ExtremalConstruction(int r) {
  switch (r) {
    case 3:
      return Build(Letters(3, 2), {{"a_1", "b_1", "c_1"},
                                   {"a_1", "b_2", "c_2"},
                                   {"a_2", "b_1", "c_2"}});
    case 4:
      return Build(Letters(4, 3), {{"a_1", "b_1", "c_1", "d_1"},
                                   {"a_1", "b_2", "c_2", "d_2"},
                                   {"a_2", "b_1", "c_2", "d_3"},
                                   {"a_2", "b_2", "c_3", "d_1"},
                                   {"a_3", "b_3", "c_2", "d_1"},
                                   {"a_3", "b_1", "c_3", "d_2"}});
    case 5: {
      ClassListing classes(5);
      for (int n = 1; n <= 20; ++n) classes[(n - 1) / 4].push_back(std::to_string(n));
      return Build(classes, {
                                // Part A.
                                {"1", "5", "9", "13", "17"},
                                {"2", "6", "10", "14", "17"},
                                {"3", "7", "10", "13", "18"},
                                {"1", "6", "11", "15", "18"},
                                {"2", "7", "9", "15", "19"},
                                // Part B, exactly the edges through vertex 4.
                                {"4", "5", "10", "15", "20"},
                                {"4", "7", "11", "16", "17"},
                                {"4", "8", "9", "14", "18"},
                                {"4", "6", "12", "13", "19"},
                            });
    }
    case 6:
      return Build(R6Classes(), R6Edges());
    default:
      throw std::invalid_argument("no explicit construction for r = " + std::to_string(r) +
                                  " (supported: 3, 4, 5, 6)");
  }
}

NamedHypergraph CyclicSixEdges() {
  const EdgeListing& all = R6Edges();
  return Build(R6Classes(), EdgeListing(all.begin(), all.begin() + 6));
}

}  // namespace ryser
