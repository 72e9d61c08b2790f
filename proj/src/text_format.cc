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

#include <charconv>
#include <set>
#include <sstream>

#include "ryser/hypergraph.h"

namespace ryser {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  int value;
  int column;
};

struct DataLine {
  int number;  // 1-based
  std::vector<Token> tokens;
};

// Splits `text` into its data lines, skipping blanks and '#' comments.
std::vector<DataLine> Tokenize(std::string_view text) {
  std::vector<DataLine> lines;
  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_number;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    DataLine data{line_number, {}};
    size_t i = first;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      size_t j = line.find_first_of(" \t", i);
      if (j == std::string_view::npos) j = line.size();
      std::string_view word = line.substr(i, j - i);
      int value = 0;
      auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
      if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw ParseError(line_number, static_cast<int>(i) + 1,
                         "expected an integer, got '" + std::string(word) + "'");
      }
      data.tokens.push_back({value, static_cast<int>(i) + 1});
      i = j;
    }
    lines.push_back(std::move(data));
    if (end == text.size()) break;
  }
  return lines;
}

}  // namespace

Hypergraph Parse(std::string_view text) {
  std::vector<DataLine> lines = Tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "missing header line 'r m'");

  const DataLine& header = lines[0];
  if (header.tokens.size() != 2) {
    throw ParseError(header.number, 1, "header must contain exactly 'r m'");
  }
  const int r = header.tokens[0].value;
  const int m = header.tokens[1].value;
  if (r < 1) throw ParseError(header.number, header.tokens[0].column, "r must be positive");
  if (m < 0) throw ParseError(header.number, header.tokens[1].column, "m must be non-negative");

  if (lines.size() < 2) {
    throw ParseError(header.number + 1, 1, "missing class-size line");
  }
  const DataLine& sizes_line = lines[1];
  if (static_cast<int>(sizes_line.tokens.size()) != r) {
    throw ParseError(sizes_line.number, 1,
                     "expected " + std::to_string(r) + " class sizes, got " +
                         std::to_string(sizes_line.tokens.size()));
  }
  std::vector<int> sizes;
  for (const Token& t : sizes_line.tokens) {
    if (t.value < 1) throw ParseError(sizes_line.number, t.column, "class size must be positive");
    sizes.push_back(t.value);
  }

  if (static_cast<int>(lines.size()) - 2 != m) {
    const int at = static_cast<int>(lines.size()) - 2 < m ? lines.back().number + 1
                                                          : lines[2 + m].number;
    throw ParseError(at, 1,
                     "expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 2));
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<Edge> seen;
  for (int e = 0; e < m; ++e) {
    const DataLine& line = lines[2 + e];
    if (static_cast<int>(line.tokens.size()) != r) {
      throw ParseError(line.number, 1,
                       "edge has " + std::to_string(line.tokens.size()) +
                           " entries, expected " + std::to_string(r));
    }
    Edge edge(r);
    for (int c = 0; c < r; ++c) {
      const Token& t = line.tokens[c];
      if (t.value < 0 || t.value >= sizes[c]) {
        throw ParseError(line.number, t.column,
                         "index " + std::to_string(t.value) + " out of bounds for class " +
                             std::to_string(c) + " of size " + std::to_string(sizes[c]));
      }
      edge[c] = t.value;
    }
    if (!seen.insert(edge).second) throw ParseError(line.number, 1, "duplicate edge");
    edges.push_back(std::move(edge));
  }
  return Hypergraph(r, std::move(sizes), std::move(edges));
}

std::string Serialize(const Hypergraph& h, std::span<const std::string> comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "# " << c << '\n';
  out << h.r() << ' ' << h.num_edges() << '\n';
  for (int c = 0; c < h.r(); ++c) {
    out << (c ? " " : "") << h.class_sizes()[c];
  }
  out << '\n';
  for (const Edge& e : h.edges()) {
    for (size_t c = 0; c < e.size(); ++c) out << (c ? " " : "") << e[c];
    out << '\n';
  }
  return out.str();
}

}  // namespace ryser
