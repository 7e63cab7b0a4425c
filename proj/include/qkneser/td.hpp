// Copyright 2026 The qkneser Authors
//
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qkneser/graph.hpp"

namespace qkneser {

// Tree nodes 0..bags.size()-1, each carrying a sorted bag of 0-indexed graph
// vertices. Empty bags are allowed.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> edges;

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

struct Violation {
  enum class Kind { uncovered_vertex, uncovered_edge, disconnected_vertex };
  Kind kind;
  int u = -1;
  int v = -1;  // second endpoint for uncovered_edge, otherwise -1
};

std::string to_string(const Violation& v);

// Result of checking the three tree-decomposition conditions: every vertex
// in some bag, every edge inside some bag, and each vertex's bags forming a
// connected subtree. At most one witness per condition, found in vertex
// order.
struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// Throws MalformedTree if the edge list does not form a tree on the nodes or
// a bag holds an out-of-range or repeated vertex.
ValidationReport validate(const Graph& g, const TreeDecomposition& d);

// Largest bag size minus one (-1 for a decomposition with no bags).
std::int64_t width(const TreeDecomposition& d);

// Node 0 holds V \ I; one leaf per v in I holds {v} ∪ N(v), attached to node
// 0. Width is max(|V|-|I|-1, max_{v in I} deg v). Throws NotIndependent.
TreeDecomposition star_decomposition(const Graph& g, const VertexSet& independent);

// Decomposition induced by eliminating vertices in `order` (a permutation
// of the vertex set): bag(v) = {v} ∪ later neighbours in the filled graph.
TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<int>& order);

// PACE .td: `s td <bags> <max bag size> <vertices>`, `b <id> <v...>` lines
// and tree edges `<id> <id>`, all 1-indexed.
void write_td(const TreeDecomposition& d, std::size_t vertex_count, std::ostream& out);

struct ParsedTd {
  TreeDecomposition decomposition;
  std::size_t vertex_count = 0;
};
// Throws ParseError on malformed input.
ParsedTd read_td(std::istream& in);

}  // namespace qkneser
