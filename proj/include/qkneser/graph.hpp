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

#include "qkneser/bitset.hpp"
#include "qkneser/qcount.hpp"
#include "qkneser/subspace.hpp"

namespace qkneser {

// Simple undirected graph on vertices 0..n-1 with dense packed adjacency
// rows. Graphs built from subspaces also carry their vertex labels (in
// enumeration order) and the parameters that produced them.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  std::size_t vertex_count() const { return rows_.size(); }
  // Throws OutOfRange on self-loops or out-of-range endpoints.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
  const Bitset& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  std::size_t degree(int v) const { return neighbors(v).count(); }

  const std::vector<Subspace>& labels() const { return labels_; }
  const std::optional<Params>& meta() const { return meta_; }

  Graph complement() const;
  // Edges (u, v) with u < v, ordered by u then v.
  std::vector<std::pair<int, int>> edges() const;

 private:
  friend Graph build_from_labels(std::vector<Subspace>, const Params&);
  std::vector<Bitset> rows_;
  std::vector<Subspace> labels_;
  std::optional<Params> meta_;
};

struct BuildOptions {
  std::uint64_t max_vertices = 5000;
};

// K_q(n,k,t): k-subspaces of F_q^n, adjacent iff dim(A ∩ B) < t. Vertex i is
// the i-th subspace in enumeration order. Requires 1 <= t < k <= n and a
// supported prime power q. Throws TooLarge when [n,k]_q > max_vertices.
Graph build_qkneser(const Params& p, const BuildOptions& opts = {});
// Complement of the Grassmann graph, K_q(n,k,k-1). Requires k >= 2.
Graph build_cograssmann(int n, int k, int q, const BuildOptions& opts = {});

Count edge_count(const Graph& g);
Count max_degree(const Graph& g);
bool is_regular(const Graph& g);

// hist[m] = number of vertices (v itself included) whose label meets label(v)
// in exactly m dimensions, for m = 0..k. Requires a labelled graph.
std::vector<Count> intersection_histogram(const Graph& g, int v);

// Formula values recorded as `c key=value` lines in exported files.
std::vector<std::pair<std::string, std::string>> formula_metadata(const Params& p);

// PACE .gr: optional `c ...` comment lines, header `p tw <n> <m>`, then one
// `u v` line per edge, 1-indexed.
void write_gr(const Graph& g, std::ostream& out,
              const std::vector<std::pair<std::string, std::string>>& comments = {});
// Throws ParseError on malformed input, duplicate edges or self-loops.
Graph read_gr(std::istream& in);

}  // namespace qkneser
