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
#include <functional>
#include <iosfwd>
#include <vector>

#include "qkneser/budget.hpp"
#include "qkneser/graph.hpp"

namespace qkneser {

// All k-subspaces containing the fixed t-subspace `center`. Independent in
// K_q(n,k,t) with [n-t, k-t] members. Throws DimMismatch if dim center != t.
VertexSet point_pencil(const Graph& g, const Subspace& center);

// All k-subspaces of the fixed (n-t)-subspace `host`; only extremal when
// n = 2k. Throws OutOfRange if n != 2k, DimMismatch if dim host != n - t.
VertexSet nest_family(const Graph& g, const Subspace& host);

bool is_independent(const Graph& g, const VertexSet& s);

struct IndependentSetResult {
  std::size_t size = 0;
  VertexSet witness;
  bool exact = false;  // false: budget ran out, size is only a lower bound
  std::uint64_t nodes = 0;
};

// Maximum independent set as a maximum clique of the complement. When the
// budget runs out the best set found so far is returned with exact = false.
IndependentSetResult max_independent_set_exact(const Graph& g,
                                               const Budget& budget = Budget::unlimited());

// Every independent set of exactly `size` vertices.
std::uint64_t for_each_independent_set_of_size(const Graph& g, std::size_t size,
                                               const std::function<void(const VertexSet&)>& visit);

// Which extremal shape a t-intersecting family of a labelled K_q(n,k,t) has:
// all members through one common t-subspace, and/or all members inside one
// common (n-t)-subspace.
struct FamilyShape {
  bool common_t_subspace = false;
  bool common_host = false;
};
FamilyShape classify_family(const Graph& g, const VertexSet& family);

// Sorted 1-indexed vertex ids, one per line.
void write_vertex_set(const VertexSet& s, std::ostream& out);

}  // namespace qkneser
