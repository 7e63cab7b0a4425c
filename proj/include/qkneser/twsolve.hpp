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
#include <optional>
#include <string>
#include <vector>

#include "qkneser/budget.hpp"
#include "qkneser/graph.hpp"
#include "qkneser/td.hpp"

namespace qkneser {

enum class SolveStatus {
  exact,    // lower == upper, certificate attains it
  bracket,  // budget ran out; lower <= tw <= upper
};

std::string to_string(SolveStatus s);

struct SolveResult {
  std::size_t lower = 0;
  std::size_t upper = 0;
  SolveStatus status = SolveStatus::bracket;
  // Elimination ordering whose width is `upper`.
  std::vector<int> ordering;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;

  bool exact() const { return status == SolveStatus::exact; }
  TreeDecomposition certificate(const Graph& g) const { return decomposition_from_ordering(g, ordering); }
};

struct TreewidthOptions {
  Budget budget;
  // Hard ceiling of 64: the search packs vertex sets into one machine word.
  std::size_t max_vertices = 64;
};

// Branch and bound over elimination orderings, memoized on the set of
// eliminated vertices. Bounds: clique number minus one and minor-min-width
// below, the better of min-fill and min-degree above. Simplicial and
// almost-simplicial vertices are eliminated without branching. Branching
// visits vertices in graph order. A zero time budget skips the search and
// reports the heuristic bracket. Throws TooLarge above max_vertices.
SolveResult treewidth_exact(const Graph& g, const TreewidthOptions& opts = {});

// Width of the decomposition induced by an elimination ordering.
std::size_t ordering_width(const Graph& g, const std::vector<int>& order);
std::vector<int> min_fill_ordering(const Graph& g);
std::vector<int> min_degree_ordering(const Graph& g);
// Minor-min-width lower bound (contract a minimum-degree vertex into its
// minimum-degree neighbour, repeatedly).
std::size_t minor_min_width(const Graph& g);

// Clique number, exact. Throws TooLarge above 200 vertices.
std::size_t clique_lower_bound(const Graph& g);

// Balance ratio p = num/den with 2/3 <= p < 1.
struct Ratio {
  int num = 2;
  int den = 3;
};

// X plus a split of V \ X into A and B with no A-B edges and
// (1-p)|V \ X| <= |A|, |B| <= p|V \ X|.
struct SeparatorWitness {
  std::vector<int> separator;
  std::vector<int> part_a;
  std::vector<int> part_b;
};

bool is_balanced_separator(const Graph& g, const SeparatorWitness& w, Ratio p = {});

// Exhaustive search over |X| = 0, 1, ..., size_cap (lexicographic within a
// size) for a balanced separator. Returns the first one found, or nullopt
// when none exists within the cap. Throws SearchSpaceTooLarge when
// |V| > 40 or size_cap > 12, OutOfRange for a ratio outside [2/3, 1).
std::optional<SeparatorWitness> balanced_separator_search(const Graph& g, std::size_t size_cap,
                                                          Ratio p = {});

}  // namespace qkneser
