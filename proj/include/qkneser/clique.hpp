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
#include <vector>

#include "qkneser/budget.hpp"
#include "qkneser/graph.hpp"

namespace qkneser {

struct CliqueResult {
  std::vector<int> vertices;  // sorted
  bool exact = false;         // false when the budget ran out first
  std::uint64_t nodes = 0;
};

// Maximum clique by branch and bound over packed candidate sets, with a
// greedy colouring of the candidates as the upper bound. Vertices are
// processed in non-increasing degree order.
CliqueResult max_clique(const Graph& g, const Budget& budget = Budget::unlimited());

// Calls visit once for every clique of exactly `size` vertices (sorted
// vertex ids). With size equal to the clique number this lists every maximum
// clique. Returns the number found.
std::uint64_t for_each_clique_of_size(const Graph& g, std::size_t size,
                                      const std::function<void(const std::vector<int>&)>& visit);

}  // namespace qkneser
