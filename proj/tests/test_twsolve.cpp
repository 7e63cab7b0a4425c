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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qkneser/error.hpp"
#include "qkneser/twsolve.hpp"

using namespace qkneser;

namespace {

std::size_t solve(const Graph& g) {
  const auto r = treewidth_exact(g);
  REQUIRE(r.exact());
  REQUIRE(r.lower == r.upper);
  const auto d = r.certificate(g);
  CHECK(validate(g, d).valid());
  CHECK(width(d) == static_cast<std::int64_t>(r.upper));
  return r.upper;
}

}  // namespace

TEST_CASE("treewidth of standard families") {
  for (std::size_t m = 1; m <= 8; ++m) CHECK(solve(oracle::complete_graph(m)) == m - 1);
  CHECK(solve(oracle::path_graph(4)) == 1);
  CHECK(solve(oracle::cycle_graph(5)) == 2);
  CHECK(solve(oracle::cycle_graph(6)) == 2);
  CHECK(solve(oracle::grid_graph(3, 3)) == 3);
  CHECK(solve(oracle::grid_graph(4, 4)) == 4);
  CHECK(solve(oracle::petersen_graph()) == 4);
  CHECK(solve(Graph(5)) == 0);
  CHECK(treewidth_exact(Graph(0)).exact());
}

TEST_CASE("trees have treewidth one") {
  std::mt19937 rng(11);
  for (std::size_t n : {2, 5, 17, 40, 64}) CHECK(solve(oracle::random_tree(n, rng)) == 1);
}

TEST_CASE("treewidth agrees with exhaustive search over orderings") {
  std::mt19937 rng(31337);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 4 + static_cast<std::size_t>(rep % 5);
    const Graph g = oracle::random_graph(n, 1 + rep % 4, 5, rng);
    CAPTURE(rep);
    CHECK(solve(g) == oracle::treewidth_all_orderings(g));
  }
}

TEST_CASE("treewidth agrees with the subset recursion on mid-sized graphs") {
  std::mt19937 rng(77);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 10 + static_cast<std::size_t>(rep % 6);
    const Graph g = oracle::random_graph(n, 1 + rep % 4, 6, rng);
    CAPTURE(rep);
    CHECK(solve(g) == oracle::treewidth_subset_dp(g));
  }
  CHECK(oracle::treewidth_subset_dp(oracle::petersen_graph()) == 4);
  CHECK(oracle::treewidth_subset_dp(oracle::grid_graph(3, 4)) == 3);
}

TEST_CASE("larger random graphs give valid certificates") {
  std::mt19937 rng(8);
  for (int rep = 0; rep < 6; ++rep) {
    const Graph g = oracle::random_graph(24, 1, 5, rng);
    const auto r = treewidth_exact(g);
    CHECK(r.exact());
    CHECK(r.lower <= r.upper);
    CHECK(validate(g, r.certificate(g)).valid());
    CHECK(ordering_width(g, r.ordering) == r.upper);
  }
}

TEST_CASE("zero budget returns a bracket") {
  const Graph g = oracle::petersen_graph();
  TreewidthOptions opts;
  opts.budget.max_nodes = 0;
  const auto r = treewidth_exact(g, opts);
  CHECK(r.lower <= 4);
  CHECK(r.upper >= 4);
  CHECK(validate(g, r.certificate(g)).valid());
  if (r.lower < r.upper) CHECK(r.status == SolveStatus::bracket);
  CHECK(to_string(SolveStatus::bracket) == "bracket");
  CHECK(to_string(SolveStatus::exact) == "exact");
}

TEST_CASE("complement of G_2(4,2) under relabelling") {
  const Graph g = build_cograssmann(4, 2, 2);
  std::mt19937 rng(3);
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  for (int rep = 0; rep < 3; ++rep) {
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(g.vertex_count());
    for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    const auto r = treewidth_exact(h);
    CHECK(r.exact());
    CHECK(r.upper == 27);
    CHECK(validate(h, r.certificate(h)).valid());
  }
}

TEST_CASE("vertex limits") {
  CHECK_THROWS_AS(treewidth_exact(Graph(65)), TooLarge);
  TreewidthOptions opts;
  opts.max_vertices = 10;
  CHECK_THROWS_AS(treewidth_exact(oracle::path_graph(11), opts), TooLarge);
  CHECK_THROWS_AS(minor_min_width(Graph(65)), TooLarge);
  CHECK_THROWS_AS(clique_lower_bound(Graph(201)), TooLarge);
}

TEST_CASE("heuristic orderings and lower bounds bracket the optimum") {
  std::mt19937 rng(4);
  for (int rep = 0; rep < 25; ++rep) {
    const Graph g = oracle::random_graph(7, 2, 5, rng);
    const std::size_t tw = oracle::treewidth_all_orderings(g);
    CHECK(ordering_width(g, min_fill_ordering(g)) >= tw);
    CHECK(ordering_width(g, min_degree_ordering(g)) >= tw);
    CHECK(minor_min_width(g) <= tw);
    CHECK(clique_lower_bound(g) <= tw + 1);
  }
  CHECK(minor_min_width(oracle::grid_graph(3, 3)) <= 3);
  CHECK(minor_min_width(oracle::complete_graph(6)) == 5);
}

TEST_CASE("clique bound on the smallest q-Kneser graph") {
  const Graph g = build_qkneser({4, 2, 1, 2});
  const std::size_t omega = clique_lower_bound(g);
  CHECK(omega == oracle::clique_number(g));
  CHECK(omega == 5);
}

TEST_CASE("separator predicate") {
  const Graph g = oracle::path_graph(5);
  CHECK(is_balanced_separator(g, {{2}, {0, 1}, {3, 4}}));
  CHECK_FALSE(is_balanced_separator(g, {{2}, {0, 1, 3}, {4}}));      // edge 3-4 crosses
  CHECK_FALSE(is_balanced_separator(g, {{3}, {0, 1, 2}, {4}}));      // 3 of 4 on one side
  CHECK_FALSE(is_balanced_separator(g, {{2}, {0, 1}, {3}}));         // vertex 4 missing
  CHECK_FALSE(is_balanced_separator(g, {{2}, {0, 1}, {3, 4, 1}}));   // 1 listed twice
  CHECK_FALSE(is_balanced_separator(g, {{}, {0, 1, 2}, {3, 4}}));    // edge 2-3 crosses
  CHECK(is_balanced_separator(g, {{0, 1, 2, 3, 4}, {}, {}}));
}

TEST_CASE("separator search") {
  const auto p5 = balanced_separator_search(oracle::path_graph(5), 1);
  REQUIRE(p5.has_value());
  CHECK(p5->separator == std::vector<int>{2});

  CHECK_FALSE(balanced_separator_search(oracle::complete_graph(5), 3).has_value());
  const auto k5 = balanced_separator_search(oracle::complete_graph(5), 5);
  REQUIRE(k5.has_value());
  CHECK(k5->separator.size() == 5);

  const Graph pet = oracle::petersen_graph();
  CHECK_FALSE(balanced_separator_search(pet, 2).has_value());
  const auto w = balanced_separator_search(pet, 5);
  REQUIRE(w.has_value());
  CHECK(w->separator.size() <= 5);
  CHECK(is_balanced_separator(pet, *w));

  // Graphs of treewidth k have a balanced separator with at most k + 1 vertices.
  std::mt19937 rng(21);
  for (int rep = 0; rep < 15; ++rep) {
    const Graph g = oracle::random_graph(14, 1, 4, rng);
    const std::size_t tw = solve(g);
    const auto sep = balanced_separator_search(g, tw + 1);
    REQUIRE(sep.has_value());
    CHECK(sep->separator.size() <= tw + 1);
    CHECK(is_balanced_separator(g, *sep));
  }
}

TEST_CASE("separator search guards") {
  CHECK_THROWS_AS(balanced_separator_search(Graph(41), 2), SearchSpaceTooLarge);
  CHECK_THROWS_AS(balanced_separator_search(Graph(10), 13), SearchSpaceTooLarge);
  CHECK_THROWS_AS(balanced_separator_search(Graph(10), 2, {1, 2}), OutOfRange);
  CHECK_THROWS_AS(balanced_separator_search(Graph(10), 2, {1, 1}), OutOfRange);
  CHECK(balanced_separator_search(Graph(10), 0, {3, 4}).has_value());
}
