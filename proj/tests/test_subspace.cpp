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

#include <random>

#include "oracles.hpp"
#include "qkneser/error.hpp"
#include "qkneser/qcount.hpp"
#include "qkneser/subspace.hpp"

using namespace qkneser;

namespace {

std::vector<std::vector<int>> rows_of(const Subspace& s) {
  std::vector<std::vector<int>> out;
  for (int r = 0; r < s.dim(); ++r) {
    std::vector<int> row;
    for (auto x : s.row(r)) row.push_back(x);
    out.push_back(row);
  }
  return out;
}

// A random subspace: canonical span of `rows` random vectors.
Subspace random_subspace(const gf::Field& f, int n, int rows, std::mt19937& rng) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(n)));
  for (auto& r : m)
    for (auto& x : r) x = static_cast<int>(rng() % static_cast<unsigned>(f.q()));
  return canonicalize(f, m);
}

}  // namespace

TEST_CASE("canonicalize examples") {
  const auto& f2 = gf::make_field(2);
  CHECK(rows_of(canonicalize(f2, {{0, 1}, {1, 0}})) == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  const Subspace s = canonicalize(f2, {{1, 1, 0}, {1, 0, 1}});
  CHECK(rows_of(s) == std::vector<std::vector<int>>{{1, 0, 1}, {0, 1, 1}});
  CHECK(s.pivot_cols() == std::vector<int>{0, 1});
  CHECK(s.to_string() == "[[1,0,1],[0,1,1]]");

  const auto& f5 = gf::make_field(5);
  CHECK(rows_of(canonicalize(f5, {{2, 4}})) == std::vector<std::vector<int>>{{1, 2}});

  CHECK_THROWS_AS(canonicalize(f2, std::vector<std::vector<int>>{}), EmptyMatrix);
  CHECK(canonicalize(f2, {{0, 0, 0}}).dim() == 0);
  CHECK_THROWS_AS(canonicalize(f2, {{0, 2}}), OutOfRange);
}

TEST_CASE("intersection and sum dimensions") {
  const auto& f2 = gf::make_field(2);
  const Subspace e12 = coordinate_subspace(f2, 4, {0, 1});
  const Subspace e34 = coordinate_subspace(f2, 4, {2, 3});
  const Subspace e23 = coordinate_subspace(f2, 4, {1, 2});
  CHECK(dim_intersection(e12, e12) == 2);
  CHECK(dim_intersection(e12, e34) == 0);
  CHECK(dim_intersection(e12, e23) == 1);
  CHECK(dim_sum(e12, e12) == 2);
  CHECK(dim_sum(e12, e34) == 4);
  CHECK(dim_sum(e12, e23) == 3);

  CHECK_THROWS_AS(dim_intersection(e12, coordinate_subspace(f2, 5, {0})), AmbientMismatch);
  CHECK_THROWS_AS(dim_sum(e12, coordinate_subspace(gf::make_field(3), 4, {0})), AmbientMismatch);
}

TEST_CASE("contains") {
  const auto& f2 = gf::make_field(2);
  const Subspace e12 = coordinate_subspace(f2, 4, {0, 1});
  CHECK(contains(e12, e12));
  CHECK(contains(e12, zero_subspace(f2, 4)));
  CHECK(contains(e12, canonicalize(f2, {{1, 1, 0, 0}})));
  CHECK_FALSE(contains(e12, canonicalize(f2, {{1, 0, 1, 0}})));
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate(gf::make_field(2), 4, 2).size() == 35);
  CHECK(enumerate(gf::make_field(3), 4, 2).size() == 130);
  for (int q : {2, 3, 4, 5}) {
    const auto zero = enumerate(gf::make_field(q), 3, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero.front().dim() == 0);
  }
  CHECK_THROWS_AS(enumerate(gf::make_field(2), 30, 15), TooLarge);
  CHECK_THROWS_AS(enumerate(gf::make_field(2), 3, 4), OutOfRange);
}

TEST_CASE("enumeration matches span-dedup oracle") {
  struct Case {
    int q, n, k;
  };
  for (auto [q, n, k] : {Case{2, 4, 2}, Case{2, 5, 2}, Case{2, 5, 3}, Case{3, 3, 1}, Case{3, 4, 2},
                         Case{4, 3, 1}, Case{4, 3, 2}, Case{5, 3, 2}, Case{2, 6, 3}}) {
    CAPTURE(q);
    CAPTURE(n);
    CAPTURE(k);
    const auto& f = gf::make_field(q);
    const auto expected = oracle::all_subspaces(f, n, k);
    std::set<oracle::SpanSet> got;
    for (const auto& s : enumerate(f, n, k)) got.insert(oracle::span_of(f, s));
    CHECK(got.size() == expected.size());
    CHECK(got == expected);
  }
}

TEST_CASE("enumeration order is strictly increasing and starts at the identity pattern") {
  for (int q : {2, 3, 4}) {
    const auto all = enumerate(gf::make_field(q), 5, 2);
    for (std::size_t i = 1; i < all.size(); ++i) REQUIRE(all[i - 1] < all[i]);
    CHECK(all.front().pivot_cols() == std::vector<int>{0, 1});
    CHECK(rows_of(all.front()) == std::vector<std::vector<int>>{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}});
    CHECK(all.back().pivot_cols() == std::vector<int>{3, 4});
  }
  // Free entries count with the last one fastest: within pivots {0}, the
  // second subspace of F_2^3 has its final coordinate set.
  const auto lines = enumerate(gf::make_field(2), 3, 1);
  CHECK(rows_of(lines[1]) == std::vector<std::vector<int>>{{1, 0, 1}});
  CHECK(rows_of(lines[2]) == std::vector<std::vector<int>>{{1, 1, 0}});
}

TEST_CASE("duality of enumeration counts") {
  for (int q : {2, 3})
    for (int n = 1; n <= 5; ++n)
      for (int k = 0; k <= n; ++k)
        CHECK(enumerate(gf::make_field(q), n, k).size() == enumerate(gf::make_field(q), n, n - k).size());
}

TEST_CASE("canonical form is independent of the spanning set") {
  std::mt19937 rng(11);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto& f = gf::make_field(q);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 5);
      const Subspace s = random_subspace(f, n, 1 + static_cast<int>(rng() % static_cast<unsigned>(n)), rng);
      if (s.dim() == 0) continue;
      // Random combinations of the basis rows, plus a few redundant ones.
      const int extra = static_cast<int>(rng() % 3);
      std::vector<std::uint8_t> mixed;
      int rows = 0;
      while (true) {
        mixed.clear();
        rows = s.dim() + extra;
        for (int r = 0; r < rows; ++r) {
          std::vector<gf::Element> acc(static_cast<std::size_t>(n), f.zero());
          for (int b = 0; b < s.dim(); ++b) {
            const auto c = f.element(static_cast<int>(rng() % static_cast<unsigned>(q)));
            for (int j = 0; j < n; ++j)
              acc[static_cast<std::size_t>(j)] =
                  f.add(acc[static_cast<std::size_t>(j)], f.mul(c, gf::Element{s.row(b)[static_cast<std::size_t>(j)]}));
          }
          for (auto e : acc) mixed.push_back(e.value);
        }
        if (canonicalize(f, n, rows, mixed).dim() == s.dim()) break;
      }
      CHECK(canonicalize(f, n, rows, mixed) == s);
    }
  }
}

TEST_CASE("modular law, symmetry, and explicit sum/intersection") {
  std::mt19937 rng(5);
  for (int q : {2, 3, 4}) {
    const auto& f = gf::make_field(q);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const Subspace a = random_subspace(f, n, 1 + static_cast<int>(rng() % 3), rng);
      const Subspace b = random_subspace(f, n, 1 + static_cast<int>(rng() % 3), rng);
      const int inter = dim_intersection(a, b);
      CHECK(inter == dim_intersection(b, a));
      CHECK(a.dim() + b.dim() == inter + dim_sum(a, b));
      CHECK(inter >= std::max(0, a.dim() + b.dim() - n));
      CHECK(inter <= std::min(a.dim(), b.dim()));

      const Subspace i = subspace_intersection(a, b);
      CHECK(i.dim() == inter);
      CHECK(contains(a, i));
      CHECK(contains(b, i));
      const Subspace s = subspace_sum(a, b);
      CHECK(s.dim() == dim_sum(a, b));
      CHECK(contains(s, a));
      CHECK(contains(s, b));

      // Independent check of the intersection dimension on explicit vector sets.
      const auto sa = oracle::span_of(f, a);
      const auto sb = oracle::span_of(f, b);
      CHECK(oracle::dim_of(oracle::intersect(sa, sb), q) == inter);
    }
  }
}
