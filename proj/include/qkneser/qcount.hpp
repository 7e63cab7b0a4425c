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

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qkneser {

// Exact nonnegative integer for every count and formula value.
using Count = boost::multiprecision::cpp_int;

// Parameters of K_q(n, k, t). q is a plain integer >= 2 here; prime-power
// validation happens only when a graph is materialized.
struct Params {
  int n = 0;
  int k = 0;
  int t = 0;
  int q = 0;
  friend bool operator==(const Params&, const Params&) = default;
};

std::string to_string(const Params& p);

// q^e for e >= 0.
Count power(int q, int e);

// Gaussian binomial [a, b]_q: 0 when b < 0 or b > a, 1 when b = 0.
// Throws BadQ for q < 2 and OutOfRange for a < 0. Results are memoized.
Count gauss(int a, int b, int q);

// Both recurrences for m >= i >= 1:
//   [m,i] = [m-1,i-1] + q^i [m-1,i]
//   [m,i] (q^i - 1) = (q^m - 1) [m-1,i-1]
bool check_gauss_identities(int m, int i, int q);

// For m >= i >= 1, the growth bounds
//   q^(m-i) < (q^m-1)/(q^i-1) < q^(m-i+1)      (i < m)
//   q^(i-m-1) < (q^i-1)/(q^m-1) < q^(i-m)      (i < m)
//   q^(i(m-i)) <= [m,i] < q^(i(m-i+1)), strict on the left when i < m
// evaluated as cross-multiplied integer comparisons.
bool check_gauss_bounds(int m, int i, int q);

// Number of i-subspaces Y of F_q^n with dim(X ∩ Y) = m for a fixed
// j-subspace X: q^((i-m)(j-m)) [n-j, i-m] [j, m]. Zero when infeasible.
Count intersect_count(int n, int j, int i, int m, int q);

// Degree of every vertex of K_q(n,k,t): sum_{i<t} q^((k-i)^2) [n-k,k-i][k,i].
// Requires 1 <= t < k <= n.
Count qkneser_degree(const Params& p);

// Independence number [n-t, k-t]; asserted only for n >= 2k.
// Throws OutOfRange when n < 2k or the 1 <= t < k <= n contract fails.
Count qkneser_independence_number(const Params& p);

// True iff k > t >= 1 and n >= 2t(k-t+1) + k + 1, the range where the exact
// treewidth formula below is proven.
bool in_exact_treewidth_range(const Params& p);

// [n,k] - [n-t,k-t] - 1. Throws OutOfRange outside in_exact_treewidth_range.
Count qkneser_treewidth(const Params& p);

// Treewidth as a closed interval; lower == upper when the value is exact.
struct TreewidthWindow {
  Count lower;
  Count upper;
  bool exact() const { return lower == upper; }
};

// Treewidth of the complement of the Grassmann graph (K_q(n,k,k-1)) for
// n >= k+2, k >= 2: exact [n,k] - [n-k+1,1] - 1, except (n,k) = (4,2) where
// only the bracket [q^4+q^2-1, q^4+q^3+q^2-1] is known.
TreewidthWindow cograssmann_treewidth(int n, int k, int q);

// q^((k-t)^2) [n-k,k-t][k,t] > [n-t,k-t]: the vertices meeting a fixed vertex
// in exactly t dimensions outnumber a point pencil. Requires n >= 2k, t >= 1.
bool check_layer_exceeds_pencil(const Params& p);

// 3 [k,t]^2 [n-t-1,k-t-1] <= [n-t,k-t]: the pigeonhole bound behind the
// separator lower-bound argument. Computed for any 1 <= t < k <= n; only
// guaranteed inside in_exact_treewidth_range.
bool check_pigeonhole_bound(const Params& p);

// One row of a claims sweep. Emitted as
//   q,n,k,t,claim1,claim2,delta,alpha,tw
// with "na" for claim2/tw outside the exact-treewidth range.
struct SweepRecord {
  Params params;
  bool layer_exceeds_pencil = false;
  std::optional<bool> pigeonhole_bound;
  bool degree_plus_alpha_below_order = false;
  Count degree;
  Count alpha;
  std::optional<Count> treewidth;

  bool all_hold() const {
    return layer_exceeds_pencil && pigeonhole_bound.value_or(true) && degree_plus_alpha_below_order;
  }
};

std::string format_sweep_record(const SweepRecord& r);

// Every (q, n, k, t) with q in qs, 1 <= t < k <= kmax, 2k <= n <= nmax, in
// that nesting order. Runs in parallel over the grid.
std::vector<SweepRecord> sweep_claims(const std::vector<int>& qs, int kmax, int nmax);

}  // namespace qkneser
