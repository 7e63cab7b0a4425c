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

#include "qkneser/qcount.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "qkneser/error.hpp"
#include "qkneser/parallel.hpp"

namespace qkneser {

namespace {

void require_q(int q) {
  if (q < 2) throw BadQ("q must be at least 2, got " + std::to_string(q));
}

void require_graph_params(const Params& p) {
  require_q(p.q);
  if (!(1 <= p.t && p.t < p.k && p.k <= p.n))
    throw OutOfRange("need 1 <= t < k <= n, got " + to_string(p));
}

Count compute_gauss(int a, int b, int q) {
  // Multiply all numerator factors first; the product of denominators
  // divides it exactly.
  Count num = 1;
  Count den = 1;
  for (int i = 0; i < b; ++i) {
    num *= power(q, a - i) - 1;
    den *= power(q, b - i) - 1;
  }
  return num / den;
}

}  // namespace

std::string to_string(const Params& p) {
  std::ostringstream os;
  os << "(q=" << p.q << ", n=" << p.n << ", k=" << p.k << ", t=" << p.t << ")";
  return os.str();
}

Count power(int q, int e) {
  if (e < 0) throw OutOfRange("negative exponent");
  Count r = 1;
  Count base = q;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Count gauss(int a, int b, int q) {
  require_q(q);
  if (a < 0) throw OutOfRange("gauss: a must be nonnegative, got " + std::to_string(a));
  if (b < 0 || b > a) return 0;
  if (b == 0 || b == a) return 1;
  if (b > a - b) b = a - b;

  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, Count> memo;
  const auto key = std::make_tuple(a, b, q);
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  Count value = compute_gauss(a, b, q);
  std::lock_guard lock(mu);
  memo.emplace(key, value);
  return value;
}

bool check_gauss_identities(int m, int i, int q) {
  require_q(q);
  if (!(m >= i && i >= 1)) throw OutOfRange("need m >= i >= 1");
  const bool pascal = gauss(m, i, q) == gauss(m - 1, i - 1, q) + power(q, i) * gauss(m - 1, i, q);
  const bool ratio = gauss(m, i, q) * (power(q, i) - 1) == (power(q, m) - 1) * gauss(m - 1, i - 1, q);
  return pascal && ratio;
}

bool check_gauss_bounds(int m, int i, int q) {
  require_q(q);
  if (!(m >= i && i >= 1)) throw OutOfRange("need m >= i >= 1");
  bool ok = true;
  const Count g = gauss(m, i, q);
  if (i < m) {
    const Count top = power(q, m) - 1;
    const Count bottom = power(q, i) - 1;
    // q^(m-i) < top/bottom < q^(m-i+1). The reciprocal pair
    // q^(i-m-1) < bottom/top < q^(i-m) cross-multiplies to the same two.
    ok = ok && power(q, m - i) * bottom < top;
    ok = ok && top < power(q, m - i + 1) * bottom;
    ok = ok && power(q, i * (m - i)) < g;
  }
  ok = ok && power(q, i * (m - i)) <= g;
  ok = ok && g < power(q, i * (m - i + 1));
  return ok;
}

Count intersect_count(int n, int j, int i, int m, int q) {
  require_q(q);
  if (n < 0 || i < 0 || j < 0 || i > n || j > n)
    throw OutOfRange("intersect_count: need 0 <= i, j <= n");
  if (m < 0 || m > i || m > j) return 0;
  const Count a = gauss(n - j, i - m, q);
  if (a == 0) return 0;
  return power(q, (i - m) * (j - m)) * a * gauss(j, m, q);
}

Count qkneser_degree(const Params& p) {
  require_graph_params(p);
  Count sum = 0;
  for (int i = 0; i < p.t; ++i)
    sum += power(p.q, (p.k - i) * (p.k - i)) * gauss(p.n - p.k, p.k - i, p.q) * gauss(p.k, i, p.q);
  return sum;
}

Count qkneser_independence_number(const Params& p) {
  require_graph_params(p);
  if (p.n < 2 * p.k)
    throw OutOfRange("independence number formula needs n >= 2k, got " + to_string(p));
  return gauss(p.n - p.t, p.k - p.t, p.q);
}

bool in_exact_treewidth_range(const Params& p) {
  return p.k > p.t && p.t >= 1 && p.n >= 2 * p.t * (p.k - p.t + 1) + p.k + 1;
}

Count qkneser_treewidth(const Params& p) {
  require_graph_params(p);
  if (!in_exact_treewidth_range(p))
    throw OutOfRange("exact treewidth needs n >= 2t(k-t+1)+k+1 = " +
                     std::to_string(2 * p.t * (p.k - p.t + 1) + p.k + 1) + ", got " + to_string(p));
  return gauss(p.n, p.k, p.q) - gauss(p.n - p.t, p.k - p.t, p.q) - 1;
}

TreewidthWindow cograssmann_treewidth(int n, int k, int q) {
  require_q(q);
  if (k < 2 || n < k + 2)
    throw OutOfRange("complement-Grassmann treewidth needs k >= 2 and n >= k+2, got n=" +
                     std::to_string(n) + " k=" + std::to_string(k));
  if (n == 4 && k == 2) {
    // Lower bound [4,2]-[4,1]-1 = q^4+q^2-1; upper bound [4,2]-[3,1]-1 = q^4+q^3+q^2-1.
    return {gauss(4, 2, q) - gauss(4, 1, q) - 1, gauss(4, 2, q) - gauss(3, 1, q) - 1};
  }
  Count v = gauss(n, k, q) - gauss(n - k + 1, 1, q) - 1;
  return {v, v};
}

bool check_layer_exceeds_pencil(const Params& p) {
  require_graph_params(p);
  if (p.n < 2 * p.k) throw OutOfRange("layer bound is stated for n >= 2k, got " + to_string(p));
  const int d = p.k - p.t;
  return power(p.q, d * d) * gauss(p.n - p.k, d, p.q) * gauss(p.k, p.t, p.q) >
         gauss(p.n - p.t, d, p.q);
}

bool check_pigeonhole_bound(const Params& p) {
  require_graph_params(p);
  const Count kt = gauss(p.k, p.t, p.q);
  return 3 * kt * kt * gauss(p.n - p.t - 1, p.k - p.t - 1, p.q) <= gauss(p.n - p.t, p.k - p.t, p.q);
}

std::string format_sweep_record(const SweepRecord& r) {
  std::ostringstream os;
  const auto b = [](bool v) { return v ? "true" : "false"; };
  os << r.params.q << ',' << r.params.n << ',' << r.params.k << ',' << r.params.t << ','
     << b(r.layer_exceeds_pencil) << ','
     << (r.pigeonhole_bound ? b(*r.pigeonhole_bound) : "na") << ',' << r.degree.str() << ','
     << r.alpha.str() << ',' << (r.treewidth ? r.treewidth->str() : std::string("na"));
  return os.str();
}

std::vector<SweepRecord> sweep_claims(const std::vector<int>& qs, int kmax, int nmax) {
  std::vector<Params> grid;
  for (int q : qs)
    for (int k = 2; k <= kmax; ++k)
      for (int t = 1; t < k; ++t)
        for (int n = 2 * k; n <= nmax; ++n) grid.push_back({n, k, t, q});

  std::vector<SweepRecord> out(grid.size());
  parallel_for(grid.size(), [&](std::size_t idx) {
    const Params& p = grid[idx];
    SweepRecord& r = out[idx];
    r.params = p;
    r.layer_exceeds_pencil = check_layer_exceeds_pencil(p);
    r.degree = qkneser_degree(p);
    r.alpha = qkneser_independence_number(p);
    r.degree_plus_alpha_below_order = r.degree + r.alpha < gauss(p.n, p.k, p.q);
    if (in_exact_treewidth_range(p)) {
      r.pigeonhole_bound = check_pigeonhole_bound(p);
      r.treewidth = qkneser_treewidth(p);
    }
  });
  return out;
}

}  // namespace qkneser
