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

// Acceptance suite: one [PASS]/[FAIL] line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qkneser/ekr.hpp"
#include "qkneser/graph.hpp"
#include "qkneser/qcount.hpp"
#include "qkneser/subspace.hpp"
#include "qkneser/td.hpp"
#include "qkneser/twsolve.hpp"

using namespace qkneser;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  bool gating;
  std::function<Outcome()> run;
};

// Failures listed here are reported red but do not change the exit code.
// Each one is a statement that exact arithmetic shows to be false.
const std::vector<int> kKnownRed = {8};

std::string str(const Count& c) { return c.str(); }

// Everything q-Kneser with q in {2,3} and at most 3000 vertices.
std::vector<Params> small_instances() {
  std::vector<Params> out;
  for (int q : {2, 3})
    for (int n = 2; n <= 12; ++n)
      for (int k = 2; k <= n; ++k)
        for (int t = 1; t < k; ++t)
          if (gauss(n, k, q) <= 3000) out.push_back({n, k, t, q});
  return out;
}

Outcome counting_oracle() {
  Outcome o;
  int cases = 0;
  for (int q : {2, 3, 4}) {
    const auto& f = gf::make_field(q);
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= n; ++k) {
        Count found = 0;
        for_each_subspace(f, n, k, [&](const Subspace&) {
          found += 1;
          return true;
        });
        ++cases;
        if (found != gauss(n, k, q)) {
          o.pass = false;
          o.detail = "mismatch at q=" + std::to_string(q) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
          return o;
        }
      }
  }
  o.detail = std::to_string(cases) + " (q,n,k) cases";
  return o;
}

Outcome gauss_identities_and_bounds() {
  Outcome o;
  int cases = 0;
  for (int q : {2, 3, 4, 5, 7, 8, 9})
    for (int m = 1; m <= 12; ++m)
      for (int i = 1; i <= m; ++i) {
        ++cases;
        if (!check_gauss_identities(m, i, q) || !check_gauss_bounds(m, i, q)) {
          o.pass = false;
          o.detail = "fails at m=" + std::to_string(m) + " i=" + std::to_string(i) + " q=" + std::to_string(q);
          return o;
        }
      }
  o.detail = std::to_string(cases) + " (m,i,q) cases";
  return o;
}

Outcome intersection_counts() {
  Outcome o;
  long long brute = 0;
  for (int q : {2, 3}) {
    const auto& f = gf::make_field(q);
    for (int n = 1; n <= 5; ++n) {
      std::vector<std::vector<Subspace>> layers;
      for (int d = 0; d <= n; ++d) layers.push_back(d == 0 ? std::vector<Subspace>{zero_subspace(f, n)} : enumerate(f, n, d));
      for (int j = 0; j <= n; ++j)
        for (const auto& x : layers[static_cast<std::size_t>(j)])
          for (int i = 0; i <= n; ++i) {
            std::vector<Count> hist(static_cast<std::size_t>(n + 1), 0);
            for (const auto& y : layers[static_cast<std::size_t>(i)])
              hist[static_cast<std::size_t>(dim_intersection(x, y))] += 1;
            for (int m = 0; m <= n; ++m) {
              ++brute;
              if (hist[static_cast<std::size_t>(m)] != intersect_count(n, j, i, m, q)) {
                o.pass = false;
                o.detail = "brute force differs at q=" + std::to_string(q) + " n=" + std::to_string(n) +
                           " j=" + std::to_string(j) + " i=" + std::to_string(i) + " m=" + std::to_string(m);
                return o;
              }
            }
          }
    }
  }
  int sums = 0;
  for (int q : {2, 3, 4, 5})
    for (int n = 0; n <= 8; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) {
          Count total = 0;
          for (int m = 0; m <= n; ++m) total += intersect_count(n, j, i, m, q);
          ++sums;
          if (total != gauss(n, i, q)) {
            o.pass = false;
            o.detail = "row sum differs at q=" + std::to_string(q) + " n=" + std::to_string(n);
            return o;
          }
        }
  o.detail = std::to_string(brute) + " brute-force counts, " + std::to_string(sums) + " row sums";
  return o;
}

Outcome degree_formula() {
  Outcome o;
  int graphs = 0;
  std::size_t vertices = 0;
  for (const auto& p : small_instances()) {
    const Graph g = build_qkneser(p);
    const Count delta = qkneser_degree(p);
    std::vector<Count> expect(static_cast<std::size_t>(p.k + 1));
    for (int m = 0; m <= p.k; ++m) expect[static_cast<std::size_t>(m)] = intersect_count(p.n, p.k, p.k, m, p.q);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (Count(g.degree(static_cast<int>(v))) != delta ||
          intersection_histogram(g, static_cast<int>(v)) != expect) {
        o.pass = false;
        o.detail = "vertex " + std::to_string(v) + " of " + to_string(p);
        return o;
      }
    }
    ++graphs;
    vertices += g.vertex_count();
  }
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(vertices) + " vertices";
  return o;
}

Outcome ekr() {
  Outcome o;
  std::ostringstream d;
  for (const auto& [p, expect] : {std::pair{Params{4, 2, 1, 2}, 7}, std::pair{Params{5, 2, 1, 2}, 15}}) {
    const Graph g = build_qkneser(p);
    const auto r = max_independent_set_exact(g);
    const bool ok = r.exact && r.size == static_cast<std::size_t>(expect) &&
                    Count(r.size) == qkneser_independence_number(p) && is_independent(g, r.witness);
    d << "alpha" << to_string(p) << "=" << r.size << ' ';
    o.pass = o.pass && ok;
  }
  int families = 0;
  for (const auto& p : small_instances()) {
    if (p.n < 2 * p.k) continue;
    const Graph g = build_qkneser(p);
    const auto& f = gf::make_field(p.q);
    std::vector<int> first, last;
    for (int i = 0; i < p.t; ++i) first.push_back(i);
    for (int i = 0; i < p.t; ++i) last.push_back(p.n - p.t + i);
    for (const auto& coords : {first, last}) {
      const auto s = point_pencil(g, coordinate_subspace(f, p.n, coords));
      ++families;
      if (Count(s.count()) != gauss(p.n - p.t, p.k - p.t, p.q) || !is_independent(g, s)) {
        o.pass = false;
        d << "pencil fails on " << to_string(p) << ' ';
      }
    }
    if (p.n == 2 * p.k) {
      std::vector<int> host;
      for (int i = 0; i < p.n - p.t; ++i) host.push_back(i);
      const auto s = nest_family(g, coordinate_subspace(f, p.n, host));
      ++families;
      if (Count(s.count()) != gauss(p.n - p.t, p.k, p.q) || !is_independent(g, s)) {
        o.pass = false;
        d << "nest fails on " << to_string(p) << ' ';
      }
    }
  }
  d << families << " pencil/nest families checked";
  o.detail = d.str();
  return o;
}

Outcome star_width(const Graph& g, const Subspace& center, const Count& expect) {
  const auto pencil = point_pencil(g, center);
  const auto d = star_decomposition(g, pencil);
  const auto report = validate(g, d);
  Outcome o;
  o.pass = report.valid() && Count(width(d)) == expect;
  o.detail = std::to_string(g.vertex_count()) + " vertices, width " + std::to_string(width(d)) +
             " (expected " + str(expect) + "), validator " +
             (report.valid() ? std::string("ok") : to_string(report.violations.front()));
  return o;
}

Outcome theorem_general() {
  const Params p{7, 2, 1, 2};
  const Graph g = build_qkneser(p);
  return star_width(g, coordinate_subspace(gf::make_field(2), 7, {0}), qkneser_treewidth(p));
}

Outcome theorem_cograssmann() {
  const Graph g = build_cograssmann(5, 2, 2);
  return star_width(g, coordinate_subspace(gf::make_field(2), 5, {0}), cograssmann_treewidth(5, 2, 2).lower);
}

Outcome claims_sweep() {
  Outcome o;
  std::vector<int> qs = {2, 3, 4, 5, 7, 8, 9};
  const auto records = sweep_claims(qs, 8, 40);
  std::size_t claim1 = 0, claim2 = 0, claim2_total = 0, conclusion = 0;
  std::ostringstream bad;
  for (const auto& r : records) {
    claim1 += r.layer_exceeds_pencil;
    conclusion += r.degree_plus_alpha_below_order;
    if (r.pigeonhole_bound) {
      ++claim2_total;
      if (*r.pigeonhole_bound) {
        ++claim2;
      } else {
        bad << ' ' << to_string(r.params);
      }
    }
  }
  o.pass = claim1 == records.size() && conclusion == records.size() && claim2 == claim2_total;
  o.detail = "claim1 " + std::to_string(claim1) + "/" + std::to_string(records.size()) + ", delta+alpha<|V| " +
             std::to_string(conclusion) + "/" + std::to_string(records.size()) + ", claim2 " +
             std::to_string(claim2) + "/" + std::to_string(claim2_total);
  if (!bad.str().empty()) o.detail += "; claim2 false at" + bad.str();
  return o;
}

struct Sample {
  std::string name;
  Graph graph;
  std::size_t expect;  // npos: compare with the exhaustive oracle
};

Graph complete(std::size_t m) {
  Graph g(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  return g;
}

Graph cycle(std::size_t m) {
  Graph g(m);
  for (std::size_t v = 0; v < m; ++v) g.add_edge(static_cast<int>(v), static_cast<int>((v + 1) % m));
  return g;
}

Graph grid3() {
  Graph g(9);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      if (c < 2) g.add_edge(3 * r + c, 3 * r + c + 1);
      if (r < 2) g.add_edge(3 * r + c, 3 * r + c + 3);
    }
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// Minimum width over all elimination orderings, by plain recursion.
std::size_t all_orderings(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= 1U << v;
    adj[static_cast<std::size_t>(v)] |= 1U << u;
  }
  std::size_t best = n;
  std::function<void(std::vector<std::uint32_t>, std::uint32_t, std::size_t)> rec =
      [&](std::vector<std::uint32_t> a, std::uint32_t left, std::size_t w) {
        if (!left) {
          best = std::min(best, w);
          return;
        }
        for (std::size_t v = 0; v < n; ++v) {
          if (!(left & (1U << v))) continue;
          const std::uint32_t nb = a[v] & left;
          auto b = a;
          for (std::size_t u = 0; u < n; ++u)
            if (nb & (1U << u)) b[u] |= nb & ~(1U << u);
          rec(std::move(b), left & ~(1U << v), std::max<std::size_t>(w, static_cast<std::size_t>(__builtin_popcount(nb))));
        }
      };
  rec(adj, n == 32 ? ~0U : (1U << n) - 1, 0);
  return best;
}

std::vector<Sample> solver_corpus() {
  std::vector<Sample> out;
  for (std::size_t m = 1; m <= 12; ++m) out.push_back({"K" + std::to_string(m), complete(m), m - 1});
  std::mt19937 rng(20260601);
  for (std::size_t n = 2; n <= 20; ++n) {
    Graph t(n);
    for (std::size_t v = 1; v < n; ++v) t.add_edge(static_cast<int>(rng() % v), static_cast<int>(v));
    out.push_back({"tree" + std::to_string(n), t, 1});
  }
  for (std::size_t m = 3; m <= 20; ++m) out.push_back({"C" + std::to_string(m), cycle(m), 2});
  out.push_back({"grid3x3", grid3(), 3});
  out.push_back({"petersen", petersen(), 4});
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 5 + static_cast<std::size_t>(i % 5);
    Graph g(n);
    const unsigned density = 2 + static_cast<unsigned>(i % 4);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng() % 6 < density) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    out.push_back({"random" + std::to_string(i), g, std::string::npos});
  }
  return out;
}

Outcome solver_sanity() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& s : solver_corpus()) {
    const auto r = treewidth_exact(s.graph);
    const std::size_t expect = s.expect == std::string::npos ? all_orderings(s.graph) : s.expect;
    const bool ok = r.exact() && r.upper == expect && validate(s.graph, r.certificate(s.graph)).valid() &&
                    width(r.certificate(s.graph)) == static_cast<std::int64_t>(expect);
    if (!ok) {
      o.pass = false;
      o.detail += s.name + " gave [" + std::to_string(r.lower) + "," + std::to_string(r.upper) +
                  "] expected " + std::to_string(expect) + "; ";
    }
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " graphs, all exact";
  return o;
}

Outcome separators() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& s : solver_corpus()) {
    const auto r = treewidth_exact(s.graph);
    const auto w = balanced_separator_search(s.graph, r.upper + 1, Ratio{2, 3});
    if (!w || w->separator.size() > r.upper + 1 || !is_balanced_separator(s.graph, *w, Ratio{2, 3})) {
      o.pass = false;
      o.detail += s.name + " has no witness; ";
    }
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " graphs, every witness within tw+1";
  return o;
}

Outcome cograssmann_bracket() {
  const Graph g = build_cograssmann(4, 2, 2);
  TreewidthOptions opts;
  opts.budget = Budget::milliseconds(60'000);
  const auto r = treewidth_exact(g, opts);
  const auto window = cograssmann_treewidth(4, 2, 2);
  Outcome o;
  o.pass = Count(r.lower) >= window.lower && Count(r.upper) <= window.upper && r.lower <= r.upper &&
           validate(g, r.certificate(g)).valid();
  o.detail = "solver bracket [" + std::to_string(r.lower) + "," + std::to_string(r.upper) + "] (" +
             to_string(r.status) + ", " + std::to_string(r.nodes) + " nodes) within window [" +
             str(window.lower) + "," + str(window.upper) + "]";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));

  const std::vector<Criterion> criteria = {
      {1, "subspace enumeration matches Gaussian binomials", true, counting_oracle},
      {2, "Gaussian identities and growth bounds", true, gauss_identities_and_bounds},
      {3, "intersection counts match brute force", true, intersection_counts},
      {4, "built graphs are regular with the predicted degree", true, degree_formula},
      {5, "maximum independent sets, pencils and nests", true, ekr},
      {6, "star decomposition of K_2(7,2,1) has width 2603", true, theorem_general},
      {7, "star decomposition of the complement of G_2(5,2) has width 139", true, theorem_cograssmann},
      {8, "inequality sweep over the parameter grid", true, claims_sweep},
      {9, "exact treewidth solver on reference graphs", true, solver_sanity},
      {10, "balanced separators of size at most tw+1", true, separators},
      {11, "treewidth bracket for the complement of G_2(4,2)", false, cograssmann_bracket},
  };

  int unexpected = 0, red = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << (c.gating ? "" : " (not gating)")
              << " [" << timing << "]: " << o.detail << std::endl;
    if (!o.pass) {
      ++red;
      const bool known = std::find(kKnownRed.begin(), kKnownRed.end(), c.id) != kKnownRed.end();
      if (c.gating && !known) ++unexpected;
    }
  }
  std::cout << "summary: " << red << " red, " << unexpected << " unexpected" << std::endl;
  return unexpected == 0 ? 0 : 1;
}
