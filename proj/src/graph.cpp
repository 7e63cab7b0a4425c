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

#include "qkneser/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "qkneser/error.hpp"
#include "qkneser/gf.hpp"
#include "qkneser/parallel.hpp"

namespace qkneser {

Graph::Graph(std::size_t vertex_count) : rows_(vertex_count, Bitset(vertex_count)) {}

void Graph::add_edge(int u, int v) {
  const auto n = static_cast<int>(vertex_count());
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw OutOfRange("edge endpoint outside vertex range");
  if (u == v) throw OutOfRange("self-loop at vertex " + std::to_string(u));
  rows_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
  rows_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
}

Graph Graph::complement() const {
  Graph out(vertex_count());
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    out.rows_[v] = rows_[v].complement();
    out.rows_[v].reset(v);
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    std::size_t v = rows_[u].find_next(u);
    for (; v != Bitset::npos; v = rows_[u].find_next(v))
      out.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return out;
}

Graph build_from_labels(std::vector<Subspace> labels, const Params& p) {
  Graph g(labels.size());
  const std::size_t n = labels.size();
  // Each worker owns row u and fills the upper triangle; mirrored afterwards.
  parallel_for(n, [&](std::size_t u) {
    for (std::size_t v = u + 1; v < n; ++v)
      if (dim_intersection(labels[u], labels[v]) < p.t) g.rows_[u].set(v);
  });
  for (std::size_t u = 0; u < n; ++u)
    g.rows_[u].for_each([&](std::size_t v) {
      if (v > u) g.rows_[v].set(u);
    });
  g.labels_ = std::move(labels);
  g.meta_ = p;
  return g;
}

Graph build_qkneser(const Params& p, const BuildOptions& opts) {
  if (!(1 <= p.t && p.t < p.k && p.k <= p.n))
    throw OutOfRange("need 1 <= t < k <= n, got " + to_string(p));
  const gf::Field& field = gf::make_field(p.q);
  const Count order = gauss(p.n, p.k, p.q);
  if (order > opts.max_vertices)
    throw TooLarge(to_string(p) + " has " + order.str() + " vertices, above the build limit of " +
                   std::to_string(opts.max_vertices));
  return build_from_labels(enumerate(field, p.n, p.k), p);
}

Graph build_cograssmann(int n, int k, int q, const BuildOptions& opts) {
  if (k < 2) throw OutOfRange("complement-Grassmann graph needs k >= 2");
  return build_qkneser({n, k, k - 1, q}, opts);
}

Count edge_count(const Graph& g) {
  Count twice = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) twice += g.degree(static_cast<int>(v));
  return twice / 2;
}

Count max_degree(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(static_cast<int>(v)));
  return best;
}

bool is_regular(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const std::size_t d = g.degree(0);
  for (std::size_t v = 1; v < g.vertex_count(); ++v)
    if (g.degree(static_cast<int>(v)) != d) return false;
  return true;
}

std::vector<Count> intersection_histogram(const Graph& g, int v) {
  if (g.labels().empty()) throw OutOfRange("intersection histogram needs a labelled graph");
  const auto& labels = g.labels();
  const Subspace& x = labels.at(static_cast<std::size_t>(v));
  std::vector<Count> hist(static_cast<std::size_t>(x.dim() + 1), 0);
  for (const auto& y : labels) hist[static_cast<std::size_t>(dim_intersection(x, y))] += 1;
  return hist;
}

std::vector<std::pair<std::string, std::string>> formula_metadata(const Params& p) {
  std::vector<std::pair<std::string, std::string>> out = {
      {"q", std::to_string(p.q)}, {"n", std::to_string(p.n)},
      {"k", std::to_string(p.k)}, {"t", std::to_string(p.t)},
      {"vertices", gauss(p.n, p.k, p.q).str()}, {"delta", qkneser_degree(p).str()},
  };
  if (p.n >= 2 * p.k) out.emplace_back("alpha", qkneser_independence_number(p).str());
  if (in_exact_treewidth_range(p)) {
    out.emplace_back("tw", qkneser_treewidth(p).str());
  } else if (p.t == p.k - 1 && p.n >= p.k + 2) {
    const auto w = cograssmann_treewidth(p.n, p.k, p.q);
    if (w.exact()) {
      out.emplace_back("tw", w.lower.str());
    } else {
      out.emplace_back("tw_lower", w.lower.str());
      out.emplace_back("tw_upper", w.upper.str());
    }
  }
  return out;
}

void write_gr(const Graph& g, std::ostream& out,
              const std::vector<std::pair<std::string, std::string>>& comments) {
  for (const auto& [key, value] : comments) out << "c " << key << '=' << value << '\n';
  const auto edges = g.edges();
  out << "p tw " << g.vertex_count() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_gr(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Graph> g;
  std::size_t expected_edges = 0;
  std::size_t seen_edges = 0;
  const auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ss(line);
    if (line[0] == 'p') {
      if (g) fail("duplicate header");
      std::string p, tw;
      long long n = -1, m = -1;
      if (!(ss >> p >> tw >> n >> m) || tw != "tw" || n < 0 || m < 0) fail("bad header '" + line + "'");
      g.emplace(static_cast<std::size_t>(n));
      expected_edges = static_cast<std::size_t>(m);
      continue;
    }
    if (!g) fail("edge before header");
    long long u = 0, v = 0;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra)) fail("bad edge line '" + line + "'");
    const auto n = static_cast<long long>(g->vertex_count());
    if (u < 1 || v < 1 || u > n || v > n) fail("vertex out of range");
    if (u == v) fail("self-loop");
    if (g->has_edge(static_cast<int>(u - 1), static_cast<int>(v - 1))) fail("duplicate edge");
    g->add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    ++seen_edges;
  }
  if (!g) throw ParseError("missing 'p tw' header");
  if (seen_edges != expected_edges)
    throw ParseError("header declares " + std::to_string(expected_edges) + " edges, found " +
                     std::to_string(seen_edges));
  return std::move(*g);
}

}  // namespace qkneser
