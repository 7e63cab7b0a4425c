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

#include "qkneser/td.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "qkneser/ekr.hpp"
#include "qkneser/error.hpp"

namespace qkneser {

namespace {

std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& d) {
  const auto nodes = static_cast<int>(d.bags.size());
  if (nodes == 0) {
    if (!d.edges.empty()) throw MalformedTree("tree edges without tree nodes");
    return {};
  }
  if (d.edges.size() != static_cast<std::size_t>(nodes - 1))
    throw MalformedTree("a tree on " + std::to_string(nodes) + " nodes needs " +
                        std::to_string(nodes - 1) + " edges, got " + std::to_string(d.edges.size()));
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
  for (const auto& [a, b] : d.edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes) throw MalformedTree("tree edge endpoint out of range");
    if (a == b) throw MalformedTree("tree edge is a loop at node " + std::to_string(a));
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  // n-1 edges plus connectivity rules out cycles.
  std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[static_cast<std::size_t>(x)])
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  if (reached != nodes) throw MalformedTree("tree edges do not connect all nodes");
  return adj;
}

}  // namespace

std::string to_string(const Violation& v) {
  switch (v.kind) {
    case Violation::Kind::uncovered_vertex:
      return "uncovered vertex " + std::to_string(v.u + 1);
    case Violation::Kind::uncovered_edge:
      return "uncovered edge " + std::to_string(v.u + 1) + "-" + std::to_string(v.v + 1);
    case Violation::Kind::disconnected_vertex:
      return "vertex " + std::to_string(v.u + 1) + " has disconnected bags";
  }
  return "unknown violation";
}

ValidationReport validate(const Graph& g, const TreeDecomposition& d) {
  const auto tree = tree_adjacency(d);
  const std::size_t n = g.vertex_count();
  const std::size_t nodes = d.bags.size();

  std::vector<Bitset> bag_sets(nodes, Bitset(n));
  std::vector<std::vector<int>> bags_of(n);
  for (std::size_t b = 0; b < nodes; ++b)
    for (int v : d.bags[b]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw MalformedTree("bag " + std::to_string(b + 1) + " holds out-of-range vertex " +
                            std::to_string(v + 1));
      if (bag_sets[b].test(static_cast<std::size_t>(v)))
        throw MalformedTree("bag " + std::to_string(b + 1) + " repeats vertex " + std::to_string(v + 1));
      bag_sets[b].set(static_cast<std::size_t>(v));
      bags_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(b));
    }

  ValidationReport report;
  for (std::size_t v = 0; v < n; ++v)
    if (bags_of[v].empty()) {
      report.violations.push_back({Violation::Kind::uncovered_vertex, static_cast<int>(v)});
      break;
    }

  for (std::size_t u = 0; u < n; ++u) {
    Bitset covered(n);
    for (int b : bags_of[u]) covered |= bag_sets[static_cast<std::size_t>(b)];
    const Bitset missing = g.neighbors(static_cast<int>(u)) - covered;
    const std::size_t v = missing.find_next(u);
    if (v != Bitset::npos) {
      report.violations.push_back({Violation::Kind::uncovered_edge, static_cast<int>(u), static_cast<int>(v)});
      break;
    }
  }

  std::vector<char> seen(nodes, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& holders = bags_of[v];
    if (holders.size() < 2) continue;
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> stack = {holders.front()};
    seen[static_cast<std::size_t>(holders.front())] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : tree[static_cast<std::size_t>(x)]) {
        const auto yi = static_cast<std::size_t>(y);
        if (!seen[yi] && bag_sets[yi].test(v)) {
          seen[yi] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != holders.size()) {
      report.violations.push_back({Violation::Kind::disconnected_vertex, static_cast<int>(v)});
      break;
    }
  }
  return report;
}

std::int64_t width(const TreeDecomposition& d) {
  std::int64_t best = -1;
  for (const auto& bag : d.bags) best = std::max(best, static_cast<std::int64_t>(bag.size()) - 1);
  return best;
}

TreeDecomposition star_decomposition(const Graph& g, const VertexSet& independent) {
  if (independent.size() != g.vertex_count())
    throw NotIndependent("vertex set does not match the graph's vertex range");
  if (!is_independent(g, independent)) throw NotIndependent("star decomposition needs an independent set");
  TreeDecomposition d;
  d.bags.push_back(independent.complement().to_vector());
  independent.for_each([&](std::size_t v) {
    Bitset bag = g.neighbors(static_cast<int>(v));
    bag.set(v);
    d.edges.emplace_back(0, static_cast<int>(d.bags.size()));
    d.bags.push_back(bag.to_vector());
  });
  return d;
}

TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<int>& order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) throw OutOfRange("elimination ordering must list every vertex once");
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = order[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || position[static_cast<std::size_t>(v)] != n)
      throw OutOfRange("elimination ordering must list every vertex once");
    position[static_cast<std::size_t>(v)] = i;
  }
  std::vector<Bitset> adj(n);
  for (std::size_t v = 0; v < n; ++v) adj[v] = g.neighbors(static_cast<int>(v));
  Bitset remaining(n);
  remaining.set_all();

  TreeDecomposition d;
  d.bags.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<std::size_t>(order[i]);
    remaining.reset(v);
    const Bitset later = adj[v] & remaining;
    later.for_each([&](std::size_t u) {
      adj[u] |= later;
      adj[u].reset(u);
    });
    Bitset bag = later;
    bag.set(v);
    d.bags[i] = bag.to_vector();
    if (i + 1 == n) break;
    std::size_t parent = n;
    later.for_each([&](std::size_t u) { parent = std::min(parent, position[u]); });
    d.edges.emplace_back(static_cast<int>(i), static_cast<int>(parent == n ? i + 1 : parent));
  }
  return d;
}

void write_td(const TreeDecomposition& d, std::size_t vertex_count, std::ostream& out) {
  out << "s td " << d.bags.size() << ' ' << width(d) + 1 << ' ' << vertex_count << '\n';
  for (std::size_t b = 0; b < d.bags.size(); ++b) {
    out << "b " << b + 1;
    for (int v : d.bags[b]) out << ' ' << v + 1;
    out << '\n';
  }
  for (const auto& [a, b] : d.edges) out << a + 1 << ' ' << b + 1 << '\n';
}

ParsedTd read_td(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  const auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
  };
  bool have_header = false;
  long long declared_bags = 0, declared_max = 0, declared_vertices = 0;
  ParsedTd parsed;
  std::vector<char> bag_seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ss(line);
    if (line[0] == 's') {
      if (have_header) fail("duplicate header");
      std::string s, td;
      if (!(ss >> s >> td >> declared_bags >> declared_max >> declared_vertices) || s != "s" ||
          td != "td" || declared_bags < 0 || declared_max < 0 || declared_vertices < 0)
        fail("bad header '" + line + "'");
      have_header = true;
      parsed.vertex_count = static_cast<std::size_t>(declared_vertices);
      parsed.decomposition.bags.resize(static_cast<std::size_t>(declared_bags));
      bag_seen.assign(static_cast<std::size_t>(declared_bags), 0);
      continue;
    }
    if (!have_header) fail("content before 's td' header");
    if (line[0] == 'b') {
      std::string b;
      long long id = 0;
      if (!(ss >> b >> id) || b != "b" || id < 1 || id > declared_bags) fail("bad bag line '" + line + "'");
      if (bag_seen[static_cast<std::size_t>(id - 1)]) fail("bag " + std::to_string(id) + " listed twice");
      bag_seen[static_cast<std::size_t>(id - 1)] = 1;
      auto& bag = parsed.decomposition.bags[static_cast<std::size_t>(id - 1)];
      long long v = 0;
      while (ss >> v) {
        if (v < 1 || v > declared_vertices) fail("bag vertex out of range");
        bag.push_back(static_cast<int>(v - 1));
      }
      if (!ss.eof()) fail("bad bag line '" + line + "'");
      std::sort(bag.begin(), bag.end());
      continue;
    }
    long long a = 0, c = 0;
    std::string extra;
    if (!(ss >> a >> c) || (ss >> extra)) fail("bad tree edge '" + line + "'");
    if (a < 1 || c < 1 || a > declared_bags || c > declared_bags) fail("tree edge node out of range");
    parsed.decomposition.edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(c - 1));
  }
  if (!have_header) throw ParseError("missing 's td' header");
  for (std::size_t b = 0; b < bag_seen.size(); ++b)
    if (!bag_seen[b]) throw ParseError("bag " + std::to_string(b + 1) + " missing");
  if (width(parsed.decomposition) + 1 != declared_max)
    throw ParseError("header max bag size " + std::to_string(declared_max) + " does not match bags");
  return parsed;
}

}  // namespace qkneser
