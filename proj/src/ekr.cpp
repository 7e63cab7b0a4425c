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

#include "qkneser/ekr.hpp"

#include <ostream>

#include "qkneser/clique.hpp"
#include "qkneser/error.hpp"

namespace qkneser {

namespace {

const Params& require_labelled(const Graph& g) {
  if (!g.meta() || g.labels().empty())
    throw OutOfRange("operation needs a graph built from subspaces");
  return *g.meta();
}

VertexSet to_vertex_set(std::size_t n, const std::vector<int>& ids) {
  VertexSet s(n);
  for (int v : ids) s.set(static_cast<std::size_t>(v));
  return s;
}

}  // namespace

VertexSet point_pencil(const Graph& g, const Subspace& center) {
  const Params& p = require_labelled(g);
  if (center.dim() != p.t)
    throw DimMismatch("pencil center must have dimension t=" + std::to_string(p.t) + ", got " +
                      std::to_string(center.dim()));
  VertexSet out(g.vertex_count());
  const auto& labels = g.labels();
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (contains(labels[v], center)) out.set(v);
  return out;
}

VertexSet nest_family(const Graph& g, const Subspace& host) {
  const Params& p = require_labelled(g);
  if (p.n != 2 * p.k) throw OutOfRange("nest family is extremal only for n = 2k, got " + to_string(p));
  if (host.dim() != p.n - p.t)
    throw DimMismatch("host must have dimension n-t=" + std::to_string(p.n - p.t) + ", got " +
                      std::to_string(host.dim()));
  VertexSet out(g.vertex_count());
  const auto& labels = g.labels();
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (contains(host, labels[v])) out.set(v);
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](std::size_t v) {
    if (ok && g.neighbors(static_cast<int>(v)).intersects(s)) ok = false;
  });
  return ok;
}

IndependentSetResult max_independent_set_exact(const Graph& g, const Budget& budget) {
  const CliqueResult c = max_clique(g.complement(), budget);
  IndependentSetResult r;
  r.size = c.vertices.size();
  r.witness = to_vertex_set(g.vertex_count(), c.vertices);
  r.exact = c.exact;
  r.nodes = c.nodes;
  return r;
}

std::uint64_t for_each_independent_set_of_size(const Graph& g, std::size_t size,
                                               const std::function<void(const VertexSet&)>& visit) {
  return for_each_clique_of_size(g.complement(), size, [&](const std::vector<int>& ids) {
    visit(to_vertex_set(g.vertex_count(), ids));
  });
}

FamilyShape classify_family(const Graph& g, const VertexSet& family) {
  const Params& p = require_labelled(g);
  const auto& labels = g.labels();
  const auto members = family.to_vector();
  if (members.empty()) return {};
  Subspace common = labels[static_cast<std::size_t>(members.front())];
  Subspace span = common;
  for (int v : members) {
    common = subspace_intersection(common, labels[static_cast<std::size_t>(v)]);
    span = subspace_sum(span, labels[static_cast<std::size_t>(v)]);
  }
  return {common.dim() >= p.t, span.dim() <= p.n - p.t};
}

void write_vertex_set(const VertexSet& s, std::ostream& out) {
  s.for_each([&](std::size_t v) { out << v + 1 << '\n'; });
}

}  // namespace qkneser
