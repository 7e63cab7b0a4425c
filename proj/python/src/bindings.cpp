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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qkneser/ekr.hpp"
#include "qkneser/error.hpp"
#include "qkneser/graph.hpp"
#include "qkneser/qcount.hpp"
#include "qkneser/td.hpp"
#include "qkneser/twsolve.hpp"

namespace py = pybind11;
using namespace qkneser;

namespace {

// Counts leave C++ as Python ints, never as floats.
py::int_ to_py(const Count& c) { return py::int_(py::str(c.str())); }

Params params(int n, int k, int t, int q) { return {n, k, t, q}; }

Budget budget_of(long long budget_ms) {
  Budget b;
  b.max_ms = budget_ms;
  if (budget_ms == 0) b.max_nodes = 0;
  return b;
}

VertexSet to_set(const Graph& g, const std::vector<int>& ids) {
  VertexSet s(g.vertex_count());
  for (int v : ids) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) throw OutOfRange("vertex out of range");
    s.set(static_cast<std::size_t>(v));
  }
  return s;
}

std::vector<int> to_list(const VertexSet& s) { return s.to_vector(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized q-Kneser graphs: exact counts, construction, tree decompositions and solvers.";

  auto base = py::register_exception<Error>(m, "QKneserError", PyExc_ValueError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());

  m.def("gauss", [](int a, int b, int q) { return to_py(gauss(a, b, q)); }, py::arg("a"), py::arg("b"),
        py::arg("q"), "Gaussian binomial [a, b]_q.");
  m.def("intersect_count",
        [](int n, int j, int i, int mm, int q) { return to_py(intersect_count(n, j, i, mm, q)); },
        py::arg("n"), py::arg("j"), py::arg("i"), py::arg("m"), py::arg("q"),
        "Number of i-subspaces meeting a fixed j-subspace of F_q^n in dimension m.");
  m.def("degree", [](int n, int k, int t, int q) { return to_py(qkneser_degree(params(n, k, t, q))); },
        py::arg("n"), py::arg("k"), py::arg("t"), py::arg("q"));
  m.def("independence_number",
        [](int n, int k, int t, int q) { return to_py(qkneser_independence_number(params(n, k, t, q))); },
        py::arg("n"), py::arg("k"), py::arg("t"), py::arg("q"));
  m.def("in_exact_treewidth_range",
        [](int n, int k, int t, int q) { return in_exact_treewidth_range(params(n, k, t, q)); }, py::arg("n"),
        py::arg("k"), py::arg("t"), py::arg("q"));
  m.def("treewidth_formula",
        [](int n, int k, int t, int q) { return to_py(qkneser_treewidth(params(n, k, t, q))); }, py::arg("n"),
        py::arg("k"), py::arg("t"), py::arg("q"));
  m.def(
      "cograssmann_treewidth",
      [](int n, int k, int q) {
        const auto w = cograssmann_treewidth(n, k, q);
        return py::make_tuple(to_py(w.lower), to_py(w.upper));
      },
      py::arg("n"), py::arg("k"), py::arg("q"), "(lower, upper); equal except at n=4, k=2.");
  m.def(
      "sweep",
      [](const std::vector<int>& qs, int kmax, int nmax) {
        std::vector<std::string> out;
        for (const auto& r : sweep_claims(qs, kmax, nmax)) out.push_back(format_sweep_record(r));
        return out;
      },
      py::arg("qs"), py::arg("kmax"), py::arg("nmax"), "CSV records q,n,k,t,claim1,claim2,delta,alpha,tw.");

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("vertex_count"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("edges", &Graph::edges)
      .def("edge_count", [](const Graph& g) { return to_py(edge_count(g)); })
      .def("is_regular", [](const Graph& g) { return is_regular(g); })
      .def(
          "labels",
          [](const Graph& g) {
            std::vector<std::string> out;
            for (const auto& s : g.labels()) out.push_back(s.to_string());
            return out;
          },
          "RREF basis of each vertex, as text.")
      .def("to_gr",
           [](const Graph& g) {
             std::ostringstream os;
             if (g.meta()) {
               write_gr(g, os, formula_metadata(*g.meta()));
             } else {
               write_gr(g, os);
             }
             return os.str();
           })
      .def_static("from_gr", [](const std::string& text) {
        std::istringstream in(text);
        return read_gr(in);
      });

  m.def(
      "build_qkneser",
      [](int n, int k, int t, int q, std::uint64_t max_vertices) {
        return build_qkneser(params(n, k, t, q), {max_vertices});
      },
      py::arg("n"), py::arg("k"), py::arg("t"), py::arg("q"), py::arg("max_vertices") = 5000,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "build_cograssmann",
      [](int n, int k, int q, std::uint64_t max_vertices) { return build_cograssmann(n, k, q, {max_vertices}); },
      py::arg("n"), py::arg("k"), py::arg("q"), py::arg("max_vertices") = 5000,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "point_pencil",
      [](const Graph& g, const std::vector<std::vector<int>>& rows) {
        if (!g.meta()) throw OutOfRange("point_pencil needs a q-Kneser graph");
        return to_list(point_pencil(g, canonicalize(gf::make_field(g.meta()->q), rows)));
      },
      py::arg("graph"), py::arg("rows"), "Vertices containing the span of `rows`.");
  m.def(
      "is_independent", [](const Graph& g, const std::vector<int>& ids) { return is_independent(g, to_set(g, ids)); },
      py::arg("graph"), py::arg("vertices"));
  m.def(
      "max_independent_set",
      [](const Graph& g, long long budget_ms) {
        IndependentSetResult r;
        {
          py::gil_scoped_release release;
          r = max_independent_set_exact(g, budget_of(budget_ms));
        }
        py::dict d;
        d["size"] = r.size;
        d["witness"] = to_list(r.witness);
        d["exact"] = r.exact;
        return d;
      },
      py::arg("graph"), py::arg("budget_ms") = -1);

  m.def(
      "star_decomposition",
      [](const Graph& g, const std::vector<int>& independent) {
        const auto d = star_decomposition(g, to_set(g, independent));
        return py::make_tuple(d.bags, d.edges);
      },
      py::arg("graph"), py::arg("independent"), "(bags, tree_edges) with the complement of the set as bag 0.");
  m.def(
      "validate",
      [](const Graph& g, const std::vector<std::vector<int>>& bags, const std::vector<std::pair<int, int>>& edges) {
        std::vector<std::string> out;
        for (const auto& v : validate(g, {bags, edges}).violations) out.push_back(to_string(v));
        return out;
      },
      py::arg("graph"), py::arg("bags"), py::arg("edges"), "Violations; empty when the decomposition is valid.");
  m.def(
      "treewidth",
      [](const Graph& g, long long budget_ms) {
        TreewidthOptions opts;
        opts.budget.max_ms = budget_ms;
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = treewidth_exact(g, opts);
        }
        py::dict d;
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        d["status"] = to_string(r.status);
        d["ordering"] = r.ordering;
        return d;
      },
      py::arg("graph"), py::arg("budget_ms") = -1);
}
