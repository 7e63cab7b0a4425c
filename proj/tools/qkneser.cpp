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

// qkneser: command-line front end.
//
// Exit status: 0 ok, 1 verification failure, 2 usage error, 3 resource limit.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qkneser/ekr.hpp"
#include "qkneser/error.hpp"
#include "qkneser/graph.hpp"
#include "qkneser/parallel.hpp"
#include "qkneser/qcount.hpp"
#include "qkneser/td.hpp"
#include "qkneser/twsolve.hpp"

namespace fs = std::filesystem;
using namespace qkneser;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3 };

const auto kStart = std::chrono::steady_clock::now();

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Stable key=value report on stdout.
class Report {
 public:
  explicit Report(const std::string& command) { add("command", command); }
  template <typename T>
  void add(const std::string& key, const T& value) {
    std::ostringstream os;
    os << value;
    lines_.emplace_back(key, os.str());
  }
  void add(const std::string& key, bool value) { lines_.emplace_back(key, value ? "true" : "false"); }
  void add(const std::string& key, const Count& value) { lines_.emplace_back(key, value.str()); }
  void params(const Params& p) {
    add("q", p.q);
    add("n", p.n);
    add("k", p.k);
    add("t", p.t);
  }
  void print(std::ostream& out) const {
    for (const auto& [k, v] : lines_) out << k << '=' << v << '\n';
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - kStart).count();
    out << "elapsed_ms=" << static_cast<long long>(ms) << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

struct Options {
  int q = 2, n = 0, k = 0, t = 0;
  std::string format = "gr";
  std::string out;
  std::string in;
  long long budget_ms = -1;
  unsigned threads = 0;
  int qmax = 9;
  int nmax = -1;
  int kmax = 8;
  std::string suite;
  bool mis = false;
};

Params params_of(const Options& o) {
  const Params p{o.n, o.k, o.t, o.q};
  if (!(1 <= p.t && p.t < p.k && p.k <= p.n))
    throw UsageError("need 1 <= t < k <= n, got " + to_string(p));
  if (gf::prime_power_decomposition(p.q).first == 0)
    throw UsageError(std::to_string(p.q) + " is not a prime power");
  return p;
}

fs::path output_path(const Options& o, const std::string& stem, const std::string& ext) {
  if (!o.out.empty()) return o.out;
  const char* dir = std::getenv("QKNESER_OUT_DIR");
  return fs::path(dir && *dir ? dir : ".") / (stem + ext);
}

std::string stem_of(const Params& p) {
  return "kneser_q" + std::to_string(p.q) + "_n" + std::to_string(p.n) + "_k" + std::to_string(p.k) + "_t" +
         std::to_string(p.t);
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

int cmd_params(const Options& o) {
  const Params p = params_of(o);
  Report r("params");
  for (const auto& [key, value] : formula_metadata(p)) r.add(key, value);
  r.add("n_ge_2k", p.n >= 2 * p.k);
  r.add("exact_range", in_exact_treewidth_range(p));
  r.add("cograssmann", p.t == p.k - 1);
  r.print(std::cout);
  return kOk;
}

int cmd_build(const Options& o) {
  if (o.format != "gr") throw UsageError("unsupported format '" + o.format + "'");
  const Params p = params_of(o);
  const Graph g = build_qkneser(p);
  const fs::path path = output_path(o, stem_of(p), ".gr");
  auto out = open_out(path);
  write_gr(g, out, formula_metadata(p));
  Report r("build");
  r.params(p);
  r.add("vertices", g.vertex_count());
  r.add("edges", edge_count(g));
  r.add("regular", is_regular(g));
  r.add("path", path.string());
  r.print(std::cout);
  return kOk;
}

int cmd_decompose(const Options& o) {
  const Params p = params_of(o);
  const Graph g = build_qkneser(p);
  std::vector<int> coords(static_cast<std::size_t>(p.t));
  for (int i = 0; i < p.t; ++i) coords[static_cast<std::size_t>(i)] = i;
  const auto pencil = point_pencil(g, coordinate_subspace(gf::make_field(p.q), p.n, coords));
  const auto d = star_decomposition(g, pencil);
  const auto report = validate(g, d);
  const fs::path path = output_path(o, stem_of(p), ".td");
  auto out = open_out(path);
  write_td(d, g.vertex_count(), out);

  Report r("decompose");
  r.params(p);
  r.add("vertices", g.vertex_count());
  r.add("independent_set", pencil.count());
  r.add("bags", d.bags.size());
  r.add("width", width(d));
  r.add("valid", report.valid());
  if (!report.valid()) r.add("violation", to_string(report.violations.front()));
  std::optional<Count> formula;
  if (in_exact_treewidth_range(p)) {
    formula = qkneser_treewidth(p);
  } else if (p.t == p.k - 1 && p.n >= p.k + 2) {
    const auto w = cograssmann_treewidth(p.n, p.k, p.q);
    formula = w.upper;
    r.add("formula_exact", w.exact());
  }
  if (formula) {
    r.add("formula", *formula);
    r.add("width_matches_formula", Count(width(d)) == *formula);
  }
  r.add("path", path.string());
  r.print(std::cout);
  return report.valid() ? kOk : kVerifyFailed;
}

std::vector<int> prime_powers_up_to(int qmax) {
  std::vector<int> out;
  for (int q = 2; q <= qmax; ++q)
    if (gf::prime_power_decomposition(q).first != 0) out.push_back(q);
  return out;
}

// Graphs with at most `max_vertices` vertices, q <= qmax, n <= nmax.
std::vector<Params> buildable(int qmax, int nmax, std::uint64_t max_vertices) {
  std::vector<Params> out;
  for (int q : prime_powers_up_to(qmax))
    for (int n = 3; n <= nmax; ++n)
      for (int k = 2; k < n; ++k)
        for (int t = 1; t < k; ++t)
          if (gauss(n, k, q) <= max_vertices) out.push_back({n, k, t, q});
  return out;
}

struct Tally {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) failures.push_back(what);
  }
};

Tally suite_identities(int qmax, int mmax) {
  Tally t;
  for (int q : prime_powers_up_to(qmax))
    for (int m = 1; m <= mmax; ++m)
      for (int i = 1; i <= m; ++i) {
        const std::string at = "m=" + std::to_string(m) + " i=" + std::to_string(i) + " q=" + std::to_string(q);
        t.check(check_gauss_identities(m, i, q), "identity " + at);
        t.check(check_gauss_bounds(m, i, q), "bound " + at);
      }
  return t;
}

Tally suite_claims(int qmax, int kmax, int nmax) {
  Tally t;
  for (const auto& rec : sweep_claims(prime_powers_up_to(qmax), kmax, nmax)) {
    const std::string at = to_string(rec.params);
    t.check(rec.layer_exceeds_pencil, "claim1 " + at);
    t.check(rec.degree_plus_alpha_below_order, "delta+alpha<|V| " + at);
    if (rec.pigeonhole_bound) t.check(*rec.pigeonhole_bound, "claim2 " + at);
  }
  return t;
}

Tally suite_degrees(int qmax, int nmax) {
  Tally t;
  for (const auto& p : buildable(qmax, nmax, 3000)) {
    const Graph g = build_qkneser(p);
    const Count delta = qkneser_degree(p);
    bool ok = true;
    for (std::size_t v = 0; v < g.vertex_count() && ok; ++v) ok = Count(g.degree(static_cast<int>(v))) == delta;
    t.check(ok, "degree " + to_string(p));
  }
  return t;
}

Tally suite_ekr(int qmax, int nmax) {
  Tally t;
  for (const auto& p : buildable(qmax, nmax, 3000)) {
    if (p.n < 2 * p.k) continue;
    const Graph g = build_qkneser(p);
    const auto& f = gf::make_field(p.q);
    std::vector<int> coords;
    for (int i = 0; i < p.t; ++i) coords.push_back(i);
    const auto pencil = point_pencil(g, coordinate_subspace(f, p.n, coords));
    t.check(is_independent(g, pencil) && Count(pencil.count()) == qkneser_independence_number(p),
            "pencil " + to_string(p));
    if (p.n == 2 * p.k) {
      std::vector<int> host;
      for (int i = 0; i < p.n - p.t; ++i) host.push_back(i);
      const auto nest = nest_family(g, coordinate_subspace(f, p.n, host));
      t.check(is_independent(g, nest) && Count(nest.count()) == qkneser_independence_number(p),
              "nest " + to_string(p));
    }
    if (g.vertex_count() <= 200) {
      const auto mis = max_independent_set_exact(g);
      t.check(mis.exact && Count(mis.size) == qkneser_independence_number(p), "alpha " + to_string(p));
    }
  }
  return t;
}

Tally suite_td(int qmax, int nmax) {
  Tally t;
  for (const auto& p : buildable(qmax, nmax, 3000)) {
    if (p.n < 2 * p.k) continue;
    const Graph g = build_qkneser(p);
    std::vector<int> coords;
    for (int i = 0; i < p.t; ++i) coords.push_back(i);
    const auto pencil = point_pencil(g, coordinate_subspace(gf::make_field(p.q), p.n, coords));
    const auto d = star_decomposition(g, pencil);
    bool ok = validate(g, d).valid();
    // The center bag holds |V| - alpha vertices.
    ok = ok && Count(width(d)) >= gauss(p.n, p.k, p.q) - qkneser_independence_number(p) - 1;
    if (in_exact_treewidth_range(p)) ok = ok && Count(width(d)) == qkneser_treewidth(p);
    t.check(ok, "star decomposition " + to_string(p));
  }
  return t;
}

Tally suite_separators() {
  std::vector<std::pair<std::string, Graph>> corpus;
  for (std::size_t m = 3; m <= 16; ++m) {
    Graph c(m);
    for (std::size_t v = 0; v < m; ++v) c.add_edge(static_cast<int>(v), static_cast<int>((v + 1) % m));
    corpus.emplace_back("C" + std::to_string(m), c);
  }
  for (std::size_t m = 1; m <= 11; ++m) {
    Graph c(m);
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = u + 1; v < m; ++v) c.add_edge(static_cast<int>(u), static_cast<int>(v));
    corpus.emplace_back("K" + std::to_string(m), c);
  }
  std::mt19937 rng(1);
  for (int i = 0; i < 20; ++i) {
    Graph g(12);
    for (int u = 0; u < 12; ++u)
      for (int v = u + 1; v < 12; ++v)
        if (rng() % 4 == 0) g.add_edge(u, v);
    corpus.emplace_back("random" + std::to_string(i), g);
  }
  Tally t;
  for (const auto& [name, g] : corpus) {
    const auto tw = treewidth_exact(g);
    const auto w = tw.upper + 1 <= 12 ? balanced_separator_search(g, tw.upper + 1) : std::nullopt;
    t.check(tw.exact() && w && is_balanced_separator(g, *w), "separator " + name);
  }
  return t;
}

int cmd_verify(const Options& o) {
  Tally t;
  const auto nmax = [&](int fallback) { return o.nmax < 0 ? fallback : o.nmax; };
  if (o.suite == "identities") {
    t = suite_identities(o.qmax, nmax(12));
  } else if (o.suite == "claims") {
    t = suite_claims(o.qmax, o.kmax, nmax(40));
  } else if (o.suite == "degrees") {
    t = suite_degrees(std::min(o.qmax, 3), nmax(8));
  } else if (o.suite == "ekr") {
    t = suite_ekr(std::min(o.qmax, 3), nmax(8));
  } else if (o.suite == "td") {
    t = suite_td(std::min(o.qmax, 3), nmax(8));
  } else if (o.suite == "separators") {
    t = suite_separators();
  } else {
    throw UsageError("unknown suite '" + o.suite + "'");
  }
  Report r("verify");
  r.add("suite", o.suite);
  r.add("cases", t.cases);
  r.add("failures", t.failures.size());
  r.add("verdict", t.failures.empty() ? "pass" : "fail");
  for (const auto& f : t.failures) r.add("failure", f);
  r.print(std::cout);
  return t.failures.empty() ? kOk : kVerifyFailed;
}

int cmd_sweep(const Options& o) {
  std::cout << "q,n,k,t,claim1,claim2,delta,alpha,tw\n";
  for (const auto& rec : sweep_claims(prime_powers_up_to(o.qmax), o.kmax, o.nmax < 0 ? 40 : o.nmax))
    std::cout << format_sweep_record(rec) << '\n';
  return kOk;
}

int cmd_solve(const Options& o) {
  Graph g;
  std::string source;
  std::string stem;
  if (!o.in.empty()) {
    std::ifstream in(o.in);
    if (!in) throw UsageError("cannot read " + o.in);
    g = read_gr(in);
    source = o.in;
    stem = fs::path(o.in).stem().string();
  } else {
    const Params p = params_of(o);
    g = build_qkneser(p);
    source = to_string(p);
    stem = stem_of(p);
  }
  Budget budget;
  if (o.budget_ms >= 0) budget.max_ms = o.budget_ms;
  Report r("solve");
  r.add("source", source);
  r.add("vertices", g.vertex_count());
  r.add("edges", edge_count(g));
  if (o.mis) {
    if (o.budget_ms == 0) budget.max_nodes = 0;
    const auto res = max_independent_set_exact(g, budget);
    const fs::path path = output_path(o, stem, ".mis");
    auto out = open_out(path);
    write_vertex_set(res.witness, out);
    r.add("problem", "mis");
    r.add("alpha", res.size);
    r.add("status", res.exact ? "exact" : "lower_bound");
    r.add("nodes", res.nodes);
    r.add("path", path.string());
  } else {
    TreewidthOptions opts;
    opts.budget = budget;
    const auto res = treewidth_exact(g, opts);
    const auto d = res.certificate(g);
    const fs::path path = output_path(o, stem, ".td");
    auto out = open_out(path);
    write_td(d, g.vertex_count(), out);
    r.add("problem", "treewidth");
    r.add("lower", res.lower);
    r.add("upper", res.upper);
    r.add("status", to_string(res.status));
    r.add("nodes", res.nodes);
    r.add("certificate_valid", validate(g, d).valid());
    r.add("path", path.string());
  }
  r.print(std::cout);
  return kOk;
}

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("-q", o.q, "field size (prime power)")->capture_default_str();
  cmd->add_option("-n", o.n, "ambient dimension");
  cmd->add_option("-k", o.k, "subspace dimension");
  cmd->add_option("-t", o.t, "adjacency threshold: edge when dim(A & B) < t");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Generalized q-Kneser graphs: counts, construction, tree decompositions, exact solvers.\n"
      "Reports are key=value lines. Output files go to --out, else $QKNESER_OUT_DIR, else the\n"
      "current directory."};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "worker thread cap (0 = all cores)");

  auto* params = app.add_subcommand("params", "print formula values for K_q(n,k,t)");
  add_params(params, o);

  auto* build = app.add_subcommand("build", "build K_q(n,k,t) and write it as a PACE .gr file");
  add_params(build, o);
  build->add_option("--format", o.format, "output format")->check(CLI::IsMember({"gr"}));
  build->add_option("--out", o.out, "output file");

  auto* decompose = app.add_subcommand("decompose", "write the star tree decomposition built from a point pencil");
  add_params(decompose, o);
  decompose->add_option("--out", o.out, "output .td file");

  auto* verify = app.add_subcommand("verify", "run a verification suite; exit 1 on any failure");
  verify->add_option("suite", o.suite, "identities | claims | degrees | ekr | td | separators")->required();
  verify->add_option("--qmax", o.qmax, "largest field size")->capture_default_str();
  verify->add_option("--nmax", o.nmax, "largest dimension (suite-specific default)");
  verify->add_option("--kmax", o.kmax, "largest k for the claims suite")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "print one CSV record per (q,n,k,t): q,n,k,t,claim1,claim2,delta,alpha,tw");
  sweep->add_option("--qmax", o.qmax, "largest field size")->capture_default_str();
  sweep->add_option("--nmax", o.nmax, "largest n (default 40)");
  sweep->add_option("--kmax", o.kmax, "largest k")->capture_default_str();

  auto* solve = app.add_subcommand("solve", "exact treewidth (or --mis) of a .gr file or of K_q(n,k,t)");
  add_params(solve, o);
  solve->add_option("--in", o.in, "input .gr file");
  solve->add_flag("--mis", o.mis, "maximum independent set instead of treewidth");
  solve->add_option("--budget-ms", o.budget_ms, "time budget in milliseconds; 0 skips the search");
  solve->add_option("--out", o.out, "certificate output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  set_thread_limit(o.threads);
  try {
    if (*params) return cmd_params(o);
    if (*build) return cmd_build(o);
    if (*decompose) return cmd_decompose(o);
    if (*verify) return cmd_verify(o);
    if (*sweep) return cmd_sweep(o);
    if (*solve) return cmd_solve(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
