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

#include "qkneser/twsolve.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>

#include "qkneser/clique.hpp"
#include "qkneser/error.hpp"

namespace qkneser {

namespace {

using Mask = std::uint64_t;
using MaskGraph = std::array<Mask, 64>;

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }
int popcount(Mask m) { return std::popcount(m); }

MaskGraph to_masks(const Graph& g) {
  MaskGraph adj{};
  for (std::size_t v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(static_cast<int>(v)).words()[0];
  return adj;
}

// Removes v from the graph on `remaining`, turning its neighbourhood into a
// clique.
void eliminate(MaskGraph& adj, Mask& remaining, std::size_t v) {
  const Mask nb = adj[v] & remaining;
  for (Mask m = nb; m; m &= m - 1) {
    const auto u = static_cast<std::size_t>(std::countr_zero(m));
    adj[u] = (adj[u] | nb) & ~bit(u) & ~bit(v);
  }
  remaining &= ~bit(v);
  adj[v] = 0;
}

bool is_clique(const MaskGraph& adj, Mask set) {
  for (Mask m = set; m; m &= m - 1) {
    const auto u = static_cast<std::size_t>(std::countr_zero(m));
    if ((set & ~bit(u) & ~adj[u]) != 0) return false;
  }
  return true;
}

std::size_t mmw(MaskGraph adj, Mask remaining) {
  int lb = 0;
  while (popcount(remaining) >= 2) {
    std::size_t v = 64;
    int best = 65;
    for (Mask m = remaining; m; m &= m - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(m));
      const int d = popcount(adj[u] & remaining);
      if (d < best) {
        best = d;
        v = u;
      }
    }
    lb = std::max(lb, best);
    const Mask nb = adj[v] & remaining;
    remaining &= ~bit(v);
    if (nb == 0) continue;
    std::size_t target = 64;
    int target_deg = 65;
    for (Mask m = nb; m; m &= m - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(m));
      const int d = popcount(adj[u] & remaining);
      if (d < target_deg) {
        target_deg = d;
        target = u;
      }
    }
    // Contract edge v-target into target.
    for (Mask m = nb & ~bit(target); m; m &= m - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(m));
      adj[w] = (adj[w] & ~bit(v)) | bit(target);
    }
    adj[target] = (adj[target] | nb) & ~bit(target) & ~bit(v);
  }
  return static_cast<std::size_t>(lb);
}

class TreewidthSearch {
 public:
  TreewidthSearch(const MaskGraph& adj, std::size_t n, std::size_t lower, std::size_t upper,
                  std::vector<int> upper_order, const Budget& budget)
      : adj0_(adj), n_(n), lower_(lower), upper_(upper), best_order_(std::move(upper_order)),
        tracker_(budget) {}

  void run() {
    const Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    std::vector<int> prefix;
    search(adj0_, all, 0, prefix);
  }

  std::size_t upper() const { return upper_; }
  const std::vector<int>& best_order() const { return best_order_; }
  const BudgetTracker& tracker() const { return tracker_; }

 private:
  static constexpr std::size_t kMemoLimit = 1U << 22;

  void record(std::size_t width, const std::vector<int>& prefix, Mask remaining) {
    if (width >= upper_) return;
    upper_ = width;
    best_order_ = prefix;
    for (Mask m = remaining; m; m &= m - 1) best_order_.push_back(std::countr_zero(m));
  }

  void search(MaskGraph adj, Mask remaining, std::size_t g, std::vector<int>& prefix) {
    if (!tracker_.tick()) return;
    const std::size_t depth = prefix.size();
    struct Restore {
      std::vector<int>& p;
      std::size_t d;
      ~Restore() { p.resize(d); }
    } restore{prefix, depth};

    // Forced eliminations.
    bool reduced = true;
    while (reduced && remaining) {
      reduced = false;
      const std::size_t low = std::max(lower_, g);
      for (Mask m = remaining; m; m &= m - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(m));
        const Mask nb = adj[v] & remaining;
        const auto deg = static_cast<std::size_t>(popcount(nb));
        bool forced = is_clique(adj, nb);
        if (!forced && deg <= low) {
          // Almost simplicial: dropping one neighbour leaves a clique.
          for (Mask x = nb; x && !forced; x &= x - 1) forced = is_clique(adj, nb & ~(x & -x));
        }
        if (forced) {
          g = std::max(g, deg);
          if (g >= upper_) return;
          eliminate(adj, remaining, v);
          prefix.push_back(static_cast<int>(v));
          reduced = true;
          break;
        }
      }
    }

    const auto r = static_cast<std::size_t>(popcount(remaining));
    if (r == 0 || r - 1 <= g) {
      record(g, prefix, remaining);
      return;
    }
    if (g >= upper_) return;

    if (auto it = memo_.find(remaining); it != memo_.end()) {
      if (it->second <= g) return;
      it->second = g;
    } else if (memo_.size() < kMemoLimit) {
      memo_.emplace(remaining, g);
    }

    if (std::max(g, mmw(adj, remaining)) >= upper_) return;

    for (Mask m = remaining; m; m &= m - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(m));
      const std::size_t child_g = std::max(g, static_cast<std::size_t>(popcount(adj[v] & remaining)));
      if (child_g >= upper_) continue;
      MaskGraph child = adj;
      Mask child_remaining = remaining;
      eliminate(child, child_remaining, v);
      prefix.push_back(static_cast<int>(v));
      search(child, child_remaining, child_g, prefix);
      prefix.pop_back();
      if (tracker_.exhausted() || upper_ <= std::max(lower_, g)) return;
    }
  }

  MaskGraph adj0_;
  std::size_t n_;
  std::size_t lower_;
  std::size_t upper_;
  std::vector<int> best_order_;
  BudgetTracker tracker_;
  std::unordered_map<Mask, std::size_t> memo_;
};

std::vector<int> greedy_ordering(const Graph& g, bool by_fill) {
  const std::size_t n = g.vertex_count();
  std::vector<Bitset> adj(n);
  for (std::size_t v = 0; v < n; ++v) adj[v] = g.neighbors(static_cast<int>(v));
  Bitset remaining(n);
  remaining.set_all();
  std::vector<int> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = Bitset::npos;
    std::size_t best_score = 0;
    remaining.for_each([&](std::size_t v) {
      const Bitset nb = adj[v] & remaining;
      std::size_t score = 0;
      if (by_fill) {
        // Missing edges inside the neighbourhood, each counted twice.
        nb.for_each([&](std::size_t u) { score += nb.count() - 1 - (adj[u] & nb).count(); });
      } else {
        score = nb.count();
      }
      if (best == Bitset::npos || score < best_score) {
        best = v;
        best_score = score;
      }
    });
    const Bitset nb = adj[best] & remaining;
    nb.for_each([&](std::size_t u) {
      adj[u] |= nb;
      adj[u].reset(u);
    });
    remaining.reset(best);
    order.push_back(static_cast<int>(best));
  }
  return order;
}

}  // namespace

std::string to_string(SolveStatus s) { return s == SolveStatus::exact ? "exact" : "bracket"; }

std::size_t ordering_width(const Graph& g, const std::vector<int>& order) {
  const auto d = decomposition_from_ordering(g, order);
  return static_cast<std::size_t>(std::max<std::int64_t>(0, width(d)));
}

std::vector<int> min_fill_ordering(const Graph& g) { return greedy_ordering(g, true); }
std::vector<int> min_degree_ordering(const Graph& g) { return greedy_ordering(g, false); }

std::size_t minor_min_width(const Graph& g) {
  if (g.vertex_count() > 64) throw TooLarge("minor_min_width supports at most 64 vertices");
  const std::size_t n = g.vertex_count();
  return mmw(to_masks(g), n == 64 ? ~Mask{0} : bit(n) - 1);
}

std::size_t clique_lower_bound(const Graph& g) {
  if (g.vertex_count() > 200) throw TooLarge("exact clique bound supports at most 200 vertices");
  return max_clique(g).vertices.size();
}

SolveResult treewidth_exact(const Graph& g, const TreewidthOptions& opts) {
  const std::size_t n = g.vertex_count();
  if (n > std::min<std::size_t>(opts.max_vertices, 64))
    throw TooLarge("exact treewidth supports at most " +
                   std::to_string(std::min<std::size_t>(opts.max_vertices, 64)) + " vertices, got " +
                   std::to_string(n));
  BudgetTracker clock(Budget::unlimited());
  SolveResult r;
  if (n == 0) {
    r.status = SolveStatus::exact;
    return r;
  }

  auto fill = min_fill_ordering(g);
  auto degree = min_degree_ordering(g);
  const std::size_t wf = ordering_width(g, fill);
  const std::size_t wd = ordering_width(g, degree);
  r.upper = std::min(wf, wd);
  r.ordering = wf <= wd ? fill : degree;

  Budget clique_budget;
  clique_budget.max_nodes = 1'000'000;
  const CliqueResult omega = max_clique(g, clique_budget);
  r.lower = std::max(omega.vertices.size() - 1, minor_min_width(g));

  if (r.lower < r.upper && opts.budget.max_ms != 0 && opts.budget.max_nodes != 0) {
    TreewidthSearch search(to_masks(g), n, r.lower, r.upper, r.ordering, opts.budget);
    search.run();
    r.upper = search.upper();
    r.ordering = search.best_order();
    r.nodes = search.tracker().nodes();
    if (!search.tracker().exhausted()) r.lower = r.upper;
  }
  r.status = r.lower == r.upper ? SolveStatus::exact : SolveStatus::bracket;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

bool is_balanced_separator(const Graph& g, const SeparatorWitness& w, Ratio p) {
  const std::size_t n = g.vertex_count();
  std::vector<int> owner(n, -1);
  const auto claim = [&](const std::vector<int>& part, int tag) {
    for (int v : part) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || owner[static_cast<std::size_t>(v)] != -1) return false;
      owner[static_cast<std::size_t>(v)] = tag;
    }
    return true;
  };
  if (!claim(w.separator, 0) || !claim(w.part_a, 1) || !claim(w.part_b, 2)) return false;
  for (int o : owner)
    if (o == -1) return false;
  for (int a : w.part_a)
    for (int b : w.part_b)
      if (g.has_edge(a, b)) return false;
  const auto rest = static_cast<long long>(w.part_a.size() + w.part_b.size());
  const auto fits = [&](std::size_t size) {
    const auto s = static_cast<long long>(size);
    return (p.den - p.num) * rest <= p.den * s && p.den * s <= p.num * rest;
  };
  return fits(w.part_a.size()) && fits(w.part_b.size());
}

std::optional<SeparatorWitness> balanced_separator_search(const Graph& g, std::size_t size_cap, Ratio p) {
  const std::size_t n = g.vertex_count();
  if (n > 40 || size_cap > 12)
    throw SearchSpaceTooLarge("exhaustive separator search is limited to 40 vertices and |X| <= 12");
  if (p.den <= 0 || p.num >= p.den || 3 * p.num < 2 * p.den)
    throw OutOfRange("balance ratio must lie in [2/3, 1)");
  const MaskGraph adj = to_masks(g);
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;

  std::vector<Mask> components;
  const auto try_separator = [&](Mask x) -> std::optional<SeparatorWitness> {
    const Mask rest = all & ~x;
    const auto r = static_cast<long long>(popcount(rest));
    components.clear();
    for (Mask left = rest; left;) {
      Mask comp = left & -left;
      Mask frontier = comp;
      while (frontier) {
        Mask next = 0;
        for (Mask m = frontier; m; m &= m - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(m))];
        next &= rest & ~comp;
        comp |= next;
        frontier = next;
      }
      if (p.den * static_cast<long long>(popcount(comp)) > p.num * r) return std::nullopt;
      components.push_back(comp);
      left &= ~comp;
    }
    // Largest components first; fill A until it reaches its lower bound.
    std::sort(components.begin(), components.end(),
              [](Mask a, Mask b) { return popcount(a) > popcount(b); });
    Mask a = 0;
    for (Mask c : components) {
      if ((p.den - p.num) * r <= p.den * static_cast<long long>(popcount(a))) break;
      a |= c;
    }
    const auto to_ids = [](Mask m) {
      std::vector<int> ids;
      for (; m; m &= m - 1) ids.push_back(std::countr_zero(m));
      return ids;
    };
    SeparatorWitness w{to_ids(x), to_ids(a), to_ids(rest & ~a)};
    if (!is_balanced_separator(g, w, p)) return std::nullopt;
    return w;
  };

  for (std::size_t s = 0; s <= std::min(size_cap, n); ++s) {
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      Mask x = 0;
      for (std::size_t v : pick) x |= bit(v);
      if (auto w = try_separator(x)) return w;
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == n - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace qkneser
