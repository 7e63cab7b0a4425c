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

#include "qkneser/clique.hpp"

#include <algorithm>
#include <numeric>

namespace qkneser {

namespace {

// Graph relabelled so that vertex i is the i-th vertex in non-increasing
// degree order (ties by original id).
struct OrderedGraph {
  std::vector<int> original;  // new id -> original id
  std::vector<Bitset> adj;

  explicit OrderedGraph(const Graph& g) {
    const std::size_t n = g.vertex_count();
    original.resize(n);
    std::iota(original.begin(), original.end(), 0);
    std::stable_sort(original.begin(), original.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[static_cast<std::size_t>(original[i])] = i;
    adj.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
      g.neighbors(original[i]).for_each([&](std::size_t v) { adj[i].set(position[v]); });
  }

  std::vector<int> map_back(const std::vector<int>& ids) const {
    std::vector<int> out;
    out.reserve(ids.size());
    for (int i : ids) out.push_back(original[static_cast<std::size_t>(i)]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Greedy sequential colouring of `candidates`; returns vertices in order of
// non-decreasing colour with their colour numbers (1-based).
void colour_sort(const OrderedGraph& og, const Bitset& candidates, std::vector<int>& order,
                 std::vector<int>& colours) {
  order.clear();
  colours.clear();
  Bitset uncoloured = candidates;
  int colour = 0;
  while (uncoloured.any()) {
    ++colour;
    Bitset available = uncoloured;
    for (std::size_t v = available.find_first(); v != Bitset::npos; v = available.find_next(v)) {
      available -= og.adj[v];
      uncoloured.reset(v);
      order.push_back(static_cast<int>(v));
      colours.push_back(colour);
    }
  }
}

class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const OrderedGraph& og, const Budget& budget) : og_(og), tracker_(budget) {}

  void run() {
    const std::size_t n = og_.adj.size();
    if (n == 0) return;
    // Greedy seed: walk the degree order.
    Bitset cand(n);
    cand.set_all();
    for (std::size_t v = cand.find_first(); v != Bitset::npos; v = cand.find_first()) {
      best_.push_back(static_cast<int>(v));
      cand &= og_.adj[v];
    }
    Bitset all(n);
    all.set_all();
    std::vector<int> current;
    expand(current, all);
  }

  const std::vector<int>& best() const { return best_; }
  const BudgetTracker& tracker() const { return tracker_; }

 private:
  void expand(std::vector<int>& current, Bitset candidates) {
    if (!tracker_.tick()) return;
    std::vector<int> order;
    std::vector<int> colours;
    colour_sort(og_, candidates, order, colours);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + static_cast<std::size_t>(colours[i]) <= best_.size()) return;
      const int v = order[i];
      current.push_back(v);
      Bitset next = candidates & og_.adj[static_cast<std::size_t>(v)];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      if (tracker_.exhausted()) return;
      candidates.reset(static_cast<std::size_t>(v));
    }
  }

  const OrderedGraph& og_;
  BudgetTracker tracker_;
  std::vector<int> best_;
};

class FixedSizeCliques {
 public:
  FixedSizeCliques(const OrderedGraph& og, std::size_t size,
                   const std::function<void(const std::vector<int>&)>& visit)
      : og_(og), size_(size), visit_(visit) {}

  std::uint64_t run() {
    std::vector<int> current;
    if (size_ == 0) {
      visit_(current);
      return 1;
    }
    Bitset all(og_.adj.size());
    all.set_all();
    expand(current, all);
    return found_;
  }

 private:
  void expand(std::vector<int>& current, Bitset candidates) {
    std::vector<int> order;
    std::vector<int> colours;
    colour_sort(og_, candidates, order, colours);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + static_cast<std::size_t>(colours[i]) < size_) return;
      const int v = order[i];
      current.push_back(v);
      if (current.size() == size_) {
        visit_(og_.map_back(current));
        ++found_;
      } else {
        Bitset next = candidates & og_.adj[static_cast<std::size_t>(v)];
        if (next.any()) expand(current, std::move(next));
      }
      current.pop_back();
      candidates.reset(static_cast<std::size_t>(v));
    }
  }

  const OrderedGraph& og_;
  std::size_t size_;
  const std::function<void(const std::vector<int>&)>& visit_;
  std::uint64_t found_ = 0;
};

}  // namespace

CliqueResult max_clique(const Graph& g, const Budget& budget) {
  const OrderedGraph og(g);
  MaxCliqueSearch search(og, budget);
  search.run();
  CliqueResult r;
  r.vertices = og.map_back(search.best());
  r.exact = !search.tracker().exhausted();
  r.nodes = search.tracker().nodes();
  return r;
}

std::uint64_t for_each_clique_of_size(const Graph& g, std::size_t size,
                                      const std::function<void(const std::vector<int>&)>& visit) {
  const OrderedGraph og(g);
  return FixedSizeCliques(og, size, visit).run();
}

}  // namespace qkneser
