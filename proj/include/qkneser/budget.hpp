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

#include <chrono>
#include <cstdint>
#include <limits>

namespace qkneser {

// Limits on an exact search. Exceeding either stops the search; the result
// is then flagged inexact, never passed off as exact.
struct Budget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  // Wall-clock limit in milliseconds; negative means unlimited.
  std::int64_t max_ms = -1;

  static Budget unlimited() { return {}; }
  static Budget milliseconds(std::int64_t ms) { return {std::numeric_limits<std::uint64_t>::max(), ms}; }
};

// Node counter plus deadline, checked by the solvers' inner loops.
class BudgetTracker {
 public:
  explicit BudgetTracker(const Budget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}

  // Counts one node; returns false once the budget is spent.
  bool tick() {
    if (exhausted_) return false;
    if (++nodes_ > budget_.max_nodes) return exhaust();
    if (budget_.max_ms >= 0 && (nodes_ & 0x3FF) == 0 && elapsed_ms() >= budget_.max_ms) return exhaust();
    return true;
  }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  bool exhaust() {
    exhausted_ = true;
    return false;
  }
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace qkneser
