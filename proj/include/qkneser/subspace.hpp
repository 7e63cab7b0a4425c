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

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qkneser/gf.hpp"

namespace qkneser {

// A k-dimensional subspace of F_q^n held as its reduced row echelon basis.
// RREF is canonical, so equality and ordering are plain comparisons of the
// stored basis. The ordering (pivot columns first, then basis entries
// row-major) coincides with enumeration order.
class Subspace {
 public:
  const gf::Field& field() const { return *field_; }
  int ambient_dim() const { return n_; }
  int dim() const { return k_; }
  // Row-major k x n matrix of field element indices.
  std::span<const std::uint8_t> basis() const { return basis_; }
  std::span<const std::uint8_t> row(int i) const {
    return std::span<const std::uint8_t>(basis_).subspan(static_cast<std::size_t>(i * n_),
                                                         static_cast<std::size_t>(n_));
  }
  const std::vector<int>& pivot_cols() const { return pivots_; }

  // Row-major list of coefficient integers, e.g. "[[1,0,1],[0,1,1]]".
  std::string to_string() const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  friend Subspace canonicalize(const gf::Field&, int, int, std::span<const std::uint8_t>);
  friend class SubspaceEnumerator;
  Subspace(const gf::Field* field, int n, int k, std::vector<std::uint8_t> basis,
           std::vector<int> pivots)
      : field_(field), n_(n), k_(k), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  const gf::Field* field_;
  int n_;
  int k_;
  std::vector<std::uint8_t> basis_;
  std::vector<int> pivots_;
};

// Span of the given rows (row-major, rows x n element indices) in RREF.
// Throws EmptyMatrix when rows == 0.
Subspace canonicalize(const gf::Field& field, int n, int rows, std::span<const std::uint8_t> matrix);
Subspace canonicalize(const gf::Field& field, const std::vector<std::vector<int>>& rows);

Subspace zero_subspace(const gf::Field& field, int n);
// span{e_i : i in coords}, 0-indexed coordinates.
Subspace coordinate_subspace(const gf::Field& field, int n, const std::vector<int>& coords);

// All throw AmbientMismatch when the field or ambient dimension differ.
int dim_intersection(const Subspace& a, const Subspace& b);
int dim_sum(const Subspace& a, const Subspace& b);
// True iff inner is a subspace of outer.
bool contains(const Subspace& outer, const Subspace& inner);

// A + B and A ∩ B as subspaces (the latter by Zassenhaus elimination).
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

// Every k-subspace of F_q^n exactly once: pivot sets in lexicographic order,
// then free entries (row-major) counted as base-q digits with the last free
// entry varying fastest. Throws TooLarge if [n,k]_q exceeds limit.
std::vector<Subspace> enumerate(const gf::Field& field, int n, int k,
                                std::uint64_t limit = kDefaultEnumerationLimit);

// Streaming form of enumerate(); visit returns false to stop early.
void for_each_subspace(const gf::Field& field, int n, int k,
                       const std::function<bool(const Subspace&)>& visit,
                       std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace qkneser
