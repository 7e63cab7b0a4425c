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

#include "qkneser/subspace.hpp"

#include <algorithm>
#include <sstream>

#include "qkneser/error.hpp"
#include "qkneser/qcount.hpp"

namespace qkneser {

namespace {

// In-place Gaussian elimination to RREF on a rows x n matrix. Returns the
// rank; the first `rank` rows hold the reduced basis and pivots receives
// their pivot columns.
int reduce_to_rref(const gf::Field& f, int rows, int n, std::uint8_t* m, std::vector<int>* pivots) {
  int rank = 0;
  for (int col = 0; col < n && rank < rows; ++col) {
    int sel = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r * n + col] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != rank)
      for (int c = 0; c < n; ++c) std::swap(m[sel * n + c], m[rank * n + c]);
    std::uint8_t* prow = m + rank * n;
    const std::uint8_t s = f.inv_raw(prow[col]);
    if (s != 1)
      for (int c = col; c < n; ++c) prow[c] = f.mul_raw(prow[c], s);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      std::uint8_t* row = m + r * n;
      const std::uint8_t factor = row[col];
      if (factor == 0) continue;
      const std::uint8_t nf = f.neg_raw(factor);
      for (int c = col; c < n; ++c)
        if (prow[c]) row[c] = f.add_raw(row[c], f.mul_raw(nf, prow[c]));
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

// Rank of the residual of b modulo a (both RREF), i.e. dim(a + b) - dim(a).
int residual_rank(const Subspace& a, const Subspace& b) {
  const gf::Field& f = a.field();
  const int n = a.ambient_dim();
  const int kb = b.dim();
  thread_local std::vector<std::uint8_t> scratch;
  scratch.assign(b.basis().begin(), b.basis().end());
  const auto& pa = a.pivot_cols();
  for (int r = 0; r < kb; ++r) {
    std::uint8_t* row = scratch.data() + r * n;
    for (int i = 0; i < a.dim(); ++i) {
      const std::uint8_t c = row[pa[static_cast<std::size_t>(i)]];
      if (c == 0) continue;
      const std::uint8_t nc = f.neg_raw(c);
      const auto arow = a.row(i);
      for (int j = pa[static_cast<std::size_t>(i)]; j < n; ++j)
        if (arow[static_cast<std::size_t>(j)])
          row[j] = f.add_raw(row[j], f.mul_raw(nc, arow[static_cast<std::size_t>(j)]));
    }
  }
  return reduce_to_rref(f, kb, n, scratch.data(), nullptr);
}

void require_compatible(const Subspace& a, const Subspace& b) {
  if (&a.field() != &b.field() || a.ambient_dim() != b.ambient_dim())
    throw AmbientMismatch("subspaces live in different ambient spaces: GF(" +
                          std::to_string(a.field().q()) + ")^" + std::to_string(a.ambient_dim()) +
                          " vs GF(" + std::to_string(b.field().q()) + ")^" +
                          std::to_string(b.ambient_dim()));
}

}  // namespace

bool operator==(const Subspace& a, const Subspace& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.k_ == b.k_ && a.basis_ == b.basis_;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.field_->q() <=> b.field_->q(); c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  if (auto c = a.pivots_ <=> b.pivots_; c != 0) return c;
  return a.basis_ <=> b.basis_;
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < k_; ++r) {
    if (r) os << ',';
    os << '[';
    for (int c = 0; c < n_; ++c) {
      if (c) os << ',';
      os << static_cast<int>(basis_[static_cast<std::size_t>(r * n_ + c)]);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Subspace canonicalize(const gf::Field& field, int n, int rows, std::span<const std::uint8_t> matrix) {
  if (rows <= 0) throw EmptyMatrix("cannot canonicalize a matrix with no rows");
  if (n < 0 || matrix.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(n))
    throw DimMismatch("matrix size does not match rows x n");
  for (std::uint8_t v : matrix)
    if (v >= field.q()) throw OutOfRange("matrix entry outside GF(" + std::to_string(field.q()) + ")");
  std::vector<std::uint8_t> m(matrix.begin(), matrix.end());
  std::vector<int> pivots;
  const int rank = reduce_to_rref(field, rows, n, m.data(), &pivots);
  m.resize(static_cast<std::size_t>(rank * n));
  return Subspace(&field, n, rank, std::move(m), std::move(pivots));
}

Subspace canonicalize(const gf::Field& field, const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw EmptyMatrix("cannot canonicalize a matrix with no rows");
  const auto n = rows.front().size();
  std::vector<std::uint8_t> flat;
  flat.reserve(rows.size() * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw DimMismatch("ragged matrix");
    for (int v : r) {
      if (v < 0 || v >= field.q())
        throw OutOfRange("matrix entry outside GF(" + std::to_string(field.q()) + ")");
      flat.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return canonicalize(field, static_cast<int>(n), static_cast<int>(rows.size()), flat);
}

Subspace zero_subspace(const gf::Field& field, int n) {
  std::vector<std::uint8_t> zeros(static_cast<std::size_t>(n), 0);
  return canonicalize(field, n, 1, zeros);
}

Subspace coordinate_subspace(const gf::Field& field, int n, const std::vector<int>& coords) {
  if (coords.empty()) return zero_subspace(field, n);
  std::vector<std::uint8_t> m(coords.size() * static_cast<std::size_t>(n), 0);
  for (std::size_t r = 0; r < coords.size(); ++r) {
    if (coords[r] < 0 || coords[r] >= n) throw OutOfRange("coordinate outside ambient space");
    m[r * static_cast<std::size_t>(n) + static_cast<std::size_t>(coords[r])] = 1;
  }
  return canonicalize(field, n, static_cast<int>(coords.size()), m);
}

int dim_sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  return a.dim() + residual_rank(a, b);
}

int dim_intersection(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  return b.dim() - residual_rank(a, b);
}

bool contains(const Subspace& outer, const Subspace& inner) {
  return dim_intersection(outer, inner) == inner.dim();
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  std::vector<std::uint8_t> m(a.basis().begin(), a.basis().end());
  m.insert(m.end(), b.basis().begin(), b.basis().end());
  if (m.empty()) return zero_subspace(a.field(), a.ambient_dim());
  return canonicalize(a.field(), a.ambient_dim(), a.dim() + b.dim(), m);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  const gf::Field& f = a.field();
  const int n = a.ambient_dim();
  const int rows = a.dim() + b.dim();
  if (a.dim() == 0 || b.dim() == 0) return zero_subspace(f, n);
  // Rows [a | a] and [b | 0]; after elimination the rows whose left half
  // vanishes carry a basis of the intersection in their right half.
  std::vector<std::uint8_t> m(static_cast<std::size_t>(rows * 2 * n), 0);
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < n; ++c) {
      const auto v = a.row(r)[static_cast<std::size_t>(c)];
      m[static_cast<std::size_t>(r * 2 * n + c)] = v;
      m[static_cast<std::size_t>(r * 2 * n + n + c)] = v;
    }
  for (int r = 0; r < b.dim(); ++r)
    for (int c = 0; c < n; ++c)
      m[static_cast<std::size_t>((a.dim() + r) * 2 * n + c)] = b.row(r)[static_cast<std::size_t>(c)];
  std::vector<int> pivots;
  const int rank = reduce_to_rref(f, rows, 2 * n, m.data(), &pivots);
  std::vector<std::uint8_t> inter;
  int count = 0;
  for (int r = 0; r < rank; ++r) {
    if (pivots[static_cast<std::size_t>(r)] < n) continue;
    const auto* row = m.data() + r * 2 * n + n;
    inter.insert(inter.end(), row, row + n);
    ++count;
  }
  if (count == 0) return zero_subspace(f, n);
  return canonicalize(f, n, count, inter);
}

class SubspaceEnumerator {
 public:
  static void run(const gf::Field& field, int n, int k,
                  const std::function<bool(const Subspace&)>& visit, std::uint64_t limit) {
    if (n < 0 || k < 0 || k > n)
      throw OutOfRange("need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    const Count total = gauss(n, k, field.q());
    if (total > limit)
      throw TooLarge("[" + std::to_string(n) + "," + std::to_string(k) + "]_" +
                     std::to_string(field.q()) + " = " + total.str() +
                     " subspaces exceeds the enumeration limit " + std::to_string(limit));
    const int q = field.q();
    const auto nn = static_cast<std::size_t>(n);

    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::vector<char> is_pivot(nn, 0);
      for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
      std::vector<std::size_t> free_slots;  // flat indices into the k x n basis
      std::vector<std::uint8_t> basis(static_cast<std::size_t>(k) * nn, 0);
      for (int r = 0; r < k; ++r) {
        const int p = pivots[static_cast<std::size_t>(r)];
        basis[static_cast<std::size_t>(r) * nn + static_cast<std::size_t>(p)] = 1;
        for (int c = p + 1; c < n; ++c)
          if (!is_pivot[static_cast<std::size_t>(c)])
            free_slots.push_back(static_cast<std::size_t>(r) * nn + static_cast<std::size_t>(c));
      }
      // Odometer over the free entries, last slot fastest.
      while (true) {
        if (!visit(Subspace(&field, n, k, basis, pivots))) return;
        std::size_t i = free_slots.size();
        while (i > 0) {
          auto& cell = basis[free_slots[i - 1]];
          if (cell + 1 < q) {
            ++cell;
            break;
          }
          cell = 0;
          --i;
        }
        if (i == 0) break;
      }
      // Next k-combination of [0, n) in lexicographic order.
      int i = k - 1;
      while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pivots[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
};

void for_each_subspace(const gf::Field& field, int n, int k,
                       const std::function<bool(const Subspace&)>& visit, std::uint64_t limit) {
  SubspaceEnumerator::run(field, n, k, visit, limit);
}

std::vector<Subspace> enumerate(const gf::Field& field, int n, int k, std::uint64_t limit) {
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(std::min<Count>(gauss(n, k, field.q()), Count(limit))));
  for_each_subspace(field, n, k, [&](const Subspace& s) {
    out.push_back(s);
    return true;
  }, limit);
  return out;
}

}  // namespace qkneser
