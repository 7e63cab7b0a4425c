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

#include "qkneser/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "qkneser/error.hpp"

namespace qkneser::gf {

namespace {

constexpr int kMaxQ = 128;

std::vector<int> digits(int value, int p, int e) {
  std::vector<int> out(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) {
    out[static_cast<std::size_t>(i)] = value % p;
    value /= p;
  }
  return out;
}

int undigits(const std::vector<int>& d, int p) {
  int v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

// Product of two residue polynomials of degree < e, reduced by the monic
// modulus.
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& modulus, int p) {
  const std::size_t e = a.size();
  std::vector<int> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * e - 1; d >= e; --d) {
    const int c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= e; ++i) {
      const std::size_t idx = d - e + i;
      prod[idx] = ((prod[idx] - c * modulus[i]) % p + p) % p;
    }
  }
  prod.resize(e);
  return prod;
}

}  // namespace

bool is_prime(int x) {
  if (x < 2) return false;
  for (int d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

std::pair<int, int> prime_power_decomposition(int q) {
  if (q < 2) return {0, 0};
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return {0, 0};
  return {p, e};
}

const std::vector<ModulusEntry>& supported_moduli() {
  static const std::vector<ModulusEntry> table = {
      {4, 2, 2, {1, 1, 1}},                    // x^2 + x + 1
      {8, 2, 3, {1, 1, 0, 1}},                 // x^3 + x + 1
      {9, 3, 2, {2, 2, 1}},                    // x^2 + 2x + 2
      {16, 2, 4, {1, 1, 0, 0, 1}},             // x^4 + x + 1
      {25, 5, 2, {2, 4, 1}},                   // x^2 + 4x + 2
      {27, 3, 3, {1, 2, 0, 1}},                // x^3 + 2x + 1
      {32, 2, 5, {1, 0, 1, 0, 0, 1}},          // x^5 + x^2 + 1
      {49, 7, 2, {3, 6, 1}},                   // x^2 + 6x + 3
      {64, 2, 6, {1, 1, 0, 1, 1, 0, 1}},       // x^6 + x^4 + x^3 + x + 1
      {81, 3, 4, {2, 1, 0, 0, 1}},             // x^4 + x + 2
      {121, 11, 2, {2, 7, 1}},                 // x^2 + 7x + 2
      {125, 5, 3, {3, 3, 0, 1}},               // x^3 + 3x + 3
      {128, 2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},   // x^7 + x + 1
  };
  return table;
}

Field::Field(int p, int e, std::vector<int> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < e; ++i) q_ *= p;
  const auto qq = static_cast<std::size_t>(q_);
  add_.resize(qq * qq);
  mul_.resize(qq * qq);
  neg_.resize(qq);
  inv_.assign(qq, 0);

  std::vector<std::vector<int>> coeffs(qq);
  for (int x = 0; x < q_; ++x) coeffs[static_cast<std::size_t>(x)] = digits(x, p, e);

  for (int a = 0; a < q_; ++a) {
    const auto& ca = coeffs[static_cast<std::size_t>(a)];
    std::vector<int> n(ca.size());
    for (std::size_t i = 0; i < ca.size(); ++i) n[i] = (p - ca[i]) % p;
    neg_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(undigits(n, p));
    for (int b = 0; b < q_; ++b) {
      const auto& cb = coeffs[static_cast<std::size_t>(b)];
      std::vector<int> s(ca.size());
      for (std::size_t i = 0; i < ca.size(); ++i) s[i] = (ca[i] + cb[i]) % p;
      const auto idx = static_cast<std::size_t>(a * q_ + b);
      add_[idx] = static_cast<std::uint8_t>(undigits(s, p));
      const std::vector<int> m = e == 1 ? std::vector<int>{(ca[0] * cb[0]) % p}
                                        : poly_mulmod(ca, cb, modulus_, p);
      mul_[idx] = static_cast<std::uint8_t>(undigits(m, p));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[static_cast<std::size_t>(a * q_ + b)] == 1) {
        inv_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
        break;
      }
  // A reducible modulus leaves zero divisors, which shows up as a missing inverse.
  for (int a = 1; a < q_; ++a)
    if (inv_[static_cast<std::size_t>(a)] == 0)
      throw Error("internal: modulus for q=" + std::to_string(q_) + " is not irreducible");
}

Element Field::element(int index) const {
  if (index < 0 || index >= q_)
    throw OutOfRange("field element index " + std::to_string(index) + " outside GF(" +
                     std::to_string(q_) + ")");
  return Element{static_cast<std::uint8_t>(index)};
}

Element Field::inv(Element a) const {
  if (a.value == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
  return Element{inv_[a.value]};
}

Element Field::pow(Element a, unsigned long long exponent) const {
  Element result = one();
  Element base = a;
  while (exponent) {
    if (exponent & 1U) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1U;
  }
  return result;
}

std::vector<int> Field::coefficients(Element a) const { return digits(a.value, p_, e_); }

Element Field::from_coefficients(std::span<const int> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(e_))
    throw DimMismatch("expected " + std::to_string(e_) + " coefficients");
  std::vector<int> d(coeffs.begin(), coeffs.end());
  for (int c : d)
    if (c < 0 || c >= p_) throw OutOfRange("coefficient outside [0, p)");
  return Element{static_cast<std::uint8_t>(undigits(d, p_))};
}

std::string Field::to_string(Element a) const {
  if (e_ == 1) return std::to_string(a.value);
  const auto c = coefficients(a);
  std::ostringstream os;
  bool first = true;
  for (int i = e_ - 1; i >= 0; --i) {
    const int ci = c[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || ci != 1) os << ci;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

const Field& make_field(int q) {
  if (q < 2) throw BadQ("q must be at least 2, got " + std::to_string(q));
  const auto [p, e] = prime_power_decomposition(q);
  if (p == 0) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  if (q > kMaxQ) throw Unsupported("GF(" + std::to_string(q) + ") is outside the supported table");

  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> interned;
  std::lock_guard lock(mu);
  if (auto it = interned.find(q); it != interned.end()) return *it->second;

  std::vector<int> modulus;
  if (e == 1) {
    modulus = {0, 1};  // x
  } else {
    for (const auto& entry : supported_moduli())
      if (entry.q == q) modulus = entry.coeffs;
    if (modulus.empty())
      throw Unsupported("GF(" + std::to_string(q) + ") is outside the supported table");
  }
  auto field = std::unique_ptr<Field>(new Field(p, e, std::move(modulus)));
  const Field& ref = *field;
  interned.emplace(q, std::move(field));
  return ref;
}

}  // namespace qkneser::gf
