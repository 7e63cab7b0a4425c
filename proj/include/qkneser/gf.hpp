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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qkneser::gf {

// An element of F_q, stored as the integer whose base-p digits are the
// polynomial coefficients (constant term least significant). For prime q
// this is just the residue.
struct Element {
  std::uint8_t value = 0;
  friend bool operator==(Element, Element) = default;
  friend auto operator<=>(Element, Element) = default;
};

// F_q for a supported prime power q = p^e, with full addition and
// multiplication tables. Instances are immutable and interned: make_field(q)
// always returns the same object for the same q, so fields compare by
// address.
class Field {
 public:
  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  // Monic irreducible modulus over Z_p, constant term first (size e + 1).
  const std::vector<int>& modulus() const { return modulus_; }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  Element element(int index) const;

  Element add(Element a, Element b) const { return Element{add_[a.value * q_ + b.value]}; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element neg(Element a) const { return Element{neg_[a.value]}; }
  Element mul(Element a, Element b) const { return Element{mul_[a.value * q_ + b.value]}; }
  // Throws DivisionByZero for a = 0.
  Element inv(Element a) const;
  Element pow(Element a, unsigned long long exponent) const;

  // Raw table access for inner loops that work on packed uint8_t rows.
  std::uint8_t add_raw(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
  std::uint8_t mul_raw(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
  std::uint8_t neg_raw(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv_raw(std::uint8_t a) const { return inv_[a]; }

  std::vector<int> coefficients(Element a) const;
  Element from_coefficients(std::span<const int> coeffs) const;
  std::string to_string(Element a) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  friend const Field& make_field(int q);
  Field(int p, int e, std::vector<int> modulus);

  int p_;
  int e_;
  int q_;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

// Returns the interned field of order q.
// Supported: every prime q <= 128 and the prime powers 4, 8, 9, 16, 25, 27,
// 32, 49, 64, 81, 121, 125, 128 (moduli listed in supported_moduli()).
// Throws BadQ for q < 2, NotPrimePower if q has two distinct prime factors,
// Unsupported for a prime power outside that set.
const Field& make_field(int q);

struct ModulusEntry {
  int q;
  int p;
  int e;
  std::vector<int> coeffs;  // constant term first
};
// The fixed table of extension-field moduli (Conway polynomials).
const std::vector<ModulusEntry>& supported_moduli();

bool is_prime(int x);
// Returns {p, e} with q = p^e, or {0, 0} when q is not a prime power.
std::pair<int, int> prime_power_decomposition(int q);

}  // namespace qkneser::gf
