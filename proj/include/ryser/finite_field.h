// Copyright 2026 The ryserkit Authors
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

#ifndef RYSER_FINITE_FIELD_H_
#define RYSER_FINITE_FIELD_H_

#include <optional>
#include <vector>

namespace ryser {

// GF(p^k). Elements are encoded as integers in [0, q) whose base-p digits are
// the polynomial coefficients, lowest degree first.
struct FiniteFieldSpec {
  int q = 0;
  int p = 0;
  int k = 0;
  // Monic modulus, coefficients lowest degree first (length k + 1). Empty for
  // prime fields.
  std::vector<int> modulus;
};

// Orders with a built-in modulus: {2,3,5,7,11,13} and {4,8,9,16,25,27}.
std::vector<int> SupportedFieldOrders();

// The built-in spec for `q`, or nullopt if unsupported.
std::optional<FiniteFieldSpec> DefaultFieldSpec(int q);

// True iff the monic polynomial `poly` over GF(p) (lowest degree first) has no
// monic factor of degree 1..deg/2. Exhaustive trial division.
bool IsIrreducible(const std::vector<int>& poly, int p);

// Complete operation tables for a small field.
class FiniteField {
 public:
  // Throws std::invalid_argument on a malformed spec or a reducible modulus.
  explicit FiniteField(const FiniteFieldSpec& spec);
  // Uses DefaultFieldSpec; throws std::invalid_argument if unsupported.
  static FiniteField OfOrder(int q);

  int order() const { return q_; }
  int characteristic() const { return spec_.p; }
  const FiniteFieldSpec& spec() const { return spec_; }

  int Add(int a, int b) const { return add_[a * q_ + b]; }
  int Mul(int a, int b) const { return mul_[a * q_ + b]; }
  int Neg(int a) const { return neg_[a]; }
  // Throws std::domain_error for zero.
  int Inv(int a) const;

  // Exhaustive check of the field axioms over all elements.
  bool CheckAxioms() const;

 private:
  FiniteFieldSpec spec_;
  int q_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
};

}  // namespace ryser

#endif  // RYSER_FINITE_FIELD_H_
