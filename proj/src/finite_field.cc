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

#include "ryser/finite_field.h"

#include <stdexcept>
#include <string>

namespace ryser {
namespace {

using Poly = std::vector<int>;  // lowest degree first

void Trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int Mod(long long a, int p) {
  const long long m = a % p;
  return static_cast<int>(m < 0 ? m + p : m);
}

// Remainder of a by the monic polynomial b over GF(p).
Poly Remainder(Poly a, const Poly& b, int p) {
  Trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int lead = a.back();
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = Mod(a[shift + i] - static_cast<long long>(lead) * b[i], p);
    }
    Trim(a);
  }
  return a;
}

Poly Decode(int x, int p, int k) {
  Poly out(k, 0);
  for (int i = 0; i < k; ++i) {
    out[i] = x % p;
    x /= p;
  }
  return out;
}

int Encode(const Poly& a, int p) {
  int x = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) x = x * p + a[i];
  return x;
}

int IntPow(int base, int exp) {
  int out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

}  // namespace

std::vector<int> SupportedFieldOrders() {
  return {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};
}

std::optional<FiniteFieldSpec> DefaultFieldSpec(int q) {
  switch (q) {
    case 2:
    case 3:
    case 5:
    case 7:
    case 11:
    case 13:
      return FiniteFieldSpec{q, q, 1, {}};
    case 4:
      return FiniteFieldSpec{4, 2, 2, {1, 1, 1}};  // x^2 + x + 1
    case 8:
      return FiniteFieldSpec{8, 2, 3, {1, 1, 0, 1}};  // x^3 + x + 1
    case 9:
      return FiniteFieldSpec{9, 3, 2, {1, 0, 1}};  // x^2 + 1
    case 16:
      return FiniteFieldSpec{16, 2, 4, {1, 1, 0, 0, 1}};  // x^4 + x + 1
    case 25:
      return FiniteFieldSpec{25, 5, 2, {1, 1, 1}};  // x^2 + x + 1
    case 27:
      return FiniteFieldSpec{27, 3, 3, {1, 2, 0, 1}};  // x^3 + 2x + 1
    default:
      return std::nullopt;
  }
}

bool IsIrreducible(const std::vector<int>& poly, int p) {
  const int degree = static_cast<int>(poly.size()) - 1;
  if (degree < 1) return false;
  for (int d = 1; d <= degree / 2; ++d) {
    const int count = IntPow(p, d);
    for (int low = 0; low < count; ++low) {
      Poly divisor = Decode(low, p, d);
      divisor.push_back(1);
      if (Remainder(poly, divisor, p).empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(const FiniteFieldSpec& spec) : spec_(spec), q_(spec.q) {
  if (spec.p < 2 || spec.k < 1 || IntPow(spec.p, spec.k) != spec.q) {
    throw std::invalid_argument("field spec: q must equal p^k");
  }
  for (int d = 2; d * d <= spec.p; ++d) {
    if (spec.p % d == 0) throw std::invalid_argument("field spec: p must be prime");
  }
  if (spec.k > 1) {
    if (static_cast<int>(spec.modulus.size()) != spec.k + 1 || spec.modulus.back() != 1) {
      throw std::invalid_argument("field spec: modulus must be monic of degree k");
    }
    if (!IsIrreducible(spec.modulus, spec.p)) {
      throw std::invalid_argument("field spec: modulus is reducible over GF(" +
                                  std::to_string(spec.p) + ")");
    }
  }

  const int p = spec.p;
  const int k = spec.k;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    const Poly pa = Decode(a, p, k);
    Poly na(k);
    for (int i = 0; i < k; ++i) na[i] = Mod(-pa[i], p);
    neg_[a] = Encode(na, p);
    for (int b = 0; b < q_; ++b) {
      const Poly pb = Decode(b, p, k);
      Poly sum(k);
      for (int i = 0; i < k; ++i) sum[i] = (pa[i] + pb[i]) % p;
      add_[a * q_ + b] = Encode(sum, p);

      Poly prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      }
      if (k > 1) prod = Remainder(prod, spec.modulus, p);
      prod.resize(k, 0);
      mul_[a * q_ + b] = Encode(prod, p);
    }
  }
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] == 0) throw std::invalid_argument("field spec: element without inverse");
  }
}

FiniteField FiniteField::OfOrder(int q) {
  const auto spec = DefaultFieldSpec(q);
  if (!spec) {
    throw std::invalid_argument("unsupported field order " + std::to_string(q));
  }
  return FiniteField(*spec);
}

int FiniteField::Inv(int a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  return inv_[a];
}

bool FiniteField::CheckAxioms() const {
  for (int a = 0; a < q_; ++a) {
    if (Add(a, 0) != a || Mul(a, 1) != a || Add(a, Neg(a)) != 0) return false;
    if (a != 0 && Mul(a, Inv(a)) != 1) return false;
    for (int b = 0; b < q_; ++b) {
      if (Add(a, b) != Add(b, a) || Mul(a, b) != Mul(b, a)) return false;
      for (int c = 0; c < q_; ++c) {
        if (Add(Add(a, b), c) != Add(a, Add(b, c))) return false;
        if (Mul(Mul(a, b), c) != Mul(a, Mul(b, c))) return false;
        if (Mul(a, Add(b, c)) != Add(Mul(a, b), Mul(a, c))) return false;
      }
    }
  }
  return true;
}

}  // namespace ryser
