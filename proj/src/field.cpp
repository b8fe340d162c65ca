// Copyright 2026 The gf2ec Authors
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

#include "gf2ec/field.hpp"

#include <bit>
#include <utility>

#include "gf2ec/errors.hpp"

namespace gf2ec {

std::size_t ceil_log2(std::size_t m) {
  if (m <= 1) return 0;
  return std::bit_width(m - 1);
}

bool is_irreducible(const BinaryPolynomial& f) {
  if (f.is_zero()) return false;
  const std::size_t n = f.degree();
  if (n == 0) return false;
  // Any factorization has a factor of degree <= n/2.
  const std::size_t max_deg = n / 2;
  for (std::uint64_t d = 2; d < (std::uint64_t{1} << (max_deg + 1)); ++d) {
    if (poly_divmod(f, BinaryPolynomial::from_uint(d)).remainder.is_zero()) {
      return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(std::size_t m, BinaryPolynomial modulus)
    : m_(m), modulus_(std::move(modulus)) {
  if (m_ < 1 || modulus_.is_zero() || modulus_.degree() != m_) {
    throw Error(ErrorKind::BadModulus,
                "modulus " + modulus_.to_string() + " does not have degree " +
                    std::to_string(m_));
  }
  if (m_ > 32) {
    throw Error(ErrorKind::BadParameter, "field degree above 32 unsupported");
  }
  if (!is_irreducible(modulus_)) {
    throw Error(ErrorKind::NotIrreducible,
                "modulus " + modulus_.to_string() + " is reducible");
  }
}

FieldSpec FieldSpec::standard(std::size_t m) {
  if (m < 2 || m > 32) {
    throw Error(ErrorKind::BadParameter,
                "no standard modulus for m=" + std::to_string(m));
  }
  const BinaryPolynomial top = BinaryPolynomial::monomial(m);
  for (std::size_t k = 1; k < m; ++k) {
    BinaryPolynomial f = top + BinaryPolynomial::monomial(k) +
                         BinaryPolynomial::one();
    if (is_irreducible(f)) return FieldSpec(m, f);
  }
  for (std::size_t k3 = 3; k3 < m; ++k3) {
    for (std::size_t k2 = 2; k2 < k3; ++k2) {
      for (std::size_t k1 = 1; k1 < k2; ++k1) {
        BinaryPolynomial f = top + BinaryPolynomial::monomial(k3) +
                             BinaryPolynomial::monomial(k2) +
                             BinaryPolynomial::monomial(k1) +
                             BinaryPolynomial::one();
        if (is_irreducible(f)) return FieldSpec(m, f);
      }
    }
  }
  throw Error(ErrorKind::NotIrreducible, "no sparse irreducible found");
}

BinaryPolynomial FieldSpec::element(std::uint64_t i) const {
  if (i >= size()) {
    throw Error(ErrorKind::BadParameter, "element index out of range");
  }
  return BinaryPolynomial::from_uint(i);
}

std::vector<BinaryPolynomial> FieldSpec::nonzero_elements() const {
  std::vector<BinaryPolynomial> out;
  out.reserve(size() - 1);
  for (std::uint64_t i = 1; i < size(); ++i) {
    out.push_back(BinaryPolynomial::from_uint(i));
  }
  return out;
}

BinaryPolynomial FieldSpec::reduce(const BinaryPolynomial& x) const {
  return poly_divmod(x, modulus_).remainder;
}

BinaryPolynomial FieldSpec::mul(const BinaryPolynomial& x,
                                const BinaryPolynomial& y) const {
  return reduce(x * y);
}

BinaryPolynomial FieldSpec::invert(const BinaryPolynomial& x) const {
  const BinaryPolynomial c = reduce(x);
  if (c.is_zero()) {
    throw Error(ErrorKind::ZeroElement, "inverse of zero");
  }
  EuclidResult r = extended_euclid(c, modulus_);
  // gcd(c, f) = 1 because f is irreducible and deg(c) < m.
  return reduce(r.k);
}

BinaryPolynomial FieldSpec::div(const BinaryPolynomial& x,
                                const BinaryPolynomial& y) const {
  if (reduce(y).is_zero()) {
    throw Error(ErrorKind::DivisionByZero, "field division by zero");
  }
  return mul(x, invert(y));
}

}  // namespace gf2ec
