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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gf2ec/poly.hpp"

namespace gf2ec {

/// ceil(log2 m); the single width used for every degree-sized register.
std::size_t ceil_log2(std::size_t m);

bool is_irreducible(const BinaryPolynomial& f);

/// GF(2^m) presented as GF(2)[z] / f with f irreducible of degree m.
class FieldSpec {
 public:
  /// Throws Error(BadModulus) if degree(f) != m, Error(NotIrreducible) if f
  /// has a factor. Irreducibility is checked by exhaustive trial division.
  FieldSpec(std::size_t m, BinaryPolynomial modulus);

  /// A fixed irreducible modulus for 2 <= m <= 32 (a trinomial where one
  /// exists, else a pentanomial).
  static FieldSpec standard(std::size_t m);

  std::size_t m() const noexcept { return m_; }
  const BinaryPolynomial& modulus() const noexcept { return modulus_; }
  std::size_t logm() const noexcept { return ceil_log2(m_); }
  std::size_t size() const noexcept { return std::size_t{1} << m_; }

  bool contains(const BinaryPolynomial& x) const {
    return x.is_zero() || x.degree() < m_;
  }
  /// Element i of the field in integer order (bit pattern i).
  BinaryPolynomial element(std::uint64_t i) const;
  std::vector<BinaryPolynomial> nonzero_elements() const;

  BinaryPolynomial reduce(const BinaryPolynomial& x) const;
  BinaryPolynomial add(const BinaryPolynomial& x,
                       const BinaryPolynomial& y) const {
    return x + y;
  }
  BinaryPolynomial mul(const BinaryPolynomial& x,
                       const BinaryPolynomial& y) const;
  BinaryPolynomial square(const BinaryPolynomial& x) const { return mul(x, x); }
  /// Throws Error(ZeroElement) for zero.
  BinaryPolynomial invert(const BinaryPolynomial& x) const;
  /// Throws Error(DivisionByZero) for a zero divisor.
  BinaryPolynomial div(const BinaryPolynomial& x,
                       const BinaryPolynomial& y) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::size_t m_;
  BinaryPolynomial modulus_;
};

inline BinaryPolynomial field_invert(const BinaryPolynomial& c,
                                     const FieldSpec& field) {
  return field.invert(c);
}
inline BinaryPolynomial field_mul(const BinaryPolynomial& x,
                                  const BinaryPolynomial& y,
                                  const FieldSpec& field) {
  return field.mul(x, y);
}
inline BinaryPolynomial field_div(const BinaryPolynomial& x,
                                  const BinaryPolynomial& y,
                                  const FieldSpec& field) {
  return field.div(x, y);
}

}  // namespace gf2ec
