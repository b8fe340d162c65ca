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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gf2ec {

/// Polynomial over GF(2) in the variable z. Coefficient of z^i lives in bit i.
/// Values are kept canonical: no trailing all-zero storage words, so equality
/// is plain word comparison and the zero polynomial has empty storage.
class BinaryPolynomial {
 public:
  BinaryPolynomial() = default;

  /// From the low 64 coefficients packed in an integer (bit i = coeff of z^i).
  static BinaryPolynomial from_uint(std::uint64_t bits);
  /// MSB-first bit string, e.g. "10101" = z^4 + z^2 + 1. Leading zeros are
  /// accepted. Throws Error(ParseError) on any character other than 0/1.
  static BinaryPolynomial parse(std::string_view text);
  static BinaryPolynomial monomial(std::size_t exponent);
  static BinaryPolynomial one() { return from_uint(1); }

  bool is_zero() const noexcept { return words_.empty(); }
  bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }

  /// Throws Error(ZeroPolynomial) for the zero polynomial.
  std::size_t degree() const;
  /// -1 for zero, degree otherwise. Convenience for bookkeeping code.
  int degree_or_minus_one() const noexcept;

  bool coeff(std::size_t i) const noexcept;
  void set_coeff(std::size_t i, bool value);
  void flip_coeff(std::size_t i);

  /// Low 64 coefficients. Throws Error(Overflow) if degree >= 64.
  std::uint64_t to_uint() const;

  /// MSB-first rendering; the zero polynomial renders as "0".
  std::string to_string() const;
  /// MSB-first rendering padded (or checked) to exactly `width` characters.
  std::string to_string(std::size_t width) const;

  BinaryPolynomial shifted_up(std::size_t k) const;  // multiply by z^k
  BinaryPolynomial shifted_down(std::size_t k) const;  // floor divide by z^k

  BinaryPolynomial& operator+=(const BinaryPolynomial& other);
  friend BinaryPolynomial operator+(BinaryPolynomial lhs,
                                    const BinaryPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BinaryPolynomial operator*(const BinaryPolynomial& lhs,
                                    const BinaryPolynomial& rhs);

  friend bool operator==(const BinaryPolynomial&,
                         const BinaryPolynomial&) = default;
  /// Total order: by degree, then lexicographically from the top coefficient.
  friend std::strong_ordering operator<=>(const BinaryPolynomial& lhs,
                                          const BinaryPolynomial& rhs);

 private:
  void trim();

  std::vector<std::uint64_t> words_;
};

inline BinaryPolynomial poly_add(const BinaryPolynomial& a,
                                 const BinaryPolynomial& b) {
  return a + b;
}

inline BinaryPolynomial poly_mul(const BinaryPolynomial& a,
                                 const BinaryPolynomial& b) {
  return a * b;
}

struct DivMod {
  BinaryPolynomial quotient;
  BinaryPolynomial remainder;
};

/// Long division dividend = quotient * divisor + remainder.
/// Throws Error(DivisionByZero) when divisor is zero.
DivMod poly_divmod(const BinaryPolynomial& dividend,
                   const BinaryPolynomial& divisor);

inline std::size_t degree(const BinaryPolynomial& a) { return a.degree(); }

struct EuclidStep {
  BinaryPolynomial remainder;  // r_j
  BinaryPolynomial k;          // coefficient of r_0
  BinaryPolynomial k_prime;    // coefficient of r_1
  BinaryPolynomial quotient;   // q_j used to produce r_{j+1}; zero on the last
};

struct EuclidResult {
  BinaryPolynomial gcd;
  BinaryPolynomial k;
  BinaryPolynomial k_prime;
  std::vector<EuclidStep> trace;
};

/// Extended Euclid over GF(2)[z]: gcd = k*a + k_prime*b. The loop runs until
/// the remainder vanishes; k and k_prime pair with the last nonzero remainder.
/// Throws Error(BothZero) if both inputs are zero.
EuclidResult extended_euclid(const BinaryPolynomial& a,
                             const BinaryPolynomial& b);

}  // namespace gf2ec
