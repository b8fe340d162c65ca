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

#include "gf2ec/poly.hpp"

#include <algorithm>
#include <bit>

#include "gf2ec/errors.hpp"

namespace gf2ec {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::DoublingUnsupported: return "DoublingUnsupported";
    case ErrorKind::InvalidCurve: return "InvalidCurve";
    case ErrorKind::LayoutMismatch: return "LayoutMismatch";
    case ErrorKind::WidthTooLarge: return "WidthTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::CycleBudgetExceeded: return "CycleBudgetExceeded";
    case ErrorKind::NonGenericInput: return "NonGenericInput";
    case ErrorKind::BadParameter: return "BadParameter";
  }
  return "Unknown";
}

BinaryPolynomial BinaryPolynomial::from_uint(std::uint64_t bits) {
  BinaryPolynomial p;
  if (bits != 0) p.words_.push_back(bits);
  return p;
}

BinaryPolynomial BinaryPolynomial::parse(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorKind::ParseError, "empty polynomial literal");
  }
  BinaryPolynomial p;
  const std::size_t n = text.size();
  for (std::size_t pos = 0; pos < n; ++pos) {
    const char ch = text[pos];
    if (ch != '0' && ch != '1') {
      throw Error(ErrorKind::ParseError,
                  "polynomial literal must be a 0/1 string: '" +
                      std::string(text) + "'");
    }
    if (ch == '1') p.set_coeff(n - 1 - pos, true);
  }
  return p;
}

BinaryPolynomial BinaryPolynomial::monomial(std::size_t exponent) {
  BinaryPolynomial p;
  p.set_coeff(exponent, true);
  return p;
}

std::size_t BinaryPolynomial::degree() const {
  if (is_zero()) {
    throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  }
  return 64 * (words_.size() - 1) + 63 - std::countl_zero(words_.back());
}

int BinaryPolynomial::degree_or_minus_one() const noexcept {
  if (is_zero()) return -1;
  return static_cast<int>(64 * (words_.size() - 1) + 63 -
                          std::countl_zero(words_.back()));
}

bool BinaryPolynomial::coeff(std::size_t i) const noexcept {
  const std::size_t w = i / 64;
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % 64)) & 1U;
}

void BinaryPolynomial::set_coeff(std::size_t i, bool value) {
  if (coeff(i) != value) flip_coeff(i);
}

void BinaryPolynomial::flip_coeff(std::size_t i) {
  const std::size_t w = i / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] ^= std::uint64_t{1} << (i % 64);
  trim();
}

std::uint64_t BinaryPolynomial::to_uint() const {
  if (words_.size() > 1) {
    throw Error(ErrorKind::Overflow, "polynomial does not fit in 64 bits");
  }
  return words_.empty() ? 0 : words_[0];
}

std::string BinaryPolynomial::to_string() const {
  if (is_zero()) return "0";
  return to_string(degree() + 1);
}

std::string BinaryPolynomial::to_string(std::size_t width) const {
  if (!is_zero() && degree() >= width) {
    throw Error(ErrorKind::Overflow, "polynomial wider than " +
                                         std::to_string(width) + " bits");
  }
  std::string out(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if (coeff(i)) out[width - 1 - i] = '1';
  }
  return out;
}

BinaryPolynomial BinaryPolynomial::shifted_up(std::size_t k) const {
  if (is_zero()) return {};
  BinaryPolynomial p;
  const std::size_t word_shift = k / 64;
  const unsigned bit_shift = k % 64;
  p.words_.assign(words_.size() + word_shift + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    p.words_[i + word_shift] |= words_[i] << bit_shift;
    if (bit_shift != 0) {
      p.words_[i + word_shift + 1] |= words_[i] >> (64 - bit_shift);
    }
  }
  p.trim();
  return p;
}

BinaryPolynomial BinaryPolynomial::shifted_down(std::size_t k) const {
  const std::size_t word_shift = k / 64;
  if (word_shift >= words_.size()) return {};
  const unsigned bit_shift = k % 64;
  BinaryPolynomial p;
  p.words_.assign(words_.size() - word_shift, 0);
  for (std::size_t i = 0; i < p.words_.size(); ++i) {
    p.words_[i] = words_[i + word_shift] >> bit_shift;
    if (bit_shift != 0 && i + word_shift + 1 < words_.size()) {
      p.words_[i] |= words_[i + word_shift + 1] << (64 - bit_shift);
    }
  }
  p.trim();
  return p;
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& other) {
  if (other.words_.size() > words_.size()) {
    words_.resize(other.words_.size(), 0);
  }
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    words_[i] ^= other.words_[i];
  }
  trim();
  return *this;
}

BinaryPolynomial operator*(const BinaryPolynomial& lhs,
                           const BinaryPolynomial& rhs) {
  BinaryPolynomial acc;
  if (lhs.is_zero() || rhs.is_zero()) return acc;
  const std::size_t deg = lhs.degree();
  for (std::size_t i = 0; i <= deg; ++i) {
    if (lhs.coeff(i)) acc += rhs.shifted_up(i);
  }
  return acc;
}

std::strong_ordering operator<=>(const BinaryPolynomial& lhs,
                                 const BinaryPolynomial& rhs) {
  if (lhs.words_.size() != rhs.words_.size()) {
    return lhs.words_.size() <=> rhs.words_.size();
  }
  for (std::size_t i = lhs.words_.size(); i-- > 0;) {
    if (lhs.words_[i] != rhs.words_[i]) return lhs.words_[i] <=> rhs.words_[i];
  }
  return std::strong_ordering::equal;
}

void BinaryPolynomial::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

DivMod poly_divmod(const BinaryPolynomial& dividend,
                   const BinaryPolynomial& divisor) {
  if (divisor.is_zero()) {
    throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  }
  DivMod out{{}, dividend};
  const std::size_t dd = divisor.degree();
  while (!out.remainder.is_zero() && out.remainder.degree() >= dd) {
    const std::size_t shift = out.remainder.degree() - dd;
    out.quotient.flip_coeff(shift);
    out.remainder += divisor.shifted_up(shift);
  }
  return out;
}

EuclidResult extended_euclid(const BinaryPolynomial& a,
                             const BinaryPolynomial& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(ErrorKind::BothZero, "extended_euclid of two zero polynomials");
  }
  EuclidResult result;
  result.trace.push_back({a, BinaryPolynomial::one(), {}, {}});
  result.trace.push_back({b, {}, BinaryPolynomial::one(), {}});
  std::size_t last = 1;
  if (b.is_zero()) {
    last = 0;
  } else {
    for (;;) {
      const EuclidStep& prev = result.trace[last - 1];
      const EuclidStep& cur = result.trace[last];
      DivMod dm = poly_divmod(prev.remainder, cur.remainder);
      EuclidStep next{dm.remainder, prev.k + dm.quotient * cur.k,
                      prev.k_prime + dm.quotient * cur.k_prime, {}};
      result.trace[last].quotient = dm.quotient;
      if (next.remainder.is_zero()) break;
      result.trace.push_back(std::move(next));
      ++last;
    }
  }
  result.trace.resize(last + 1);
  result.gcd = result.trace[last].remainder;
  result.k = result.trace[last].k;
  result.k_prime = result.trace[last].k_prime;
  return result;
}

}  // namespace gf2ec
