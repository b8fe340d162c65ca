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

#include "gf2ec/blocks.hpp"
#include "gf2ec/circuit.hpp"
#include "gf2ec/field.hpp"

namespace gf2ec {

/// Coefficient/remainder pairs (a, A) (b, B) of the inversion; the pair with
/// the smaller-degree remainder is stored first.
struct EuclideanPairs {
  BinaryPolynomial a;
  BinaryPolynomial A;
  BinaryPolynomial b;
  BinaryPolynomial B;

  static EuclideanPairs initial(const BinaryPolynomial& c,
                                const FieldSpec& field) {
    return {BinaryPolynomial::one(), c, {}, field.modulus()};
  }

  friend bool operator==(const EuclideanPairs&,
                         const EuclideanPairs&) = default;
};

/// deg(A) < deg(B) and deg(a) > deg(b) (b may be zero).
bool pairs_ordered(const EuclideanPairs& p);
/// One classical iteration (a,A)(b,B) -> (b+qa, B+qA)(a,A), q = B div A.
EuclideanPairs euclid_pairs_step(const EuclideanPairs& p);

/// Width of the loop counter i; it has to hold values up to m.
std::size_t naive_counter_width(std::size_t m);

struct NaiveDivisionWires {
  std::vector<WireId> divisor;   // m+1 wires, top wire 0 on input
  std::vector<WireId> dividend;  // m+1 wires
  std::vector<WireId> quotient;  // m+1 wires, 0 on input
  std::vector<WireId> counter;   // naive_counter_width(m) wires, 0
  std::vector<WireId> degree;    // ceil(log m) wires, 0
  WireId ancilla = 0;
};

/// divisor, dividend, 0 <-> divisor, dividend + q*divisor, q with
/// q = dividend div divisor. Requires divisor != 0, deg(divisor) < m and
/// deg(dividend) <= m. Counter, degree register and ancilla end at 0.
void emit_naive_long_division(Circuit& c, const NaiveDivisionWires& w,
                              std::size_t m);

/// Layout A, B, q (m+1 each), i, d, anc.
Circuit build_naive_long_division(std::size_t m);

/// Layout a, A, b, B, q (m+1 each), i, d, anc. Division of B by A, the
/// reversed division on the coefficients (which uncomputes q), then the
/// pair swap.
Circuit build_euclid_iteration(std::size_t m);

/// Drives the iteration circuit on one input at a time; the number of
/// iterations depends on the input.
class NaiveInverter {
 public:
  explicit NaiveInverter(FieldSpec field);

  struct Result {
    BinaryPolynomial inverse;
    std::vector<EuclideanPairs> trace;  // state before each iteration + final
    std::size_t iterations = 0;
  };

  /// Throws Error(ZeroElement) for zero. Final pairs are (f, 0)(C^-1, 1).
  Result run(const BinaryPolynomial& c) const;

  const FieldSpec& field() const noexcept { return field_; }
  const Circuit& iteration() const noexcept { return iteration_; }
  std::size_t width() const noexcept { return iteration_.layout().width(); }

  EuclideanPairs read_pairs(const BasisState& s) const;
  void write_pairs(BasisState& s, const EuclideanPairs& p) const;
  /// q, i, d and anc all zero.
  bool scratch_clear(const BasisState& s) const;

 private:
  FieldSpec field_;
  Circuit iteration_;
};

BinaryPolynomial run_naive_inversion(const BinaryPolynomial& c,
                                     const FieldSpec& field);

/// JSON array of {"a","A","b","B"} objects (MSB-first bit strings).
std::string trace_to_json(const std::vector<EuclideanPairs>& trace);

}  // namespace gf2ec
