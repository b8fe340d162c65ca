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

#include "gf2ec/naive_division.hpp"

#include <bit>

#include <json.hpp>

#include "gf2ec/errors.hpp"

namespace gf2ec {

bool pairs_ordered(const EuclideanPairs& p) {
  if (p.A.is_zero() || p.B.is_zero() || p.a.is_zero()) return false;
  if (p.A.degree() >= p.B.degree()) return false;
  return p.b.degree_or_minus_one() < static_cast<int>(p.a.degree());
}

EuclideanPairs euclid_pairs_step(const EuclideanPairs& p) {
  const DivMod dm = poly_divmod(p.B, p.A);
  return {p.b + dm.quotient * p.a, dm.remainder, p.a, p.A};
}

std::size_t naive_counter_width(std::size_t m) { return std::bit_width(m); }

void emit_naive_long_division(Circuit& c, const NaiveDivisionWires& w,
                              std::size_t m) {
  const std::size_t top = m;  // highest dividend position
  if (w.divisor.size() != m + 1 || w.dividend.size() != m + 1 ||
      w.quotient.size() != m + 1) {
    throw Error(ErrorKind::LayoutMismatch, "naive division register widths");
  }
  const WireSpan divisor_low(w.divisor.data(), m);

  auto load_counter = [&](Circuit& out) {
    // i <- top - deg(divisor), one pattern-controlled constant per degree.
    for (std::size_t d = 0; d < m; ++d) {
      emit_xor_constant(out, w.counter, BinaryPolynomial::from_uint(top - d),
                        pattern_controls(w.degree, d));
    }
  };

  emit_degree(c, divisor_low, w.degree, w.ancilla);
  load_counter(c);
  // Align the divisor's leading term with the top dividend position.
  emit_controlled_shift(c, w.divisor, w.counter, ShiftDirection::Left);

  for (std::size_t step = 0; step <= top; ++step) {
    const WireId lead = w.dividend[top - step];
    for (std::size_t i = step; i <= top; ++i) {
      const Controls active = pattern_controls(w.counter, i);
      const WireId qbit = w.quotient[i - step];
      c.x(qbit, with_control(active, {lead, true}));
      emit_conditional_xor(c, qbit, w.divisor, w.dividend, active);
      if (step < i) {
        emit_cyclic_shift(c, w.divisor, ShiftDirection::Right, active);
      }
    }
  }

  load_counter(c);
  emit_inverse(c, [&](Circuit& s) {
    emit_degree(s, divisor_low, w.degree, w.ancilla);
  });
}

namespace {

Layout division_layout(std::size_t m, bool with_coefficients) {
  Layout l;
  if (with_coefficients) l.add("a", m + 1);
  l.add("A", m + 1);
  if (with_coefficients) l.add("b", m + 1);
  l.add("B", m + 1);
  l.add("q", m + 1);
  l.add("i", naive_counter_width(m));
  l.add("d", ceil_log2(m));
  l.add("anc", 1);
  return l;
}

NaiveDivisionWires division_wires(const Layout& l, const char* divisor,
                                  const char* dividend) {
  return {wires_of(l.reg(divisor)), wires_of(l.reg(dividend)),
          wires_of(l.reg("q")),     wires_of(l.reg("i")),
          wires_of(l.reg("d")),     l.wire("anc", 0)};
}

}  // namespace

Circuit build_naive_long_division(std::size_t m) {
  if (m < 2) throw Error(ErrorKind::BadParameter, "naive division needs m>=2");
  Circuit c(division_layout(m, false));
  emit_naive_long_division(c, division_wires(c.layout(), "A", "B"), m);
  return c;
}

Circuit build_euclid_iteration(std::size_t m) {
  if (m < 2) throw Error(ErrorKind::BadParameter, "euclid iteration needs m>=2");
  Circuit c(division_layout(m, true));
  const Layout& l = c.layout();
  emit_naive_long_division(c, division_wires(l, "A", "B"), m);
  // Since deg(b) < deg(a), q = (b + q a) div a: the division run backwards on
  // the coefficients turns (a, b, q) into (a, b + q a, 0).
  emit_inverse(c, [&](Circuit& s) {
    emit_naive_long_division(s, division_wires(l, "a", "b"), m);
  });
  for (std::size_t k = 0; k <= m; ++k) {
    c.swap(l.wire("a", k), l.wire("b", k));
    c.swap(l.wire("A", k), l.wire("B", k));
  }
  return c;
}

NaiveInverter::NaiveInverter(FieldSpec field)
    : field_(std::move(field)), iteration_(build_euclid_iteration(field_.m())) {}

EuclideanPairs NaiveInverter::read_pairs(const BasisState& s) const {
  const Layout& l = iteration_.layout();
  return {s.read(l.reg("a")), s.read(l.reg("A")), s.read(l.reg("b")),
          s.read(l.reg("B"))};
}

void NaiveInverter::write_pairs(BasisState& s, const EuclideanPairs& p) const {
  const Layout& l = iteration_.layout();
  s.write(l.reg("a"), p.a);
  s.write(l.reg("A"), p.A);
  s.write(l.reg("b"), p.b);
  s.write(l.reg("B"), p.B);
}

bool NaiveInverter::scratch_clear(const BasisState& s) const {
  const Layout& l = iteration_.layout();
  for (const char* name : {"q", "i", "d", "anc"}) {
    if (s.read_uint(l.reg(name)) != 0) return false;
  }
  return true;
}

NaiveInverter::Result NaiveInverter::run(const BinaryPolynomial& c) const {
  const BinaryPolynomial value = field_.reduce(c);
  if (value.is_zero()) throw Error(ErrorKind::ZeroElement, "inverse of zero");
  BasisState s(iteration_.layout());
  write_pairs(s, EuclideanPairs::initial(value, field_));
  Result r;
  r.trace.push_back(read_pairs(s));
  // Each iteration strictly lowers deg(A); m+1 is a hard upper bound.
  while (!r.trace.back().A.is_zero()) {
    if (r.iterations > field_.m() + 1) {
      throw Error(ErrorKind::CycleBudgetExceeded, "naive inversion diverged");
    }
    apply_in_place(iteration_, s);
    ++r.iterations;
    if (!scratch_clear(s)) {
      throw Error(ErrorKind::Overflow, "naive iteration left scratch dirty");
    }
    r.trace.push_back(read_pairs(s));
  }
  const EuclideanPairs& last = r.trace.back();
  if (!last.B.is_one() || last.a != field_.modulus()) {
    throw Error(ErrorKind::Overflow, "naive inversion ended in unexpected state");
  }
  r.inverse = last.b;
  return r;
}

BinaryPolynomial run_naive_inversion(const BinaryPolynomial& c,
                                     const FieldSpec& field) {
  return NaiveInverter(field).run(c).inverse;
}

std::string trace_to_json(const std::vector<EuclideanPairs>& trace) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : trace) {
    arr.push_back({{"a", p.a.to_string()},
                   {"A", p.A.to_string()},
                   {"b", p.b.to_string()},
                   {"B", p.B.to_string()}});
  }
  return arr.dump();
}

}  // namespace gf2ec
