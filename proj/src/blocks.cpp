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

#include "gf2ec/blocks.hpp"

#include <bit>
#include <string>

#include "gf2ec/errors.hpp"

namespace gf2ec {

std::vector<WireId> wires_of(const Register& reg) {
  return wires_of(reg, 0, reg.width);
}

std::vector<WireId> wires_of(const Register& reg, std::size_t first,
                             std::size_t count) {
  if (first + count > reg.width) {
    throw Error(ErrorKind::LayoutMismatch, "wire slice outside " + reg.name);
  }
  std::vector<WireId> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = reg[first + i];
  return out;
}

Controls pattern_controls(WireSpan reg, std::uint64_t value,
                          const Controls& extra) {
  Controls out = extra;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    out.push_back({reg[i], ((value >> i) & 1U) != 0});
  }
  return out;
}

Controls with_control(Controls controls, Control c) {
  controls.push_back(c);
  return controls;
}

void emit_inverse(Circuit& circuit,
                  const std::function<void(Circuit&)>& body) {
  Circuit scratch(circuit.layout());
  body(scratch);
  circuit.append_raw(inverse(scratch).gates());
}

void emit_swap_cnots(Circuit& c, WireId a, WireId b, const Controls& ctl) {
  c.x(b, with_control(ctl, {a, true}));
  c.x(a, with_control(ctl, {b, true}));
  c.x(b, with_control(ctl, {a, true}));
}

void emit_cyclic_shift(Circuit& c, WireSpan reg, ShiftDirection dir,
                       const Controls& ctl) {
  const std::size_t n = reg.size();
  if (n < 2) return;
  if (dir == ShiftDirection::Left) {
    for (std::size_t i = n - 1; i > 0; --i) c.swap(reg[i], reg[i - 1], ctl);
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) c.swap(reg[i], reg[i + 1], ctl);
  }
}

void emit_controlled_shift(Circuit& c, WireSpan data, WireSpan amount,
                           ShiftDirection dir, const Controls& ctl) {
  for (std::size_t j = 0; j < amount.size(); ++j) {
    const Controls bit_ctl = with_control(ctl, {amount[j], true});
    const std::size_t reps = std::size_t{1} << j;
    for (std::size_t r = 0; r < reps; ++r) {
      emit_cyclic_shift(c, data, dir, bit_ctl);
    }
  }
}

void emit_increment(Circuit& c, WireSpan counter, WireId ancilla,
                    const Controls& ctl) {
  // Highest bit first: bit i flips iff every lower bit is 1.
  Controls below = ctl;
  for (WireId w : counter) below.push_back({w, true});
  c.x(ancilla, below);
  for (std::size_t i = counter.size(); i-- > 0;) {
    below.pop_back();
    c.x(counter[i], below);
  }
}

void emit_decrement(Circuit& c, WireSpan counter, WireId ancilla,
                    const Controls& ctl) {
  c.x(ancilla, ctl);
  emit_inverse(c, [&](Circuit& s) { emit_increment(s, counter, ancilla, ctl); });
  c.x(ancilla, ctl);
}

void emit_degree(Circuit& c, WireSpan poly, WireSpan degree, WireId ancilla) {
  const std::size_t n = poly.size();
  if (n == 0) return;
  if (n - 1 >= (std::uint64_t{1} << degree.size())) {
    throw Error(ErrorKind::BadParameter, "degree register too narrow");
  }
  emit_xor_constant(c, degree, BinaryPolynomial::from_uint(n - 1));
  // Decrement once for every j in [1, n) with poly[n-1..j] all zero.
  Controls zeros;
  for (std::size_t j = n - 1; j >= 1; --j) {
    zeros.push_back({poly[j], false});
    emit_decrement(c, degree, ancilla, zeros);
  }
}

void emit_conditional_xor(Circuit& c, WireId control, WireSpan src,
                          WireSpan dst, const Controls& ctl) {
  if (src.size() != dst.size()) {
    throw Error(ErrorKind::LayoutMismatch, "conditional xor width mismatch");
  }
  const Controls base = with_control(ctl, {control, true});
  for (std::size_t i = 0; i < src.size(); ++i) {
    c.x(dst[i], with_control(base, {src[i], true}));
  }
}

void emit_xor_constant(Circuit& c, WireSpan reg, const BinaryPolynomial& value,
                       const Controls& ctl) {
  if (!value.is_zero() && value.degree() >= reg.size()) {
    throw Error(ErrorKind::Overflow, "constant wider than register");
  }
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (value.coeff(i)) c.x(reg[i], ctl);
  }
}

void emit_mul_by_z(Circuit& c, WireSpan y, const FieldSpec& field,
                   const Controls& ctl) {
  const std::size_t m = field.m();
  if (y.size() != m) {
    throw Error(ErrorKind::LayoutMismatch, "mul_by_z register width != m");
  }
  // After the rotation wire 0 holds the old top coefficient; fold it back in
  // with the low terms of f (f_0 = 1 for irreducible f, so wire 0 is right).
  emit_cyclic_shift(c, y, ShiftDirection::Left, ctl);
  for (std::size_t k = 1; k < m; ++k) {
    if (field.modulus().coeff(k)) c.x(y[k], with_control(ctl, {y[0], true}));
  }
}

void emit_mul_accumulate(Circuit& c, WireSpan x, WireSpan y, WireSpan t,
                         const FieldSpec& field) {
  const std::size_t m = field.m();
  if (x.size() != m || y.size() != m || t.size() != m) {
    throw Error(ErrorKind::LayoutMismatch, "mul_accumulate width mismatch");
  }
  // t += sum_i x_i * (z^i y mod f), walking y through z^i y in place.
  for (std::size_t i = 0; i < m; ++i) {
    emit_conditional_xor(c, x[i], y, t);
    if (i + 1 < m) emit_mul_by_z(c, y, field);
  }
  emit_inverse(c, [&](Circuit& s) {
    for (std::size_t i = 0; i + 1 < m; ++i) emit_mul_by_z(s, y, field);
  });
}

void emit_square_accumulate(Circuit& c, WireSpan src, WireSpan dst,
                            const FieldSpec& field) {
  const std::size_t m = field.m();
  if (src.size() != m || dst.size() != m) {
    throw Error(ErrorKind::LayoutMismatch, "square_accumulate width mismatch");
  }
  for (std::size_t i = 0; i < m; ++i) {
    const BinaryPolynomial column =
        field.reduce(BinaryPolynomial::monomial(2 * i));
    for (std::size_t k = 0; k < m; ++k) {
      if (column.coeff(k)) c.x(dst[k], {{src[i], true}});
    }
  }
}

Circuit build_swap() {
  Layout l;
  l.add("w", 2);
  Circuit c(l);
  emit_swap_cnots(c, l.wire("w", 0), l.wire("w", 1));
  return c;
}

Circuit build_cyclic_shift(std::size_t n, ShiftDirection dir) {
  if (n < 2) throw Error(ErrorKind::BadParameter, "cyclic shift needs n >= 2");
  Layout l;
  l.add("x", n);
  Circuit c(l);
  emit_cyclic_shift(c, wires_of(l.reg("x")), dir);
  return c;
}

Circuit build_controlled_shift(std::size_t n, std::size_t k) {
  if (n < 2 || k < 1) {
    throw Error(ErrorKind::BadParameter, "controlled shift needs n>=2, k>=1");
  }
  Layout l;
  l.add("theta", n);
  l.add("s", k);
  Circuit c(l);
  emit_controlled_shift(c, wires_of(l.reg("theta")), wires_of(l.reg("s")),
                        ShiftDirection::Left);
  return c;
}

Circuit build_increment(std::size_t w) {
  if (w < 1) throw Error(ErrorKind::BadParameter, "increment needs w >= 1");
  Layout l;
  l.add("k", w);
  l.add("anc", 1);
  Circuit c(l);
  emit_increment(c, wires_of(l.reg("k")), l.wire("anc", 0));
  return c;
}

Circuit build_decrement(std::size_t w) {
  if (w < 1) throw Error(ErrorKind::BadParameter, "decrement needs w >= 1");
  Layout l;
  l.add("k", w);
  l.add("anc", 1);
  Circuit c(l);
  emit_decrement(c, wires_of(l.reg("k")), l.wire("anc", 0));
  return c;
}

Circuit build_degree(std::size_t m) {
  if (m < 2) throw Error(ErrorKind::BadParameter, "degree block needs m >= 2");
  Layout l;
  l.add("A", m);
  l.add("deg", ceil_log2(m));
  l.add("anc", 1);
  Circuit c(l);
  emit_degree(c, wires_of(l.reg("A")), wires_of(l.reg("deg")),
              l.wire("anc", 0));
  return c;
}

Circuit build_conditional_xor(std::size_t m) {
  if (m < 1) throw Error(ErrorKind::BadParameter, "cxor needs m >= 1");
  Layout l;
  l.add("ctl", 1);
  l.add("A", m);
  l.add("B", m);
  Circuit c(l);
  emit_conditional_xor(c, l.wire("ctl", 0), wires_of(l.reg("A")),
                       wires_of(l.reg("B")));
  return c;
}

Circuit build_mul_accumulate(const FieldSpec& field) {
  Layout l;
  l.add("x", field.m());
  l.add("y", field.m());
  l.add("t", field.m());
  Circuit c(l);
  emit_mul_accumulate(c, wires_of(l.reg("x")), wires_of(l.reg("y")),
                      wires_of(l.reg("t")), field);
  return c;
}

Circuit build_square_accumulate(const FieldSpec& field) {
  Layout l;
  l.add("x", field.m());
  l.add("t", field.m());
  Circuit c(l);
  emit_square_accumulate(c, wires_of(l.reg("x")), wires_of(l.reg("t")), field);
  return c;
}

std::vector<std::string_view> block_names() {
  return {"swap", "shiftl", "shiftr", "cshift", "inc",
          "dec",  "deg",    "cxor",   "mulacc", "sqacc"};
}

Circuit build_named_block(std::string_view name, const BlockParams& p) {
  if (name == "swap") return build_swap();
  if (name == "shiftl") return build_cyclic_shift(p.n, ShiftDirection::Left);
  if (name == "shiftr") return build_cyclic_shift(p.n, ShiftDirection::Right);
  if (name == "cshift") return build_controlled_shift(p.n, p.k);
  if (name == "inc") return build_increment(p.w);
  if (name == "dec") return build_decrement(p.w);
  if (name == "deg") return build_degree(p.m);
  if (name == "cxor") return build_conditional_xor(p.m);
  if (name == "mulacc") return build_mul_accumulate(FieldSpec::standard(p.m));
  if (name == "sqacc") return build_square_accumulate(FieldSpec::standard(p.m));
  throw Error(ErrorKind::BadParameter,
              "unknown block '" + std::string(name) + "'");
}

}  // namespace gf2ec
