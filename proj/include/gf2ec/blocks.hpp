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
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "gf2ec/circuit.hpp"
#include "gf2ec/field.hpp"

namespace gf2ec {

enum class ShiftDirection { Left, Right };

using WireSpan = std::span<const WireId>;

std::vector<WireId> wires_of(const Register& reg);
std::vector<WireId> wires_of(const Register& reg, std::size_t first,
                             std::size_t count);

/// Controls that fire iff `reg` holds `value` (bit i of value on wire i).
Controls pattern_controls(WireSpan reg, std::uint64_t value,
                          const Controls& extra = {});
Controls with_control(Controls controls, Control c);

/// Appends the gates `body` would emit, in reverse order.
void emit_inverse(Circuit& circuit,
                  const std::function<void(Circuit&)>& body);

// Emitters append to an existing circuit. Every emitter accepts extra
// controls that condition each gate it produces.

void emit_swap_cnots(Circuit& c, WireId a, WireId b,
                     const Controls& ctl = {});
/// Left moves bit i to i+1 (towards the high-order end); n-1 SWAP gates.
void emit_cyclic_shift(Circuit& c, WireSpan reg, ShiftDirection dir,
                       const Controls& ctl = {});
/// data <- data rotated by the value held in `amount`; for bit j of amount a
/// chain of 2^j single rotations controlled on that bit.
void emit_controlled_shift(Circuit& c, WireSpan data, WireSpan amount,
                           ShiftDirection dir, const Controls& ctl = {});
/// (counter, ancilla) read as one integer with the ancilla as MSB; +1.
void emit_increment(Circuit& c, WireSpan counter, WireId ancilla,
                    const Controls& ctl = {});
/// Counter -1 for values >= 1, ancilla |0> in and out. Internally the
/// ancilla is raised, the increment runs backwards, and a trailing NOT
/// resets the ancilla.
void emit_decrement(Circuit& c, WireSpan counter, WireId ancilla,
                    const Controls& ctl = {});
/// degree <- deg(poly) for nonzero poly; degree register and ancilla start 0.
/// The register is set to n-1 and one controlled decrement per leading-zero
/// prefix fires. A zero poly yields 0.
void emit_degree(Circuit& c, WireSpan poly, WireSpan degree, WireId ancilla);
void emit_conditional_xor(Circuit& c, WireId control, WireSpan src,
                          WireSpan dst, const Controls& ctl = {});
void emit_xor_constant(Circuit& c, WireSpan reg, const BinaryPolynomial& value,
                       const Controls& ctl = {});
/// y <- z*y mod f, in place, no ancillas.
void emit_mul_by_z(Circuit& c, WireSpan y, const FieldSpec& field,
                   const Controls& ctl = {});
/// t <- t XOR (x*y mod f); x and y are restored.
void emit_mul_accumulate(Circuit& c, WireSpan x, WireSpan y, WireSpan t,
                         const FieldSpec& field);
/// dst <- dst XOR (src^2 mod f); CNOTs only.
void emit_square_accumulate(Circuit& c, WireSpan src, WireSpan dst,
                            const FieldSpec& field);

// Standalone builders with their own layouts.

Circuit build_swap();                                   // w[2]
Circuit build_cyclic_shift(std::size_t n, ShiftDirection dir);  // x[n]
Circuit build_controlled_shift(std::size_t n, std::size_t k);   // theta, s
Circuit build_increment(std::size_t w);                 // k[w], anc[1]
Circuit build_decrement(std::size_t w);                 // k[w], anc[1]
Circuit build_degree(std::size_t m);                    // A, deg, anc
Circuit build_conditional_xor(std::size_t m);           // ctl, A, B
Circuit build_mul_accumulate(const FieldSpec& field);   // x, y, t
Circuit build_square_accumulate(const FieldSpec& field);  // x, t

struct BlockParams {
  std::size_t m = 4;
  std::size_t n = 4;
  std::size_t k = 2;
  std::size_t w = 3;
};

/// CLI names: swap, shiftl, shiftr, cshift, inc, dec, deg, cxor, mulacc, sqacc.
/// Throws Error(BadParameter) for unknown names or out-of-range widths.
Circuit build_named_block(std::string_view name, const BlockParams& params);
std::vector<std::string_view> block_names();

}  // namespace gf2ec
