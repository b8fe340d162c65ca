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

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gf2ec/circuit.hpp"
#include "gf2ec/field.hpp"
#include "gf2ec/naive_division.hpp"

namespace gf2ec {

/// Quotient register width, 3 ceil(log m).
std::size_t quotient_width(std::size_t m);

/// Two polynomials sharing m wires from opposite ends. Both leading ones
/// are implicit: the remainder's low coefficients sit at the top (wire
/// m-degR+j holds R_j) and the coefficient polynomial's low coefficients
/// run downwards from wire 0 (wire degc-1-j holds c_j). Everything between
/// is zero.
struct PackedRegister {
  std::size_t m = 0;
  std::vector<bool> bits;
  friend bool operator==(const PackedRegister&,
                         const PackedRegister&) = default;
};

/// Throws Error(Overflow) when deg(coef) + deg(rem) > m. A zero `coef`
/// occupies no wires; `rem` must be nonzero.
PackedRegister pack(const BinaryPolynomial& coef, const BinaryPolynomial& rem,
                    std::size_t m);
/// Degrees are -1 for a zero polynomial. Throws Error(Overflow) on
/// inconsistent degrees or a nonzero gap.
std::pair<BinaryPolynomial, BinaryPolynomial> unpack(const PackedRegister& r,
                                                     int deg_coef,
                                                     int deg_rem);

/// Counter values. The three o1 phases run inside one flagged sequence
/// (index 0); indices 2 and 3 are the coefficient update and the pair swap.
enum class SyncOp : std::uint8_t { O1 = 0, O2 = 1, Update = 2, Swap = 3 };
const char* to_string(SyncOp op);

/// Semantic view of the optimized register file. `slot_B` is the degree
/// register of B; during a division it points at the high-order slot rather
/// than the true degree. Degrees are -1 for zero.
struct SyncState {
  BinaryPolynomial a, A, b, B;
  BinaryPolynomial q;  // shift register, newest quotient bit at z^0
  int deg_a = 0, deg_A = 0, deg_b = -1, slot_B = 0;
  bool f = true;
  unsigned c = 0;
  std::uint64_t h = 0;
  bool quotient_overflow = false;

  static SyncState initial(const BinaryPolynomial& input,
                           const FieldSpec& field);
  EuclideanPairs pairs() const { return {a, A, b, B}; }
  bool halted() const { return h != 0; }
  friend bool operator==(const SyncState&, const SyncState&) = default;
};

// Reversible primitives; each *_inverse undoes its forward step.
void o1_phase_a(SyncState& s, std::size_t qwidth);
void o1_phase_a_inverse(SyncState& s);
void o1_phase_b(SyncState& s);
void o1_phase_c(SyncState& s);
void o1_phase_c_inverse(SyncState& s);

/// First-in-sequence (q = 0) and last-in-sequence (deg A = deg B) toggles
/// of f for the scheduled operation.
void detect_first(SyncState& s, SyncOp op);
void detect_last(SyncState& s, SyncOp op);

/// One o1: phase a always; phases b and c only while f = 0.
void step_o1(SyncState& s, std::size_t qwidth);
void step_o1_inverse(SyncState& s);
/// One o2: shift B up one slot. The first o2 also applies the XOR left
/// pending by the last o1.
void step_o2(SyncState& s);
void step_o2_inverse(SyncState& s);
/// b <- b + q a; q is cleared since q = (b + q a) div a.
void step_update(SyncState& s);
void step_update_inverse(SyncState& s);
/// (a, A, deg a, deg A) <-> (b, B, deg b, deg B).
void step_swap(SyncState& s);
/// c <- (c + f) mod 4.
void advance_counter(SyncState& s);
void advance_counter_inverse(SyncState& s);

void apply_op(SyncState& s, SyncOp op, std::size_t qwidth);

std::uint64_t default_cycles(std::size_t m);
std::size_t halting_width(std::uint64_t cycles);

/// Per-slot record: the operation scheduled by the global clock, whether it
/// fired on this input, and (f, c, h) afterwards.
struct SlotRecord {
  SyncOp scheduled;
  bool fired;
  bool f;
  unsigned c;
  std::uint64_t h;
};

struct SyncTrace {
  BinaryPolynomial input;
  BinaryPolynomial inverse;
  std::vector<SlotRecord> slots;
  std::vector<SyncState> boundaries;  // initial state and after every swap
  SyncState final_state;
  std::uint64_t rounds_used = 0;
  bool fidelity_loss = false;

  std::vector<SyncOp> schedule() const;
};

/// One global round is the four slots o1 o2 update swap, each conditioned
/// on c and on h = 0 and followed by a conditioned advance_counter; at the
/// start of a round h is incremented when A = 1. Throws
/// Error(CycleBudgetExceeded) if an input has not reached A = 1 after
/// `cycles` rounds, Error(ZeroElement) for a zero input.
std::vector<SyncTrace> run_synchronized(
    const std::vector<BinaryPolynomial>& inputs, const FieldSpec& field,
    std::uint64_t cycles);
std::vector<SyncTrace> run_synchronized(
    const std::vector<BinaryPolynomial>& inputs, const FieldSpec& field);

BinaryPolynomial run_optimized_inversion(const BinaryPolynomial& c,
                                         const FieldSpec& field);

/// Register file of the optimized inverter: R1 (a,A), R2 (b,B), q, the four
/// degree registers with one extra high wire each, f, c, h.
Layout optimized_layout(std::size_t m, std::size_t H);
/// Writes a boundary state (q = 0) into the layout. Degree registers hold
/// deg + 1 so that a zero polynomial is representable.
BasisState encode_state(const SyncState& s, const Layout& layout);

struct BudgetBreakdown {
  std::size_t m = 0, H = 0;
  std::size_t registers_AaBb = 0;  // 2m
  std::size_t quotient = 0;        // 3 ceil(log m)
  std::size_t degrees = 0;         // 4 ceil(log m) + 4
  std::size_t flag_counter = 0;    // 1 + 2
  std::size_t halting = 0;         // H
  std::size_t formula = 0;
  std::size_t layout_width = 0;
  std::size_t total() const {
    return registers_AaBb + quotient + degrees + flag_counter + halting;
  }
};

/// 2m + 7 ceil(log m) + 7 + H.
std::size_t qubit_budget(std::size_t m, std::size_t H);
BudgetBreakdown budget_audit(std::size_t m, std::size_t H);
std::string to_json(const BudgetBreakdown& b);

struct QuotientBoundReport {
  std::size_t inputs = 0;
  std::size_t flagged = 0;
  std::size_t max_quotient_bits = 0;
  double fraction() const {
    return inputs == 0 ? 0.0 : static_cast<double>(flagged) / inputs;
  }
};

/// Counts inputs whose Euclid trace has a quotient wider than
/// 3 ceil(log m) bits.
QuotientBoundReport check_quotient_bound(
    const FieldSpec& field, const std::vector<BinaryPolynomial>& sample);

/// Gate-count estimates for the boundary-conditioned steps, composed from
/// the block reports. Each step is dispatched over the possible degree
/// register values.
std::map<std::string, std::size_t> estimate_step_gates(const FieldSpec& field);

/// Long division B / A alone, via o1 then o2 sequences.
struct DivisionRow {
  std::string op;
  BinaryPolynomial B;
  BinaryPolynomial q;
  int slot_B = 0;
  bool f = false;
  unsigned c = 0;
};
std::vector<DivisionRow> trace_long_division(const BinaryPolynomial& A,
                                             const BinaryPolynomial& B,
                                             std::size_t qwidth);
std::string format_division_trace(const std::vector<DivisionRow>& rows,
                                  std::size_t width);
/// Re-runs one input and prints one row per fired operation.
std::string format_sync_trace(const BinaryPolynomial& input,
                              const FieldSpec& field);

}  // namespace gf2ec
