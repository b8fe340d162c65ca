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
#include <string_view>
#include <vector>

#include "gf2ec/poly.hpp"

namespace gf2ec {

using WireId = std::uint32_t;

struct Register {
  std::string name;
  std::size_t width = 0;
  std::size_t offset = 0;

  WireId operator[](std::size_t i) const {
    return static_cast<WireId>(offset + i);
  }
  friend bool operator==(const Register&, const Register&) = default;
};

/// Ordered named registers; wire ids are assigned contiguously in
/// declaration order.
class Layout {
 public:
  const Register& add(const std::string& name, std::size_t width);

  bool has(std::string_view name) const;
  /// Throws Error(LayoutMismatch) for unknown names.
  const Register& reg(std::string_view name) const;
  WireId wire(std::string_view name, std::size_t index) const;
  /// Name and index of a wire, e.g. ("B", 3).
  std::pair<const Register*, std::size_t> locate(WireId w) const;

  std::size_t width() const noexcept { return width_; }
  const std::vector<Register>& registers() const noexcept { return regs_; }

  friend bool operator==(const Layout&, const Layout&) = default;

 private:
  std::vector<Register> regs_;
  std::size_t width_ = 0;
};

enum class GateKind { Not, ControlledNot, Swap };

const char* to_string(GateKind kind);

struct Control {
  WireId wire;
  bool polarity = true;  // true: fires on |1>, false: 0-control

  friend bool operator==(const Control&, const Control&) = default;
};

using Controls = std::vector<Control>;

struct Gate {
  GateKind kind = GateKind::Not;
  Controls controls;
  std::array<WireId, 2> targets{};

  /// NOT when `controls` is empty, multi-controlled NOT otherwise.
  static Gate x(WireId target, Controls controls = {});
  /// Swap; a controlled swap when `controls` is non-empty.
  static Gate swap(WireId a, WireId b, Controls controls = {});

  std::size_t target_count() const noexcept {
    return kind == GateKind::Swap ? 2 : 1;
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// One classical bit per wire of a layout.
class BasisState {
 public:
  BasisState() = default;
  explicit BasisState(std::size_t width)
      : width_(width), words_((width + 63) / 64, 0) {}
  explicit BasisState(const Layout& layout) : BasisState(layout.width()) {}

  std::size_t width() const noexcept { return width_; }

  bool get(std::size_t i) const noexcept {
    return (words_[i / 64] >> (i % 64)) & 1U;
  }
  void set(std::size_t i, bool v) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept {
    words_[i / 64] ^= std::uint64_t{1} << (i % 64);
  }

  /// Register contents, wire 0 of the register = coefficient of z^0.
  BinaryPolynomial read(const Register& reg) const;
  /// Throws Error(Overflow) if the value does not fit the register.
  void write(const Register& reg, const BinaryPolynomial& value);
  std::uint64_t read_uint(const Register& reg) const;
  void write_uint(const Register& reg, std::uint64_t value);

  /// Low 64 wires packed as an integer (for exhaustive enumeration).
  std::uint64_t to_index() const;
  static BasisState from_index(std::size_t width, std::uint64_t index);

  std::string to_string() const;  // wire 0 first

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Ordered gate sequence over a register layout. Gates are checked on
/// insertion: every wire must exist and controls must be disjoint from
/// targets.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(Layout layout) : layout_(std::move(layout)) {}

  const Layout& layout() const noexcept { return layout_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  void add(Gate gate);
  void x(WireId target, Controls controls = {}) {
    add(Gate::x(target, std::move(controls)));
  }
  void swap(WireId a, WireId b, Controls controls = {}) {
    add(Gate::swap(a, b, std::move(controls)));
  }
  /// Appends gates of a circuit that uses the same wire numbering.
  void append_raw(const std::vector<Gate>& gates);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  Layout layout_;
  std::vector<Gate> gates_;
};

void apply_gate(const Gate& gate, BasisState& state);
void apply_in_place(const Circuit& circuit, BasisState& state);
/// Throws Error(LayoutMismatch) when the state width differs from the layout.
BasisState apply(const Circuit& circuit, BasisState state);

Circuit inverse(const Circuit& circuit);
/// `second`'s registers are matched by name into `first`'s layout.
Circuit compose(const Circuit& first, const Circuit& second);

struct ResourceReport {
  std::size_t width = 0;
  std::size_t gates = 0;
  std::size_t not_gates = 0;
  std::size_t cnot_gates = 0;
  std::size_t swap_gates = 0;
  std::map<std::size_t, std::size_t> by_arity;  // control count -> gates
  std::size_t depth = 0;

  friend bool operator==(const ResourceReport&,
                         const ResourceReport&) = default;
};

ResourceReport report(const Circuit& circuit);
/// Flat JSON object with stable keys: width, gates, not, cnot, swap, depth,
/// arity_<k>.
std::string to_json(const ResourceReport& r);

/// Exhaustively checks the induced basis map is a bijection.
/// Throws Error(WidthTooLarge) above 20 wires.
bool check_permutation(const Circuit& circuit);

/// Text netlist: `REG name width` header lines, then one gate per line:
/// `NOT r[i]`, `CNOT +r[i] -s[j] > t[k]`, `SWAP r[i] s[j]` (controlled swap:
/// `SWAP +c[0] > r[i] s[j]`).
std::string to_netlist(const Circuit& circuit);
Circuit parse_netlist(std::string_view text);

}  // namespace gf2ec
