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

#include "gf2ec/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "gf2ec/errors.hpp"

namespace gf2ec {

const Register& Layout::add(const std::string& name, std::size_t width) {
  if (name.empty() || has(name)) {
    throw Error(ErrorKind::LayoutMismatch,
                "duplicate or empty register name '" + name + "'");
  }
  regs_.push_back(Register{name, width, width_});
  width_ += width;
  return regs_.back();
}

bool Layout::has(std::string_view name) const {
  return std::any_of(regs_.begin(), regs_.end(),
                     [&](const Register& r) { return r.name == name; });
}

const Register& Layout::reg(std::string_view name) const {
  for (const auto& r : regs_) {
    if (r.name == name) return r;
  }
  throw Error(ErrorKind::LayoutMismatch,
              "no register named '" + std::string(name) + "'");
}

WireId Layout::wire(std::string_view name, std::size_t index) const {
  const Register& r = reg(name);
  if (index >= r.width) {
    throw Error(ErrorKind::LayoutMismatch,
                "wire " + std::string(name) + "[" + std::to_string(index) +
                    "] out of range");
  }
  return r[index];
}

std::pair<const Register*, std::size_t> Layout::locate(WireId w) const {
  for (const auto& r : regs_) {
    if (w >= r.offset && w < r.offset + r.width) return {&r, w - r.offset};
  }
  throw Error(ErrorKind::LayoutMismatch,
              "wire id " + std::to_string(w) + " not in layout");
}

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::Not: return "NOT";
    case GateKind::ControlledNot: return "CNOT";
    case GateKind::Swap: return "SWAP";
  }
  return "?";
}

Gate Gate::x(WireId target, Controls controls) {
  Gate g;
  g.kind = controls.empty() ? GateKind::Not : GateKind::ControlledNot;
  g.controls = std::move(controls);
  g.targets = {target, target};
  return g;
}

Gate Gate::swap(WireId a, WireId b, Controls controls) {
  Gate g;
  g.kind = GateKind::Swap;
  g.controls = std::move(controls);
  g.targets = {a, b};
  return g;
}

BinaryPolynomial BasisState::read(const Register& reg) const {
  BinaryPolynomial p;
  for (std::size_t i = 0; i < reg.width; ++i) {
    if (get(reg.offset + i)) p.set_coeff(i, true);
  }
  return p;
}

void BasisState::write(const Register& reg, const BinaryPolynomial& value) {
  if (!value.is_zero() && value.degree() >= reg.width) {
    throw Error(ErrorKind::Overflow, "value " + value.to_string() +
                                         " does not fit register " + reg.name);
  }
  for (std::size_t i = 0; i < reg.width; ++i) {
    set(reg.offset + i, value.coeff(i));
  }
}

std::uint64_t BasisState::read_uint(const Register& reg) const {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < reg.width && i < 64; ++i) {
    if (get(reg.offset + i)) v |= std::uint64_t{1} << i;
  }
  return v;
}

void BasisState::write_uint(const Register& reg, std::uint64_t value) {
  write(reg, BinaryPolynomial::from_uint(value));
}

std::uint64_t BasisState::to_index() const {
  return words_.empty() ? 0 : words_[0];
}

BasisState BasisState::from_index(std::size_t width, std::uint64_t index) {
  BasisState s(width);
  if (!s.words_.empty()) {
    s.words_[0] = width >= 64 ? index : index & ((std::uint64_t{1} << width) - 1);
  }
  return s;
}

std::string BasisState::to_string() const {
  std::string out(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

void Circuit::add(Gate gate) {
  const std::size_t w = layout_.width();
  const std::size_t nt = gate.target_count();
  for (std::size_t t = 0; t < nt; ++t) {
    if (gate.targets[t] >= w) {
      throw Error(ErrorKind::LayoutMismatch, "gate target outside layout");
    }
  }
  if (gate.kind == GateKind::Swap && gate.targets[0] == gate.targets[1]) {
    throw Error(ErrorKind::LayoutMismatch, "swap of a wire with itself");
  }
  if (gate.kind == GateKind::ControlledNot && gate.controls.empty()) {
    gate.kind = GateKind::Not;
  }
  if (gate.kind == GateKind::Not && !gate.controls.empty()) {
    gate.kind = GateKind::ControlledNot;
  }
  for (const Control& c : gate.controls) {
    if (c.wire >= w) {
      throw Error(ErrorKind::LayoutMismatch, "gate control outside layout");
    }
    for (std::size_t t = 0; t < nt; ++t) {
      if (c.wire == gate.targets[t]) {
        throw Error(ErrorKind::LayoutMismatch,
                    "gate control coincides with its target");
      }
    }
  }
  gates_.push_back(std::move(gate));
}

void Circuit::append_raw(const std::vector<Gate>& gates) {
  for (const Gate& g : gates) add(g);
}

void apply_gate(const Gate& gate, BasisState& state) {
  for (const Control& c : gate.controls) {
    if (state.get(c.wire) != c.polarity) return;
  }
  if (gate.kind == GateKind::Swap) {
    const bool a = state.get(gate.targets[0]);
    const bool b = state.get(gate.targets[1]);
    if (a != b) {
      state.flip(gate.targets[0]);
      state.flip(gate.targets[1]);
    }
  } else {
    state.flip(gate.targets[0]);
  }
}

void apply_in_place(const Circuit& circuit, BasisState& state) {
  if (state.width() != circuit.layout().width()) {
    throw Error(ErrorKind::LayoutMismatch,
                "state width " + std::to_string(state.width()) +
                    " differs from layout width " +
                    std::to_string(circuit.layout().width()));
  }
  for (const Gate& g : circuit.gates()) apply_gate(g, state);
}

BasisState apply(const Circuit& circuit, BasisState state) {
  apply_in_place(circuit, state);
  return state;
}

Circuit inverse(const Circuit& circuit) {
  Circuit out(circuit.layout());
  // Every gate kind is self-inverse.
  std::vector<Gate> reversed(circuit.gates().rbegin(), circuit.gates().rend());
  out.append_raw(reversed);
  return out;
}

Circuit compose(const Circuit& first, const Circuit& second) {
  const Layout& dst = first.layout();
  std::vector<WireId> remap(second.layout().width());
  for (const Register& r : second.layout().registers()) {
    if (!dst.has(r.name) || dst.reg(r.name).width != r.width) {
      throw Error(ErrorKind::LayoutMismatch,
                  "register '" + r.name + "' missing or resized in compose");
    }
    const Register& d = dst.reg(r.name);
    for (std::size_t i = 0; i < r.width; ++i) remap[r[i]] = d[i];
  }
  Circuit out = first;
  for (Gate g : second.gates()) {
    for (Control& c : g.controls) c.wire = remap[c.wire];
    for (std::size_t t = 0; t < g.target_count(); ++t) {
      g.targets[t] = remap[g.targets[t]];
    }
    if (g.kind != GateKind::Swap) g.targets[1] = g.targets[0];
    out.add(std::move(g));
  }
  return out;
}

ResourceReport report(const Circuit& circuit) {
  ResourceReport r;
  r.width = circuit.layout().width();
  std::vector<std::size_t> level(r.width, 0);
  for (const Gate& g : circuit.gates()) {
    ++r.gates;
    switch (g.kind) {
      case GateKind::Not: ++r.not_gates; break;
      case GateKind::ControlledNot: ++r.cnot_gates; break;
      case GateKind::Swap: ++r.swap_gates; break;
    }
    ++r.by_arity[g.controls.size()];
    std::size_t layer = 0;
    for (const Control& c : g.controls) layer = std::max(layer, level[c.wire]);
    for (std::size_t t = 0; t < g.target_count(); ++t) {
      layer = std::max(layer, level[g.targets[t]]);
    }
    ++layer;
    for (const Control& c : g.controls) level[c.wire] = layer;
    for (std::size_t t = 0; t < g.target_count(); ++t) {
      level[g.targets[t]] = layer;
    }
    r.depth = std::max(r.depth, layer);
  }
  return r;
}

std::string to_json(const ResourceReport& r) {
  nlohmann::ordered_json j;
  j["width"] = r.width;
  j["gates"] = r.gates;
  j["not"] = r.not_gates;
  j["cnot"] = r.cnot_gates;
  j["swap"] = r.swap_gates;
  j["depth"] = r.depth;
  for (const auto& [arity, count] : r.by_arity) {
    j["arity_" + std::to_string(arity)] = count;
  }
  return j.dump();
}

bool check_permutation(const Circuit& circuit) {
  const std::size_t w = circuit.layout().width();
  if (w > 20) {
    throw Error(ErrorKind::WidthTooLarge,
                "exhaustive permutation check limited to 20 wires");
  }
  const std::uint64_t n = std::uint64_t{1} << w;
  std::vector<bool> seen(n, false);
  for (std::uint64_t i = 0; i < n; ++i) {
    BasisState s = BasisState::from_index(w, i);
    apply_in_place(circuit, s);
    const std::uint64_t out = s.to_index();
    if (seen[out]) return false;
    seen[out] = true;
  }
  return true;
}

namespace {

std::string wire_name(const Layout& layout, WireId w) {
  auto [reg, idx] = layout.locate(w);
  return reg->name + "[" + std::to_string(idx) + "]";
}

[[noreturn]] void parse_fail(std::size_t lineno, const std::string& msg) {
  throw Error(ErrorKind::ParseError,
              "netlist line " + std::to_string(lineno) + ": " + msg);
}

WireId parse_wire(const Layout& layout, std::string_view tok,
                  std::size_t lineno) {
  const auto lb = tok.find('[');
  if (lb == std::string_view::npos || tok.back() != ']') {
    parse_fail(lineno, "bad wire '" + std::string(tok) + "'");
  }
  std::size_t idx = 0;
  const auto digits = tok.substr(lb + 1, tok.size() - lb - 2);
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), idx);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    parse_fail(lineno, "bad wire index '" + std::string(tok) + "'");
  }
  try {
    return layout.wire(tok.substr(0, lb), idx);
  } catch (const Error& e) {
    parse_fail(lineno, e.what());
  }
}

}  // namespace

std::string to_netlist(const Circuit& circuit) {
  const Layout& layout = circuit.layout();
  std::ostringstream out;
  for (const Register& r : layout.registers()) {
    out << "REG " << r.name << " " << r.width << "\n";
  }
  for (const Gate& g : circuit.gates()) {
    out << to_string(g.kind);
    for (const Control& c : g.controls) {
      out << " " << (c.polarity ? '+' : '-') << wire_name(layout, c.wire);
    }
    if (!g.controls.empty()) out << " >";
    out << " " << wire_name(layout, g.targets[0]);
    if (g.kind == GateKind::Swap) out << " " << wire_name(layout, g.targets[1]);
    out << "\n";
  }
  return out.str();
}

Circuit parse_netlist(std::string_view text) {
  Layout layout;
  std::vector<std::vector<std::string>> gate_lines;
  std::vector<std::size_t> gate_linenos;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "REG") {
      if (toks.size() != 3) parse_fail(lineno, "REG needs name and width");
      if (!gate_lines.empty()) parse_fail(lineno, "REG after first gate");
      std::size_t width = 0;
      auto [ptr, ec] = std::from_chars(
          toks[2].data(), toks[2].data() + toks[2].size(), width);
      if (ec != std::errc() || ptr != toks[2].data() + toks[2].size()) {
        parse_fail(lineno, "bad register width");
      }
      try {
        layout.add(toks[1], width);
      } catch (const Error& e) {
        parse_fail(lineno, e.what());
      }
    } else {
      gate_lines.push_back(std::move(toks));
      gate_linenos.push_back(lineno);
    }
  }
  Circuit circuit(layout);
  for (std::size_t gi = 0; gi < gate_lines.size(); ++gi) {
    const auto& toks = gate_lines[gi];
    const std::size_t ln = gate_linenos[gi];
    const std::string& op = toks[0];
    Controls controls;
    std::vector<WireId> targets;
    bool after_arrow = false;
    const bool has_arrow =
        std::find(toks.begin(), toks.end(), ">") != toks.end();
    for (std::size_t k = 1; k < toks.size(); ++k) {
      const std::string& t = toks[k];
      if (t == ">") {
        after_arrow = true;
        continue;
      }
      if (has_arrow && !after_arrow) {
        if (t[0] != '+' && t[0] != '-') {
          parse_fail(ln, "control must start with + or -");
        }
        controls.push_back({parse_wire(layout, std::string_view(t).substr(1), ln),
                            t[0] == '+'});
      } else {
        targets.push_back(parse_wire(layout, t, ln));
      }
    }
    try {
      if (op == "NOT" || op == "CNOT") {
        if (targets.size() != 1) parse_fail(ln, op + " needs one target");
        if (op == "CNOT" && controls.empty()) {
          parse_fail(ln, "CNOT needs at least one control");
        }
        if (op == "NOT" && !controls.empty()) {
          parse_fail(ln, "NOT takes no controls");
        }
        circuit.x(targets[0], controls);
      } else if (op == "SWAP") {
        if (targets.size() != 2) parse_fail(ln, "SWAP needs two targets");
        circuit.swap(targets[0], targets[1], controls);
      } else {
        parse_fail(ln, "unknown gate '" + op + "'");
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError) throw;
      parse_fail(ln, e.what());
    }
  }
  return circuit;
}

}  // namespace gf2ec
