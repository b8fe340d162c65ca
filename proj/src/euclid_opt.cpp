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

#include "gf2ec/euclid_opt.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "gf2ec/blocks.hpp"
#include "gf2ec/errors.hpp"

namespace gf2ec {

std::size_t quotient_width(std::size_t m) { return 3 * ceil_log2(m); }

PackedRegister pack(const BinaryPolynomial& coef, const BinaryPolynomial& rem,
                    std::size_t m) {
  if (rem.is_zero()) {
    throw Error(ErrorKind::BadParameter, "pack: remainder part is zero");
  }
  const int dc = coef.degree_or_minus_one();
  const int dr = rem.degree();
  const int used = std::max(dc, 0) + dr;
  if (used > static_cast<int>(m)) {
    throw Error(ErrorKind::Overflow,
                "pack: deg " + std::to_string(dc) + " + deg " +
                    std::to_string(dr) + " exceeds " + std::to_string(m));
  }
  PackedRegister r{m, std::vector<bool>(m, false)};
  for (int j = 0; j < dr; ++j) r.bits[m - dr + j] = rem.coeff(j);
  for (int j = 0; j < dc; ++j) r.bits[dc - 1 - j] = coef.coeff(j);
  return r;
}

std::pair<BinaryPolynomial, BinaryPolynomial> unpack(const PackedRegister& r,
                                                     int deg_coef,
                                                     int deg_rem) {
  const int m = static_cast<int>(r.m);
  const int low = std::max(deg_coef, 0);
  if (deg_rem < 0 || deg_coef < -1 || low + deg_rem > m ||
      r.bits.size() != r.m) {
    throw Error(ErrorKind::Overflow, "unpack: degrees do not fit");
  }
  for (int w = low; w < m - deg_rem; ++w) {
    if (r.bits[w]) throw Error(ErrorKind::Overflow, "unpack: gap not zero");
  }
  BinaryPolynomial coef, rem = BinaryPolynomial::monomial(deg_rem);
  if (deg_coef >= 0) coef = BinaryPolynomial::monomial(deg_coef);
  for (int j = 0; j < deg_rem; ++j) {
    if (r.bits[m - deg_rem + j]) rem.flip_coeff(j);
  }
  for (int j = 0; j < deg_coef; ++j) {
    if (r.bits[deg_coef - 1 - j]) coef.flip_coeff(j);
  }
  return {coef, rem};
}

const char* to_string(SyncOp op) {
  switch (op) {
    case SyncOp::O1: return "o1";
    case SyncOp::O2: return "o2";
    case SyncOp::Update: return "update";
    case SyncOp::Swap: return "swap";
  }
  return "?";
}

SyncState SyncState::initial(const BinaryPolynomial& input,
                             const FieldSpec& field) {
  if (input.is_zero()) throw Error(ErrorKind::ZeroElement, "input is zero");
  if (!field.contains(input)) {
    throw Error(ErrorKind::BadParameter, "input is not a field element");
  }
  SyncState s;
  s.a = BinaryPolynomial::one();
  s.A = input;
  s.B = field.modulus();
  s.deg_a = 0;
  s.deg_A = input.degree();
  s.deg_b = -1;
  s.slot_B = static_cast<int>(field.m());
  return s;
}

namespace {

bool slot_bit(const SyncState& s) {
  return s.slot_B >= 0 && s.B.coeff(static_cast<std::size_t>(s.slot_B));
}

}  // namespace

void o1_phase_a(SyncState& s, std::size_t qwidth) {
  s.q = s.q.shifted_up(1);
  if (slot_bit(s)) s.q.flip_coeff(0);
  if (!s.q.is_zero() && s.q.degree() >= qwidth) {
    s.quotient_overflow = true;
  }
}

void o1_phase_a_inverse(SyncState& s) {
  if (slot_bit(s)) s.q.flip_coeff(0);
  s.q = s.q.shifted_down(1);
}

void o1_phase_b(SyncState& s) {
  if (!s.q.coeff(0)) return;
  if (s.slot_B < s.deg_A) {
    throw Error(ErrorKind::BadParameter, "o1(b): slot below deg A");
  }
  s.B += s.A.shifted_up(static_cast<std::size_t>(s.slot_B - s.deg_A));
}

void o1_phase_c(SyncState& s) {
  if (s.slot_B <= 0) throw Error(ErrorKind::BadParameter, "o1(c): slot 0");
  --s.slot_B;
}

void o1_phase_c_inverse(SyncState& s) { ++s.slot_B; }

void detect_first(SyncState& s, SyncOp op) {
  switch (op) {
    case SyncOp::O1: s.f ^= s.q.is_zero(); break;
    case SyncOp::O2: s.f ^= (s.slot_B == s.deg_A); break;
    default: s.f = !s.f; break;
  }
}

void detect_last(SyncState& s, SyncOp op) {
  switch (op) {
    case SyncOp::O1: s.f ^= (s.slot_B == s.deg_A); break;
    case SyncOp::O2: s.f ^= slot_bit(s); break;
    default: s.f = !s.f; break;
  }
}

void step_o1(SyncState& s, std::size_t qwidth) {
  detect_first(s, SyncOp::O1);
  o1_phase_a(s, qwidth);
  detect_last(s, SyncOp::O1);
  if (!s.f) {
    o1_phase_b(s);
    o1_phase_c(s);
  }
}

void step_o1_inverse(SyncState& s) {
  if (!s.f) {
    o1_phase_c_inverse(s);
    o1_phase_b(s);
  }
  detect_last(s, SyncOp::O1);
  o1_phase_a_inverse(s);
  detect_first(s, SyncOp::O1);
}

void step_o2(SyncState& s) {
  detect_first(s, SyncOp::O2);
  if (s.slot_B == s.deg_A) o1_phase_b(s);
  o1_phase_c(s);
  detect_last(s, SyncOp::O2);
}

void step_o2_inverse(SyncState& s) {
  detect_last(s, SyncOp::O2);
  o1_phase_c_inverse(s);
  if (s.slot_B == s.deg_A) o1_phase_b(s);
  detect_first(s, SyncOp::O2);
}

void step_update(SyncState& s) {
  detect_first(s, SyncOp::Update);
  s.b += s.q * s.a;
  s.q = BinaryPolynomial();
  s.deg_b = s.b.degree_or_minus_one();
  detect_last(s, SyncOp::Update);
}

void step_update_inverse(SyncState& s) {
  detect_last(s, SyncOp::Update);
  s.q = poly_divmod(s.b, s.a).quotient;
  s.b += s.q * s.a;
  s.deg_b = s.b.degree_or_minus_one();
  detect_first(s, SyncOp::Update);
}

void step_swap(SyncState& s) {
  detect_first(s, SyncOp::Swap);
  std::swap(s.a, s.b);
  std::swap(s.A, s.B);
  std::swap(s.deg_a, s.deg_b);
  std::swap(s.deg_A, s.slot_B);
  detect_last(s, SyncOp::Swap);
}

void advance_counter(SyncState& s) {
  if (s.f) s.c = (s.c + 1) % 4;
}

void advance_counter_inverse(SyncState& s) {
  if (s.f) s.c = (s.c + 3) % 4;
}

void apply_op(SyncState& s, SyncOp op, std::size_t qwidth) {
  switch (op) {
    case SyncOp::O1: step_o1(s, qwidth); break;
    case SyncOp::O2: step_o2(s); break;
    case SyncOp::Update: step_update(s); break;
    case SyncOp::Swap: step_swap(s); break;
  }
}

std::uint64_t default_cycles(std::size_t m) {
  return static_cast<std::uint64_t>(2 * m) * (2 * m + 2);
}

std::size_t halting_width(std::uint64_t cycles) {
  return static_cast<std::size_t>(std::bit_width(cycles));
}

std::vector<SyncOp> SyncTrace::schedule() const {
  std::vector<SyncOp> out;
  out.reserve(slots.size());
  for (const auto& r : slots) out.push_back(r.scheduled);
  return out;
}

namespace {

using Observer = std::function<void(std::uint64_t round, SyncOp op,
                                    const SyncState& s)>;

SyncTrace run_one(const BinaryPolynomial& input, const FieldSpec& field,
                  std::uint64_t cycles, const Observer& observe) {
  const std::size_t qwidth = quotient_width(field.m());
  SyncTrace t;
  t.input = input;
  SyncState s = SyncState::initial(input, field);
  t.boundaries.push_back(s);
  t.slots.reserve(4 * cycles);
  for (std::uint64_t round = 0; round < cycles; ++round) {
    if (s.deg_A == 0) ++s.h;
    for (unsigned k = 0; k < 4; ++k) {
      const auto op = static_cast<SyncOp>(k);
      const bool fire = !s.halted() && s.c == k;
      if (fire) {
        apply_op(s, op, qwidth);
        if (observe) observe(round, op, s);
      }
      if (!s.halted()) advance_counter(s);
      if (fire && op == SyncOp::Swap) t.boundaries.push_back(s);
      t.slots.push_back({op, fire, s.f, s.c, s.h});
    }
  }
  if (s.deg_A != 0) {
    throw Error(ErrorKind::CycleBudgetExceeded,
                "input " + input.to_string() + " unfinished after " +
                    std::to_string(cycles) + " rounds");
  }
  t.final_state = s;
  t.inverse = s.a;
  t.rounds_used = cycles - s.h;
  t.fidelity_loss = s.quotient_overflow;
  return t;
}

}  // namespace

std::vector<SyncTrace> run_synchronized(
    const std::vector<BinaryPolynomial>& inputs, const FieldSpec& field,
    std::uint64_t cycles) {
  std::vector<SyncTrace> out;
  out.reserve(inputs.size());
  for (const auto& c : inputs) out.push_back(run_one(c, field, cycles, {}));
  return out;
}

std::vector<SyncTrace> run_synchronized(
    const std::vector<BinaryPolynomial>& inputs, const FieldSpec& field) {
  return run_synchronized(inputs, field, default_cycles(field.m()));
}

BinaryPolynomial run_optimized_inversion(const BinaryPolynomial& c,
                                         const FieldSpec& field) {
  return run_one(c, field, default_cycles(field.m()), {}).inverse;
}

Layout optimized_layout(std::size_t m, std::size_t H) {
  const std::size_t L = ceil_log2(m);
  Layout l;
  l.add("R1", m);
  l.add("R2", m);
  l.add("q", quotient_width(m));
  for (const char* d : {"degA", "degB", "dega", "degb"}) l.add(d, L);
  for (const char* d : {"degA_hi", "degB_hi", "dega_hi", "degb_hi"}) {
    l.add(d, 1);
  }
  l.add("f", 1);
  l.add("c", 2);
  if (H > 0) l.add("h", H);
  return l;
}

namespace {

void write_bits(BasisState& st, const Register& r,
                const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); ++i) st.set(r[i], bits[i]);
}

void write_degree(BasisState& st, const Layout& l, const std::string& name,
                  int deg) {
  const auto& lo = l.reg(name);
  const auto code = static_cast<std::uint64_t>(deg + 1);
  if (code >> (lo.width + 1)) {
    throw Error(ErrorKind::Overflow, name + " does not fit");
  }
  st.write_uint(lo, code & ((std::uint64_t{1} << lo.width) - 1));
  st.set(l.reg(name + "_hi")[0], (code >> lo.width) & 1U);
}

}  // namespace

BasisState encode_state(const SyncState& s, const Layout& layout) {
  const std::size_t m = layout.reg("R1").width;
  BasisState st(layout);
  write_bits(st, layout.reg("R1"), pack(s.a, s.A, m).bits);
  write_bits(st, layout.reg("R2"), pack(s.b, s.B, m).bits);
  st.write(layout.reg("q"), s.q);
  write_degree(st, layout, "degA", s.deg_A);
  write_degree(st, layout, "degB", s.slot_B);
  write_degree(st, layout, "dega", s.deg_a);
  write_degree(st, layout, "degb", s.deg_b);
  st.set(layout.reg("f")[0], s.f);
  st.write_uint(layout.reg("c"), s.c);
  if (layout.has("h")) {
    st.write_uint(layout.reg("h"), s.h);
  } else if (s.h != 0) {
    throw Error(ErrorKind::Overflow, "no halting register");
  }
  return st;
}

std::size_t qubit_budget(std::size_t m, std::size_t H) {
  return 2 * m + 7 * ceil_log2(m) + 7 + H;
}

BudgetBreakdown budget_audit(std::size_t m, std::size_t H) {
  if (m < 2) throw Error(ErrorKind::BadParameter, "m must be >= 2");
  const Layout l = optimized_layout(m, H);
  BudgetBreakdown b;
  b.m = m;
  b.H = H;
  for (const auto& r : l.registers()) {
    const std::string& n = r.name;
    if (n == "R1" || n == "R2") {
      b.registers_AaBb += r.width;
    } else if (n == "q") {
      b.quotient += r.width;
    } else if (n.rfind("deg", 0) == 0) {
      b.degrees += r.width;
    } else if (n == "f" || n == "c") {
      b.flag_counter += r.width;
    } else if (n == "h") {
      b.halting += r.width;
    }
  }
  b.formula = qubit_budget(m, H);
  b.layout_width = l.width();
  return b;
}

std::string to_json(const BudgetBreakdown& b) {
  nlohmann::ordered_json j;
  j["m"] = b.m;
  j["H"] = b.H;
  j["AaBb"] = b.registers_AaBb;
  j["q"] = b.quotient;
  j["degrees"] = b.degrees;
  j["fc"] = b.flag_counter;
  j["h"] = b.halting;
  j["formula"] = b.formula;
  j["layout"] = b.layout_width;
  return j.dump();
}

QuotientBoundReport check_quotient_bound(
    const FieldSpec& field, const std::vector<BinaryPolynomial>& sample) {
  const std::size_t qwidth = quotient_width(field.m());
  QuotientBoundReport r;
  for (const auto& c : sample) {
    auto p = EuclideanPairs::initial(c, field);
    bool flagged = false;
    // The synchronized inverter stops at A = 1, so the final division by 1
    // is never performed.
    while (p.A.degree() > 0) {
      const auto bits =
          static_cast<std::size_t>(poly_divmod(p.B, p.A).quotient.degree()) +
          1;
      r.max_quotient_bits = std::max(r.max_quotient_bits, bits);
      flagged |= bits > qwidth;
      p = euclid_pairs_step(p);
    }
    ++r.inputs;
    if (flagged) ++r.flagged;
  }
  return r;
}

std::map<std::string, std::size_t> estimate_step_gates(const FieldSpec& field) {
  const std::size_t m = field.m();
  const std::size_t L = ceil_log2(m);
  const std::size_t Q = quotient_width(m);
  // Boundary-dependent gates are replicated once per possible boundary.
  const std::size_t positions = m + 1;
  const std::size_t dec = report(build_decrement(L + 1)).gates;
  const std::size_t compare = 2 * (L + 1) + 1;  // XOR, test, unXOR
  const std::size_t xor_region = positions * m;
  const std::size_t shift_region = positions * (m - 1);

  std::map<std::string, std::size_t> g;
  g["o1.a"] = (Q - 1) + 1;
  g["o1.b"] = xor_region;
  g["o1.c"] = shift_region + dec;
  g["o1.detect"] = 1 + compare;
  g["o1"] = g["o1.a"] + g["o1.b"] + g["o1.c"] + g["o1.detect"];
  g["o2"] = xor_region + shift_region + dec + compare + 1;
  // q*a accumulated bit by bit, then q cleared by a reversed division.
  g["update"] = 2 * Q * xor_region;
  g["swap"] = m + 2 * (L + 1);
  g["ac"] = report(build_increment(1)).gates;
  g["halt"] = report(build_increment(halting_width(default_cycles(m)))).gates;
  g["round"] = g["o1"] + g["o2"] + g["update"] + g["swap"] + 4 * g["ac"] +
               g["halt"];
  g["total"] = g["round"] * default_cycles(m);
  return g;
}

std::vector<DivisionRow> trace_long_division(const BinaryPolynomial& A,
                                             const BinaryPolynomial& B,
                                             std::size_t qwidth) {
  if (A.is_zero()) throw Error(ErrorKind::DivisionByZero, "A is zero");
  const auto dm = poly_divmod(B, A);
  if (dm.remainder.is_zero() || B.degree() < A.degree()) {
    throw Error(ErrorKind::BadParameter,
                "trace needs deg B >= deg A and a nonzero remainder");
  }
  SyncState s;
  s.A = A;
  s.B = B;
  s.deg_A = A.degree();
  s.slot_B = B.degree();
  std::vector<DivisionRow> rows;
  auto record = [&](const char* op) {
    rows.push_back({op, s.B, s.q, s.slot_B, s.f, s.c});
  };
  record("start");
  const std::size_t guard = 4 * static_cast<std::size_t>(B.degree() + 2);
  while (s.c == 0 && rows.size() < guard) {
    step_o1(s, qwidth);
    advance_counter(s);
    record("o1");
  }
  while (s.c == 1 && rows.size() < guard) {
    step_o2(s);
    advance_counter(s);
    record("o2");
  }
  return rows;
}

namespace {

// Register as it sits physically: the slot position on the left.
std::string slot_view(const BinaryPolynomial& p, int slot, std::size_t width) {
  std::string out;
  for (std::size_t i = 0; i < width; ++i) {
    const int pos = slot - static_cast<int>(i);
    out += pos >= 0 && p.coeff(static_cast<std::size_t>(pos)) ? '1' : '0';
  }
  return out;
}

}  // namespace

std::string format_division_trace(const std::vector<DivisionRow>& rows,
                                  std::size_t width) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "step" << std::setw(width + 2) << "B"
     << std::setw(width + 2) << "q" << std::setw(6) << "degB"
     << std::setw(3) << "f" << "c\n";
  for (const auto& r : rows) {
    os << std::setw(6) << r.op << std::setw(width + 2)
       << slot_view(r.B, r.slot_B, width) << std::setw(width + 2)
       << r.q.to_string(width) << std::setw(6) << r.slot_B << std::setw(3)
       << r.f << r.c << '\n';
  }
  return os.str();
}

std::string format_sync_trace(const BinaryPolynomial& input,
                              const FieldSpec& field) {
  const std::size_t m = field.m();
  const std::size_t qw = quotient_width(m);
  std::ostringstream os;
  os << std::left << std::setw(6) << "round" << std::setw(8) << "op"
     << std::setw(m + 3) << "a" << std::setw(m + 3) << "A" << std::setw(m + 3)
     << "b" << std::setw(m + 3) << "B" << std::setw(qw + 2) << "q"
     << std::setw(12) << "deg A/B/a/b" << std::setw(3) << "f" << std::setw(3)
     << "c" << "h\n";
  auto row = [&](const std::string& round, const std::string& op,
                 const SyncState& s) {
    std::ostringstream deg;
    deg << s.deg_A << '/' << s.slot_B << '/' << s.deg_a << '/' << s.deg_b;
    os << std::setw(6) << round << std::setw(8) << op << std::setw(m + 3)
       << s.a.to_string(m + 1) << std::setw(m + 3) << s.A.to_string(m + 1)
       << std::setw(m + 3) << s.b.to_string(m + 1) << std::setw(m + 3)
       << s.B.to_string(m + 1) << std::setw(qw + 2)
       << (s.q.degree_or_minus_one() < static_cast<int>(qw)
               ? s.q.to_string(qw)
               : s.q.to_string())
       << std::setw(12) << deg.str() << std::setw(3) << s.f << std::setw(3)
       << s.c << s.h << '\n';
  };
  row("-", "init", SyncState::initial(input, field));
  auto t = run_one(input, field, default_cycles(m),
                   [&](std::uint64_t round, SyncOp op, const SyncState& s) {
                     row(std::to_string(round), to_string(op), s);
                   });
  row("end", "halt", t.final_state);
  os << "inverse " << t.inverse.to_string(m) << "  rounds "
     << t.rounds_used << "  h " << t.final_state.h << '\n';
  return os.str();
}

}  // namespace gf2ec
