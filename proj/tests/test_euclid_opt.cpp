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

#include <doctest.h>

#include <random>
#include <set>

#include "gf2ec/errors.hpp"
#include "gf2ec/euclid_opt.hpp"

using namespace gf2ec;

namespace {

BinaryPolynomial P(const char* bits) { return BinaryPolynomial::parse(bits); }

int deg(const BinaryPolynomial& p) { return p.degree_or_minus_one(); }

}  // namespace

TEST_CASE("qubit budget formula") {
  CHECK(qubit_budget(16, 0) == 67);
  CHECK(qubit_budget(4, 0) == 29);
  for (std::size_t m : {4, 8, 16}) {
    for (std::size_t H : {0, 5, 11}) {
      auto b = budget_audit(m, H);
      const std::size_t L = ceil_log2(m);
      CHECK(b.layout_width == b.formula);
      CHECK(b.total() == b.formula);
      CHECK(b.registers_AaBb == 2 * m);
      CHECK(b.quotient == 3 * L);
      CHECK(b.degrees == 4 * L + 4);
      CHECK(b.flag_counter == 3);
      CHECK(b.halting == H);
    }
  }
  CHECK_THROWS_AS(budget_audit(1, 0), Error);
}

TEST_CASE("pack layout") {
  // a = z^2 + 1 (low bits 01 reversed from wire 0), A = z^3 + z (low bits 010
  // at the top).
  auto r = pack(P("101"), P("1010"), 6);
  CHECK(r.bits == std::vector<bool>{false, true, false, false, true, false});
  auto init = pack(BinaryPolynomial::one(), P("1011"), 4);
  CHECK(init.bits == std::vector<bool>{false, true, true, false});
  CHECK_NOTHROW(pack(P("1000"), P("10"), 4));
  CHECK_THROWS_AS(pack(P("1000"), P("100"), 4), Error);
  CHECK_THROWS_AS(pack(P("1"), BinaryPolynomial(), 4), Error);
}

TEST_CASE("unpack inverts pack, exhaustive m <= 6") {
  for (std::size_t m = 2; m <= 6; ++m) {
    const std::uint64_t lim = std::uint64_t{1} << (m + 1);
    for (std::uint64_t ci = 0; ci < lim; ++ci) {
      for (std::uint64_t ri = 1; ri < lim; ++ri) {
        auto c = BinaryPolynomial::from_uint(ci);
        auto r = BinaryPolynomial::from_uint(ri);
        if (std::max(deg(c), 0) + deg(r) > static_cast<int>(m)) {
          CHECK_THROWS_AS(pack(c, r, m), Error);
          continue;
        }
        auto packed = pack(c, r, m);
        auto [c2, r2] = unpack(packed, deg(c), deg(r));
        CHECK(c2 == c);
        CHECK(r2 == r);
      }
    }
  }
  PackedRegister bad{4, {false, true, false, false}};
  CHECK_THROWS_AS(unpack(bad, 0, 1), Error);
}

TEST_CASE("advance_counter is a bijection on (f, c)") {
  std::set<std::pair<bool, unsigned>> seen;
  for (bool f : {false, true}) {
    for (unsigned c = 0; c < 4; ++c) {
      SyncState s;
      s.f = f;
      s.c = c;
      advance_counter(s);
      CHECK(s.c == (f ? (c + 1) % 4 : c));
      seen.insert({s.f, s.c});
      advance_counter_inverse(s);
      CHECK(s.c == c);
    }
  }
  CHECK(seen.size() == 8);
}

TEST_CASE("boundary detection") {
  SyncState s;
  s.A = P("101");
  s.deg_A = 2;
  s.B = P("10101");
  s.slot_B = 4;
  s.f = true;
  detect_first(s, SyncOp::O1);  // q = 0
  CHECK_FALSE(s.f);
  detect_last(s, SyncOp::O1);   // mid sequence
  CHECK_FALSE(s.f);
  s.slot_B = 2;
  detect_last(s, SyncOp::O1);
  CHECK(s.f);
}

TEST_CASE("o1 phases") {
  SyncState s;
  s.A = P("101");
  s.deg_A = 2;
  s.B = P("10101");
  s.slot_B = 4;
  o1_phase_a(s, 6);
  CHECK(s.q == P("1"));
  o1_phase_b(s);
  CHECK(s.B == P("1"));
  o1_phase_c(s);
  CHECK(s.slot_B == 3);
  o1_phase_a(s, 6);
  CHECK(s.q == P("10"));
  auto before = s.B;
  o1_phase_b(s);  // q bit 0: unchanged
  CHECK(s.B == before);
}

TEST_CASE("o2 aligns B and decrements its degree register") {
  SyncState s;
  s.A = P("1011");
  s.deg_A = 3;
  s.B = P("11");  // one leading zero below the slot at deg A - 1 = 2
  s.slot_B = 3;
  s.q = P("10");
  s.f = true;
  s.c = 1;
  step_o2(s);  // first: slot = deg A, pending XOR with q0 = 0
  CHECK(s.slot_B == 2);
  CHECK_FALSE(s.f);
  step_o2(s);
  CHECK(s.slot_B == 1);
  CHECK(s.f);  // high slot now holds 1
  CHECK(s.slot_B == deg(s.B));
}

TEST_CASE("worked long division trace") {
  auto rows = trace_long_division(P("101"), P("10101"), 6);
  CHECK(rows.back().B == P("1"));
  CHECK(rows.back().q == P("100"));
  CHECK(rows.back().slot_B == 0);
  CHECK(rows.back().c == 2);
  auto text = format_division_trace(rows, 5);
  CHECK(text.find("00100") != std::string::npos);
  CHECK_THROWS_AS(trace_long_division(P("11"), P("110"), 6), Error);
}

TEST_CASE("long division trace matches poly_divmod") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    auto A = BinaryPolynomial::from_uint((rng() & 0x3f) | 2);
    auto B = BinaryPolynomial::from_uint((rng() & 0x3ff) | 0x200);
    auto dm = poly_divmod(B, A);
    if (dm.remainder.is_zero()) continue;
    auto rows = trace_long_division(A, B, 64);
    CHECK(rows.back().B == dm.remainder);
    CHECK(rows.back().q == dm.quotient);
    CHECK(rows.back().slot_B == deg(dm.remainder));
  }
}

TEST_CASE("step primitives are undone by their inverses") {
  const auto F = FieldSpec::standard(6);
  const std::size_t qw = quotient_width(6);
  for (const auto& c : F.nonzero_elements()) {
    auto s = SyncState::initial(c, F);
    for (int guard = 0; s.deg_A != 0 && guard < 500; ++guard) {
      const auto before = s;
      switch (static_cast<SyncOp>(s.c)) {
        case SyncOp::O1:
          step_o1(s, qw);
          { auto t = s; step_o1_inverse(t); CHECK(t == before); }
          break;
        case SyncOp::O2:
          step_o2(s);
          { auto t = s; step_o2_inverse(t); CHECK(t == before); }
          break;
        case SyncOp::Update:
          step_update(s);
          { auto t = s; step_update_inverse(t); CHECK(t == before); }
          break;
        case SyncOp::Swap:
          step_swap(s);
          { auto t = s; step_swap(t); CHECK(t == before); }
          break;
      }
      advance_counter(s);
    }
    CHECK(s.a == F.invert(c));
  }
}

TEST_CASE("run_synchronized on one input") {
  const auto F = FieldSpec::standard(4);
  auto t = run_synchronized({BinaryPolynomial::one()}, F).front();
  CHECK(t.inverse.is_one());
  CHECK(t.rounds_used == 0);
  CHECK(t.final_state.h == default_cycles(4));
  CHECK_THROWS_AS(run_synchronized({BinaryPolynomial()}, F), Error);
  CHECK_THROWS_AS(run_synchronized({P("10")}, F, 2), Error);
}

TEST_CASE("run_synchronized, all of GF(2^4)") {
  const auto F = FieldSpec::standard(4);
  auto inputs = F.nonzero_elements();
  auto traces = run_synchronized(inputs, F);
  const auto layout = optimized_layout(4, halting_width(default_cycles(4)));
  std::set<std::string> finals;
  std::set<std::vector<bool>> trajectories;
  for (const auto& t : traces) {
    CHECK(t.inverse == F.invert(t.input));
    CHECK(t.schedule() == traces.front().schedule());
    CHECK(t.schedule().size() == 4 * default_cycles(4));
    CHECK_FALSE(t.fidelity_loss);
    finals.insert(encode_state(t.final_state, layout).to_string());
    std::vector<bool> fired;
    for (const auto& r : t.slots) fired.push_back(r.fired);
    trajectories.insert(fired);
    for (const auto& b : t.boundaries) {
      CHECK(b.q.is_zero());
      CHECK(b.f);
      CHECK(b.c == 0);
      CHECK(deg(b.a) + deg(b.B) == 4);
      CHECK(deg(b.a) + deg(b.A) <= 4);
      CHECK(deg(b.b) + deg(b.B) <= 4);
      CHECK(b.slot_B == deg(b.B));
      CHECK(b.deg_a == deg(b.a));
      CHECK(b.deg_b == deg(b.b));
    }
  }
  CHECK(finals.size() == inputs.size());
  CHECK(trajectories.size() > 1);
}

TEST_CASE("quotient bound and fidelity flags agree, m = 16 sample") {
  const auto F = FieldSpec::standard(16);
  std::mt19937_64 rng(99);
  std::vector<BinaryPolynomial> sample;
  for (int i = 0; i < 300; ++i) {
    sample.push_back(BinaryPolynomial::from_uint((rng() & 0xffff) | 1));
  }
  auto traces = run_synchronized(sample, F);
  std::size_t flagged = 0;
  for (const auto& t : traces) {
    CHECK(t.inverse == F.invert(t.input));
    flagged += t.fidelity_loss;
  }
  auto rep = check_quotient_bound(F, sample);
  CHECK(rep.inputs == sample.size());
  CHECK(rep.flagged == flagged);
  CHECK(rep.fraction() <= 12.0 / 16);
}

TEST_CASE("quotient bound is vacuous for small m") {
  for (std::size_t m = 2; m <= 8; ++m) {
    const auto F = FieldSpec::standard(m);
    CHECK(check_quotient_bound(F, F.nonzero_elements()).flagged == 0);
  }
}

TEST_CASE("gate estimates and sync trace text") {
  const auto F = FieldSpec::standard(4);
  auto g = estimate_step_gates(F);
  CHECK(g.at("ac") == 2);
  CHECK(g.at("total") == g.at("round") * default_cycles(4));
  auto text = format_sync_trace(P("10"), F);
  CHECK(text.find("inverse 1001") != std::string::npos);
}
