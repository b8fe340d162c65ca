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

#include "gf2ec/blocks.hpp"
#include "gf2ec/errors.hpp"

using namespace gf2ec;

namespace {

// Every basis state of the circuit's layout, with `fn` checking the output.
template <typename Fn>
void for_all_states(const Circuit& c, Fn fn) {
  const std::size_t w = c.layout().width();
  REQUIRE(w <= 20);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << w); ++i) {
    auto in = BasisState::from_index(w, i);
    fn(in, apply(c, in));
  }
}

std::uint64_t rotl(std::uint64_t x, std::size_t s, std::size_t n) {
  s %= n;
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return ((x << s) | (x >> (n - s))) & mask;
}

}  // namespace

TEST_CASE("swap block: 3 CNOT gates, exchanges the wires") {
  auto c = build_swap();
  auto r = report(c);
  CHECK(r.gates == 3);
  CHECK(r.cnot_gates == 3);
  CHECK(r.by_arity.at(1) == 3);
  const auto& w = c.layout().reg("w");
  for_all_states(c, [&](const BasisState& in, const BasisState& out) {
    CHECK(out.get(w[0]) == in.get(w[1]));
    CHECK(out.get(w[1]) == in.get(w[0]));
  });
}

TEST_CASE("cyclic shift: n-1 SWAP gates") {
  for (std::size_t n = 2; n <= 9; ++n) {
    for (auto dir : {ShiftDirection::Left, ShiftDirection::Right}) {
      auto c = build_cyclic_shift(n, dir);
      CHECK(report(c).swap_gates == n - 1);
      CHECK(c.size() == n - 1);
      const auto& x = c.layout().reg("x");
      for_all_states(c, [&](const BasisState& in, const BasisState& out) {
        const auto v = in.read_uint(x);
        const auto expect =
            dir == ShiftDirection::Left ? rotl(v, 1, n) : rotl(v, n - 1, n);
        CHECK(out.read_uint(x) == expect);
      });
    }
  }
}

TEST_CASE("controlled shift rotates by the amount register") {
  for (std::size_t n : {3, 4, 5}) {
    auto c = build_controlled_shift(n, 2);
    const auto& th = c.layout().reg("theta");
    const auto& s = c.layout().reg("s");
    for_all_states(c, [&](const BasisState& in, const BasisState& out) {
      CHECK(out.read_uint(s) == in.read_uint(s));
      CHECK(out.read_uint(th) == rotl(in.read_uint(th), in.read_uint(s), n));
    });
  }
}

TEST_CASE("increment and decrement use one ancilla") {
  for (std::size_t w = 1; w <= 6; ++w) {
    auto inc = build_increment(w);
    auto dec = build_decrement(w);
    CHECK(inc.layout().width() == w + 1);
    CHECK(inc.layout().reg("anc").width == 1);
    CHECK(dec.layout().width() == w + 1);
    const auto& k = inc.layout().reg("k");
    const auto& anc = inc.layout().reg("anc");
    const std::uint64_t mod = std::uint64_t{1} << (w + 1);
    for_all_states(inc, [&](const BasisState& in, const BasisState& out) {
      auto v = in.read_uint(k) | (std::uint64_t{in.get(anc[0])} << w);
      auto o = out.read_uint(k) | (std::uint64_t{out.get(anc[0])} << w);
      CHECK(o == (v + 1) % mod);
    });
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << w); ++v) {
      BasisState in(dec.layout());
      in.write_uint(k, v);
      auto out = apply(dec, in);
      CHECK(out.read_uint(k) == v - 1);
      CHECK_FALSE(out.get(anc[0]));
    }
  }
}

TEST_CASE("degree block: ceil(log m)+1 extra wires, computes deg") {
  for (std::size_t m = 2; m <= 10; ++m) {
    auto c = build_degree(m);
    const auto& A = c.layout().reg("A");
    const auto& d = c.layout().reg("deg");
    const auto& anc = c.layout().reg("anc");
    CHECK(c.layout().width() - m == ceil_log2(m) + 1);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
      BasisState in(c.layout());
      in.write_uint(A, v);
      auto out = apply(c, in);
      const std::uint64_t expect = v == 0 ? 0 : std::bit_width(v) - 1;
      CHECK(out.read_uint(d) == expect);
      CHECK(out.read_uint(A) == v);
      CHECK_FALSE(out.get(anc[0]));
    }
  }
}

TEST_CASE("conditional xor and constant xor") {
  auto c = build_conditional_xor(3);
  const auto& ctl = c.layout().reg("ctl");
  const auto& A = c.layout().reg("A");
  const auto& B = c.layout().reg("B");
  CHECK(report(c).by_arity.at(2) == 3);
  for_all_states(c, [&](const BasisState& in, const BasisState& out) {
    auto expect = in.read_uint(B) ^ (in.get(ctl[0]) ? in.read_uint(A) : 0);
    CHECK(out.read_uint(B) == expect);
    CHECK(out.read_uint(A) == in.read_uint(A));
  });

  Layout l;
  const auto& r = l.add("r", 5);
  Circuit k(l);
  emit_xor_constant(k, wires_of(r), BinaryPolynomial::parse("10110"));
  CHECK(k.size() == 3);
  BasisState s(l);
  s.write_uint(r, 0b00011);
  CHECK(apply(k, s).read_uint(r) == (0b00011 ^ 0b10110));
}

TEST_CASE("field multiply and square blocks against FieldSpec") {
  for (std::size_t m : {2, 3, 4, 5}) {
    const auto F = FieldSpec::standard(m);
    auto mul = build_mul_accumulate(F);
    const auto& x = mul.layout().reg("x");
    const auto& y = mul.layout().reg("y");
    const auto& t = mul.layout().reg("t");
    for (const auto& a : F.nonzero_elements()) {
      for (std::uint64_t bi = 0; bi < F.size(); ++bi) {
        auto b = BinaryPolynomial::from_uint(bi);
        BasisState in(mul.layout());
        in.write(x, a);
        in.write(y, b);
        in.write(t, BinaryPolynomial::one());
        auto out = apply(mul, in);
        CHECK(out.read(t) == F.mul(a, b) + BinaryPolynomial::one());
        CHECK(out.read(x) == a);
        CHECK(out.read(y) == b);
      }
    }
    auto sq = build_square_accumulate(F);
    CHECK(report(sq).gates == report(sq).cnot_gates);
    const auto& sx = sq.layout().reg("x");
    const auto& st = sq.layout().reg("t");
    for (std::uint64_t v = 0; v < F.size(); ++v) {
      auto e = BinaryPolynomial::from_uint(v);
      BasisState in(sq.layout());
      in.write(sx, e);
      CHECK(apply(sq, in).read(st) == F.square(e));
    }
  }
}

TEST_CASE("multiply by z in place") {
  const auto F = FieldSpec::standard(5);
  Layout l;
  const auto& y = l.add("y", 5);
  Circuit c(l);
  emit_mul_by_z(c, wires_of(y), F);
  for (std::uint64_t v = 0; v < F.size(); ++v) {
    auto e = BinaryPolynomial::from_uint(v);
    BasisState s(l);
    s.write(y, e);
    CHECK(apply(c, s).read(y) == F.mul(e, BinaryPolynomial::monomial(1)));
  }
}

TEST_CASE("extra controls condition every emitted gate") {
  Layout l;
  const auto& k = l.add("k", 3);
  const auto& anc = l.add("anc", 1);
  const auto& g = l.add("g", 1);
  Circuit c(l);
  emit_increment(c, wires_of(k), anc[0], {{g[0], true}});
  for (const auto& gate : c.gates()) {
    CHECK(std::find(gate.controls.begin(), gate.controls.end(),
                    Control{g[0], true}) != gate.controls.end());
  }
  BasisState s(l);
  s.write_uint(k, 5);
  CHECK(apply(c, s).read_uint(k) == 5);
  s.set(g[0], true);
  CHECK(apply(c, s).read_uint(k) == 6);
}

TEST_CASE("named blocks") {
  for (auto name : block_names()) {
    auto c = build_named_block(name, {});
    CHECK(c.layout().width() > 0);
    CHECK(check_permutation(c));
  }
  CHECK_THROWS_AS(build_named_block("nope", {}), Error);
}
