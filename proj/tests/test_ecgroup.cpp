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

#include "gf2ec/ecgroup.hpp"
#include "gf2ec/errors.hpp"
#include "gf2ec/euclid_opt.hpp"
#include "gf2ec/naive_division.hpp"

using namespace gf2ec;

namespace {

BinaryPolynomial P(const char* bits) { return BinaryPolynomial::parse(bits); }

FieldSpec gf16() { return FieldSpec(4, P("10011")); }

CurveSpec case1() {
  return CurveSpec(gf16(), CurveKind::NonSupersingular, P("1000"), P("1"));
}
CurveSpec case2() {
  return CurveSpec(gf16(), CurveKind::Supersingular, P("1"), P("0"), P("1"));
}

FixedPointParams fixed_on(const CurveSpec& curve, std::size_t index) {
  auto pts = enumerate_points(curve);
  const auto& p = pts.at(index % pts.size());
  return FixedPointParams(curve, p.x, p.y);
}

// Every curve over GF(2^4) in both families.
std::vector<CurveSpec> all_curves() {
  const auto F = gf16();
  std::vector<CurveSpec> out;
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 1; b < 16; ++b) {
      out.emplace_back(F, CurveKind::NonSupersingular,
                       BinaryPolynomial::from_uint(a),
                       BinaryPolynomial::from_uint(b));
    }
  }
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      for (std::uint64_t c = 1; c < 16; ++c) {
        out.emplace_back(F, CurveKind::Supersingular,
                         BinaryPolynomial::from_uint(a),
                         BinaryPolynomial::from_uint(b),
                         BinaryPolynomial::from_uint(c));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("plan shapes") {
  auto p1 = plan_group_add(fixed_on(case1(), 0));
  CHECK(p1.steps.size() == 6);
  CHECK(p1.steps[1].kind == StepKind::Divide);
  CHECK(p1.steps[2].kind == StepKind::SquareAdd);
  CHECK(p1.steps[3].kind == StepKind::Multiply);
  CHECK(p1.steps[5].kind == StepKind::Fold);
  auto p2 = plan_group_add(fixed_on(case2(), 0));
  CHECK(p2.steps.size() == 5);
  CHECK(p2.steps.back().kind == StepKind::AddConstant);
  CHECK(p2.steps.back().cy == case2().c() + p2.steps.front().cy);

  // (0, 0) lies on y^2 + y = x^3 + x: the first constant add is empty.
  FixedPointParams origin(case2(), {}, {});
  auto p0 = plan_group_add(origin);
  CHECK(p0.steps.front().cx.is_zero());
  CHECK(p0.steps.front().cy.is_zero());
  CHECK(p0.steps.back().cy == case2().c());

  CHECK_THROWS_AS(FixedPointParams(case1(), P("1"), P("1")), Error);
}

TEST_CASE("squaring_step") {
  PlanStep s1{StepKind::SquareAdd, P("101"), {}, true, ""};
  PlanStep s2{StepKind::SquareAdd, P("101"), {}, false, ""};
  const auto F = gf16();
  CHECK(squaring_step({}, s1, F) == P("101"));
  CHECK(squaring_step(BinaryPolynomial::one(), s1, F) == P("101"));
  CHECK(squaring_step(P("10"), s2, F) == P("100") + P("101"));
  CHECK(squaring_step(P("1000"), s2, F) == F.square(P("1000")) + P("101"));
}

TEST_CASE("plan semantics equal ec_add on every GF(2^4) curve") {
  std::size_t checked = 0;
  for (const auto& curve : all_curves()) {
    const auto pts = enumerate_points(curve);
    for (std::size_t ai : {std::size_t{0}, pts.size() / 2}) {
      const auto& A = pts[ai];
      FixedPointParams params(curve, A.x, A.y);
      const auto plan = plan_group_add(params);
      for (const auto& S : pts) {
        if (!is_generic_for(S, params)) continue;
        const auto R = ec_add(S, A, curve);
        const auto out = evaluate_plan(plan, {S.x, S.y}, curve.field());
        CHECK(out.first == R.x);
        CHECK(out.second == R.y);
        const auto back = evaluate_plan_inverse(plan, out, curve.field());
        CHECK(back.first == S.x);
        CHECK(back.second == S.y);
        ++checked;
      }
    }
  }
  CHECK(checked > 5000);
}

TEST_CASE("division with uncompute") {
  const auto F = gf16();
  for (auto backend : {EuclidBackend::Naive, EuclidBackend::Optimized}) {
    auto div = build_division_with_uncompute(F, backend);
    CHECK(div.step_names().size() == 5);
    const auto& l = div.layout;
    auto run = [&](const BinaryPolynomial& x, const BinaryPolynomial& y) {
      BasisState s(l);
      s.write(l.reg("x"), x);
      s.write(l.reg("y"), y);
      div.divide(s);
      CHECK(s.read(l.reg("x")) == x);
      CHECK(s.read(l.reg("t")).is_zero());
      return s.read(l.reg("y"));
    };
    CHECK(run(P("10"), {}).is_zero());
    CHECK(run(BinaryPolynomial::one(), P("1011")) == P("1011"));
    CHECK(run(P("10"), P("101")) == F.div(P("101"), P("10")));
    for (const auto& x : F.nonzero_elements()) {
      for (std::uint64_t y = 0; y < 16; ++y) {
        auto yy = BinaryPolynomial::from_uint(y);
        CHECK(run(x, yy) == F.div(yy, x));
        BasisState s(l);
        s.write(l.reg("x"), x);
        s.write(l.reg("y"), yy);
        div.divide(s);
        div.multiply_in_place(s);
        CHECK(s.read(l.reg("y")) == yy);
      }
    }
    BasisState zero(l);
    CHECK_THROWS_AS(div.divide(zero), Error);
  }
}

TEST_CASE("simulate_group_add matches ec_add, both backends") {
  for (const auto& curve : {case1(), case2()}) {
    const auto pts = enumerate_points(curve);
    for (std::size_t ai : {0, 3}) {
      const auto params = fixed_on(curve, ai);
      for (auto backend : {EuclidBackend::Naive, EuclidBackend::Optimized}) {
        std::size_t generic = 0;
        for (const auto& S : pts) {
          if (!is_generic_for(S, params)) {
            CHECK_THROWS_AS(run_group_add(S, params, backend), Error);
            continue;
          }
          auto run = run_group_add(S, params, backend);
          CHECK(run.scratch_clear);
          CHECK(run.inversions == 4);
          CHECK(run.result == ec_add(S, params.point(), curve));
          ++generic;
        }
        CHECK(generic > 0);
      }
    }
  }
}

TEST_CASE("non-generic inputs are rejected") {
  const auto params = fixed_on(case1(), 1);
  try {
    simulate_group_add(params.point(), params);
    FAIL("expected NonGenericInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonGenericInput);
  }
  CHECK_THROWS_AS(simulate_group_add(CurvePoint::at_infinity(), params),
                  Error);
  CHECK_THROWS_AS(
      simulate_group_add(CurvePoint::affine(P("1"), P("1")), params), Error);
}

TEST_CASE("group layout width") {
  const auto F = gf16();
  CHECK(group_layout_width(F, EuclidBackend::Naive) ==
        NaiveInverter(F).width() + 8);
  CHECK(group_layout_width(F, EuclidBackend::Optimized) ==
        qubit_budget(4, halting_width(default_cycles(4))) + 8);
  CHECK(parse_backend("opt") == EuclidBackend::Optimized);
  CHECK_THROWS_AS(parse_backend("x"), Error);
}
