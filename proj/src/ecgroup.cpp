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

#include "gf2ec/ecgroup.hpp"

#include <memory>

#include "gf2ec/blocks.hpp"
#include "gf2ec/errors.hpp"
#include "gf2ec/euclid_opt.hpp"
#include "gf2ec/naive_division.hpp"

namespace gf2ec {

const char* to_string(EuclidBackend b) {
  return b == EuclidBackend::Naive ? "naive" : "opt";
}

EuclidBackend parse_backend(const std::string& name) {
  if (name == "naive") return EuclidBackend::Naive;
  if (name == "opt" || name == "optimized") return EuclidBackend::Optimized;
  throw Error(ErrorKind::BadParameter, "unknown backend '" + name + "'");
}

FixedPointParams::FixedPointParams(CurveSpec c, BinaryPolynomial a,
                                   BinaryPolynomial b)
    : curve(std::move(c)), alpha(std::move(a)), beta(std::move(b)) {
  if (!curve.on_curve(alpha, beta)) {
    throw Error(ErrorKind::PointNotOnCurve,
                "fixed point (" + alpha.to_string() + ", " + beta.to_string() +
                    ") is not on the curve");
  }
}

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::AddConstant: return "add-constant";
    case StepKind::Divide: return "divide";
    case StepKind::SquareAdd: return "square-add";
    case StepKind::Multiply: return "multiply";
    case StepKind::Fold: return "fold";
  }
  return "?";
}

GroupStepPlan plan_group_add(const FixedPointParams& p) {
  const auto& alpha = p.alpha;
  const auto& beta = p.beta;
  GroupStepPlan plan{p.curve.kind(), {}};
  auto& s = plan.steps;
  s.push_back({StepKind::AddConstant, alpha, beta, false,
               "x+alpha, y+beta"});
  s.push_back({StepKind::Divide, {}, {}, false, "x+alpha, lambda"});
  if (p.curve.kind() == CurveKind::NonSupersingular) {
    // x'+alpha = lambda^2 + lambda + (x+alpha) + a + alpha
    s.push_back({StepKind::SquareAdd, p.curve.a() + alpha, {}, true,
                 "x'+alpha, lambda"});
    s.push_back({StepKind::Multiply, {}, {}, false, "x'+alpha, x'+y'+beta"});
    s.push_back({StepKind::AddConstant, alpha, beta, false, "x', x'+y'"});
    s.push_back({StepKind::Fold, {}, {}, false, "x', y'"});
  } else {
    // x'+alpha = lambda^2 + (x+alpha) + alpha
    s.push_back({StepKind::SquareAdd, alpha, {}, false, "x'+alpha, lambda"});
    s.push_back({StepKind::Multiply, {}, {}, false, "x'+alpha, y'+c+beta"});
    s.push_back({StepKind::AddConstant, alpha, p.curve.c() + beta, false,
                 "x', y'"});
  }
  return plan;
}

BinaryPolynomial squaring_step(const BinaryPolynomial& lambda,
                               const PlanStep& step, const FieldSpec& field) {
  BinaryPolynomial v = field.square(lambda) + step.cx;
  if (step.linear) v += lambda;
  return v;
}

XY apply_step(const PlanStep& step, XY xy, const FieldSpec& field) {
  auto& [x, y] = xy;
  switch (step.kind) {
    case StepKind::AddConstant:
      x += step.cx;
      y += step.cy;
      break;
    case StepKind::Divide:
      y = field.div(y, x);
      break;
    case StepKind::SquareAdd:
      x += squaring_step(y, step, field);
      break;
    case StepKind::Multiply:
      if (x.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "multiply step needs x != 0");
      }
      y = field.mul(y, x);
      break;
    case StepKind::Fold:
      y += x;
      break;
  }
  return xy;
}

XY apply_step_inverse(const PlanStep& step, XY xy, const FieldSpec& field) {
  switch (step.kind) {
    case StepKind::Divide:
      return apply_step({StepKind::Multiply, {}, {}, false, {}}, xy, field);
    case StepKind::Multiply:
      return apply_step({StepKind::Divide, {}, {}, false, {}}, xy, field);
    default:
      return apply_step(step, xy, field);  // XOR steps are involutions
  }
}

XY evaluate_plan(const GroupStepPlan& plan, XY xy, const FieldSpec& field) {
  for (const auto& s : plan.steps) xy = apply_step(s, xy, field);
  return xy;
}

XY evaluate_plan_inverse(const GroupStepPlan& plan, XY xy,
                         const FieldSpec& field) {
  for (auto it = plan.steps.rbegin(); it != plan.steps.rend(); ++it) {
    xy = apply_step_inverse(*it, xy, field);
  }
  return xy;
}

namespace {

Layout xyt_layout(std::size_t m) {
  Layout l;
  l.add("x", m);
  l.add("y", m);
  l.add("t", m);
  return l;
}

// The multiplier with its registers renamed, so that compose() places it on
// different registers of the x, y, t layout.
Circuit relabel(const Circuit& c, const std::vector<std::string>& names) {
  Layout l;
  const auto& regs = c.layout().registers();
  for (std::size_t i = 0; i < regs.size(); ++i) l.add(names[i], regs[i].width);
  Circuit out(l);
  out.append_raw(c.gates());
  return out;
}

}  // namespace

std::vector<std::string> DivisionWithUncompute::step_names() const {
  return {"E", "m", "E", "m'", "swap"};
}

void DivisionWithUncompute::invert_x(BasisState& state) const {
  const auto& xr = layout.reg("x");
  const auto x = state.read(xr);
  if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "x is zero");
  BinaryPolynomial inv;
  if (backend == EuclidBackend::Naive) {
    inv = run_naive_inversion(x, field);
  } else {
    const auto t = run_synchronized({x}, field).front();
    if (!t.final_state.q.is_zero() || !t.final_state.A.is_one()) {
      throw Error(ErrorKind::Overflow, "optimized inverter ended dirty");
    }
    inv = t.inverse;
  }
  state.write(xr, inv);
}

void DivisionWithUncompute::divide(BasisState& state) const {
  invert_x(state);
  apply_in_place(multiply, state);
  invert_x(state);
  apply_in_place(multiply_back, state);
  apply_in_place(swap_yt, state);
}

void DivisionWithUncompute::multiply_in_place(BasisState& state) const {
  if (state.read(layout.reg("x")).is_zero()) {
    throw Error(ErrorKind::DivisionByZero, "x is zero");
  }
  apply_in_place(inverse(swap_yt), state);
  apply_in_place(inverse(multiply_back), state);
  invert_x(state);
  apply_in_place(inverse(multiply), state);
  invert_x(state);
}

DivisionWithUncompute build_division_with_uncompute(const FieldSpec& field,
                                                    EuclidBackend backend) {
  const std::size_t m = field.m();
  Layout l = xyt_layout(m);
  const Circuit mul = build_mul_accumulate(field);  // x, y, t
  Circuit multiply = compose(Circuit(l), mul);
  Circuit multiply_back =
      compose(Circuit(l), inverse(relabel(mul, {"x", "t", "y"})));
  Circuit swap_yt(l);
  for (std::size_t i = 0; i < m; ++i) {
    swap_yt.swap(l.wire("y", i), l.wire("t", i));
  }
  return {field, backend, l, std::move(multiply), std::move(multiply_back),
          std::move(swap_yt)};
}

std::size_t group_layout_width(const FieldSpec& field, EuclidBackend backend) {
  const std::size_t m = field.m();
  const std::size_t inverter =
      backend == EuclidBackend::Naive
          ? NaiveInverter(field).width()
          : qubit_budget(m, halting_width(default_cycles(m)));
  return inverter + 2 * m;
}

bool is_generic_for(const CurvePoint& S, const FixedPointParams& params) {
  if (S.infinity || !on_curve(S, params.curve) || S.x == params.alpha) {
    return false;
  }
  const CurvePoint R = ec_add(S, params.point(), params.curve);
  return !R.infinity && R.x != params.alpha;
}

namespace {

Circuit xor_step_circuit(const PlanStep& step, const Layout& l,
                         const FieldSpec& field) {
  const auto x = wires_of(l.reg("x"));
  const auto y = wires_of(l.reg("y"));
  Circuit c(l);
  switch (step.kind) {
    case StepKind::AddConstant:
      emit_xor_constant(c, x, step.cx);
      emit_xor_constant(c, y, step.cy);
      break;
    case StepKind::SquareAdd:
      emit_square_accumulate(c, y, x, field);
      if (step.linear) {
        for (std::size_t i = 0; i < x.size(); ++i) c.x(x[i], {{y[i], true}});
      }
      emit_xor_constant(c, x, step.cx);
      break;
    case StepKind::Fold:
      for (std::size_t i = 0; i < x.size(); ++i) c.x(y[i], {{x[i], true}});
      break;
    default:
      break;
  }
  return c;
}

}  // namespace

GroupAddRun run_group_add(const CurvePoint& S, const FixedPointParams& params,
                          EuclidBackend backend) {
  if (!on_curve(S, params.curve)) {
    throw Error(ErrorKind::PointNotOnCurve, "S is not on the curve");
  }
  if (!is_generic_for(S, params)) {
    throw Error(ErrorKind::NonGenericInput,
                "S = " + S.to_string() + " is outside the generic case");
  }
  const FieldSpec& field = params.curve.field();
  const auto plan = plan_group_add(params);
  const auto div = build_division_with_uncompute(field, backend);
  const auto& l = div.layout;
  BasisState st(l);
  st.write(l.reg("x"), S.x);
  st.write(l.reg("y"), S.y);
  GroupAddRun run;
  run.scratch_clear = true;
  for (const auto& step : plan.steps) {
    switch (step.kind) {
      case StepKind::Divide:
        div.divide(st);
        run.inversions += 2;
        break;
      case StepKind::Multiply:
        div.multiply_in_place(st);
        run.inversions += 2;
        break;
      default:
        apply_in_place(xor_step_circuit(step, l, field), st);
        break;
    }
    run.scratch_clear &= st.read(l.reg("t")).is_zero();
  }
  run.result = CurvePoint::affine(st.read(l.reg("x")), st.read(l.reg("y")));
  return run;
}

CurvePoint simulate_group_add(const CurvePoint& S,
                              const FixedPointParams& params,
                              EuclidBackend backend) {
  auto run = run_group_add(S, params, backend);
  if (!run.scratch_clear) {
    throw Error(ErrorKind::Overflow, "group operation left scratch dirty");
  }
  return run.result;
}

}  // namespace gf2ec
