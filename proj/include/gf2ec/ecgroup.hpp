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

#include <string>
#include <utility>
#include <vector>

#include "gf2ec/circuit.hpp"
#include "gf2ec/curve.hpp"
#include "gf2ec/field.hpp"

namespace gf2ec {

enum class EuclidBackend { Naive, Optimized };
const char* to_string(EuclidBackend b);
/// "naive" or "opt"; throws Error(BadParameter) otherwise.
EuclidBackend parse_backend(const std::string& name);

/// The classically known point A = (alpha, beta). Throws
/// Error(PointNotOnCurve) if it is not an affine point of the curve.
struct FixedPointParams {
  CurveSpec curve;
  BinaryPolynomial alpha;
  BinaryPolynomial beta;

  FixedPointParams(CurveSpec curve, BinaryPolynomial alpha,
                   BinaryPolynomial beta);
  CurvePoint point() const { return CurvePoint::affine(alpha, beta); }
};

enum class StepKind { AddConstant, Divide, SquareAdd, Multiply, Fold };
const char* to_string(StepKind k);

/// One reversible arrow on the (x, y) register pair.
///   AddConstant: x ^= cx, y ^= cy
///   Divide:      (u, v) -> (u, v/u), via E m E m
///   SquareAdd:   x ^= y^2 (+ y when `linear`) + cx
///   Multiply:    (u, w) -> (u, w u), the Divide steps run backwards
///   Fold:        y ^= x
struct PlanStep {
  StepKind kind;
  BinaryPolynomial cx;
  BinaryPolynomial cy;
  bool linear = false;
  std::string label;
};

struct GroupStepPlan {
  CurveKind kind;
  std::vector<PlanStep> steps;
};

/// Non-supersingular: add (alpha, beta), divide, square-and-add, multiply,
/// add (alpha, beta), fold. Supersingular: add (alpha, beta), divide,
/// square-and-add, multiply, add (alpha, c + beta).
GroupStepPlan plan_group_add(const FixedPointParams& params);

/// lambda^2 (+ lambda) + cx: the value XORed into x by a SquareAdd step.
BinaryPolynomial squaring_step(const BinaryPolynomial& lambda,
                               const PlanStep& step, const FieldSpec& field);

using XY = std::pair<BinaryPolynomial, BinaryPolynomial>;
/// Field-level meaning of a step. Divide and Multiply throw
/// Error(DivisionByZero) when x = 0.
XY apply_step(const PlanStep& step, XY xy, const FieldSpec& field);
XY apply_step_inverse(const PlanStep& step, XY xy, const FieldSpec& field);
XY evaluate_plan(const GroupStepPlan& plan, XY xy, const FieldSpec& field);
XY evaluate_plan_inverse(const GroupStepPlan& plan, XY xy,
                         const FieldSpec& field);

/// Gate-level pieces of x, y <-> x, y/x on the layout x, y, t:
///   E    x <- 1/x by the selected Euclid inverter
///   m    t ^= x y
///   E    x <- 1/x again
///   m'   y ^= x t (the multiplier run backwards with t as operand)
///   swap y <-> t
struct DivisionWithUncompute {
  FieldSpec field;
  EuclidBackend backend;
  Layout layout;
  Circuit multiply;       // t ^= x y
  Circuit multiply_back;  // y ^= x t
  Circuit swap_yt;

  std::vector<std::string> step_names() const;
  /// Runs the steps on `state`; throws Error(DivisionByZero) if x = 0.
  void divide(BasisState& state) const;
  /// The same steps in reverse order.
  void multiply_in_place(BasisState& state) const;
  /// x <- 1/x through the backend.
  void invert_x(BasisState& state) const;
};

DivisionWithUncompute build_division_with_uncompute(const FieldSpec& field,
                                                    EuclidBackend backend);

/// Width of the assembled group operation: the inverter's registers plus
/// the y and t registers of the multiplier.
std::size_t group_layout_width(const FieldSpec& field, EuclidBackend backend);

struct GroupAddRun {
  CurvePoint result;
  bool scratch_clear = false;
  std::size_t inversions = 0;
};

/// Throws Error(NonGenericInput) unless S and S + A are both affine points
/// whose x differs from alpha.
GroupAddRun run_group_add(const CurvePoint& S, const FixedPointParams& params,
                          EuclidBackend backend);
CurvePoint simulate_group_add(const CurvePoint& S,
                              const FixedPointParams& params,
                              EuclidBackend backend = EuclidBackend::Naive);
bool is_generic_for(const CurvePoint& S, const FixedPointParams& params);

}  // namespace gf2ec
