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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gf2ec/field.hpp"
#include "gf2ec/poly.hpp"

namespace gf2ec {

enum class CurveKind { NonSupersingular, Supersingular };

/// Case 1: y^2 + xy = x^3 + a x^2 + b, b != 0.
/// Case 2: y^2 + c y = x^3 + a x + b, c != 0.
class CurveSpec {
 public:
  CurveSpec(FieldSpec field, CurveKind kind, BinaryPolynomial a,
            BinaryPolynomial b, BinaryPolynomial c = {});

  const FieldSpec& field() const noexcept { return field_; }
  CurveKind kind() const noexcept { return kind_; }
  const BinaryPolynomial& a() const noexcept { return a_; }
  const BinaryPolynomial& b() const noexcept { return b_; }
  const BinaryPolynomial& c() const noexcept { return c_; }

  bool on_curve(const BinaryPolynomial& x, const BinaryPolynomial& y) const;

 private:
  FieldSpec field_;
  CurveKind kind_;
  BinaryPolynomial a_;
  BinaryPolynomial b_;
  BinaryPolynomial c_;
};

struct CurvePoint {
  bool infinity = true;
  BinaryPolynomial x;
  BinaryPolynomial y;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(BinaryPolynomial x, BinaryPolynomial y) {
    return {false, std::move(x), std::move(y)};
  }

  std::string to_string() const;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

bool on_curve(const CurvePoint& p, const CurveSpec& curve);
CurvePoint ec_negate(const CurvePoint& p, const CurveSpec& curve);

/// True when p + r is computed by the chord formulas: both affine, distinct,
/// and not negatives of each other.
bool is_generic_pair(const CurvePoint& p, const CurvePoint& r,
                     const CurveSpec& curve);

/// Group sum for distinct points. Handles the identity and inverse-point
/// cases; throws Error(DoublingUnsupported) for p == r (affine) and
/// Error(PointNotOnCurve) for invalid inputs.
CurvePoint ec_add(const CurvePoint& p, const CurvePoint& r,
                  const CurveSpec& curve);

/// Every affine point, in (x, y) integer order.
std::vector<CurvePoint> enumerate_points(const CurveSpec& curve);

/// Parsed `key = value` file; '#' starts a comment.
using KeyValues = std::map<std::string, std::string>;
KeyValues parse_key_values(const std::string& text);
KeyValues load_key_values(const std::string& path);

/// Keys: m (decimal), modulus (MSB-first bits). `modulus` may be omitted, in
/// which case the standard modulus for m is used.
FieldSpec field_from_config(const KeyValues& kv);
/// Field keys plus kind (nonsupersingular|supersingular), a, b, c.
CurveSpec curve_from_config(const KeyValues& kv);
std::string curve_to_config(const CurveSpec& curve);

}  // namespace gf2ec
