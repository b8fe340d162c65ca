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

#include "gf2ec/curve.hpp"

#include <fstream>
#include <sstream>

#include "gf2ec/errors.hpp"

namespace gf2ec {

CurveSpec::CurveSpec(FieldSpec field, CurveKind kind, BinaryPolynomial a,
                     BinaryPolynomial b, BinaryPolynomial c)
    : field_(std::move(field)),
      kind_(kind),
      a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)) {
  if (!field_.contains(a_) || !field_.contains(b_) || !field_.contains(c_)) {
    throw Error(ErrorKind::InvalidCurve, "curve constant outside the field");
  }
  if (kind_ == CurveKind::NonSupersingular) {
    if (b_.is_zero()) {
      throw Error(ErrorKind::InvalidCurve, "non-supersingular curve needs b != 0");
    }
    c_ = {};
  } else if (c_.is_zero()) {
    throw Error(ErrorKind::InvalidCurve, "supersingular curve needs c != 0");
  }
}

bool CurveSpec::on_curve(const BinaryPolynomial& x,
                         const BinaryPolynomial& y) const {
  if (!field_.contains(x) || !field_.contains(y)) return false;
  const FieldSpec& F = field_;
  const BinaryPolynomial x2 = F.square(x);
  const BinaryPolynomial x3 = F.mul(x2, x);
  if (kind_ == CurveKind::NonSupersingular) {
    return F.square(y) + F.mul(x, y) == x3 + F.mul(a_, x2) + b_;
  }
  return F.square(y) + F.mul(c_, y) == x3 + F.mul(a_, x) + b_;
}

std::string CurvePoint::to_string() const {
  if (infinity) return "O";
  return "(" + x.to_string() + "," + y.to_string() + ")";
}

bool on_curve(const CurvePoint& p, const CurveSpec& curve) {
  return p.infinity || curve.on_curve(p.x, p.y);
}

CurvePoint ec_negate(const CurvePoint& p, const CurveSpec& curve) {
  if (p.infinity) return p;
  if (curve.kind() == CurveKind::NonSupersingular) {
    return CurvePoint::affine(p.x, p.x + p.y);
  }
  return CurvePoint::affine(p.x, p.y + curve.c());
}

bool is_generic_pair(const CurvePoint& p, const CurvePoint& r,
                     const CurveSpec& curve) {
  if (p.infinity || r.infinity) return false;
  // Distinct and not mutually inverse is equivalent to distinct x.
  (void)curve;
  return p.x != r.x;
}

CurvePoint ec_add(const CurvePoint& p, const CurvePoint& r,
                  const CurveSpec& curve) {
  if (!on_curve(p, curve) || !on_curve(r, curve)) {
    throw Error(ErrorKind::PointNotOnCurve, "ec_add operand not on curve");
  }
  if (p.infinity) return r;
  if (r.infinity) return p;
  if (r == ec_negate(p, curve)) return CurvePoint::at_infinity();
  if (p == r) {
    throw Error(ErrorKind::DoublingUnsupported, "point doubling not supported");
  }
  const FieldSpec& F = curve.field();
  const BinaryPolynomial lambda = F.div(p.y + r.y, p.x + r.x);
  if (curve.kind() == CurveKind::NonSupersingular) {
    const BinaryPolynomial x3 =
        F.square(lambda) + lambda + p.x + r.x + curve.a();
    const BinaryPolynomial y3 = F.mul(lambda, p.x + x3) + x3 + p.y;
    return CurvePoint::affine(x3, y3);
  }
  const BinaryPolynomial x3 = F.square(lambda) + p.x + r.x;
  const BinaryPolynomial y3 = F.mul(lambda, p.x + x3) + p.y + curve.c();
  return CurvePoint::affine(x3, y3);
}

std::vector<CurvePoint> enumerate_points(const CurveSpec& curve) {
  std::vector<CurvePoint> out;
  const std::uint64_t n = curve.field().size();
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      auto px = BinaryPolynomial::from_uint(x);
      auto py = BinaryPolynomial::from_uint(y);
      if (curve.on_curve(px, py)) out.push_back(CurvePoint::affine(px, py));
    }
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

const std::string& require(const KeyValues& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    throw Error(ErrorKind::ParseError, "missing config key '" + key + "'");
  }
  return it->second;
}

}  // namespace

KeyValues parse_key_values(const std::string& text) {
  KeyValues kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find_first_of("=:");
    if (eq == std::string::npos) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": expected key = value");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

KeyValues load_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_key_values(buf.str());
}

FieldSpec field_from_config(const KeyValues& kv) {
  std::size_t m = 0;
  try {
    m = std::stoul(require(kv, "m"));
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "m must be a decimal integer");
  }
  if (kv.count("modulus") == 0) return FieldSpec::standard(m);
  return FieldSpec(m, BinaryPolynomial::parse(kv.at("modulus")));
}

CurveSpec curve_from_config(const KeyValues& kv) {
  FieldSpec field = field_from_config(kv);
  const std::string& kind_text = require(kv, "kind");
  CurveKind kind;
  if (kind_text == "nonsupersingular" || kind_text == "non-supersingular") {
    kind = CurveKind::NonSupersingular;
  } else if (kind_text == "supersingular") {
    kind = CurveKind::Supersingular;
  } else {
    throw Error(ErrorKind::ParseError, "unknown curve kind '" + kind_text + "'");
  }
  auto a = BinaryPolynomial::parse(require(kv, "a"));
  auto b = BinaryPolynomial::parse(require(kv, "b"));
  BinaryPolynomial c;
  if (kind == CurveKind::Supersingular) {
    c = BinaryPolynomial::parse(require(kv, "c"));
  }
  return CurveSpec(std::move(field), kind, std::move(a), std::move(b),
                   std::move(c));
}

std::string curve_to_config(const CurveSpec& curve) {
  std::ostringstream out;
  const std::size_t m = curve.field().m();
  out << "m = " << m << "\n";
  out << "modulus = " << curve.field().modulus().to_string() << "\n";
  out << "kind = "
      << (curve.kind() == CurveKind::NonSupersingular ? "nonsupersingular"
                                                      : "supersingular")
      << "\n";
  out << "a = " << curve.a().to_string(m) << "\n";
  out << "b = " << curve.b().to_string(m) << "\n";
  if (curve.kind() == CurveKind::Supersingular) {
    out << "c = " << curve.c().to_string(m) << "\n";
  }
  return out.str();
}

}  // namespace gf2ec
