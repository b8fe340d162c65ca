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

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>

#include "gf2ec/blocks.hpp"
#include "gf2ec/circuit.hpp"
#include "gf2ec/curve.hpp"
#include "gf2ec/ecgroup.hpp"
#include "gf2ec/errors.hpp"
#include "gf2ec/euclid_opt.hpp"
#include "gf2ec/naive_division.hpp"

using namespace gf2ec;
using json = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr std::uint64_t kDefaultSeed = 20240607;
constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --field <file> or --m <n> (standard modulus).
struct FieldOpts {
  std::string file;
  std::size_t m = 0;

  void attach(CLI::App* app) {
    app->add_option("--field", file, "field config file (m, modulus)");
    app->add_option("--m", m, "extension degree, standard modulus");
  }
  FieldSpec get() const {
    if (!file.empty()) return field_from_config(load_key_values(file));
    if (m == 0) throw UsageError("one of --field or --m is required");
    return FieldSpec::standard(m);
  }
};

BinaryPolynomial bits(const std::string& s) {
  return BinaryPolynomial::parse(s);
}

std::pair<BinaryPolynomial, BinaryPolynomial> bit_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) {
    throw UsageError("expected <bits>,<bits>, got '" + s + "'");
  }
  return {bits(s.substr(0, comma)), bits(s.substr(comma + 1))};
}

std::vector<BinaryPolynomial> parse_inputs(const std::string& spec,
                                           const FieldSpec& field) {
  if (spec == "all") {
    if (field.size() - 1 > kExhaustiveLimit) {
      throw UsageError("ScopeTooLarge: 'all' beyond 2^20 inputs");
    }
    return field.nonzero_elements();
  }
  std::vector<BinaryPolynomial> out;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(bits(item));
  return out;
}

// Exhaustive nonzero elements, or `sample` random ones drawn with `seed`.
std::vector<BinaryPolynomial> element_scope(const FieldSpec& field,
                                            std::size_t sample,
                                            std::uint64_t seed) {
  if (sample == 0) return parse_inputs("all", field);
  std::mt19937_64 rng(seed);
  std::vector<BinaryPolynomial> out;
  const std::uint64_t mask = field.size() - 1;
  while (out.size() < sample) {
    const std::uint64_t v = rng() & mask;
    if (v != 0) out.push_back(BinaryPolynomial::from_uint(v));
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json report_json(const ResourceReport& r) { return json::parse(to_json(r)); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// ---- synth / run -------------------------------------------------------

int cmd_synth(const std::string& block, const BlockParams& p,
              const std::string& out) {
  const Circuit c = build_named_block(block, p);
  const std::string netlist = to_netlist(c);
  if (out.empty()) {
    std::cout << netlist;
  } else {
    write_file(out, netlist);
  }
  std::cout << to_json(report(c)) << '\n';
  return kPass;
}

// --set reg=bits (MSB-first), repeated.
int cmd_run(const std::string& path, const std::vector<std::string>& sets) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const Circuit c = parse_netlist(ss.str());
  BasisState s(c.layout());
  for (const auto& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("expected reg=bits");
    s.write(c.layout().reg(kv.substr(0, eq)), bits(kv.substr(eq + 1)));
  }
  apply_in_place(c, s);
  json j;
  for (const auto& r : c.layout().registers()) {
    j[r.name] = s.read(r).to_string(r.width);
  }
  emit(j);
  return kPass;
}

// ---- division and inversion --------------------------------------------

json division_json(std::size_t m, const BinaryPolynomial& A,
                   const BinaryPolynomial& B, bool& ok) {
  const Circuit c = build_naive_long_division(m);
  const auto& L = c.layout();
  BasisState s(L);
  s.write(L.reg("A"), A);
  s.write(L.reg("B"), B);
  apply_in_place(c, s);
  const auto dm = poly_divmod(B, A);
  const bool clear = s.read_uint(L.reg("i")) == 0 &&
                     s.read_uint(L.reg("d")) == 0 && !s.get(L.reg("anc")[0]);
  ok = s.read(L.reg("q")) == dm.quotient &&
       s.read(L.reg("B")) == dm.remainder && clear;
  json j;
  j["A"] = A.to_string();
  j["B"] = B.to_string();
  j["q"] = s.read(L.reg("q")).to_string();
  j["r"] = s.read(L.reg("B")).to_string();
  j["expected_q"] = dm.quotient.to_string();
  j["expected_r"] = dm.remainder.to_string();
  j["scratch_clear"] = clear;
  j["match"] = ok;
  return j;
}

int cmd_naive_div(std::size_t m, const std::string& a, const std::string& b) {
  if (m < 2) throw UsageError("--m must be >= 2");
  const auto A = bits(a), B = bits(b);
  if (A.is_zero()) throw Error(ErrorKind::DivisionByZero, "A is zero");
  if (A.degree() >= m || B.degree_or_minus_one() > static_cast<int>(m)) {
    throw UsageError("need deg A < m and deg B <= m");
  }
  bool ok = false;
  json j = division_json(m, A, B, ok);
  j["report"] = report_json(report(build_naive_long_division(m)));
  emit(j);
  return ok ? kPass : kMismatch;
}

int cmd_naive_invert(const FieldSpec& F, const std::string& input) {
  const auto c = bits(input);
  const NaiveInverter inv(F);
  const auto r = inv.run(c);
  const bool ok = r.inverse == F.invert(c);
  json j;
  j["input"] = c.to_string();
  j["inverse"] = r.inverse.to_string();
  j["iterations"] = r.iterations;
  j["match"] = ok;
  j["width"] = inv.width();
  j["iteration_report"] = report_json(report(inv.iteration()));
  j["trace"] = json::parse(trace_to_json(r.trace));
  emit(j);
  return ok ? kPass : kMismatch;
}

json budget_json(std::size_t m, std::size_t H) {
  return json::parse(to_json(budget_audit(m, H)));
}

int cmd_opt_invert(const FieldSpec& F, const std::string& inputs,
                   std::uint64_t cycles) {
  if (cycles == 0) cycles = default_cycles(F.m());
  const auto in = parse_inputs(inputs, F);
  const auto traces = run_synchronized(in, F, cycles);
  bool ok = true;
  json per = json::array();
  for (const auto& t : traces) {
    const bool match = t.fidelity_loss || t.inverse == F.invert(t.input);
    ok = ok && match;
    json j;
    j["input"] = t.input.to_string();
    j["inverse"] = t.inverse.to_string();
    j["h"] = t.final_state.h;
    j["rounds"] = t.rounds_used;
    j["fidelity_loss"] = t.fidelity_loss;
    j["schedule_length"] = t.slots.size();
    j["match"] = match;
    per.push_back(j);
  }
  const auto qb = check_quotient_bound(F, in);
  json j;
  j["m"] = F.m();
  j["cycles"] = cycles;
  j["inputs"] = per;
  j["budget"] = budget_json(F.m(), halting_width(cycles));
  j["quotient_bound_fraction"] = qb.fraction();
  j["quotient_bound_limit"] = 12.0 / static_cast<double>(F.m());
  j["all_match"] = ok;
  emit(j);
  return ok ? kPass : kMismatch;
}

// ---- estimate / trace --------------------------------------------------

int cmd_estimate(std::size_t m, std::optional<std::size_t> H) {
  if (m < 2) throw UsageError("--m must be >= 2");
  const std::size_t h = H.value_or(halting_width(default_cycles(m)));
  const auto b = budget_audit(m, h);
  std::printf("m=%zu  H=%zu  cycles=%llu\n", m, h,
              static_cast<unsigned long long>(default_cycles(m)));
  std::printf("%-14s %6s\n", "term", "qubits");
  std::printf("%-14s %6zu\n", "A,B,a,b", b.registers_AaBb);
  std::printf("%-14s %6zu\n", "q", b.quotient);
  std::printf("%-14s %6zu\n", "degrees", b.degrees);
  std::printf("%-14s %6zu\n", "f,c", b.flag_counter);
  std::printf("%-14s %6zu\n", "H", b.halting);
  std::printf("%-14s %6zu\n", "formula", b.formula);
  std::printf("%-14s %6zu\n", "layout", b.layout_width);
  std::printf("%-14s %6zu\n", "formula H=0", qubit_budget(m, 0));
  if (m <= 32) {
    const auto F = FieldSpec::standard(m);
    std::printf("%-14s %6zu\n", "naive inverter", NaiveInverter(F).width());
    std::printf("%-14s %6zu\n", "ec-add naive",
                group_layout_width(F, EuclidBackend::Naive));
    std::printf("%-14s %6zu\n", "ec-add opt",
                group_layout_width(F, EuclidBackend::Optimized));
    std::printf("estimated gates per step\n");
    for (const auto& [k, v] : estimate_step_gates(F)) {
      std::printf("  %-12s %12zu\n", k.c_str(), v);
    }
  }
  return b.formula == b.layout_width ? kPass : kMismatch;
}

int cmd_trace(const FieldSpec* F, const std::string& input,
              const std::string& divide, const std::string& out) {
  std::string text;
  if (!divide.empty()) {
    const auto [A, B] = bit_pair(divide);
    const std::size_t width = static_cast<std::size_t>(B.degree()) + 1;
    text = format_division_trace(
        trace_long_division(A, B, F ? quotient_width(F->m()) : width), width);
  } else {
    if (!F) throw UsageError("trace --input needs --field or --m");
    const auto c = bits(input);
    if (c.is_zero()) throw Error(ErrorKind::ZeroElement, "input is zero");
    text = format_sync_trace(c, *F);
  }
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
  return kPass;
}

// ---- ec-add ------------------------------------------------------------

std::vector<EuclidBackend> backends_of(const std::string& b) {
  if (b == "both") return {EuclidBackend::Naive, EuclidBackend::Optimized};
  return {parse_backend(b)};
}

FixedPointParams fixed_point(const CurveSpec& curve, const std::string& s) {
  if (s.empty()) {
    const auto pts = enumerate_points(curve);
    if (pts.empty()) throw UsageError("curve has no affine points");
    return FixedPointParams(curve, pts.front().x, pts.front().y);
  }
  const auto [a, b] = bit_pair(s);
  return FixedPointParams(curve, a, b);
}

int ec_sweep(const FixedPointParams& params,
             const std::vector<EuclidBackend>& backends) {
  json rows = json::array();
  bool ok = true;
  std::size_t generic = 0;
  for (const auto& S : enumerate_points(params.curve)) {
    if (!is_generic_for(S, params)) continue;
    ++generic;
    const auto expect = ec_add(S, params.point(), params.curve);
    json row;
    row["S"] = S.to_string();
    row["expected"] = expect.to_string();
    for (auto be : backends) {
      const auto run = run_group_add(S, params, be);
      const bool pass = run.scratch_clear && run.result == expect;
      ok = ok && pass;
      row[to_string(be)] = pass ? "pass" : "fail";
    }
    rows.push_back(row);
  }
  json j;
  j["fixed"] = params.point().to_string();
  j["generic_points"] = generic;
  j["matrix"] = rows;
  j["all_pass"] = ok;
  emit(j);
  return ok ? kPass : kMismatch;
}

int cmd_ec_add(const std::string& curve_file, const std::string& fixed,
               const std::string& point, bool all_generic,
               const std::string& backend) {
  const auto curve = curve_from_config(load_key_values(curve_file));
  const auto params = fixed_point(curve, fixed);
  const auto backends = backends_of(backend);
  if (all_generic) return ec_sweep(params, backends);
  if (point.empty()) throw UsageError("--point or --all-generic required");
  const auto [x, y] = bit_pair(point);
  const auto S = CurvePoint::affine(x, y);
  if (!on_curve(S, curve)) {
    throw Error(ErrorKind::PointNotOnCurve, "S is not on the curve");
  }
  if (!is_generic_for(S, params)) {
    throw Error(ErrorKind::NonGenericInput,
                "S = " + S.to_string() + " is outside the generic case");
  }
  const auto expect = ec_add(S, params.point(), curve);
  json j;
  j["S"] = S.to_string();
  j["A"] = params.point().to_string();
  j["expected"] = expect.to_string();
  bool ok = true;
  for (auto be : backends) {
    const auto run = run_group_add(S, params, be);
    json r;
    r["result"] = run.result.to_string();
    r["scratch_clear"] = run.scratch_clear;
    r["match"] = run.scratch_clear && run.result == expect;
    r["width"] = group_layout_width(curve.field(), be);
    ok = ok && r["match"].get<bool>();
    j[to_string(be)] = r;
  }
  emit(j);
  return ok ? kPass : kMismatch;
}

// ---- verify ------------------------------------------------------------

struct VerifyOpts {
  std::string target;
  FieldOpts field;
  bool exhaustive = false;
  std::size_t sample = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string curve;
  std::string fixed;
  bool all_generic = false;
  std::string backend = "both";
};

struct Tally {
  std::size_t checked = 0;
  json counterexamples = json::array();

  void record(bool ok, json detail) {
    ++checked;
    if (!ok && counterexamples.size() < 20) counterexamples.push_back(detail);
  }
  bool pass() const { return counterexamples.empty(); }
};

void check_scope(const VerifyOpts& o, std::uint64_t exhaustive_count) {
  if (o.exhaustive && o.sample != 0) {
    throw UsageError("--exhaustive and --sample are exclusive");
  }
  if (o.sample == 0 && exhaustive_count > kExhaustiveLimit) {
    throw UsageError("ScopeTooLarge: " + std::to_string(exhaustive_count) +
                     " cases; use --sample");
  }
}

void verify_naive_div(const VerifyOpts& o, Tally& t) {
  const std::size_t m = o.field.get().m();
  const std::uint64_t na = (std::uint64_t{1} << m) - 1;
  const std::uint64_t nb = std::uint64_t{1} << (m + 1);
  check_scope(o, na * nb);
  auto run = [&](std::uint64_t a, std::uint64_t b) {
    bool ok = false;
    auto j = division_json(m, BinaryPolynomial::from_uint(a),
                           BinaryPolynomial::from_uint(b), ok);
    t.record(ok, j);
  };
  if (o.sample == 0) {
    for (std::uint64_t a = 1; a <= na; ++a) {
      for (std::uint64_t b = 0; b < nb; ++b) run(a, b);
    }
  } else {
    std::mt19937_64 rng(o.seed);
    for (std::size_t i = 0; i < o.sample; ++i) {
      const std::uint64_t a = rng() & na;
      run(a == 0 ? 1 : a, rng() & (nb - 1));
    }
  }
}

void verify_inversion(const VerifyOpts& o, Tally& t, bool optimized,
                      json& extra) {
  const auto F = o.field.get();
  check_scope(o, F.size() - 1);
  const auto inputs = element_scope(F, o.sample, o.seed);
  if (optimized) {
    std::size_t lost = 0;
    for (const auto& tr : run_synchronized(inputs, F)) {
      if (tr.fidelity_loss) {
        ++lost;  // excluded from the verified set
        continue;
      }
      t.record(tr.inverse == F.invert(tr.input),
               {{"input", tr.input.to_string()},
                {"inverse", tr.inverse.to_string()}});
    }
    const auto qb = check_quotient_bound(F, inputs);
    extra["fidelity_loss_inputs"] = lost;
    extra["quotient_bound_fraction"] = qb.fraction();
    extra["quotient_bound_limit"] = 12.0 / static_cast<double>(F.m());
    if (qb.fraction() > 12.0 / static_cast<double>(F.m())) {
      t.record(false, {{"quotient_bound", qb.fraction()}});
    }
  } else {
    const NaiveInverter inv(F);
    for (const auto& c : inputs) {
      const auto r = inv.run(c).inverse;
      t.record(r == F.invert(c),
               {{"input", c.to_string()}, {"inverse", r.to_string()}});
    }
  }
}

void verify_blocks(const VerifyOpts& o, Tally& t) {
  const std::size_t m = o.field.m == 0 ? 4 : o.field.m;
  const BlockParams p{m, m, std::min<std::size_t>(2, m), m};
  std::mt19937_64 rng(o.seed);
  for (auto name : block_names()) {
    const Circuit c = build_named_block(name, p);
    const auto round_trip = compose(c, inverse(c));
    const std::size_t w = c.layout().width();
    bool ok = w > 20 || check_permutation(c);
    for (int i = 0; i < 1000 && ok; ++i) {
      BasisState s(w);
      for (std::size_t b = 0; b < w; ++b) s.set(b, rng() & 1U);
      ok = apply(round_trip, s) == s;
    }
    t.record(ok, {{"block", std::string(name)}, {"width", w}});
  }
}

void verify_ec_add(const VerifyOpts& o, Tally& t) {
  if (o.curve.empty()) throw UsageError("verify ec-add needs --curve");
  const auto curve = curve_from_config(load_key_values(o.curve));
  const auto params = fixed_point(curve, o.fixed);
  for (const auto& S : enumerate_points(curve)) {
    if (!is_generic_for(S, params)) continue;
    const auto expect = ec_add(S, params.point(), curve);
    for (auto be : backends_of(o.backend)) {
      const auto run = run_group_add(S, params, be);
      t.record(run.scratch_clear && run.result == expect,
               {{"S", S.to_string()},
                {"backend", to_string(be)},
                {"result", run.result.to_string()},
                {"expected", expect.to_string()}});
    }
  }
}

int cmd_verify(const VerifyOpts& o) {
  Tally t;
  json extra = json::object();
  if (o.target == "naive-div") {
    verify_naive_div(o, t);
  } else if (o.target == "naive-invert") {
    verify_inversion(o, t, false, extra);
  } else if (o.target == "opt-invert") {
    verify_inversion(o, t, true, extra);
  } else if (o.target == "blocks") {
    verify_blocks(o, t);
  } else if (o.target == "ec-add") {
    verify_ec_add(o, t);
  } else {
    throw UsageError("unknown verify target '" + o.target + "'");
  }
  json j;
  j["target"] = o.target;
  j["scope"] = o.sample == 0 ? std::string("exhaustive")
                             : "sample:" + std::to_string(o.sample);
  j["seed"] = o.seed;
  j["checked"] = t.checked;
  j["pass"] = t.pass();
  for (auto& [k, v] : extra.items()) j[k] = v;
  j["counterexamples"] = t.counterexamples;
  emit(j);
  return t.pass() ? kPass : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gf2ec: reversible GF(2^m) inversion and point addition"};
  app.require_subcommand(1);
  int status = kPass;

  auto* synth = app.add_subcommand("synth", "emit a building-block netlist");
  std::string block, synth_out;
  BlockParams bp;
  synth->add_option("block", block, "block name")->required();
  synth->add_option("--m", bp.m, "field degree / register width");
  synth->add_option("--n", bp.n, "shift register width");
  synth->add_option("--k", bp.k, "shift amount width");
  synth->add_option("--w", bp.w, "counter width");
  synth->add_option("-o,--out", synth_out, "netlist output file");
  synth->callback([&] { status = cmd_synth(block, bp, synth_out); });

  auto* run = app.add_subcommand("run", "simulate a netlist on a basis state");
  std::string netlist;
  std::vector<std::string> sets;
  run->add_option("netlist", netlist, "netlist file")->required();
  run->add_option("--set", sets, "register value reg=bits (MSB first)");
  run->callback([&] { status = cmd_run(netlist, sets); });

  auto* verify = app.add_subcommand("verify", "oracle-equivalence sweeps");
  VerifyOpts vo;
  verify
      ->add_option("target", vo.target,
                   "naive-div | naive-invert | opt-invert | blocks | ec-add")
      ->required();
  vo.field.attach(verify);
  verify->add_flag("--exhaustive", vo.exhaustive, "every input (default)");
  verify->add_option("--sample", vo.sample, "number of random inputs");
  verify->add_option("--seed", vo.seed, "sampling seed");
  verify->add_option("--curve", vo.curve, "curve config file");
  verify->add_option("--fixed", vo.fixed, "fixed point alpha,beta");
  verify->add_flag("--all-generic", vo.all_generic, "sweep generic points");
  verify->add_option("--backend", vo.backend, "naive | opt | both");
  verify->callback([&] { status = cmd_verify(vo); });

  auto* estimate = app.add_subcommand("estimate", "qubit budget table");
  std::size_t est_m = 0;
  std::optional<std::size_t> est_H;
  estimate->add_option("--m", est_m, "field degree")->required();
  estimate->add_option("--H", est_H, "halting counter width");
  estimate->callback([&] { status = cmd_estimate(est_m, est_H); });

  auto* trace = app.add_subcommand("trace", "step-by-step tableau");
  FieldOpts trace_field;
  std::string trace_input, trace_divide, trace_out;
  trace_field.attach(trace);
  trace->add_option("--input", trace_input, "element to invert");
  trace->add_option("--divide", trace_divide, "long division A,B only");
  trace->add_option("-o,--out", trace_out, "output file");
  trace->callback([&] {
    std::optional<FieldSpec> F;
    if (!trace_field.file.empty() || trace_field.m != 0) F = trace_field.get();
    if (trace_input.empty() == trace_divide.empty()) {
      throw UsageError("exactly one of --input or --divide");
    }
    status = cmd_trace(F ? &*F : nullptr, trace_input, trace_divide,
                       trace_out);
  });

  auto* ndiv = app.add_subcommand("naive-div", "naive long division circuit");
  std::size_t nd_m = 0;
  std::string nd_a, nd_b;
  ndiv->add_option("--m", nd_m, "field degree")->required();
  ndiv->add_option("--A", nd_a, "divisor bits")->required();
  ndiv->add_option("--B", nd_b, "dividend bits")->required();
  ndiv->callback([&] { status = cmd_naive_div(nd_m, nd_a, nd_b); });

  auto* ninv = app.add_subcommand("naive-invert", "naive Euclid inversion");
  FieldOpts ninv_field;
  std::string ninv_input;
  ninv_field.attach(ninv);
  ninv->add_option("--input", ninv_input, "element bits")->required();
  ninv->callback(
      [&] { status = cmd_naive_invert(ninv_field.get(), ninv_input); });

  auto* oinv = app.add_subcommand("opt-invert", "synchronized inversion");
  FieldOpts oinv_field;
  std::string oinv_inputs = "all";
  std::uint64_t cycles = 0;
  oinv_field.attach(oinv);
  oinv->add_option("--inputs", oinv_inputs, "comma list of bits, or all");
  oinv->add_option("--cycles", cycles, "round budget (default 2m(2m+2))");
  oinv->callback([&] {
    status = cmd_opt_invert(oinv_field.get(), oinv_inputs, cycles);
  });

  auto* ec = app.add_subcommand("ec-add", "reversible point addition");
  std::string ec_curve, ec_fixed, ec_point, ec_backend = "naive";
  bool ec_all = false;
  ec->add_option("--curve", ec_curve, "curve config file")->required();
  ec->add_option("--fixed", ec_fixed, "fixed point alpha,beta");
  ec->add_option("--point", ec_point, "point x,y");
  ec->add_flag("--all-generic", ec_all, "sweep every generic point");
  ec->add_option("--backend", ec_backend, "naive | opt | both");
  ec->callback([&] {
    status = cmd_ec_add(ec_curve, ec_fixed, ec_point, ec_all, ec_backend);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kUsage;
  }
  return status;
}
