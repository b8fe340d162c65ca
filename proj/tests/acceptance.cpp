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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "gf2ec/blocks.hpp"
#include "gf2ec/curve.hpp"
#include "gf2ec/ecgroup.hpp"
#include "gf2ec/errors.hpp"
#include "gf2ec/euclid_opt.hpp"
#include "gf2ec/naive_division.hpp"

using namespace gf2ec;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int deg(const BinaryPolynomial& p) { return p.degree_or_minus_one(); }

// 1. Naive and optimized inversion against field_invert, m = 2..8.
void inversion(Outcome& o) {
  std::size_t checked = 0;
  for (std::size_t m = 2; m <= 8; ++m) {
    const auto F = FieldSpec::standard(m);
    const NaiveInverter naive(F);
    const auto inputs = F.nonzero_elements();
    const auto traces = run_synchronized(inputs, F);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const auto expect = F.invert(inputs[i]);
      o.require(naive.run(inputs[i]).inverse == expect,
                "naive m=" + std::to_string(m) + " C=" + inputs[i].to_string());
      o.require(!traces[i].fidelity_loss && traces[i].inverse == expect,
                "opt m=" + std::to_string(m) + " C=" + inputs[i].to_string());
      ++checked;
    }
  }
  o.detail << checked << " inputs x 2 backends";
}

bool division_case(const Circuit& c, const BinaryPolynomial& A,
                   const BinaryPolynomial& B) {
  const auto& L = c.layout();
  BasisState s(L);
  s.write(L.reg("A"), A);
  s.write(L.reg("B"), B);
  apply_in_place(c, s);
  const auto dm = poly_divmod(B, A);
  return s.read(L.reg("q")) == dm.quotient &&
         s.read(L.reg("B")) == dm.remainder && s.read(L.reg("A")) == A &&
         s.read_uint(L.reg("i")) == 0 && s.read_uint(L.reg("d")) == 0 &&
         !s.get(L.reg("anc")[0]);
}

// 2. Naive long division against poly_divmod.
void long_division(Outcome& o) {
  std::size_t checked = 0;
  {
    const auto c = build_naive_long_division(4);
    const auto A = BinaryPolynomial::parse("101");
    const auto B = BinaryPolynomial::parse("10101");
    BasisState s(c.layout());
    s.write(c.layout().reg("A"), A);
    s.write(c.layout().reg("B"), B);
    apply_in_place(c, s);
    o.require(s.read(c.layout().reg("B")).is_one() &&
                  s.read(c.layout().reg("q")) == BinaryPolynomial::parse("100"),
              "worked example 10101 / 101");
  }
  for (std::size_t m = 2; m <= 4; ++m) {
    const auto c = build_naive_long_division(m);
    for (std::uint64_t a = 1; a < (std::uint64_t{1} << m); ++a) {
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << (m + 1)); ++b) {
        o.require(division_case(c, BinaryPolynomial::from_uint(a),
                                BinaryPolynomial::from_uint(b)),
                  "m=" + std::to_string(m));
        ++checked;
      }
    }
  }
  std::mt19937_64 rng(20240607);
  for (std::size_t m : {8, 16}) {
    const auto c = build_naive_long_division(m);
    const std::uint64_t amask = (std::uint64_t{1} << m) - 1;
    const std::uint64_t bmask = (std::uint64_t{1} << (m + 1)) - 1;
    for (int t = 0; t < 1000; ++t) {
      std::uint64_t a = rng() & amask;
      if (a == 0) a = 1;
      o.require(division_case(c, BinaryPolynomial::from_uint(a),
                              BinaryPolynomial::from_uint(rng() & bmask)),
                "random m=" + std::to_string(m));
      ++checked;
    }
  }
  o.detail << checked << " divisions incl. 10101 / 101 -> q=100 r=1";
}

// 3. Structural counts of the building blocks.
void structure(Outcome& o) {
  const auto sw = report(build_swap());
  o.require(sw.gates == 3 && sw.cnot_gates == 3, "swap is 3 CNOT");
  for (std::size_t n = 2; n <= 32; ++n) {
    for (auto dir : {ShiftDirection::Left, ShiftDirection::Right}) {
      const auto r = report(build_cyclic_shift(n, dir));
      o.require(r.gates == n - 1 && r.swap_gates == n - 1,
                "shift n=" + std::to_string(n));
    }
  }
  for (std::size_t w = 1; w <= 10; ++w) {
    const auto inc = build_increment(w);
    o.require(inc.layout().width() == w + 1 &&
                  inc.layout().reg("anc").width == 1,
              "increment w=" + std::to_string(w));
  }
  for (std::size_t m = 2; m <= 32; ++m) {
    const auto d = build_degree(m);
    o.require(d.layout().width() - m == ceil_log2(m) + 1,
              "degree m=" + std::to_string(m));
  }
  o.detail << "swap=3 CNOT; shift(n)=n-1 SWAP n=2..32; inc +1 ancilla; "
              "deg +ceil(log m)+1, m=2..32";
}

// 4. Qubit budget and its per-term breakdown.
void budget(Outcome& o) {
  for (std::size_t m : {4, 8, 16}) {
    const std::size_t L = ceil_log2(m);
    for (std::size_t H : {std::size_t{0}, halting_width(default_cycles(m))}) {
      const auto b = budget_audit(m, H);
      o.require(b.layout_width == 2 * m + 7 * L + 7 + H &&
                    b.formula == b.layout_width &&
                    b.registers_AaBb == 2 * m && b.quotient == 3 * L &&
                    b.degrees == 4 * L + 4 && b.flag_counter == 3 &&
                    b.halting == H,
                "m=" + std::to_string(m) + " H=" + std::to_string(H));
      o.detail << "m=" << m << " H=" << H << ": " << b.layout_width << " ("
               << b.registers_AaBb << "|" << b.quotient << "|" << b.degrees
               << "|" << b.flag_counter << "|" << b.halting << ") ";
    }
  }
}

bool degree_sums_hold(const EuclideanPairs& p, int m) {
  return deg(p.a) + deg(p.B) == m && deg(p.a) + deg(p.A) <= m &&
         deg(p.b) + deg(p.B) <= m;
}

// 5. deg a + deg B = m, deg a + deg A <= m, deg b + deg B <= m at every
// iteration boundary.
void invariants(Outcome& o) {
  std::size_t boundaries = 0, violations = 0;
  for (std::size_t m = 2; m <= 8; ++m) {
    const auto F = FieldSpec::standard(m);
    const int mi = static_cast<int>(m);
    for (const auto& t : run_synchronized(F.nonzero_elements(), F)) {
      for (const auto& s : t.boundaries) {
        const bool ok = degree_sums_hold(s.pairs(), mi) && s.q.is_zero() &&
                        s.slot_B == deg(s.B);
        violations += !ok;
        ++boundaries;
      }
      // The plain Euclid trace has the same boundaries.
      auto p = EuclideanPairs::initial(t.input, F);
      while (p.A.degree() > 0) {
        violations += !degree_sums_hold(p, mi);
        ++boundaries;
        p = euclid_pairs_step(p);
      }
    }
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  o.detail << boundaries << " boundaries, " << violations << " violations";
}

// 6. Lockstep schedule, injective final states, termination in budget.
void synchronization(Outcome& o) {
  for (std::size_t m : {4, 8}) {
    const auto F = FieldSpec::standard(m);
    const auto cycles = default_cycles(m);
    std::vector<SyncTrace> traces;
    try {
      traces = run_synchronized(F.nonzero_elements(), F, cycles);
    } catch (const Error& e) {
      o.require(false, e.what());
      return;
    }
    const auto layout = optimized_layout(m, halting_width(cycles));
    const auto schedule = traces.front().schedule();
    std::set<std::string> finals;
    std::set<std::string> trajectories;
    std::uint64_t worst = 0;
    for (const auto& t : traces) {
      o.require(t.schedule() == schedule, "schedule differs");
      finals.insert(encode_state(t.final_state, layout).to_string());
      std::string traj;
      for (const auto& r : t.slots) traj += static_cast<char>('0' + r.c);
      trajectories.insert(traj);
      worst = std::max(worst, t.rounds_used);
    }
    o.require(finals.size() == traces.size(), "final states collide");
    o.detail << "m=" << m << ": " << traces.size() << " inputs, schedule "
             << schedule.size() << " slots, " << finals.size()
             << " distinct finals, " << trajectories.size()
             << " distinct counter paths, worst " << worst << "/" << cycles
             << " rounds; ";
  }
}

// 7. Fraction of m = 16 inputs with a quotient wider than 3 ceil(log m).
void quotient_bound(Outcome& o) {
  const auto F = FieldSpec::standard(16);
  const auto r = check_quotient_bound(F, F.nonzero_elements());
  o.require(r.fraction() <= 12.0 / 16, "fraction above 12/m");
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "m=16: %zu of %zu inputs flagged, fraction %.6f <= 0.75, "
                "widest quotient %zu bits vs %zu",
                r.flagged, r.inputs, r.fraction(), r.max_quotient_bits,
                quotient_width(16));
  o.detail << buf;
}

// 8. simulate_group_add against ec_add, both curve families and backends.
void group_add(Outcome& o) {
  const FieldSpec F(4, BinaryPolynomial::parse("10011"));
  const std::vector<CurveSpec> curves = {
      CurveSpec(F, CurveKind::NonSupersingular, BinaryPolynomial::parse("1000"),
                BinaryPolynomial::parse("1")),
      CurveSpec(F, CurveKind::Supersingular, BinaryPolynomial::parse("1"),
                BinaryPolynomial::parse("0"), BinaryPolynomial::parse("1"))};
  std::size_t checked = 0;
  for (const auto& curve : curves) {
    const auto pts = enumerate_points(curve);
    for (std::size_t ai : {std::size_t{0}, pts.size() / 2}) {
      const FixedPointParams params(curve, pts[ai].x, pts[ai].y);
      for (auto backend : {EuclidBackend::Naive, EuclidBackend::Optimized}) {
        for (const auto& S : pts) {
          if (!is_generic_for(S, params)) continue;
          const auto run = run_group_add(S, params, backend);
          o.require(run.scratch_clear &&
                        run.result == ec_add(S, params.point(), curve),
                    "S=" + S.to_string() + " backend " + to_string(backend));
          ++checked;
        }
      }
    }
  }
  o.detail << checked << " generic additions on 2 curves x 2 backends";
}

std::vector<std::pair<std::string, Circuit>> synthesized_circuits() {
  std::vector<std::pair<std::string, Circuit>> out;
  for (auto name : block_names()) {
    for (std::size_t m : {3, 4, 5, 8}) {
      BlockParams p{m, m, 2, m - 1};
      out.emplace_back(std::string(name) + "/" + std::to_string(m),
                       build_named_block(name, p));
    }
  }
  for (std::size_t m = 2; m <= 8; ++m) {
    out.emplace_back("naive-div/" + std::to_string(m),
                     build_naive_long_division(m));
    out.emplace_back("euclid-iter/" + std::to_string(m),
                     build_euclid_iteration(m));
  }
  out.emplace_back("naive-div/16", build_naive_long_division(16));
  const auto div = build_division_with_uncompute(FieldSpec::standard(8),
                                                 EuclidBackend::Naive);
  out.emplace_back("ec-mul", div.multiply);
  out.emplace_back("ec-mul-back", div.multiply_back);
  out.emplace_back("ec-swap", div.swap_yt);
  return out;
}

// 9. circuit + inverse(circuit) is the identity.
void reversibility(Outcome& o) {
  std::mt19937_64 rng(12345);
  std::size_t circuits = 0, states = 0;
  for (const auto& [name, c] : synthesized_circuits()) {
    const auto round_trip = compose(c, inverse(c));
    const std::size_t w = c.layout().width();
    auto check = [&](const BasisState& s) {
      o.require(apply(round_trip, s) == s, name);
      ++states;
    };
    if (w <= 12) {
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << w); ++i) {
        check(BasisState::from_index(w, i));
      }
    }
    for (int t = 0; t < 1000; ++t) {
      BasisState s(w);
      for (std::size_t i = 0; i < w; ++i) s.set(i, rng() & 1U);
      check(s);
    }
    ++circuits;
  }
  o.detail << circuits << " circuits, " << states << " states";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>>
      criteria = {
          {"oracle equivalence, inversion (naive + optimized, m=2..8)",
           inversion},
          {"oracle equivalence, long division", long_division},
          {"structural gate counts", structure},
          {"qubit budget 2m+7ceil(log m)+7+H", budget},
          {"degree-sum invariants, m<=8", invariants},
          {"synchronization, m=4 and m=8", synchronization},
          {"quotient bound, m=16", quotient_bound},
          {"group operation end-to-end", group_add},
          {"reversibility suite", reversibility},
      };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.str().c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
