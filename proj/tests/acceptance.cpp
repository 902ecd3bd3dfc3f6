// Copyright 2026 The Authors.
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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Reference values come from the brute-force oracles in
// oracles.hpp or from direct matrix computations, never from the routine
// under test.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matroid/adjudicator.hpp"
#include "matroid/budget.hpp"
#include "matroid/catalog.hpp"
#include "matroid/claimant.hpp"
#include "matroid/freedom.hpp"
#include "matroid/representation.hpp"
#include "matroid/spike.hpp"
#include "matroid/structure.hpp"
#include "mutate.hpp"
#include "oracles.hpp"

using namespace matroid;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages of a criterion.
class Check {
 public:
  void fail(const std::string& why) {
    pass_ = false;
    if (++count_ <= 3) msgs_ += (msgs_.empty() ? "" : "; ") + why;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  Outcome done() const {
    if (pass_) return {true, notes_};
    return {false, msgs_ + (count_ > 3 ? " (+" + std::to_string(count_ - 3) + " more)" : "")};
  }

 private:
  bool pass_ = true;
  int count_ = 0;
  std::string msgs_, notes_;
};

std::vector<CatalogEntry> small_catalog(int max_size) {
  std::vector<CatalogEntry> out;
  for (auto& e : catalog())
    if (e.matroid.size() <= max_size) out.push_back(e);
  return out;
}

// 1. U_{2,4} has no binary representation and each single-element minor has
// exactly one.
Outcome excluded_minor_baseline() {
  Check c;
  const Matroid u = Matroid::uniform(2, 4);
  c.expect(count_reps(u, 2) == 0, "U24 has a binary representation");
  for (int e = 0; e < 4; ++e) {
    for (bool contract : {false, true}) {
      const Matroid m = u.minor(contract ? bit(e) : 0, contract ? 0 : bit(e));
      const auto n = count_reps(m, 2);
      c.expect(n == 1, "minor " + std::to_string(e) + (contract ? "/" : "\\") + " count " + std::to_string(n));
      c.expect(oracle::rep_count(rank_table(m), 3, 2) == 1, "oracle disagrees");
    }
  }
  c.note("8 minors");
  return c.done();
}

// 2. Binary and ternary fixtures are uniquely representable.
Outcome uniqueness() {
  Check c;
  int fixtures = 0;
  for (const auto& e : small_catalog(8)) {
    if (!e.gf2 && !e.gf3) continue;
    ++fixtures;
    for (std::uint32_t p : {2u, 3u}) {
      if (!e.representable_over(p)) continue;
      const auto n = count_reps(e.matroid, p);
      c.expect(n == 1, e.name + " over GF(" + std::to_string(p) + ") has " + std::to_string(n));
    }
  }
  c.expect(fixtures >= 20, "only " + std::to_string(fixtures) + " fixtures");
  c.note(std::to_string(fixtures) + " fixtures");
  return c.done();
}

// 3. 3-connected quinary fixtures have between one and six classes.
Outcome gf5_bound() {
  Check c;
  int fixtures = 0, cross = 0;
  for (const auto& e : catalog()) {
    if (!e.gf5 || e.matroid.size() < 4 || !is_k_connected(e.matroid, 3)) continue;
    ++fixtures;
    const auto n = count_reps(e.matroid, 5);
    c.expect(n >= 1 && n <= 6, e.name + " has " + std::to_string(n));
    if (e.matroid.size() <= 6) {
      ++cross;
      const auto b = oracle::rep_count(rank_table(e.matroid), e.matroid.size(), 5);
      c.expect(b == n, e.name + " oracle count " + std::to_string(b));
    }
  }
  c.note(std::to_string(fixtures) + " fixtures, " + std::to_string(cross) + " cross-checked");
  return c.done();
}

bool valid_family(const std::vector<Transversal>& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (std::popcount(fam[i] ^ fam[j]) < 2) return false;
  return true;
}

// 4. Spike rank functions are matroids, and agree with the matrix when the
// parameters are representable.
Outcome spike_validity() {
  Check c;
  int families = 0;
  auto check_family = [&](int n, const std::vector<Transversal>& fam) {
    ++families;
    const Matroid m = Matroid::spike(Spike(n, fam));
    c.expect(axiom_check(m).ok, "axiom failure n=" + std::to_string(n));
  };
  for (int n = 3; n <= 4; ++n) {
    const int k = 1 << n;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      std::vector<Transversal> fam;
      for (int t = 0; t < k; ++t)
        if ((mask >> t) & 1) fam.push_back(static_cast<Transversal>(t));
      if (valid_family(fam)) check_family(n, fam);
    }
  }
  std::mt19937_64 rng(5);
  for (int s = 0; s < 200; ++s) {
    std::vector<Transversal> clean;
    for (int tries = 0; tries < 12; ++tries) {
      clean.push_back(static_cast<Transversal>(rng() % 32));
      if (!valid_family(clean)) clean.pop_back();
    }
    check_family(5, clean);
  }
  int linear = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int n = 3; n <= 5; ++n) {
      std::uint64_t combos = 1;
      for (int i = 0; i < n; ++i) combos *= p - 1;
      for (std::uint64_t code = 0; code < combos; ++code) {
        if (n == 5 && code % 7 != 0) continue;  // sampled at n = 5
        std::vector<std::int64_t> alpha(n);
        std::uint64_t v = code;
        for (int i = 0; i < n; ++i) {
          alpha[i] = static_cast<std::int64_t>(v % (p - 1)) + 1;
          v /= p - 1;
        }
        const auto rs = representable_spike(p, alpha);
        for (ElementSet x = 0; x <= full_set(2 * n); ++x) {
          if (rs.spike.rank(x) != column_rank(rs.matrix, x)) {
            c.fail("p=" + std::to_string(p) + " n=" + std::to_string(n) + " differs from matrix");
            break;
          }
        }
        ++linear;
      }
    }
  }
  c.note(std::to_string(families) + " families, " + std::to_string(linear) + " parameter vectors");
  return c.done();
}

// 5. A transversal is dependent exactly when its alphas sum to -1.
Outcome dependency_criterion() {
  Check c;
  std::uint64_t checked = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int n = 3; n <= 5; ++n) {
      std::uint64_t combos = 1;
      for (int i = 0; i < n; ++i) combos *= p - 1;
      for (std::uint64_t code = 0; code < combos; ++code) {
        std::vector<std::int64_t> alpha(n);
        std::uint64_t v = code;
        for (int i = 0; i < n; ++i) {
          alpha[i] = static_cast<std::int64_t>(v % (p - 1)) + 1;
          v /= p - 1;
        }
        const auto rs = representable_spike(p, alpha);
        for (Transversal t = 0; t < (Transversal{1} << n); ++t) {
          std::int64_t sum = 0;
          for (int i = 0; i < n; ++i)
            if ((t >> i) & 1) sum += alpha[i];
          const bool by_sum = ((sum % p) + p) % p == p - 1;
          const bool by_matrix = column_rank(rs.matrix, Spike::transversal_set(t, n)) < n;
          c.expect(by_sum == by_matrix, "mismatch p=" + std::to_string(p));
          c.expect(rs.spike.is_dependent(t) == by_matrix, "family mismatch p=" + std::to_string(p));
          ++checked;
        }
      }
    }
  }
  c.note(std::to_string(checked) + " transversals");
  return c.done();
}

// 6. (n+1)(|T| + |T'|) >= 2^n on two spikes, with |T'| recounted directly.
Outcome census() {
  Check c;
  for (auto [p, n] : {std::pair<std::uint32_t, int>{3, 6}, {2, 5}}) {
    const Spike s = representable_spike(p, std::vector<std::int64_t>(n, 1)).spike;
    const auto r = lower_bound_census(s);
    std::uint64_t far = 0;
    for (Transversal t = 0; t < (Transversal{1} << n); ++t) {
      bool ok = true;
      for (Transversal d : s.dependent())
        if (std::popcount(t ^ d) <= 1) ok = false;
      far += ok;
    }
    c.expect(r.far_count == far && r.dependent_count == s.dependent().size(), "census counts differ");
    const std::uint64_t lhs = (static_cast<std::uint64_t>(n) + 1) * (s.dependent().size() + far);
    c.expect(lhs >= (std::uint64_t{1} << n) && r.bound_ok, "bound fails for p=" + std::to_string(p));
    c.note("GF(" + std::to_string(p) + ") n=" + std::to_string(n) + ": |T|=" + std::to_string(s.dependent().size()) +
           " |T'|=" + std::to_string(far));
  }
  return c.done();
}

// 7. Relaxing any circuit-transversal of the binary 4-leg spike destroys
// binary representability.
Outcome relaxed_spike() {
  Check c;
  const Spike s = representable_spike(2, {1, 1, 1, 1}).spike;
  c.expect(!s.dependent().empty(), "no dependent transversals");
  for (Transversal t : s.dependent()) {
    const auto n = count_reps(Matroid::spike(relax(s, t)), 2);
    c.expect(n == 0, transversal_to_string(t, 4) + " relaxed has " + std::to_string(n));
  }
  c.note(std::to_string(s.dependent().size()) + " relaxations");
  return c.done();
}

// 8. Freedom of uniform matroids; fixed iff freedom <= 1; duality.
Outcome freedom_calculus() {
  Check c;
  for (int r = 1; r <= 3; ++r) {
    for (int n = r + 1; n <= 6; ++n) {
      const Matroid u = Matroid::uniform(r, n);
      for (int e = 0; e < n; ++e) {
        const auto f = freedom(u, e, 6);
        c.expect(f.finite() && f.value == r, "U" + std::to_string(r) + std::to_string(n));
      }
    }
  }
  int exact = 0, overflow = 0;
  for (const auto& entry : small_catalog(8)) {
    const Matroid& m = entry.matroid;
    const Matroid d = materialize(m.dual());
    for (int e = 0; e < m.size(); ++e) {
      const auto f = freedom(m, e, 3);
      const auto cf = cofreedom(m, e, 3);
      const auto df = freedom(d, e, 3);
      c.expect(cf.kind == df.kind && cf.value == df.value, entry.name + " cofreedom differs from dual freedom");
      c.expect(is_cofixed(m, e) == is_fixed(d, e), entry.name + " cofixed differs from dual fixed");
      if (f.overflow()) {
        ++overflow;
        continue;
      }
      ++exact;
      c.expect(is_fixed(m, e) == f.at_most(1), entry.name + " fixed/freedom mismatch");
    }
  }
  c.note(std::to_string(exact) + " exact, " + std::to_string(overflow) + " overflow");
  return c.done();
}

struct Built {
  std::string name;
  std::uint32_t p;
  Matroid m;
  Certificate cert;
};

std::vector<Built>& built_certificates() {
  static std::vector<Built> b;
  return b;
}

// 9. Certificates for every non-representable fixture are accepted,
// representable fixtures are refused, mutated certificates are rejected.
Outcome protocol() {
  Check c;
  int accepted = 0, refused = 0;
  for (const auto& entry : small_catalog(8)) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      if (entry.representable_over(p)) {
        try {
          minimize_to_excluded_minor(entry.matroid, p);
          c.fail(entry.name + " not refused");
        } catch (const Error& e) {
          c.expect(e.code() == ErrorCode::kNothingToCertify, entry.name + " wrong refusal");
          ++refused;
        }
        continue;
      }
      const Certificate cert = build_certificate(entry.matroid, p);
      CountedOracle o(entry.matroid);
      const auto rep = verify(o, cert);
      c.expect(rep.accepted, entry.name + " p=" + std::to_string(p) + ": " + rep.reason);
      accepted += rep.accepted;
      built_certificates().push_back({entry.name, p, entry.matroid, cert});
    }
  }
  std::mt19937_64 rng(1);
  int mutated = 0, rejected = 0;
  auto& built = built_certificates();
  while (mutated < 1000) {
    const Built& b = built[rng() % built.size()];
    const auto mc = testing_support::mutate(b.cert, rng);
    if (!mc) continue;
    ++mutated;
    CountedOracle o(b.m);
    if (!verify(o, *mc).accepted) {
      ++rejected;
    } else {
      c.fail("mutation of " + b.name + " accepted");
    }
  }
  c.note(std::to_string(accepted) + " accepted, " + std::to_string(refused) + " refused, " +
         std::to_string(rejected) + "/" + std::to_string(mutated) + " mutants rejected");
  return c.done();
}

// 10. Reported calls equal the counter delta; U_{2,4} plus k coloops grows
// at most quadratically.
Outcome call_accounting() {
  Check c;
  for (const auto& b : built_certificates()) {
    CountedOracle o(b.m);
    o.rank(0);
    const auto before = o.calls();
    const auto rep = verify(o, b.cert);
    c.expect(rep.oracle_calls == o.calls() - before, b.name + " call count differs");
  }
  const BudgetScan scan = call_budget_scan("u24-coloops", 2, 0, 8);
  const double c0 = static_cast<double>(scan.rows[0].calls);
  double cq = 0;
  for (int k = 1; k <= 3; ++k) {
    cq = std::max(cq, (static_cast<double>(scan.rows[k].calls) - c0) / (k * k));
  }
  std::ostringstream calls;
  for (const auto& r : scan.rows) {
    c.expect(r.accepted, "k=" + std::to_string(r.param) + " not accepted");
    const double k = r.param;
    c.expect(static_cast<double>(r.calls) <= 2 * (cq * k * k + c0), "k=" + std::to_string(r.param) + " over budget");
    calls << (r.param ? " " : "") << r.calls;
  }
  c.note("c=" + std::to_string(cq).substr(0, 5) + " c'=" + std::to_string(static_cast<int>(c0)) + " calls:" +
         calls.str());
  return c.done();
}

// 11. On every built certificate, the final candidate flat of a general
// level has rank at most the freedom of the removed element in the working
// matroid.
Outcome vital_check() {
  Check c;
  int checked = 0, skipped = 0;
  for (const auto& b : built_certificates()) {
    const Certificate& cert = b.cert;
    for (int i = 1; i <= static_cast<int>(cert.chain.size()); ++i) {
      const Level& lv = cert.levels[i - 1];
      const ChainStep step = cert.chain[i - 1];
      const ElementSet ground = level_ground(cert, i);
      const ElementSet rest = ground & ~bit(step.element);
      const std::vector<FieldMatrix> prev =
          i == 1 ? std::vector<FieldMatrix>{FieldMatrix(cert.p, 0, 0)} : cert.levels[i - 2].reps;
      std::optional<FreedomResult> f;
      for (std::size_t k = 0; k < lv.evidence.size(); ++k) {
        const Evidence& ev = lv.evidence[k];
        if (ev.kind == EvidenceKind::kLoop || ev.kind == EvidenceKind::kColoop) continue;
        if (!f) {
          LevelOracle<Matroid> lo(b.m, ground, level_contract(cert, i), step.contract);
          const auto t = detail::working_table(lo, ground);
          f = freedom_in_table(t, popcount(ground), position_in(ground, step.element), 8);
        }
        if (!f->finite()) {
          ++skipped;
          continue;
        }
        const FieldMatrix w = working_rep(prev[k], step.contract);
        const int rk = evidence_final_flat(w, rest, ev).rank();
        c.expect(rk <= f->value, b.name + " level " + std::to_string(i) + ": rank(K)=" + std::to_string(rk) +
                                     " > freedom " + std::to_string(f->value));
        ++checked;
      }
    }
  }
  c.note(std::to_string(checked) + " final flats, " + std::to_string(skipped) + " skipped");
  return c.done();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"excluded-minor baseline", excluded_minor_baseline},
      {"binary/ternary uniqueness", uniqueness},
      {"GF(5) class bound", gf5_bound},
      {"spike validity", spike_validity},
      {"dependency criterion", dependency_criterion},
      {"lower-bound census", census},
      {"relaxed binary spike", relaxed_spike},
      {"freedom calculus", freedom_calculus},
      {"protocol end-to-end", protocol},
      {"rank-call accounting", call_accounting},
      {"final flat within freedom", vital_check},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %-28s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
