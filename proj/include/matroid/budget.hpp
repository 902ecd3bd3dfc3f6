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

// Oracle-call scans over growing families of non-representable matroids.
// Certificates are built over the full ground set (no minimization) so the
// chain length equals n; the scan fits c = max calls / n^2 on the smallest
// four members and checks every member against 2 c n^2.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "matroid/adjudicator.hpp"
#include "matroid/catalog.hpp"
#include "matroid/claimant.hpp"
#include "matroid/error.hpp"
#include "matroid/matroid.hpp"
#include "matroid/oracle.hpp"
#include "matroid/spike.hpp"

namespace matroid {

struct BudgetRow {
  int param = 0;  // family parameter
  int n = 0;      // ground-set size
  std::uint64_t calls = 0;
  std::uint64_t minimized_calls = 0;  // same matroid, certificate on an excluded minor
  bool accepted = false;
};

struct BudgetScan {
  std::string family;
  std::uint32_t p = 2;
  std::vector<BudgetRow> rows;
  double c = 0;  // fitted on the first four rows
  bool ok = false;
};

// U_{2,4} plus k coloops, for k = param.
inline Matroid u24_coloops(int k) {
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) labels.push_back("z" + std::to_string(i));
  return direct_sum(Matroid::uniform(2, 4, letter_labels(4)), Matroid::uniform(k, k, labels));
}

// Binary spike with param legs and its lowest dependent transversal relaxed.
inline Matroid relaxed_binary_spike(int legs) {
  const Spike s = representable_spike(2, std::vector<std::int64_t>(legs, 1)).spike;
  return Matroid::spike(relax(s, s.dependent().front()));
}

// U_{2,param} (non-representable over GF(p) once param >= p + 2).
inline Matroid line_family(int n) { return Matroid::uniform(2, n); }

inline std::vector<std::string> budget_families() { return {"u24-coloops", "relaxed-spike", "line"}; }

inline std::function<Matroid(int)> budget_family(const std::string& name) {
  if (name == "u24-coloops") return u24_coloops;
  if (name == "relaxed-spike") return relaxed_binary_spike;
  if (name == "line") return line_family;
  throw Error(ErrorCode::kNotApplicable, "unknown family '" + name + "'");
}

inline BudgetScan call_budget_scan(const std::string& family, std::uint32_t p, int from, int to) {
  const auto gen = budget_family(family);
  BudgetScan scan;
  scan.family = family;
  scan.p = p;
  for (int k = from; k <= to; ++k) {
    const Matroid m = gen(k);
    BudgetRow row;
    row.param = k;
    row.n = m.size();
    {
      const Certificate cert = build_certificate(m, p, {.minimize = false});
      CountedOracle o(m);
      const auto rep = verify(o, cert);
      row.calls = rep.oracle_calls;
      row.accepted = rep.accepted;
    }
    {
      const Certificate cert = build_certificate(m, p, {.minimize = true});
      CountedOracle o(m);
      const auto rep = verify(o, cert);
      row.minimized_calls = rep.oracle_calls;
      row.accepted = row.accepted && rep.accepted;
    }
    scan.rows.push_back(row);
  }
  const std::size_t fit = std::min<std::size_t>(4, scan.rows.size());
  for (std::size_t i = 0; i < fit; ++i) {
    const double n = scan.rows[i].n;
    scan.c = std::max(scan.c, static_cast<double>(scan.rows[i].calls) / (n * n));
  }
  scan.ok = !scan.rows.empty();
  for (const auto& r : scan.rows) {
    const double n = r.n;
    if (!r.accepted || static_cast<double>(r.calls) > 2 * scan.c * n * n) scan.ok = false;
  }
  return scan;
}

inline nlohmann::json budget_to_json(const BudgetScan& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : s.rows) {
    rows.push_back({{"param", r.param},
                    {"n", r.n},
                    {"calls", r.calls},
                    {"minimized_calls", r.minimized_calls},
                    {"accepted", r.accepted}});
  }
  return {{"v", 1}, {"family", s.family}, {"p", s.p}, {"rows", rows}, {"c", s.c}, {"ok", s.ok}};
}

}  // namespace matroid
