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

// Named small matroids used as regression fixtures. The recorded
// representability flags are re-derived by the test suite.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/error.hpp"
#include "matroid/gf.hpp"
#include "matroid/matroid.hpp"
#include "matroid/oracle.hpp"
#include "matroid/spike.hpp"

namespace matroid {

inline Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int na = a.size(), nb = b.size();
  require_exhaustive(na + nb);
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back(l);
  const auto ta = rank_table(a);
  const auto tb = rank_table(b);
  std::vector<std::uint8_t> t(std::size_t{1} << (na + nb));
  for (ElementSet x = 0; x < t.size(); ++x) {
    t[x] = static_cast<std::uint8_t>(ta[x & full_set(na)] + tb[x >> na]);
  }
  return Matroid::rank_table_unchecked(std::move(labels), std::move(t));
}

// Cycle matroid of a graph on vertices 0..v-1 (vertex-edge incidence over GF(2)).
inline Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges,
                       std::vector<std::string> labels = {}) {
  FieldMatrix m(2, vertices, static_cast<int>(edges.size()));
  for (std::size_t j = 0; j < edges.size(); ++j) {
    m.set(edges[j].first, static_cast<int>(j), 1);
    m.set(edges[j].second, static_cast<int>(j), 1);
  }
  return Matroid::linear(m, std::move(labels));
}

inline FieldMatrix fano_matrix(std::uint32_t p) {
  return FieldMatrix::from_rows(p, {{1, 0, 0, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1, 1}});
}

inline std::vector<std::string> letter_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

struct CatalogEntry {
  std::string name;
  std::string description;
  Matroid matroid;
  // GF(2), GF(3), GF(5) representability.
  bool gf2 = false;
  bool gf3 = false;
  bool gf5 = false;

  bool representable_over(std::uint32_t p) const {
    if (p == 2) return gf2;
    if (p == 3) return gf3;
    if (p == 5) return gf5;
    throw Error(ErrorCode::kNotApplicable, "catalog records p in {2, 3, 5} only");
  }
};

inline std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, std::string desc, Matroid m, bool g2, bool g3, bool g5) {
    c.push_back({std::move(name), std::move(desc), std::move(m), g2, g3, g5});
  };
  auto U = [](int r, int n) { return Matroid::uniform(r, n, letter_labels(n)); };

  add("u01", "single loop", U(0, 1), true, true, true);
  add("u11", "single coloop", U(1, 1), true, true, true);
  add("u12", "parallel pair", U(1, 2), true, true, true);
  add("u13", "parallel class of three", U(1, 3), true, true, true);
  add("u22", "two coloops", U(2, 2), true, true, true);
  add("u23", "triangle", U(2, 3), true, true, true);
  add("u24", "four-point line", U(2, 4), false, true, true);
  add("u25", "five-point line", U(2, 5), false, false, true);
  add("u26", "six-point line", U(2, 6), false, false, true);
  add("u27", "seven-point line", U(2, 7), false, false, false);
  add("u34", "four points in general position in rank 3", U(3, 4), true, true, true);
  add("u35", "rank 3, five points", U(3, 5), false, false, true);
  add("u36", "rank 3, six points", U(3, 6), false, false, true);
  add("u46", "rank 4, six points", U(4, 6), false, false, true);
  add("u57", "rank 5, seven points", U(5, 7), false, false, false);

  const auto L7 = letter_labels(7);
  const Matroid fano = Matroid::linear(fano_matrix(2), L7);
  add("fano", "Fano plane F7", fano, true, false, false);
  add("fano-dual", "F7*", materialize(fano.dual()), true, false, false);
  const Matroid nonfano = Matroid::linear(fano_matrix(3), L7);
  add("non-fano", "non-Fano plane F7-", nonfano, false, true, true);
  add("non-fano-dual", "(F7-)*", materialize(nonfano.dual()), false, true, true);

  add("k4", "M(K4)", graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, letter_labels(6)), true, true,
      true);
  add("k23", "M(K_{2,3})", graphic(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, letter_labels(6)),
      true, true, true);
  add("wheel4", "M(W4), the rank-4 wheel",
      graphic(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}}, letter_labels(8)), true, true,
      true);
  add("k33", "M(K_{3,3})",
      graphic(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}, letter_labels(9)), true,
      true, true);
  add("whirl3", "rank-3 whirl",
      Matroid::linear(FieldMatrix::from_rows(3, {{1, 0, 0, 1, 0, 1}, {0, 1, 0, 1, 1, 0}, {0, 0, 1, 0, 1, 1}}),
                      letter_labels(6)),
      false, true, true);
  {
    std::vector<std::vector<std::int64_t>> rows(3, std::vector<std::int64_t>(8, 0));
    for (int x = 0; x < 8; ++x) {
      for (int b = 0; b < 3; ++b) rows[b][x] = (x >> b) & 1;
    }
    rows.insert(rows.begin(), std::vector<std::int64_t>(8, 1));
    add("ag32", "binary affine cube AG(3,2)", Matroid::linear(FieldMatrix::from_rows(2, rows), letter_labels(8)),
        true, false, false);
  }
  add("p8", "ternary P8",
      Matroid::linear(FieldMatrix::from_rows(3, {{1, 0, 0, 0, 0, 1, 1, -1},
                                                  {0, 1, 0, 0, 1, 0, 1, 1},
                                                  {0, 0, 1, 0, 1, 1, 0, 1},
                                                  {0, 0, 0, 1, -1, 1, 1, 0}}),
                      letter_labels(8)),
      false, true, true);
  add("u24+coloop", "U_{2,4} plus a coloop",
      direct_sum(U(2, 4), Matroid::uniform(1, 1, {"z"})), false, true, true);
  add("u24+loop", "U_{2,4} plus a loop", direct_sum(U(2, 4), Matroid::uniform(0, 1, {"z"})), false, true, true);
  add("u23+coloop", "U_{2,3} plus a coloop", direct_sum(U(2, 3), Matroid::uniform(1, 1, {"z"})), true, true,
      true);

  add("spike-gf2-3", "binary spike, 3 legs (isomorphic to M(K4))",
      Matroid::spike(representable_spike(2, {1, 1, 1}).spike), true, true, true);
  add("spike-gf2-4", "binary spike, 4 legs", Matroid::spike(representable_spike(2, {1, 1, 1, 1}).spike), true,
      false, false);
  add("spike-gf3-3", "ternary spike, 3 legs, all alpha 1",
      Matroid::spike(representable_spike(3, {1, 1, 1}).spike), false, true, true);
  {
    const Spike s = representable_spike(2, {1, 1, 1, 1}).spike;
    add("spike-gf2-4-relaxed", "binary 4-leg spike with one dependent transversal relaxed",
        Matroid::spike(relax(s, s.dependent().front())), false, false, false);
  }
  add("spike-free-3", "free spike, 3 legs", Matroid::spike(Spike(3, {})), false, false, true);
  return c;
}

inline std::optional<CatalogEntry> catalog_entry(const std::string& name) {
  for (auto& e : catalog()) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

}  // namespace matroid
