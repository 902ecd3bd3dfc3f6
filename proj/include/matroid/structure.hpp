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

// Derived structure of a matroid given through a rank oracle: closures,
// connectivity, circuits, flats and cyclic flats, plus exhaustive axiom and
// equality checks.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matroid/error.hpp"
#include "matroid/matroid.hpp"
#include "matroid/oracle.hpp"
#include "matroid/subset.hpp"

namespace matroid {

template <class O>
concept LabelledOracle = RankOracle<O> && requires(const O& o) {
  { o.labels() } -> std::convertible_to<const std::vector<std::string>&>;
};

// Read-only view of a precomputed rank table.
class TableOracle {
 public:
  TableOracle(std::span<const std::uint8_t> ranks, int n) : ranks_(ranks), n_(n) {}
  int size() const { return n_; }
  int rank(ElementSet x) const { return ranks_[x]; }

 private:
  std::span<const std::uint8_t> ranks_;
  int n_;
};

// {e : r(X + e) = r(X)}; |E - X| + 1 oracle calls.
template <RankOracle O>
ElementSet closure(const O& o, ElementSet x) {
  const ElementSet g = full_set(o.size());
  const int rx = o.rank(x);
  ElementSet cl = x;
  for (int e : elements(g & ~x)) {
    if (o.rank(x | bit(e)) == rx) cl |= bit(e);
  }
  return cl;
}

// Closure in the dual: e is in cl*(X) iff e is a coloop of M | (E - X).
// |E - X| + 1 oracle calls.
template <RankOracle O>
ElementSet coclosure(const O& o, ElementSet x) {
  const ElementSet g = full_set(o.size());
  const ElementSet rest = g & ~x;
  const int r_rest = o.rank(rest);
  ElementSet cl = x;
  for (int e : elements(rest)) {
    if (o.rank(rest & ~bit(e)) == r_rest - 1) cl |= bit(e);
  }
  return cl;
}

// Connectivity function r(X) + r(E - X) - r(M); three oracle calls.
template <RankOracle O>
int lambda(const O& o, ElementSet x) {
  const ElementSet g = full_set(o.size());
  return o.rank(x) + o.rank(g & ~x) - o.rank(g);
}

inline std::vector<ElementSet> circuits_from_table(std::span<const std::uint8_t> t, int n) {
  std::vector<ElementSet> out;
  for (ElementSet x : subsets_by_size(full_set(n))) {
    const int k = popcount(x);
    if (k == 0 || t[x] != k - 1) continue;
    bool minimal = true;
    for (int e : elements(x)) {
      if (t[x & ~bit(e)] != k - 1) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

inline bool is_flat_in_table(std::span<const std::uint8_t> t, int n, ElementSet x) {
  for (int e = 0; e < n; ++e) {
    if (!contains(x, e) && t[x | bit(e)] == t[x]) return false;
  }
  return true;
}

inline std::vector<ElementSet> flats_from_table(std::span<const std::uint8_t> t, int n) {
  std::vector<ElementSet> out;
  for (ElementSet x : subsets_by_size(full_set(n))) {
    if (is_flat_in_table(t, n, x)) out.push_back(x);
  }
  return out;
}

// Flats F with no coloop in M | F. The empty set qualifies exactly when M
// has no loops.
inline std::vector<ElementSet> cyclic_flats_from_table(std::span<const std::uint8_t> t, int n) {
  std::vector<ElementSet> out;
  for (ElementSet x : subsets_by_size(full_set(n))) {
    bool cyclic = true;
    for (int e : elements(x)) {
      if (t[x & ~bit(e)] != t[x]) {
        cyclic = false;
        break;
      }
    }
    if (cyclic && is_flat_in_table(t, n, x)) out.push_back(x);
  }
  return out;
}

template <RankOracle O>
std::vector<ElementSet> circuits(const O& o) {
  const auto t = rank_table(o);
  return circuits_from_table(t, o.size());
}

template <RankOracle O>
std::vector<ElementSet> flats(const O& o) {
  const auto t = rank_table(o);
  return flats_from_table(t, o.size());
}

template <RankOracle O>
std::vector<ElementSet> cyclic_flats(const O& o) {
  const auto t = rank_table(o);
  return cyclic_flats_from_table(t, o.size());
}

struct AxiomReport {
  bool ok = true;
  std::optional<RankViolation> violation;
};

template <RankOracle O>
AxiomReport axiom_check(const O& o) {
  const auto t = rank_table(o);
  AxiomReport rep;
  rep.violation = find_rank_violation(t, o.size());
  rep.ok = !rep.violation.has_value();
  return rep;
}

struct EqualityReport {
  bool equal = true;
  std::optional<ElementSet> witness;  // first subset (by size, then lex) with differing rank
};

template <LabelledOracle A, LabelledOracle B>
EqualityReport matroid_equal(const A& a, const B& b) {
  if (a.labels() != b.labels()) {
    throw Error(ErrorCode::kGroundSetMismatch, "ground sets carry different labels");
  }
  require_exhaustive(a.size());
  for (ElementSet x : subsets_by_size(full_set(a.size()))) {
    if (a.rank(x) != b.rank(x)) return {false, x};
  }
  return {};
}

inline ElementSet loops_of(std::span<const std::uint8_t> t, int n) {
  ElementSet out = 0;
  for (int e = 0; e < n; ++e) {
    if (t[bit(e)] == 0) out |= bit(e);
  }
  return out;
}

inline ElementSet coloops_of(std::span<const std::uint8_t> t, int n) {
  const ElementSet g = full_set(n);
  ElementSet out = 0;
  for (int e = 0; e < n; ++e) {
    if (t[g & ~bit(e)] != t[g]) out |= bit(e);
  }
  return out;
}

// Tutte connectivity: no j-separation (X, E - X) with j < k and
// |X|, |E - X| >= j.
inline bool is_k_connected_table(std::span<const std::uint8_t> t, int n, int k) {
  const ElementSet g = full_set(n);
  for (ElementSet x = 0; x <= g; ++x) {
    const int lam = t[x] + t[g & ~x] - t[g];
    const int small = std::min(popcount(x), n - popcount(x));
    // λ(X) < j <= min(|X|, |E - X|) for some j < k.
    if (lam < k - 1 && lam + 1 <= small) return false;
    if (x == g) break;
  }
  return true;
}

template <RankOracle O>
bool is_k_connected(const O& o, int k) {
  const auto t = rank_table(o);
  return is_k_connected_table(t, o.size(), k);
}

}  // namespace matroid
