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

// Clones, the freer-than order and freedom.
//
// e and f are clones when swapping them is an automorphism, equivalently when
// they lie in the same cyclic flats. e is freer than f when every cyclic flat
// containing e also contains f. The freedom of e is the largest independent
// set of pairwise clones containing e over all extensions of M (infinite for
// a coloop); it is computed by growing such a set one element at a time,
// which is complete because deleting added elements preserves clones.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "matroid/error.hpp"
#include "matroid/extension.hpp"
#include "matroid/matroid.hpp"
#include "matroid/oracle.hpp"
#include "matroid/structure.hpp"
#include "matroid/subset.hpp"

namespace matroid {

// Extensions inside the freedom search may grow past the public bound.
inline constexpr int kMaxFreedomSearchElements = 13;

inline std::vector<std::uint8_t> dual_table(std::span<const std::uint8_t> t, int n) {
  const ElementSet g = full_set(n);
  std::vector<std::uint8_t> d(t.size());
  for (ElementSet x = 0; x <= g; ++x) {
    d[x] = static_cast<std::uint8_t>(popcount(x) + t[g & ~x] - t[g]);
    if (x == g) break;
  }
  return d;
}

inline ElementSet swap_elements(ElementSet x, int e, int f) {
  const bool has_e = contains(x, e), has_f = contains(x, f);
  x &= ~(bit(e) | bit(f));
  if (has_e) x |= bit(f);
  if (has_f) x |= bit(e);
  return x;
}

// Direct automorphism check of the transposition (e f).
inline bool swap_is_automorphism(std::span<const std::uint8_t> t, int n, int e, int f) {
  if (e == f) return true;
  const ElementSet g = full_set(n);
  for (ElementSet x = 0; x <= g; ++x) {
    if (contains(x, e) != contains(x, f) && t[x] != t[swap_elements(x, e, f)]) return false;
    if (x == g) break;
  }
  return true;
}

// freer[e][f]: every cyclic flat containing e contains f.
inline std::vector<std::vector<bool>> freer_from_table(std::span<const std::uint8_t> t, int n) {
  const auto cyc = cyclic_flats_from_table(t, n);
  std::vector<std::vector<bool>> freer(n, std::vector<bool>(n, true));
  for (ElementSet z : cyc) {
    for (int e : elements(z)) {
      for (int f = 0; f < n; ++f) {
        if (!contains(z, f)) freer[e][f] = false;
      }
    }
  }
  return freer;
}

template <RankOracle O>
std::vector<std::vector<bool>> freer_relation(const O& o) {
  const auto t = rank_table(o);
  return freer_from_table(t, o.size());
}

inline std::vector<ElementSet> clone_classes_from_table(std::span<const std::uint8_t> t, int n) {
  const auto freer = freer_from_table(t, n);
  std::vector<ElementSet> out;
  ElementSet done = 0;
  for (int e = 0; e < n; ++e) {
    if (contains(done, e)) continue;
    ElementSet cls = 0;
    for (int f = e; f < n; ++f) {
      if (freer[e][f] && freer[f][e]) cls |= bit(f);
    }
    done |= cls;
    out.push_back(cls);
  }
  return out;
}

// Partition of the ground set into clonal classes, ordered by least element.
template <RankOracle O>
std::vector<ElementSet> clone_classes(const O& o) {
  const auto t = rank_table(o);
  return clone_classes_from_table(t, o.size());
}

template <RankOracle O>
bool are_clones(const O& o, int e, int f) {
  const auto freer = freer_relation(o);
  return freer[e][f] && freer[f][e];
}

inline bool is_fixed_in_table(std::span<const std::uint8_t> t, int n, int e,
                              int limit = kMaxExtensionElements) {
  if (t[bit(e)] == 0) return true;
  for (const auto& cut : modular_cuts_from_table(t, n, limit)) {
    const auto ext = extend_table(t, n, cut);
    if (ext[bit(e) | bit(n)] == 2 && swap_is_automorphism(ext, n + 1, e, n)) return false;
  }
  return true;
}

template <RankOracle O>
bool is_fixed(const O& o, int e) {
  require_exhaustive(o.size(), kMaxExtensionElements);
  const auto t = rank_table(o);
  return is_fixed_in_table(t, o.size(), e);
}

template <RankOracle O>
bool is_cofixed(const O& o, int e) {
  require_exhaustive(o.size(), kMaxExtensionElements);
  const auto t = rank_table(o);
  return is_fixed_in_table(dual_table(t, o.size()), o.size(), e);
}

struct FreedomResult {
  enum class Kind { kFinite, kInfinite, kOverflow };
  Kind kind = Kind::kFinite;
  int value = 0;  // exact freedom when finite
  int cap = 0;

  bool finite() const { return kind == Kind::kFinite; }
  bool overflow() const { return kind == Kind::kOverflow; }
  bool infinite() const { return kind == Kind::kInfinite; }
  // Whether the freedom is known to be at most k.
  bool at_most(int k) const { return finite() && value <= k; }

  static FreedomResult finite_value(int v, int cap) { return {Kind::kFinite, v, cap}; }
  static FreedomResult infinity(int cap) { return {Kind::kInfinite, 0, cap}; }
  static FreedomResult overflowed(int cap) { return {Kind::kOverflow, 0, cap}; }
};

namespace detail {

class FreedomSearch {
 public:
  FreedomSearch(int cap, int upper) : cap_(cap), upper_(upper) {}

  // Returns false once the cap is exceeded.
  bool run(const std::vector<std::uint8_t>& t, int n, ElementSet s) {
    if (done_) return !overflow_;
    const int size = popcount(s);
    best_ = std::max(best_, size);
    if (best_ > cap_) {
      overflow_ = done_ = true;
      return false;
    }
    if (best_ >= upper_) {
      done_ = true;
      return true;
    }
    std::string key(t.begin(), t.end());
    key += ':' + std::to_string(s);
    if (!seen_.insert(std::move(key)).second) return true;

    const int anchor = std::countr_zero(s);
    // Absorb an element already present.
    for (int f = 0; f < n && !done_; ++f) {
      if (contains(s, f) || t[s | bit(f)] != size + 1) continue;
      if (swap_is_automorphism(t, n, anchor, f)) run(t, n, s | bit(f));
    }
    if (done_ || n + 1 > kMaxFreedomSearchElements) return !overflow_;
    // Add a new clone in general position relative to s.
    for (const auto& cut : modular_cuts_from_table(t, n, kMaxFreedomSearchElements)) {
      if (done_) break;
      auto ext = extend_table(t, n, cut);
      if (ext[s | bit(n)] != size + 1) continue;
      if (!swap_is_automorphism(ext, n + 1, anchor, n)) continue;
      run(ext, n + 1, s | bit(n));
    }
    return !overflow_;
  }

  int best() const { return best_; }
  bool overflow() const { return overflow_; }

 private:
  int cap_;
  int upper_;
  int best_ = 0;
  bool overflow_ = false;
  bool done_ = false;
  std::set<std::string> seen_;
};

}  // namespace detail

// Exact freedom of e if it is at most `cap`, otherwise Overflow. Clones of
// a non-coloop are never coloops, so the freedom is at most r(M) and the
// search stops there.
inline FreedomResult freedom_in_table(std::span<const std::uint8_t> t, int n, int e, int cap) {
  const ElementSet g = full_set(n);
  if (t[bit(e)] == 0) return FreedomResult::finite_value(0, cap);
  if (t[g & ~bit(e)] != t[g]) return FreedomResult::infinity(cap);
  detail::FreedomSearch search(cap, t[g]);
  search.run(std::vector<std::uint8_t>(t.begin(), t.end()), n, bit(e));
  if (search.overflow()) return FreedomResult::overflowed(cap);
  return FreedomResult::finite_value(search.best(), cap);
}

template <RankOracle O>
FreedomResult freedom(const O& o, int e, int cap) {
  require_exhaustive(o.size(), kMaxExtensionElements);
  const auto t = rank_table(o);
  return freedom_in_table(t, o.size(), e, cap);
}

template <RankOracle O>
FreedomResult cofreedom(const O& o, int e, int cap) {
  require_exhaustive(o.size(), kMaxExtensionElements);
  const auto t = rank_table(o);
  return freedom_in_table(dual_table(t, o.size()), o.size(), e, cap);
}

// Some partition (A, B) with lambda(A) <= t has e in cl(A - e) and cl(B - e);
// then the freedom of e is at most t.
inline bool separation_bounds_freedom_table(std::span<const std::uint8_t> tb, int n, int e, int t) {
  const ElementSet g = full_set(n);
  for (ElementSet a = 0; a <= g; ++a) {
    if (contains(a, e)) {
      const ElementSet b = g & ~a;
      const int lam = tb[a] + tb[b] - tb[g];
      const ElementSet a0 = a & ~bit(e);
      if (lam <= t && tb[a0] == tb[a] && tb[b | bit(e)] == tb[b]) return true;
    }
    if (a == g) break;
  }
  return false;
}

template <RankOracle O>
bool freedom_upper_from_separation(const O& o, int e, int t) {
  const auto tb = rank_table(o);
  return separation_bounds_freedom_table(tb, o.size(), e, t);
}

// Dual form: e in cl*(A - e) and cl*(B - e) bounds the cofreedom by t.
template <RankOracle O>
bool cofreedom_upper_from_separation(const O& o, int e, int t) {
  const auto tb = rank_table(o);
  return separation_bounds_freedom_table(dual_table(tb, o.size()), o.size(), e, t);
}

struct UniformWitness {
  Matroid minor;
  ElementSet contract = 0;  // original indexing
  ElementSet remove = 0;
  int gamma = 0;  // rank of the minor
  int delta = 0;  // corank of the minor
};

// Strips non-clones of e until one clonal class (a uniform matroid) is
// left: b is deleted when e is freer than b or the two are incomparable and
// contracted when b is strictly freer than e. Lowest index first.
template <RankOracle O>
UniformWitness uniform_minor_witness(const O& o, int e) {
  const int n = o.size();
  const auto t0 = rank_table(o);
  const ElementSet g0 = full_set(n);
  if (t0[bit(e)] == 0 || t0[g0 & ~bit(e)] != t0[g0]) {
    throw Error(ErrorCode::kNotApplicable, "element is a loop or a coloop");
  }
  ElementSet contract = 0, remove = 0;
  while (true) {
    const ElementSet kept = g0 & ~(contract | remove);
    const int m = popcount(kept);
    std::vector<std::uint8_t> t(std::size_t{1} << m);
    for (ElementSet x = 0; x < t.size(); ++x) {
      t[x] = static_cast<std::uint8_t>(t0[expand(x, kept) | contract] - t0[contract]);
    }
    const int le = popcount(kept & (bit(e) - 1));
    const auto freer = freer_from_table(t, m);
    int pick = -1;
    for (int b = 0; b < m && pick < 0; ++b) {
      if (!(freer[le][b] && freer[b][le])) pick = b;
    }
    if (pick < 0) {
      UniformWitness w;
      w.contract = contract;
      w.remove = remove;
      w.gamma = t[full_set(m)];
      w.delta = m - w.gamma;
      std::vector<std::string> labels;
      for (int x : elements(kept)) labels.push_back("e" + std::to_string(x));
      w.minor = Matroid::rank_table_unchecked(std::move(labels), std::move(t));
      return w;
    }
    const ElementSet b = expand(bit(pick), kept);
    const bool b_strictly_freer = freer[pick][le] && !freer[le][pick];
    if (b_strictly_freer) {
      contract |= b;
    } else {
      remove |= b;
    }
  }
}

template <LabelledOracle O>
UniformWitness uniform_minor_witness_labelled(const O& o, int e) {
  UniformWitness w = uniform_minor_witness(o, e);
  std::vector<std::string> labels;
  for (int x : elements(full_set(o.size()) & ~(w.contract | w.remove))) labels.push_back(o.labels()[x]);
  w.minor = Matroid::rank_table_unchecked(std::move(labels), rank_table(w.minor));
  return w;
}

struct BoundCorRow {
  int element = 0;
  bool fixed = false;
  bool cofixed = false;
  FreedomResult freedom;
  FreedomResult cofreedom;
  bool ok = true;
};

struct BoundCorReport {
  bool ok = true;
  std::vector<BoundCorRow> rows;
};

// For every e: not fixed implies cofreedom <= p, not cofixed implies
// freedom <= p. Holds for GF(p)-representable matroids and excluded minors.
template <RankOracle O>
BoundCorReport bound_cor_check(const O& o, std::uint32_t p) {
  require_exhaustive(o.size(), kMaxExtensionElements);
  const int n = o.size();
  const auto t = rank_table(o);
  const auto d = dual_table(t, n);
  const int cap = static_cast<int>(p);
  BoundCorReport rep;
  for (int e = 0; e < n; ++e) {
    BoundCorRow row;
    row.element = e;
    row.fixed = is_fixed_in_table(t, n, e);
    row.cofixed = is_fixed_in_table(d, n, e);
    row.freedom = freedom_in_table(t, n, e, cap);
    row.cofreedom = freedom_in_table(d, n, e, cap);
    if (!row.fixed && !(row.cofreedom.at_most(cap))) row.ok = false;
    if (!row.cofixed && !(row.freedom.at_most(cap))) row.ok = false;
    rep.ok = rep.ok && row.ok;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace matroid
