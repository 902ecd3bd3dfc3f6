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

// GF(p)-representations up to equivalence (row operations, dropping zero
// rows and nonzero column scaling).
//
// Canonical form. Row-reduce and drop zero rows; the pivot columns are then
// the lexicographically least basis B of the column matroid and carry an
// identity block. Write A for the remaining columns. The zero pattern of A
// is fixed by the matroid (fundamental circuits with respect to B). Take the
// bipartite graph on rows and non-basis columns with an edge per nonzero of
// A, grow a BFS spanning forest (lowest vertex first; rows before columns),
// and scale rows and columns so that every forest entry becomes 1. The only
// transformations that keep the identity on B are diagonal, and once the
// forest is all ones they act trivially, so two representations of the same
// matroid are equivalent exactly when their canonical forms are equal.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "matroid/error.hpp"
#include "matroid/gf.hpp"
#include "matroid/matroid.hpp"
#include "matroid/oracle.hpp"
#include "matroid/structure.hpp"
#include "matroid/subset.hpp"

namespace matroid {

struct Representation {
  FieldMatrix matrix;
  std::vector<std::string> labels;

  friend bool operator==(const Representation&, const Representation&) = default;
};

inline Matroid matroid_of(const Representation& r) { return Matroid::linear(r.matrix, r.labels); }

namespace detail {

struct ForestEdge {
  int row;
  int col;          // column index in the full matrix
  bool scale_col;   // true: the column is the newly reached vertex
};

// BFS spanning forest of the row / non-basis-column support graph.
// `support[i][k]` says whether row i meets the k-th non-basis column.
inline std::vector<ForestEdge> spanning_forest(int rows, const std::vector<int>& nonbasis,
                                               const std::vector<std::vector<bool>>& support) {
  const int cols = static_cast<int>(nonbasis.size());
  std::vector<bool> seen(rows + cols, false);
  std::vector<ForestEdge> edges;
  for (int root = 0; root < rows + cols; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      if (v < rows) {
        for (int k = 0; k < cols; ++k) {
          if (!support[v][k] || seen[rows + k]) continue;
          seen[rows + k] = true;
          edges.push_back({v, nonbasis[k], true});
          queue.push_back(rows + k);
        }
      } else {
        const int k = v - rows;
        for (int i = 0; i < rows; ++i) {
          if (!support[i][k] || seen[i]) continue;
          seen[i] = true;
          edges.push_back({i, nonbasis[k], false});
          queue.push_back(i);
        }
      }
    }
  }
  return edges;
}

}  // namespace detail

// Canonical representative of the equivalence class of `m` (see file comment).
inline FieldMatrix canonical_form(const FieldMatrix& m) {
  const std::uint32_t p = m.modulus();
  RrefResult rr = rref(m);
  FieldMatrix a = rr.reduced.select_rows(rr.rank);
  const int rows = rr.rank;
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rr.pivots) is_pivot[c] = true;
  std::vector<int> nonbasis;
  for (int c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) nonbasis.push_back(c);
  }
  std::vector<std::vector<bool>> support(rows, std::vector<bool>(nonbasis.size()));
  for (int i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < nonbasis.size(); ++k) support[i][k] = a(i, nonbasis[k]) != 0;
  for (const auto& e : detail::spanning_forest(rows, nonbasis, support)) {
    const std::uint32_t s = mod::inv(a(e.row, e.col), p);
    if (e.scale_col) {
      for (int i = 0; i < rows; ++i) a.raw(i, e.col) = mod::mul(a(i, e.col), s, p);
    } else {
      // Scale the row, then rescale its pivot column to restore the identity.
      for (int c : nonbasis) a.raw(e.row, c) = mod::mul(a(e.row, c), s, p);
    }
  }
  return a;
}

inline void require_same_shape(const Representation& a, const Representation& b) {
  if (a.labels != b.labels || a.matrix.cols() != b.matrix.cols() ||
      a.matrix.modulus() != b.matrix.modulus()) {
    throw Error(ErrorCode::kShapeMismatch, "representations over different ground sets or fields");
  }
}

inline bool are_equivalent(const Representation& a, const Representation& b) {
  require_same_shape(a, b);
  return canonical_form(a.matrix) == canonical_form(b.matrix);
}

// Full row rank and reduced row-echelon, i.e. an identity block on the
// lexicographically least basis.
inline bool is_standard_form(const FieldMatrix& m) {
  const RrefResult rr = rref(m);
  return rr.rank == m.rows() && rr.reduced == m;
}

// [I | A] on basis B becomes [-A^T | I] with the identity on the complement.
inline Representation dual_representation(const Representation& r) {
  const FieldMatrix& m = r.matrix;
  if (!is_standard_form(m)) {
    throw Error(ErrorCode::kNotStandardForm, "normalize the representation first");
  }
  const std::uint32_t p = m.modulus();
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rr.pivots) is_pivot[c] = true;
  const int n = m.cols();
  FieldMatrix d(p, n - rr.rank, n);
  int k = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    d.set(k, c, 1);
    for (int i = 0; i < rr.rank; ++i) d.raw(k, rr.pivots[i]) = mod::neg(m(i, c), p);
    ++k;
  }
  return {std::move(d), r.labels};
}

inline FieldMatrix dual_matrix(const FieldMatrix& m) {
  return dual_representation({canonical_form(m), std::vector<std::string>(m.cols(), "")}).matrix;
}

struct RepClassSet {
  std::vector<Representation> reps;  // canonical forms, sorted

  std::size_t size() const { return reps.size(); }
  bool empty() const { return reps.empty(); }
};

namespace detail {

// Backtracking search over canonical forms of representations of the matroid
// with rank table `t`. Stops after `limit` results.
inline std::vector<FieldMatrix> canonical_representations(std::span<const std::uint8_t> t, int n,
                                                          std::uint32_t p, std::size_t limit) {
  require_prime(p);
  const ElementSet g = full_set(n);
  const int r = t[g];
  if (r == 0) return {FieldMatrix(p, 0, n)};

  ElementSet basis = 0;
  for (int e = 0; e < n; ++e) {
    if (t[basis | bit(e)] > t[basis]) basis |= bit(e);
  }
  const std::vector<int> brows = elements(basis);
  std::vector<int> nonbasis;
  for (int e = 0; e < n; ++e) {
    if (!contains(basis, e)) nonbasis.push_back(e);
  }
  std::vector<std::vector<bool>> support(r, std::vector<bool>(nonbasis.size(), false));
  for (std::size_t k = 0; k < nonbasis.size(); ++k) {
    const int j = nonbasis[k];
    if (t[bit(j)] == 0) continue;
    for (int i = 0; i < r; ++i) {
      support[i][k] = t[(basis & ~bit(brows[i])) | bit(j)] == r;
    }
  }
  std::vector<std::vector<bool>> fixed(r, std::vector<bool>(nonbasis.size(), false));
  const auto forest = spanning_forest(r, nonbasis, support);
  for (const auto& e : forest) {
    const auto k = std::find(nonbasis.begin(), nonbasis.end(), e.col) - nonbasis.begin();
    fixed[e.row][k] = true;
  }

  FieldMatrix m(p, r, n);
  for (int i = 0; i < r; ++i) m.set(i, brows[i], 1);

  // r-subsets of basis + nonbasis[0..k] that contain nonbasis[k].
  std::vector<std::vector<ElementSet>> checks(nonbasis.size());
  for (std::size_t k = 0; k < nonbasis.size(); ++k) {
    ElementSet pool = basis;
    for (std::size_t q = 0; q < k; ++q) pool |= bit(nonbasis[q]);
    for (ElementSet s : subsets_by_size(pool)) {
      if (popcount(s) == r - 1) checks[k].push_back(s | bit(nonbasis[k]));
      if (popcount(s) >= r) break;
    }
  }

  std::vector<FieldMatrix> out;
  std::vector<int> free_rows;
  auto search = [&](auto&& self, std::size_t k) -> void {
    if (out.size() >= limit) return;
    if (k == nonbasis.size()) {
      out.push_back(m);
      return;
    }
    const int j = nonbasis[k];
    std::vector<int> frees;
    for (int i = 0; i < r; ++i) {
      m.set(i, j, support[i][k] ? 1 : 0);
      if (support[i][k] && !fixed[i][k]) frees.push_back(i);
    }
    std::vector<std::uint32_t> vals(frees.size(), 1);
    while (true) {
      for (std::size_t q = 0; q < frees.size(); ++q) m.set(frees[q], j, vals[q]);
      bool ok = true;
      for (ElementSet x : checks[k]) {
        if ((column_rank(m, x) == r) != (t[x] == r)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, k + 1);
      if (out.size() >= limit) return;
      std::size_t q = 0;
      while (q < vals.size() && vals[q] == p - 1) vals[q++] = 1;
      if (q == vals.size()) break;
      ++vals[q];
    }
    for (int i = 0; i < r; ++i) m.set(i, j, 0);
  };
  search(search, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Complete set of pairwise inequivalent GF(p)-representations, one canonical
// form per class.
template <LabelledOracle O>
RepClassSet enumerate_reps(const O& o, std::uint32_t p) {
  const auto t = rank_table(o);
  RepClassSet out;
  for (auto& m : detail::canonical_representations(t, o.size(), p, SIZE_MAX)) {
    out.reps.push_back({std::move(m), o.labels()});
  }
  return out;
}

template <RankOracle O>
std::size_t count_reps(const O& o, std::uint32_t p, std::size_t limit = SIZE_MAX) {
  const auto t = rank_table(o);
  return detail::canonical_representations(t, o.size(), p, limit).size();
}

template <RankOracle O>
bool is_representable(const O& o, std::uint32_t p) {
  return count_reps(o, p, 1) > 0;
}

// Projective points x such that `r` with x inserted as column `e` represents
// the matroid of `o`; `r` must represent o \ e. When e is a coloop the
// representation is first padded with a zero row. A loop e has no candidate
// points (its column must be zero).
template <LabelledOracle O>
std::vector<Vector> extension_candidates(const Representation& r, const O& o, const std::string& e) {
  const auto& labels = o.labels();
  const auto pos_it = std::find(labels.begin(), labels.end(), e);
  if (pos_it == labels.end()) throw Error(ErrorCode::kUnknownElement, "no element '" + e + "'");
  const int pos = static_cast<int>(pos_it - labels.begin());
  std::vector<std::string> rest = labels;
  rest.erase(rest.begin() + pos);
  if (r.labels != rest) {
    throw Error(ErrorCode::kGroundSetMismatch, "representation must cover the ground set minus e");
  }
  const int n = o.size();
  const auto t = rank_table(o);
  const RrefResult rr = rref(r.matrix);
  FieldMatrix base = rr.reduced.select_rows(rr.rank);
  const int full = t[full_set(n)];
  if (full == rr.rank + 1) {
    base = base.with_zero_row();
  } else if (full != rr.rank) {
    return {};
  }
  std::vector<Vector> out;
  for (auto& x : projective_points(Flat::full(base.rows(), base.modulus()))) {
    const FieldMatrix ext = base.with_column(pos, x);
    bool ok = true;
    for (ElementSet s = 0; s < t.size() && ok; ++s) {
      if (contains(s, pos)) ok = column_rank(ext, s) == t[s];
    }
    if (ok) out.push_back(std::move(x));
  }
  return out;
}

inline nlohmann::json rep_set_to_json(const RepClassSet& s, const std::vector<std::string>& labels) {
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& r : s.reps) reps.push_back(matrix_to_json(r.matrix));
  return {{"v", 1}, {"count", s.size()}, {"labels", labels}, {"representatives", reps}};
}

}  // namespace matroid
