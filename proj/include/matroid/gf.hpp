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

// Exact arithmetic over prime fields GF(p) together with the dense linear
// algebra the rest of the library needs: row reduction, column spans,
// subspace intersection and enumeration of projective points.
//
// Subspaces of GF(p)^r are `Flat`s. A flat stores the reduced row-echelon
// basis of its row space, which is unique per subspace, so two flats are
// equal exactly when their bases compare equal entry by entry. Column vectors
// of a matrix are identified with row vectors of the ambient space, i.e. the
// span of a set of columns is the row space of their transpose.

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "matroid/error.hpp"
#include "matroid/subset.hpp"

namespace matroid {

inline constexpr std::uint32_t kMaxModulus = 1U << 16;

inline bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline void require_prime(std::uint32_t p) {
  if (p > kMaxModulus || !is_prime(p)) {
    throw Error(ErrorCode::kNotPrime,
                std::to_string(p) + " is not a supported prime modulus");
  }
}

namespace mod {

inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
inline std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorCode::kInversionOfZero, "0 has no inverse");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t, p);
}

}  // namespace mod

class FieldElement {
 public:
  FieldElement(std::int64_t value, std::uint32_t p) : p_(p) {
    require_prime(p);
    value_ = mod::reduce(value, p);
  }

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return p_; }

  FieldElement inverse() const { return raw(mod::inv(value_, p_), p_); }

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    a.check(b);
    return raw(mod::add(a.value_, b.value_, a.p_), a.p_);
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    a.check(b);
    return raw(mod::sub(a.value_, b.value_, a.p_), a.p_);
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    a.check(b);
    return raw(mod::mul(a.value_, b.value_, a.p_), a.p_);
  }
  friend FieldElement operator/(FieldElement a, FieldElement b) {
    return a * b.inverse();
  }
  FieldElement operator-() const { return raw(mod::neg(value_, p_), p_); }
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  static FieldElement raw(std::uint32_t v, std::uint32_t p) {
    FieldElement e;
    e.value_ = v;
    e.p_ = p;
    return e;
  }
  FieldElement() = default;
  void check(const FieldElement& o) const {
    if (o.p_ != p_) throw Error(ErrorCode::kModulusMismatch, "mixed moduli");
  }

  std::uint32_t value_ = 0;
  std::uint32_t p_ = 2;
};

inline FieldElement field_inv(FieldElement a) { return a.inverse(); }

using Vector = std::vector<std::uint32_t>;

// Dense row-major matrix over GF(p).
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::uint32_t p, int rows, int cols)
      : p_(p), rows_(rows), cols_(cols), data_(checked_size(p, rows, cols), 0) {}

  static FieldMatrix identity(std::uint32_t p, int n) {
    FieldMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
  }

  static FieldMatrix from_rows(std::uint32_t p,
                               const std::vector<std::vector<std::int64_t>>& rows,
                               int cols = -1) {
    const int r = static_cast<int>(rows.size());
    const int c = cols >= 0 ? cols : (r == 0 ? 0 : static_cast<int>(rows[0].size()));
    FieldMatrix m(p, r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c) {
        throw Error(ErrorCode::kShapeMismatch, "ragged rows");
      }
      for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  std::uint32_t modulus() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint32_t operator()(int i, int j) const { return data_[idx(i, j)]; }
  std::uint32_t& raw(int i, int j) { return data_[idx(i, j)]; }
  void set(int i, int j, std::int64_t v) { data_[idx(i, j)] = mod::reduce(v, p_); }
  FieldElement at(int i, int j) const { return FieldElement((*this)(i, j), p_); }

  Vector row(int i) const {
    return Vector(data_.begin() + idx(i, 0), data_.begin() + idx(i, 0) + cols_);
  }
  Vector column(int j) const {
    Vector v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  FieldMatrix transpose() const {
    FieldMatrix t(p_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.data_[t.idx(j, i)] = (*this)(i, j);
    return t;
  }

  FieldMatrix select_columns(std::span<const int> cols) const {
    FieldMatrix m(p_, rows_, static_cast<int>(cols.size()));
    for (int i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols.size(); ++k)
        m.data_[m.idx(i, static_cast<int>(k))] = (*this)(i, cols[k]);
    return m;
  }

  FieldMatrix select_rows(int count) const {
    FieldMatrix m(p_, count, cols_);
    std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count) * cols_,
              m.data_.begin());
    return m;
  }

  // Copy with `v` inserted as a new column at position `pos`.
  FieldMatrix with_column(int pos, const Vector& v) const {
    if (static_cast<int>(v.size()) != rows_) {
      throw Error(ErrorCode::kShapeMismatch, "column length mismatch");
    }
    FieldMatrix m(p_, rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0, k = 0; j <= cols_; ++j) {
        m.data_[m.idx(i, j)] = j == pos ? v[i] % p_ : (*this)(i, k++);
      }
    }
    return m;
  }

  // Copy with a zero row appended.
  FieldMatrix with_zero_row() const {
    FieldMatrix m(p_, rows_ + 1, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    return m;
  }

  static FieldMatrix vstack(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols_ != b.cols_ || a.p_ != b.p_) {
      throw Error(ErrorCode::kShapeMismatch, "vstack of incompatible matrices");
    }
    FieldMatrix m(a.p_, a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + a.data_.size());
    return m;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](auto v) { return v == 0; });
  }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;
  friend auto operator<=>(const FieldMatrix& a, const FieldMatrix& b) {
    return std::tie(a.p_, a.rows_, a.cols_, a.data_) <=>
           std::tie(b.p_, b.rows_, b.cols_, b.data_);
  }

 private:
  static std::size_t checked_size(std::uint32_t p, int rows, int cols) {
    require_prime(p);
    if (rows < 0 || cols < 0) {
      throw Error(ErrorCode::kShapeMismatch, "negative dimension");
    }
    return static_cast<std::size_t>(rows) * cols;
  }

  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  std::uint32_t p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint32_t> data_;
};

struct RrefResult {
  FieldMatrix reduced;
  int rank = 0;
  std::vector<int> pivots;
};

// Reduced row-echelon form. Zero rows stay at the bottom.
inline RrefResult rref(FieldMatrix m) {
  const std::uint32_t p = m.modulus();
  const int rows = m.rows();
  const int cols = m.cols();
  RrefResult out;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < cols; ++j) std::swap(m.raw(piv, j), m.raw(r, j));
    }
    const std::uint32_t s = mod::inv(m(r, c), p);
    for (int j = c; j < cols; ++j) m.raw(r, j) = mod::mul(m(r, j), s, p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const std::uint32_t f = m(i, c);
      for (int j = c; j < cols; ++j) {
        m.raw(i, j) = mod::sub(m(i, j), mod::mul(f, m(r, j), p), p);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

inline int matrix_rank(const FieldMatrix& m) { return rref(m).rank; }

// Rank of the columns of `m` indexed by `cols`.
inline int column_rank(const FieldMatrix& m, ElementSet cols) {
  const int k = popcount(cols);
  if (k == 0 || m.rows() == 0) return 0;
  // Eliminate on the transpose: k vectors of length rows.
  const std::uint32_t p = m.modulus();
  const int n = m.rows();
  std::vector<std::uint32_t> vecs;
  vecs.reserve(static_cast<std::size_t>(k) * n);
  for (int j : elements(cols))
    for (int i = 0; i < n; ++i) vecs.push_back(m(i, j));
  int rank = 0;
  for (int c = 0; c < n && rank < k; ++c) {
    int piv = -1;
    for (int v = rank; v < k; ++v) {
      if (vecs[v * n + c] != 0) {
        piv = v;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) {
      std::swap_ranges(vecs.begin() + piv * n, vecs.begin() + piv * n + n,
                       vecs.begin() + rank * n);
    }
    const std::uint32_t s = mod::inv(vecs[rank * n + c], p);
    for (int v = rank + 1; v < k; ++v) {
      const std::uint32_t x = vecs[v * n + c];
      if (x == 0) continue;
      const std::uint32_t f = mod::mul(x, s, p);
      for (int j = c; j < n; ++j) {
        vecs[v * n + j] = mod::sub(vecs[v * n + j], mod::mul(f, vecs[rank * n + j], p), p);
      }
    }
    ++rank;
  }
  return rank;
}

// Rows form a basis of {x : m x = 0}.
inline FieldMatrix null_space(const FieldMatrix& m) {
  const std::uint32_t p = m.modulus();
  const RrefResult rr = rref(m);
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : rr.pivots) is_pivot[c] = true;
  FieldMatrix out(p, n - rr.rank, n);
  int row = 0;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    out.set(row, f, 1);
    for (int i = 0; i < rr.rank; ++i) {
      out.raw(row, rr.pivots[i]) = mod::neg(rr.reduced(i, f), p);
    }
    ++row;
  }
  return out;
}

// Scales `v` so that its first nonzero coordinate is 1.
inline Vector normalize_point(Vector v, std::uint32_t p) {
  for (std::uint32_t x : v) {
    if (x == 0) continue;
    const std::uint32_t s = mod::inv(x, p);
    for (auto& y : v) y = mod::mul(y, s, p);
    break;
  }
  return v;
}

// A subspace of GF(p)^r, i.e. a flat of PG(r-1, p) (rank = vector dimension).
class Flat {
 public:
  Flat() = default;

  static Flat full(int ambient, std::uint32_t p) {
    return Flat(ambient, FieldMatrix::identity(p, ambient));
  }
  static Flat zero(int ambient, std::uint32_t p) {
    return Flat(ambient, FieldMatrix(p, 0, ambient));
  }
  // Row space of `generators`.
  static Flat from_generators(const FieldMatrix& generators) {
    RrefResult rr = rref(generators);
    return Flat(generators.cols(), rr.reduced.select_rows(rr.rank));
  }

  int ambient_rank() const { return ambient_; }
  int rank() const { return basis_.rows(); }
  std::uint32_t modulus() const { return basis_.modulus(); }
  const FieldMatrix& basis() const { return basis_; }

  bool contains(const Vector& v) const {
    if (static_cast<int>(v.size()) != ambient_) {
      throw Error(ErrorCode::kAmbientMismatch, "vector length differs from ambient rank");
    }
    const std::uint32_t p = modulus();
    Vector w(v.begin(), v.end());
    for (auto& x : w) x %= p;
    // Reduce against the echelon basis; leading entries are 1.
    for (int i = 0; i < rank(); ++i) {
      int lead = 0;
      while (basis_(i, lead) == 0) ++lead;
      const std::uint32_t f = w[lead];
      if (f == 0) continue;
      for (int j = lead; j < ambient_; ++j) w[j] = mod::sub(w[j], mod::mul(f, basis_(i, j), p), p);
    }
    return std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; });
  }

  bool contains(const Flat& other) const {
    check_compatible(other);
    for (int i = 0; i < other.rank(); ++i) {
      if (!contains(other.basis_.row(i))) return false;
    }
    return true;
  }

  void check_compatible(const Flat& other) const {
    if (other.ambient_ != ambient_ || other.modulus() != modulus()) {
      throw Error(ErrorCode::kAmbientMismatch, "flats live in different spaces");
    }
  }

  friend bool operator==(const Flat&, const Flat&) = default;

 private:
  Flat(int ambient, FieldMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  int ambient_ = 0;
  FieldMatrix basis_;
};

// Span of the given columns of `m`, as a flat of GF(p)^{m.rows()}.
inline Flat span_of_columns(const FieldMatrix& m, ElementSet cols) {
  const std::vector<int> idx = elements(cols);
  for (int j : idx) {
    if (j >= m.cols()) throw Error(ErrorCode::kShapeMismatch, "column out of range");
  }
  if (idx.empty()) return Flat::zero(m.rows(), m.modulus());
  return Flat::from_generators(m.select_columns(idx).transpose());
}

inline Flat intersect_flats(const Flat& a, const Flat& b) {
  a.check_compatible(b);
  // U ∩ W = (U^⊥ + W^⊥)^⊥ for the standard (nondegenerate) bilinear form.
  const FieldMatrix perp = FieldMatrix::vstack(null_space(a.basis()), null_space(b.basis()));
  return Flat::from_generators(null_space(perp));
}

// Projective points of `f`, each scaled to have first nonzero coordinate 1,
// in lexicographic order. A rank-d flat yields (p^d - 1)/(p - 1) points.
inline std::vector<Vector> projective_points(const Flat& f) {
  const int d = f.rank();
  const int r = f.ambient_rank();
  const std::uint32_t p = f.modulus();
  std::vector<Vector> out;
  if (d == 0) return out;
  // Coefficient vectors whose first nonzero entry is 1.
  for (int lead = 0; lead < d; ++lead) {
    std::vector<std::uint32_t> coef(d, 0);
    coef[lead] = 1;
    const int free = d - lead - 1;
    std::uint64_t total = 1;
    for (int i = 0; i < free; ++i) total *= p;
    for (std::uint64_t t = 0; t < total; ++t) {
      std::uint64_t x = t;
      for (int i = d - 1; i > lead; --i) {
        coef[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      Vector v(r, 0);
      for (int i = 0; i < d; ++i) {
        if (coef[i] == 0) continue;
        for (int j = 0; j < r; ++j) v[j] = mod::add(v[j], mod::mul(coef[i], f.basis()(i, j), p), p);
      }
      out.push_back(normalize_point(std::move(v), p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline nlohmann::json matrix_to_json(const FieldMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) entries.push_back(m.row(i));
  return {{"p", m.modulus()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline FieldMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows) {
      throw Error(ErrorCode::kMalformed, "matrix entries do not match row count");
    }
    FieldMatrix m(p, rows, cols);
    for (int i = 0; i < rows; ++i) {
      const auto& row = entries[i];
      if (!row.is_array() || static_cast<int>(row.size()) != cols) {
        throw Error(ErrorCode::kMalformed, "matrix row length mismatch");
      }
      for (int c = 0; c < cols; ++c) m.set(i, c, row[c].get<std::int64_t>());
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformed, std::string("matrix: ") + e.what());
  }
}

}  // namespace matroid
