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

// Tipless spikes. A rank-n spike has legs {a_i, b_i}, i = 1..n, and is
// determined by its family of dependent transversals. Elements are indexed
// a_1, b_1, a_2, b_2, ... (a_i = 2i, b_i = 2i + 1, zero-based legs) and a
// transversal is encoded as an n-bit code whose bit i is set when it picks
// b_i. Two dependent transversals never differ on exactly one leg.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroid/error.hpp"
#include "matroid/gf.hpp"
#include "matroid/subset.hpp"

namespace matroid {

using Transversal = std::uint32_t;

inline constexpr int kMaxSpikeLegs = 32;

inline std::string transversal_to_string(Transversal t, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i) {
    if ((t >> i) & 1U) s[i] = '1';
  }
  return s;
}

inline Transversal transversal_from_string(const std::string& s) {
  if (s.empty() || s.size() > kMaxSpikeLegs) {
    throw Error(ErrorCode::kInvalidSpike, "bad transversal code '" + s + "'");
  }
  Transversal t = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      t |= Transversal{1} << i;
    } else if (s[i] != '0') {
      throw Error(ErrorCode::kInvalidSpike, "bad transversal code '" + s + "'");
    }
  }
  return t;
}

class Spike {
 public:
  Spike(int legs, std::vector<Transversal> dependent, std::vector<std::string> labels = {})
      : n_(legs), dependent_(std::move(dependent)), labels_(std::move(labels)) {
    if (n_ < 3 || n_ > kMaxSpikeLegs) {
      throw Error(ErrorCode::kInvalidSpike, "spikes need between 3 and 32 legs");
    }
    if (labels_.empty()) labels_ = default_labels(n_);
    if (static_cast<int>(labels_.size()) != 2 * n_) {
      throw Error(ErrorCode::kInvalidSpike, "expected one label per leg element");
    }
    std::sort(dependent_.begin(), dependent_.end());
    dependent_.erase(std::unique(dependent_.begin(), dependent_.end()), dependent_.end());
    const Transversal limit = n_ == 32 ? ~Transversal{0} : (Transversal{1} << n_) - 1;
    for (Transversal t : dependent_) {
      if (t > limit) throw Error(ErrorCode::kInvalidSpike, "transversal code out of range");
    }
    for (std::size_t i = 0; i < dependent_.size(); ++i) {
      for (std::size_t j = i + 1; j < dependent_.size(); ++j) {
        if (std::popcount(dependent_[i] ^ dependent_[j]) == 1) {
          throw Error(ErrorCode::kInvalidSpike,
                      "dependent transversals " + transversal_to_string(dependent_[i], n_) +
                          " and " + transversal_to_string(dependent_[j], n_) +
                          " differ on one leg");
        }
      }
    }
  }

  static std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) {
      out.push_back("a" + std::to_string(i));
      out.push_back("b" + std::to_string(i));
    }
    return out;
  }

  int legs() const { return n_; }
  int size() const { return 2 * n_; }
  const std::vector<Transversal>& dependent() const { return dependent_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_dependent(Transversal t) const {
    return std::binary_search(dependent_.begin(), dependent_.end(), t);
  }

  static ElementSet transversal_set(Transversal t, int n) {
    ElementSet x = 0;
    for (int i = 0; i < n; ++i) x |= bit(2 * i + ((t >> i) & 1U));
    return x;
  }

  // Code of `x` when it meets every leg exactly once.
  static std::optional<Transversal> transversal_code(ElementSet x, int n) {
    Transversal t = 0;
    for (int i = 0; i < n; ++i) {
      const int leg = static_cast<int>((x >> (2 * i)) & 3U);
      if (leg == 1) continue;
      if (leg != 2) return std::nullopt;
      t |= Transversal{1} << i;
    }
    return t;
  }

  // Rank of `x`: with F full legs and P legs met once, min(n, F + P + 1)
  // when F >= 1; otherwise |x|, except that a dependent transversal has
  // rank n - 1.
  int rank(ElementSet x) const {
    int full = 0;
    int partial = 0;
    for (int i = 0; i < n_; ++i) {
      const int c = std::popcount((x >> (2 * i)) & ElementSet{3});
      if (c == 2) {
        ++full;
      } else if (c == 1) {
        ++partial;
      }
    }
    if (full >= 1) return std::min(n_, full + partial + 1);
    if (partial < n_) return partial;
    return is_dependent(*transversal_code(x, n_)) ? n_ - 1 : n_;
  }

  friend bool operator==(const Spike&, const Spike&) = default;

 private:
  int n_;
  std::vector<Transversal> dependent_;
  std::vector<std::string> labels_;
};

inline int spike_rank(const Spike& s, ElementSet x) { return s.rank(x); }

struct RepresentableSpike {
  Spike spike;
  FieldMatrix matrix;  // n x 2n, columns in spike element order
};

// Spike represented by the n x 2n matrix whose a_i column is the unit vector
// e_i and whose b_i column is the all-ones vector plus alpha_i^{-1} e_i.
// The transversal picking b_i exactly for i in S is dependent iff the sum of
// alpha_i over S is -1.
inline RepresentableSpike representable_spike(std::uint32_t p, const std::vector<std::int64_t>& alphas) {
  require_prime(p);
  const int n = static_cast<int>(alphas.size());
  if (n < 3 || n > 20) throw Error(ErrorCode::kInvalidSpike, "need 3..20 legs");
  std::vector<std::uint32_t> a(n);
  for (int i = 0; i < n; ++i) {
    a[i] = mod::reduce(alphas[i], p);
    if (a[i] == 0) {
      throw Error(ErrorCode::kInvalidAlpha, "alpha_" + std::to_string(i + 1) + " is zero");
    }
  }
  FieldMatrix m(p, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m.set(i, 2 * i, 1);
    for (int r = 0; r < n; ++r) m.set(r, 2 * i + 1, 1);
    m.set(i, 2 * i + 1, 1 + mod::inv(a[i], p));
  }
  std::vector<Transversal> dep;
  for (Transversal s = 0; s < (Transversal{1} << n); ++s) {
    std::uint32_t sum = 0;
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1U) sum = mod::add(sum, a[i], p);
    }
    if (sum == p - 1) dep.push_back(s);
  }
  return {Spike(n, std::move(dep)), std::move(m)};
}

// Removes `t` from the dependent family, turning it into a basis.
inline Spike relax(const Spike& s, Transversal t) {
  if (!s.is_dependent(t)) {
    throw Error(ErrorCode::kNotDependent,
                transversal_to_string(t, s.legs()) + " is not a dependent transversal");
  }
  std::vector<Transversal> dep;
  for (Transversal d : s.dependent()) {
    if (d != t) dep.push_back(d);
  }
  return Spike(s.legs(), std::move(dep), s.labels());
}

// Adds `t` to the dependent family; `t` must differ from every dependent
// transversal on at least two legs.
inline Spike tighten(const Spike& s, Transversal t) {
  for (Transversal d : s.dependent()) {
    if (std::popcount(d ^ t) <= 1) {
      throw Error(ErrorCode::kTransversalTooClose,
                  transversal_to_string(t, s.legs()) + " is within one leg of " +
                      transversal_to_string(d, s.legs()));
    }
  }
  std::vector<Transversal> dep = s.dependent();
  dep.push_back(t);
  return Spike(s.legs(), std::move(dep), s.labels());
}

struct SpikeCensus {
  int legs = 0;
  std::uint64_t dependent_count = 0;  // |T(M)|
  std::uint64_t far_count = 0;        // transversals at distance > 1 from all of T(M)
  std::uint64_t transversals = 0;     // 2^n
  bool bound_ok = false;              // (n+1)(|T| + |T'|) >= 2^n
  bool weighted_bound_ok = false;     // (n+1)|T| + |T'| >= 2^n
  bool sqrt_bound_ok = false;         // (|T| + |T'|)^2 >= 2^n
};

// Counts the single-set perturbations of `s`: relaxing a dependent
// transversal or tightening one that is far from every dependent one.
inline SpikeCensus lower_bound_census(const Spike& s) {
  const int n = s.legs();
  if (n > 20) throw Error(ErrorCode::kExhaustiveBoundExceeded, "census needs n <= 20");
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> dep(total, false);
  for (Transversal t : s.dependent()) dep[t] = true;
  SpikeCensus c;
  c.legs = n;
  c.transversals = total;
  c.dependent_count = s.dependent().size();
  for (std::uint64_t t = 0; t < total; ++t) {
    if (dep[t]) continue;
    bool far = true;
    for (int i = 0; i < n && far; ++i) far = !dep[t ^ (std::uint64_t{1} << i)];
    if (far) ++c.far_count;
  }
  const std::uint64_t sum = c.dependent_count + c.far_count;
  c.bound_ok = (static_cast<std::uint64_t>(n) + 1) * sum >= total;
  c.weighted_bound_ok = (static_cast<std::uint64_t>(n) + 1) * c.dependent_count + c.far_count >= total;
  c.sqrt_bound_ok = sum * sum >= total;
  return c;
}

struct SpikeRankThresholds {
  std::uint64_t lower_bound_rank;  // q^3: ranks above this get the 2^{n/2} bound
  std::uint64_t one_set_limit;     // (q-1)^3 + 1: max n with two spikes one set apart
};

inline SpikeRankThresholds spike_thresholds(std::uint64_t q) {
  return {q * q * q, (q - 1) * (q - 1) * (q - 1) + 1};
}

}  // namespace matroid
