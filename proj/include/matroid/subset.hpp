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

#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "matroid/error.hpp"

namespace matroid {

// A subset of a ground set of at most 64 elements; bit i is element i.
using ElementSet = std::uint64_t;

inline constexpr int kMaxElements = 64;

constexpr ElementSet bit(int i) { return ElementSet{1} << i; }

constexpr ElementSet full_set(int n) {
  return n >= kMaxElements ? ~ElementSet{0} : bit(n) - 1;
}

constexpr int popcount(ElementSet x) { return std::popcount(x); }

constexpr bool contains(ElementSet x, int i) { return (x >> i) & 1U; }

constexpr bool is_subset(ElementSet a, ElementSet b) { return (a & ~b) == 0; }

inline std::vector<int> elements(ElementSet x) {
  std::vector<int> out;
  out.reserve(popcount(x));
  while (x != 0) {
    out.push_back(std::countr_zero(x));
    x &= x - 1;
  }
  return out;
}

// Maps bit k of `compact` onto the k-th smallest element of `ground`.
inline ElementSet expand(ElementSet compact, ElementSet ground) {
  ElementSet out = 0;
  int k = 0;
  while (ground != 0) {
    const int e = std::countr_zero(ground);
    if (contains(compact, k)) out |= bit(e);
    ground &= ground - 1;
    ++k;
  }
  return out;
}

// Inverse of expand: positions of the elements of `x` within `ground`.
inline ElementSet compress(ElementSet x, ElementSet ground) {
  ElementSet out = 0;
  int k = 0;
  while (ground != 0) {
    const int e = std::countr_zero(ground);
    if (contains(x, e)) out |= bit(k);
    ground &= ground - 1;
    ++k;
  }
  return out;
}

// All subsets of `ground`, ordered by size and then lexicographically by
// their sorted element lists.
inline std::vector<ElementSet> subsets_by_size(ElementSet ground) {
  const std::vector<int> elems = elements(ground);
  const int n = static_cast<int>(elems.size());
  std::vector<ElementSet> out;
  out.reserve(std::size_t{1} << n);
  for (int k = 0; k <= n; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      ElementSet s = 0;
      for (int i : idx) s |= bit(elems[i]);
      out.push_back(s);
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

// Upper bound on ground-set size for routines that scan all subsets.
// MATROID_MAX_E overrides the default of 16.
inline int exhaustive_bound() {
  if (const char* env = std::getenv("MATROID_MAX_E")) {
    const int v = std::atoi(env);
    if (v > 0 && v < kMaxElements) return v;
  }
  return 16;
}

inline void require_exhaustive(int n, int limit = exhaustive_bound()) {
  if (n > limit) {
    throw Error(ErrorCode::kExhaustiveBoundExceeded,
                "ground set of size " + std::to_string(n) +
                    " exceeds exhaustive bound " + std::to_string(limit));
  }
}

}  // namespace matroid
