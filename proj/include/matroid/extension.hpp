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

// Single-element extensions through modular cuts. A modular cut is a set of
// flats closed upwards and under intersections of modular pairs; extending
// by z puts z in cl(X) exactly when cl(X) lies in the cut. The empty cut adds
// a coloop and the cut of all flats adds a loop.

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "matroid/error.hpp"
#include "matroid/matroid.hpp"
#include "matroid/oracle.hpp"
#include "matroid/structure.hpp"
#include "matroid/subset.hpp"

namespace matroid {

inline constexpr int kMaxExtensionElements = 9;

inline ElementSet closure_in_table(std::span<const std::uint8_t> t, int n, ElementSet x) {
  ElementSet cl = x;
  for (int e = 0; e < n; ++e) {
    if (!contains(x, e) && t[x | bit(e)] == t[x]) cl |= bit(e);
  }
  return cl;
}

// Flats of a rank table with the lattice data modular-cut closure needs.
class FlatLattice {
 public:
  FlatLattice(std::span<const std::uint8_t> t, int n) : t_(t) {
    flats_ = flats_from_table(t, n);
    for (std::size_t i = 0; i < flats_.size(); ++i) index_[flats_[i]] = static_cast<int>(i);
    supersets_.resize(flats_.size());
    for (std::size_t i = 0; i < flats_.size(); ++i)
      for (std::size_t j = 0; j < flats_.size(); ++j)
        if (i != j && is_subset(flats_[i], flats_[j])) supersets_[i].push_back(static_cast<int>(j));
  }

  const std::vector<ElementSet>& flats() const { return flats_; }
  int index(ElementSet f) const { return index_.at(f); }
  std::size_t size() const { return flats_.size(); }

  bool modular_pair(int i, int j) const {
    const ElementSet a = flats_[i], b = flats_[j];
    return t_[a] + t_[b] == t_[a & b] + t_[a | b];
  }

  // Smallest modular cut containing the flats flagged in `seed`.
  std::vector<bool> close(const std::vector<bool>& seed) const {
    std::vector<bool> cut(seed.size(), false);
    std::vector<int> members;
    std::vector<int> work;
    auto add = [&](int i) {
      if (!cut[i]) {
        cut[i] = true;
        work.push_back(i);
      }
    };
    for (std::size_t i = 0; i < seed.size(); ++i) {
      if (seed[i]) add(static_cast<int>(i));
    }
    while (!work.empty()) {
      const int i = work.back();
      work.pop_back();
      for (int j : supersets_[i]) add(j);
      for (int j : members) {
        if (modular_pair(i, j)) add(index_.at(flats_[i] & flats_[j]));
      }
      members.push_back(i);
    }
    return cut;
  }

  bool is_modular_cut(const std::vector<bool>& cut) const { return close(cut) == cut; }

 private:
  std::span<const std::uint8_t> t_;
  std::vector<ElementSet> flats_;
  std::unordered_map<ElementSet, int> index_;
  std::vector<std::vector<int>> supersets_;
};

struct ModularCut {
  std::vector<ElementSet> flats;  // sorted by size, then lexicographically

  friend bool operator==(const ModularCut&, const ModularCut&) = default;
};

// Every modular cut, found by closing known cuts under one more flat. Any cut
// C' strictly above C contains a flat that is maximal outside C, so only
// those flats need to be tried.
inline std::vector<ModularCut> modular_cuts_from_table(std::span<const std::uint8_t> t, int n,
                                                       int limit = kMaxExtensionElements) {
  require_exhaustive(n, limit);
  const FlatLattice lat(t, n);
  const std::size_t k = lat.size();
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue{std::vector<bool>(k, false)};
  seen.insert(queue.front());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::vector<bool> cut = queue[q];
    for (std::size_t i = 0; i < k; ++i) {
      if (cut[i]) continue;
      bool maximal = true;
      for (std::size_t j = 0; j < k && maximal; ++j) {
        if (j != i && !cut[j] && is_subset(lat.flats()[i], lat.flats()[j])) maximal = false;
      }
      if (!maximal) continue;
      std::vector<bool> next = cut;
      next[i] = true;
      next = lat.close(std::move(next));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<ModularCut> out;
  for (const auto& cut : seen) {
    ModularCut mc;
    for (std::size_t i = 0; i < k; ++i) {
      if (cut[i]) mc.flats.push_back(lat.flats()[i]);
    }
    out.push_back(std::move(mc));
  }
  std::sort(out.begin(), out.end(), [](const ModularCut& a, const ModularCut& b) {
    if (a.flats.size() != b.flats.size()) return a.flats.size() < b.flats.size();
    return a.flats < b.flats;
  });
  return out;
}

template <RankOracle O>
std::vector<ModularCut> modular_cuts(const O& o) {
  require_exhaustive(o.size(), kMaxExtensionElements);
  const auto t = rank_table(o);
  return modular_cuts_from_table(t, o.size());
}

// Rank table of the extension by one element (index n) through `cut`.
inline std::vector<std::uint8_t> extend_table(std::span<const std::uint8_t> t, int n,
                                              const ModularCut& cut) {
  const std::set<ElementSet> in(cut.flats.begin(), cut.flats.end());
  const std::size_t half = std::size_t{1} << n;
  std::vector<std::uint8_t> out(half * 2);
  for (ElementSet x = 0; x < half; ++x) {
    out[x] = t[x];
    out[x | bit(n)] = static_cast<std::uint8_t>(t[x] + (in.count(closure_in_table(t, n, x)) ? 0 : 1));
  }
  return out;
}

inline Matroid extension_by_cut(const Matroid& m, const ModularCut& cut, const std::string& label) {
  const auto t = rank_table(m);
  std::vector<std::string> labels = m.labels();
  labels.push_back(label);
  return Matroid::rank_table_unchecked(std::move(labels), extend_table(t, m.size(), cut));
}

inline std::string fresh_label(const std::vector<std::string>& labels, const std::string& stem = "z") {
  for (int i = 0;; ++i) {
    std::string cand = i == 0 ? stem : stem + std::to_string(i);
    if (std::find(labels.begin(), labels.end(), cand) == labels.end()) return cand;
  }
}

// One extension per modular cut; the new element gets a label not yet in use.
inline std::vector<Matroid> single_element_extensions(const Matroid& m, std::string label = "") {
  if (label.empty()) label = fresh_label(m.labels());
  std::vector<Matroid> out;
  for (const auto& cut : modular_cuts(m)) out.push_back(extension_by_cut(m, cut, label));
  return out;
}

}  // namespace matroid
