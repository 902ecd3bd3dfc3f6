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

// Rank oracles with exact call accounting.

#pragma once

#include <atomic>
#include <concepts>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/error.hpp"
#include "matroid/matroid.hpp"
#include "matroid/subset.hpp"

namespace matroid {

// Anything answering rank queries on subsets of {0, ..., size() - 1}.
template <class O>
concept RankOracle = requires(const O& o, ElementSet x) {
  { o.size() } -> std::convertible_to<int>;
  { o.rank(x) } -> std::convertible_to<int>;
};

// Wraps a matroid and counts every rank query. The counter is atomic so one
// oracle may be shared between threads; the optional log is mutex-guarded.
class CountedOracle {
 public:
  explicit CountedOracle(Matroid m, bool logging = false)
      : matroid_(std::move(m)), logging_(logging) {}

  CountedOracle(const CountedOracle&) = delete;
  CountedOracle& operator=(const CountedOracle&) = delete;

  int size() const { return matroid_.size(); }
  const std::vector<std::string>& labels() const { return matroid_.labels(); }
  const Matroid& matroid() const { return matroid_; }

  int rank(ElementSet x) const {
    if (!is_subset(x, matroid_.ground())) {
      throw Error(ErrorCode::kUnknownElement, "query outside the ground set");
    }
    calls_.fetch_add(1, std::memory_order_relaxed);
    const int r = matroid_.rank(x);
    if (logging_) {
      std::lock_guard<std::mutex> lock(mu_);
      log_.emplace_back(x, r);
    }
    return r;
  }

  int rank(std::span<const std::string> labels) const { return rank(matroid_.set_of(labels)); }

  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

  std::vector<std::pair<ElementSet, int>> log() const {
    std::lock_guard<std::mutex> lock(mu_);
    return log_;
  }

 private:
  Matroid matroid_;
  bool logging_;
  mutable std::atomic<std::uint64_t> calls_{0};
  mutable std::mutex mu_;
  mutable std::vector<std::pair<ElementSet, int>> log_;
};

// Rank queries on the minor base \ remove / contract, phrased in the base's
// element indexing. Each query costs one base call; r(contract) is fetched
// once on first use (and not at all when contract is empty).
template <RankOracle O>
class MinorQuery {
 public:
  MinorQuery(const O& base, ElementSet contract, ElementSet remove)
      : base_(&base), contract_(contract), remove_(remove) {
    const ElementSet g = full_set(base.size());
    if ((contract & remove) != 0 || !is_subset(contract | remove, g)) {
      throw Error(ErrorCode::kInvalidMinorQuery, "contract and delete sets must be disjoint");
    }
    ground_ = g & ~(contract | remove);
  }

  ElementSet ground() const { return ground_; }

  int contract_rank() {
    if (!contract_rank_) contract_rank_ = contract_ == 0 ? 0 : base_->rank(contract_);
    return *contract_rank_;
  }

  int rank(ElementSet x) {
    if (!is_subset(x, ground_)) {
      throw Error(ErrorCode::kInvalidMinorQuery, "query meets the contracted or deleted set");
    }
    const int rc = contract_rank();
    return base_->rank(x | contract_) - rc;
  }

 private:
  const O* base_;
  ElementSet contract_;
  ElementSet remove_;
  ElementSet ground_ = 0;
  std::optional<int> contract_rank_;
};

template <RankOracle O>
int minor_rank(const O& base, ElementSet contract, ElementSet remove, ElementSet x) {
  MinorQuery<O> q(base, contract, remove);
  return q.rank(x);
}

// |X| + r(E - X) - r(E): two oracle calls.
template <RankOracle O>
int dual_rank(const O& o, ElementSet x) {
  const ElementSet g = full_set(o.size());
  if (!is_subset(x, g)) throw Error(ErrorCode::kUnknownElement, "query outside the ground set");
  return popcount(x) + o.rank(g & ~x) - o.rank(g);
}

// Ranks of every subset; costs 2^n calls.
template <RankOracle O>
std::vector<std::uint8_t> rank_table(const O& o) {
  const int n = o.size();
  require_exhaustive(n);
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (ElementSet x = 0; x < t.size(); ++x) t[x] = static_cast<std::uint8_t>(o.rank(x));
  return t;
}

// Table-backed copy of `m`, for routines that query every subset many times.
inline Matroid materialize(const Matroid& m) {
  if (m.kind() == MatroidKind::kRankTable) return m;
  return Matroid::rank_table_unchecked(m.labels(), rank_table(m));
}

}  // namespace matroid
