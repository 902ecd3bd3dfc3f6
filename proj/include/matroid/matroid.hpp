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

// Immutable matroid descriptions. A `Matroid` is a cheap-to-copy handle on
// one of several descriptions (linear, uniform, spike, explicit rank table,
// minor, dual) and answers rank queries on subsets of its ground set. It does
// not count queries; wrap it in a `CountedOracle` for that.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "matroid/error.hpp"
#include "matroid/gf.hpp"
#include "matroid/spike.hpp"
#include "matroid/subset.hpp"

namespace matroid {

enum class MatroidKind { kLinear, kUniform, kSpike, kRankTable, kMinor, kDual };

struct MatroidNode;

struct RankViolation {
  ElementSet first = 0;
  ElementSet second = 0;
  std::string rule;
};

std::optional<RankViolation> find_rank_violation(std::span<const std::uint8_t> ranks, int n);

class Matroid {
 public:
  Matroid();

  static Matroid linear(FieldMatrix matrix, std::vector<std::string> labels = {});
  static Matroid uniform(int rank, int size, std::vector<std::string> labels = {});
  static Matroid spike(Spike s);
  // `ranks[X]` is the rank of the subset with bitmask X; validated eagerly.
  static Matroid rank_table(std::vector<std::string> labels, std::vector<std::uint8_t> ranks);
  static Matroid rank_table_unchecked(std::vector<std::string> labels,
                                      std::vector<std::uint8_t> ranks);

  // M \ remove / contract, with the surviving elements reindexed in order.
  Matroid minor(ElementSet contract, ElementSet remove) const;
  Matroid dual() const;

  int size() const { return static_cast<int>(labels_->size()); }
  ElementSet ground() const { return full_set(size()); }
  const std::vector<std::string>& labels() const { return *labels_; }
  MatroidKind kind() const;
  const MatroidNode& node() const { return *node_; }

  int rank(ElementSet x) const;
  int rank() const { return full_rank_; }

  int index_of(const std::string& label) const;
  ElementSet set_of(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(ElementSet x) const;

 private:
  Matroid(std::shared_ptr<const MatroidNode> node, std::vector<std::string> labels);

  std::shared_ptr<const MatroidNode> node_;
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::shared_ptr<const std::unordered_map<std::string, int>> index_;
  int full_rank_ = 0;
};

struct LinearNode {
  FieldMatrix matrix;
};
struct UniformNode {
  int rank;
  int size;
};
struct SpikeNode {
  Spike spike;
};
struct RankTableNode {
  std::vector<std::uint8_t> ranks;
};
struct MinorNode {
  Matroid base;
  ElementSet contract;
  ElementSet remove;
  ElementSet kept;  // surviving elements, in base indexing
  int contract_rank;
};
struct DualNode {
  Matroid base;
};

struct MatroidNode {
  std::variant<LinearNode, UniformNode, SpikeNode, RankTableNode, MinorNode, DualNode> value;
};

inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

inline Matroid::Matroid()
    : Matroid(std::make_shared<MatroidNode>(MatroidNode{UniformNode{0, 0}}), {}) {}

inline Matroid::Matroid(std::shared_ptr<const MatroidNode> node, std::vector<std::string> labels)
    : node_(std::move(node)) {
  if (static_cast<int>(labels.size()) > kMaxElements) {
    throw Error(ErrorCode::kExhaustiveBoundExceeded, "more than 64 elements");
  }
  auto index = std::make_shared<std::unordered_map<std::string, int>>();
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (!index->emplace(labels[i], i).second) {
      throw Error(ErrorCode::kGroundSetMismatch, "duplicate label '" + labels[i] + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  index_ = std::move(index);
  full_rank_ = rank(ground());
}

inline Matroid Matroid::linear(FieldMatrix matrix, std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(matrix.cols());
  if (static_cast<int>(labels.size()) != matrix.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "one label per column required");
  }
  return Matroid(std::make_shared<MatroidNode>(MatroidNode{LinearNode{std::move(matrix)}}),
                 std::move(labels));
}

inline Matroid Matroid::uniform(int rank, int size, std::vector<std::string> labels) {
  if (rank < 0 || rank > size) {
    throw Error(ErrorCode::kShapeMismatch, "uniform matroid needs 0 <= r <= n");
  }
  if (labels.empty()) labels = default_labels(size);
  if (static_cast<int>(labels.size()) != size) {
    throw Error(ErrorCode::kShapeMismatch, "one label per element required");
  }
  return Matroid(std::make_shared<MatroidNode>(MatroidNode{UniformNode{rank, size}}),
                 std::move(labels));
}

inline Matroid Matroid::spike(Spike s) {
  std::vector<std::string> labels = s.labels();
  return Matroid(std::make_shared<MatroidNode>(MatroidNode{SpikeNode{std::move(s)}}),
                 std::move(labels));
}

inline Matroid Matroid::rank_table_unchecked(std::vector<std::string> labels,
                                             std::vector<std::uint8_t> ranks) {
  const int n = static_cast<int>(labels.size());
  require_exhaustive(n, 30);
  if (ranks.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kInvalidRankTable, "rank table must list every subset");
  }
  return Matroid(std::make_shared<MatroidNode>(MatroidNode{RankTableNode{std::move(ranks)}}),
                 std::move(labels));
}

inline Matroid Matroid::rank_table(std::vector<std::string> labels, std::vector<std::uint8_t> ranks) {
  const int n = static_cast<int>(labels.size());
  require_exhaustive(n);
  if (ranks.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kInvalidRankTable, "rank table must list every subset");
  }
  if (auto v = find_rank_violation(ranks, n)) {
    throw Error(ErrorCode::kInvalidRankTable, "violates " + v->rule);
  }
  return rank_table_unchecked(std::move(labels), std::move(ranks));
}

inline Matroid Matroid::minor(ElementSet contract, ElementSet remove) const {
  if ((contract & remove) != 0 || !is_subset(contract | remove, ground())) {
    throw Error(ErrorCode::kInvalidMinorQuery, "contract and delete sets must be disjoint subsets");
  }
  const ElementSet kept = ground() & ~(contract | remove);
  std::vector<std::string> labels;
  for (int e : elements(kept)) labels.push_back((*labels_)[e]);
  return Matroid(std::make_shared<MatroidNode>(
                     MatroidNode{MinorNode{*this, contract, remove, kept, rank(contract)}}),
                 std::move(labels));
}

inline Matroid Matroid::dual() const {
  return Matroid(std::make_shared<MatroidNode>(MatroidNode{DualNode{*this}}), *labels_);
}

inline MatroidKind Matroid::kind() const {
  return static_cast<MatroidKind>(node_->value.index());
}

inline int Matroid::rank(ElementSet x) const {
  return std::visit(
      [&](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LinearNode>) {
          return column_rank(n.matrix, x);
        } else if constexpr (std::is_same_v<T, UniformNode>) {
          return std::min(popcount(x), n.rank);
        } else if constexpr (std::is_same_v<T, SpikeNode>) {
          return n.spike.rank(x);
        } else if constexpr (std::is_same_v<T, RankTableNode>) {
          return n.ranks[x];
        } else if constexpr (std::is_same_v<T, MinorNode>) {
          return n.base.rank(expand(x, n.kept) | n.contract) - n.contract_rank;
        } else {
          const ElementSet g = n.base.ground();
          return popcount(x) + n.base.rank(g & ~x) - n.base.rank();
        }
      },
      node_->value);
}

inline int Matroid::index_of(const std::string& label) const {
  const auto it = index_->find(label);
  if (it == index_->end()) {
    throw Error(ErrorCode::kUnknownElement, "no element labelled '" + label + "'");
  }
  return it->second;
}

inline ElementSet Matroid::set_of(std::span<const std::string> labels) const {
  ElementSet x = 0;
  for (const auto& l : labels) x |= bit(index_of(l));
  return x;
}

inline std::vector<std::string> Matroid::labels_of(ElementSet x) const {
  std::vector<std::string> out;
  for (int e : elements(x)) out.push_back((*labels_)[e]);
  return out;
}

// Checks normalization, unit increase (which covers monotonicity and
// r(X) <= |X|) and local submodularity, which together are equivalent to the
// rank axioms.
inline std::optional<RankViolation> find_rank_violation(std::span<const std::uint8_t> ranks, int n) {
  if (ranks[0] != 0) return RankViolation{0, 0, "r(empty) = 0"};
  const ElementSet total = full_set(n);
  for (ElementSet x = 0; x <= total; ++x) {
    for (int e = 0; e < n; ++e) {
      if (contains(x, e)) continue;
      const int d = ranks[x | bit(e)] - ranks[x];
      if (d < 0 || d > 1) return RankViolation{x, x | bit(e), "unit increase"};
    }
    for (int e = 0; e < n; ++e) {
      if (contains(x, e)) continue;
      for (int f = e + 1; f < n; ++f) {
        if (contains(x, f)) continue;
        if (ranks[x | bit(e)] + ranks[x | bit(f)] < ranks[x | bit(e) | bit(f)] + ranks[x]) {
          return RankViolation{x | bit(e), x | bit(f), "submodularity"};
        }
      }
    }
    if (x == total) break;
  }
  return std::nullopt;
}

}  // namespace matroid
