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

// Certificate construction. The builder sees the whole matroid (no call
// accounting); everything it claims is later replayed by the verifier.

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "matroid/certificate.hpp"
#include "matroid/error.hpp"
#include "matroid/gf.hpp"
#include "matroid/matroid.hpp"
#include "matroid/oracle.hpp"
#include "matroid/representation.hpp"
#include "matroid/subset.hpp"

namespace matroid {

struct MinorChoice {
  ElementSet contract = 0;
  ElementSet remove = 0;
};

inline bool minor_representable(const Matroid& m, ElementSet contract, ElementSet remove,
                                std::uint32_t p) {
  return is_representable(m.minor(contract, remove), p);
}

// Greedy descent to an excluded minor: repeatedly delete, else contract, the
// lowest-index element whose removal keeps the minor non-representable.
inline MinorChoice minimize_to_excluded_minor(const Matroid& m, std::uint32_t p) {
  require_prime(p);
  require_exhaustive(m.size());
  const Matroid tm = materialize(m);
  if (is_representable(tm, p)) {
    throw Error(ErrorCode::kNothingToCertify, "matroid is representable over GF(" + std::to_string(p) + ")");
  }
  MinorChoice mc;
  bool progress = true;
  while (progress) {
    progress = false;
    const ElementSet ground = tm.ground() & ~(mc.contract | mc.remove);
    for (int e : elements(ground)) {
      if (!minor_representable(tm, mc.contract, mc.remove | bit(e), p)) {
        mc.remove |= bit(e);
        progress = true;
        break;
      }
      if (!minor_representable(tm, mc.contract | bit(e), mc.remove, p)) {
        mc.contract |= bit(e);
        progress = true;
        break;
      }
    }
  }
  return mc;
}

struct CertifyOptions {
  bool minimize = true;
};

namespace detail {

// Rank table of the working matroid over the compact indexing of `ground`.
template <RankOracle O>
std::vector<std::uint8_t> working_table(LevelOracle<O>& lo, ElementSet ground) {
  const int n = popcount(ground);
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (ElementSet x = 0; x < t.size(); ++x) t[x] = static_cast<std::uint8_t>(lo.rank(expand(x, ground)));
  return t;
}

// Removal order, top-down: each step removes the element (and kind) that
// leaves the fewest representations below; ties go to the lowest index and
// to deletion. Returned bottom-up.
inline std::vector<ChainStep> choose_chain(const Matroid& tm, ElementSet contract, ElementSet remove,
                                           std::uint32_t p) {
  std::vector<ChainStep> top_down;
  ElementSet ground = tm.ground() & ~(contract | remove);
  while (ground != 0) {
    std::size_t best = SIZE_MAX;
    ChainStep pick;
    for (int e : elements(ground)) {
      for (bool c : {false, true}) {
        const std::size_t cnt = count_reps(
            tm.minor(contract | (c ? bit(e) : 0), remove | (c ? 0 : bit(e))), p, best);
        if (cnt < best) {
          best = cnt;
          pick = {e, c};
        }
      }
    }
    top_down.push_back(pick);
    ground &= ~bit(pick.element);
    if (pick.contract) {
      contract |= bit(pick.element);
    } else {
      remove |= bit(pick.element);
    }
  }
  return {top_down.rbegin(), top_down.rend()};
}

struct PendingPoint {
  Vector point;
  std::optional<FieldMatrix> rep;  // level representation when accepted
  ElementSet fault = 0;
  int rank = 0;
};

struct PendingEvidence {
  Evidence evidence;
  std::optional<FieldMatrix> member_rep;  // loop / coloop
  std::vector<PendingPoint> points;
};

}  // namespace detail

// Builds the evidence for one level. `prev` are the canonical
// representations of M_{i-1}; returns the level with R_i filled in.
inline Level build_level(const Matroid& tm, const Certificate& cert, int i,
                         const std::vector<FieldMatrix>& prev) {
  const std::uint32_t p = cert.p;
  const ChainStep step = cert.chain[i - 1];
  const int e = step.element;
  const bool dual = step.contract;
  const ElementSet ground = level_ground(cert, i);
  const ElementSet rest = ground & ~bit(e);
  LevelOracle<Matroid> lo(tm, ground, level_contract(cert, i), dual);
  const auto tn = detail::working_table(lo, ground);
  auto rank_n = [&](ElementSet x) { return static_cast<int>(tn[compress(x, ground)]); };

  Level level;
  level.status = {rank_n(bit(e)), rank_n(ground), rank_n(rest)};
  const int pos = position_in(ground, e);
  const bool loop = level.status.rank_element == 0;
  const bool coloop = level.status.rank_all != level.status.rank_rest;

  // Subsets of E_i - e in size-then-lex order, as original index sets.
  std::vector<ElementSet> rest_subsets;
  for (ElementSet s : subsets_by_size(rest)) rest_subsets.push_back(s);

  std::vector<detail::PendingEvidence> pending;
  for (const FieldMatrix& r : prev) {
    detail::PendingEvidence pe;
    const FieldMatrix w = working_rep(r, dual);
    if (dual) pe.evidence.dual_rep = w;
    if (loop) {
      pe.evidence.kind = EvidenceKind::kLoop;
      pe.member_rep = level_rep(w.with_column(pos, Vector(w.rows(), 0)), dual);
    } else if (coloop) {
      pe.evidence.kind = EvidenceKind::kColoop;
      Vector unit(w.rows() + 1, 0);
      unit.back() = 1;
      pe.member_rep = level_rep(w.with_zero_row().with_column(pos, unit), dual);
    } else {
      Flat k = Flat::full(w.rows(), p);
      while (k.rank() > 0) {
        bool cut = false;
        for (ElementSet s : rest_subsets) {
          if (rank_n(s | bit(e)) != rank_n(s)) continue;
          const Flat span = span_in(w, rest, s);
          if (span.contains(k)) continue;
          pe.evidence.chain.push_back({s, rank_n(s), rank_n(s | bit(e))});
          k = intersect_flats(k, span);
          cut = true;
          break;
        }
        if (!cut) break;
      }
      if (k.rank() == 0) {
        pe.evidence.kind = EvidenceKind::kFlatChain;
      } else {
        std::optional<ElementSet> case1;
        for (ElementSet s : rest_subsets) {
          if (rank_n(s | bit(e)) == rank_n(s)) continue;
          if (span_in(w, rest, s).contains(k)) {
            case1 = s;
            break;
          }
        }
        if (case1) {
          pe.evidence.kind = EvidenceKind::kCase1;
          pe.evidence.witness = {*case1, rank_n(*case1), rank_n(*case1 | bit(e))};
        } else {
          pe.evidence.kind = EvidenceKind::kPointFaults;
          const std::vector<ElementSet> with_e = [&] {
            std::vector<ElementSet> out;
            for (ElementSet s : rest_subsets) out.push_back(s | bit(e));
            std::stable_sort(out.begin(), out.end(),
                             [](ElementSet a, ElementSet b) { return popcount(a) < popcount(b); });
            return out;
          }();
          for (auto& x : projective_points(k)) {
            detail::PendingPoint pp;
            const FieldMatrix ext = w.with_column(pos, x);
            pp.point = std::move(x);
            std::optional<ElementSet> fault;
            for (ElementSet s : with_e) {
              if (column_rank(ext, compress(s, ground)) != rank_n(s)) {
                fault = s;
                break;
              }
            }
            if (fault) {
              pp.fault = *fault;
              pp.rank = rank_n(*fault);
            } else {
              pp.rep = level_rep(ext, dual);
            }
            pe.points.push_back(std::move(pp));
          }
        }
      }
    }
    pending.push_back(std::move(pe));
  }

  std::set<FieldMatrix> reps;
  for (const auto& pe : pending) {
    if (pe.member_rep) reps.insert(*pe.member_rep);
    for (const auto& pp : pe.points)
      if (pp.rep) reps.insert(*pp.rep);
  }
  level.reps.assign(reps.begin(), reps.end());
  auto index_of = [&](const FieldMatrix& m) {
    return static_cast<int>(std::find(level.reps.begin(), level.reps.end(), m) - level.reps.begin());
  };
  for (auto& pe : pending) {
    if (pe.member_rep) pe.evidence.member = index_of(*pe.member_rep);
    for (auto& pp : pe.points) {
      PointEntry entry;
      entry.point = pp.point;
      if (pp.rep) {
        entry.member = index_of(*pp.rep);
      } else {
        entry.fault = pp.fault;
        entry.rank = pp.rank;
      }
      pe.evidence.points.push_back(std::move(entry));
    }
    level.evidence.push_back(std::move(pe.evidence));
  }
  return level;
}

inline Certificate build_certificate(const Matroid& m, std::uint32_t p, CertifyOptions opts = {}) {
  require_prime(p);
  require_exhaustive(m.size());
  const Matroid tm = materialize(m);
  Certificate cert;
  cert.p = p;
  cert.labels = m.labels();
  if (opts.minimize) {
    const MinorChoice mc = minimize_to_excluded_minor(tm, p);
    cert.contract = mc.contract;
    cert.remove = mc.remove;
  } else if (is_representable(tm, p)) {
    throw Error(ErrorCode::kNothingToCertify, "matroid is representable over GF(" + std::to_string(p) + ")");
  }
  cert.chain = detail::choose_chain(tm, cert.contract, cert.remove, p);
  std::vector<FieldMatrix> prev{FieldMatrix(p, 0, 0)};
  for (int i = 1; i <= static_cast<int>(cert.chain.size()); ++i) {
    Level level = build_level(tm, cert, i, prev);
    prev = level.reps;
    cert.levels.push_back(std::move(level));
  }
  return cert;
}

}  // namespace matroid
