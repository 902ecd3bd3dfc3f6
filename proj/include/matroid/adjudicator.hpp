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

// Certificate verification against a counted oracle of the original
// matroid. Rank values come only from replayed attestations; everything
// else is linear algebra over GF(p). The candidate points of a point-faults
// block are enumerated by the verifier itself, so the claimant cannot leave
// one out.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "matroid/certificate.hpp"
#include "matroid/error.hpp"
#include "matroid/gf.hpp"
#include "matroid/oracle.hpp"
#include "matroid/representation.hpp"
#include "matroid/subset.hpp"

namespace matroid {

struct LevelReport {
  int level = 0;
  std::string element;
  bool contract = false;
  std::uint64_t calls = 0;
  std::size_t reps = 0;
  std::size_t candidates = 0;  // projective points checked in point-faults blocks
};

struct VerificationReport {
  bool accepted = false;
  std::uint64_t oracle_calls = 0;
  std::vector<LevelReport> levels;
  std::string reason;
};

inline nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"level", l.level},
                      {"element", l.element},
                      {"kind", l.contract ? "contract" : "delete"},
                      {"calls", l.calls},
                      {"reps", l.reps},
                      {"candidates", l.candidates}});
  }
  nlohmann::json j = {{"v", 1}, {"accepted", r.accepted}, {"oracle_calls", r.oracle_calls}, {"levels", levels}};
  if (!r.accepted) j["reason"] = r.reason;
  return j;
}

// K_m of a general evidence block: the full space cut by the spans of the
// chain sets in the working representation `w` (columns ordered like `rest`).
inline Flat evidence_final_flat(const FieldMatrix& w, ElementSet rest, const Evidence& ev) {
  Flat k = Flat::full(w.rows(), w.modulus());
  for (const auto& a : ev.chain) k = intersect_flats(k, span_in(w, rest, a.set));
  return k;
}

namespace detail {

struct Rejection {
  std::string reason;
};

}  // namespace detail

// Replays `cert` against `oracle`. Structural problems that survive parsing
// (for instance evidence referring to elements outside its level) are
// rejections too; only unparseable input is "malformed".
inline VerificationReport verify(const CountedOracle& oracle, const Certificate& cert) {
  VerificationReport rep;
  const std::uint64_t start = oracle.calls();
  auto reject = [](std::string why) { throw detail::Rejection{std::move(why)}; };
  try {
    if (cert.labels != oracle.labels()) reject("certificate labels differ from the oracle's ground set");
    const int k = static_cast<int>(cert.chain.size());
    if (static_cast<int>(cert.levels.size()) != k) reject("level count differs from chain length");
    if (k == 0) reject("empty chain certifies nothing");
    const std::uint32_t p = cert.p;
    std::vector<FieldMatrix> prev{FieldMatrix(p, 0, 0)};

    for (int i = 1; i <= k; ++i) {
      const std::uint64_t level_start = oracle.calls();
      const Level& level = cert.levels[i - 1];
      const ChainStep step = cert.chain[i - 1];
      const int e = step.element;
      const bool dual = step.contract;
      const ElementSet ground = level_ground(cert, i);
      const ElementSet rest = ground & ~bit(e);
      const int pos = position_in(ground, e);
      const std::string where = "level " + std::to_string(i) + " (" + cert.labels[e] + "): ";
      LevelOracle<CountedOracle> lo(oracle, ground, level_contract(cert, i), dual);
      LevelReport lr;
      lr.level = i;
      lr.element = cert.labels[e];
      lr.contract = dual;
      lr.reps = level.reps.size();

      for (const auto& m : level.reps) {
        if (m.modulus() != p || m.cols() != popcount(ground) || canonical_form(m) != m) {
          reject(where + "listed representation is not in canonical form");
        }
      }
      for (std::size_t a = 1; a < level.reps.size(); ++a) {
        if (!(level.reps[a - 1] < level.reps[a])) reject(where + "representations not sorted and distinct");
      }
      if (i == k && !level.reps.empty()) reject("top level lists a representation");
      if (level.evidence.size() != prev.size()) {
        reject(where + "expected one evidence block per representation below");
      }

      const LevelStatus& st = level.status;
      if (lo.rank(bit(e)) != st.rank_element) reject(where + "status attestation r(e) fails");
      if (lo.rank(ground) != st.rank_all) reject(where + "status attestation r(E) fails");
      if (lo.rank(rest) != st.rank_rest) reject(where + "status attestation r(E - e) fails");
      const bool loop = st.rank_element == 0;
      const bool coloop = st.rank_all != st.rank_rest;

      auto attest = [&](const RankAttestation& a, const std::string& what) {
        if (!is_subset(a.set, rest)) reject(where + what + " uses elements outside the level");
        if (lo.rank(a.set) != a.rank || lo.rank(a.set | bit(e)) != a.rank_with) {
          reject(where + what + " rank attestation fails");
        }
      };
      auto member_ok = [&](int j, const FieldMatrix& ext) {
        if (j < 0 || j >= static_cast<int>(level.reps.size())) return false;
        return level_rep(ext, dual) == level.reps[j];
      };

      std::vector<bool> used(level.reps.size(), false);
      for (std::size_t b = 0; b < prev.size(); ++b) {
        const Evidence& ev = level.evidence[b];
        const FieldMatrix w = working_rep(prev[b], dual);
        if (dual && ev.dual_rep != w) reject(where + "recorded dual representation is wrong");
        if (!dual && ev.dual_rep) reject(where + "unexpected dual representation");
        if (w.rows() != st.rank_rest) reject(where + "representation rank disagrees with r(E - e)");

        if (loop) {
          if (ev.kind != EvidenceKind::kLoop) reject(where + "loop level needs loop evidence");
          if (!member_ok(ev.member, w.with_column(pos, Vector(w.rows(), 0)))) {
            reject(where + "loop extension is not the listed representation");
          }
          used[ev.member] = true;
          continue;
        }
        if (coloop) {
          if (ev.kind != EvidenceKind::kColoop) reject(where + "coloop level needs coloop evidence");
          if (st.rank_all != st.rank_rest + 1) reject(where + "inconsistent coloop status");
          Vector unit(w.rows() + 1, 0);
          unit.back() = 1;
          if (!member_ok(ev.member, w.with_zero_row().with_column(pos, unit))) {
            reject(where + "coloop extension is not the listed representation");
          }
          used[ev.member] = true;
          continue;
        }
        if (ev.kind == EvidenceKind::kLoop || ev.kind == EvidenceKind::kColoop) {
          reject(where + "loop/coloop evidence for a general element");
        }

        Flat kf = Flat::full(w.rows(), p);
        for (const auto& a : ev.chain) {
          attest(a, "chain set");
          if (a.rank != a.rank_with) reject(where + "chain set does not span e");
          const Flat next = intersect_flats(kf, span_in(w, rest, a.set));
          if (next.rank() >= kf.rank()) reject(where + "chain set does not cut the candidate flat");
          kf = next;
        }
        switch (ev.kind) {
          case EvidenceKind::kFlatChain:
            if (kf.rank() != 0) reject(where + "flat chain leaves candidate points");
            break;
          case EvidenceKind::kCase1:
            attest(ev.witness, "case1 witness");
            if (ev.witness.rank_with != ev.witness.rank + 1) reject(where + "case1 witness spans e");
            if (!span_in(w, rest, ev.witness.set).contains(kf)) {
              reject(where + "case1 witness does not contain the candidate flat");
            }
            break;
          case EvidenceKind::kPointFaults: {
            const auto pts = projective_points(kf);
            lr.candidates += pts.size();
            if (ev.points.size() != pts.size()) reject(where + "point list does not cover the candidate flat");
            for (std::size_t q = 0; q < pts.size(); ++q) {
              const PointEntry& pe = ev.points[q];
              if (pe.point != pts[q]) reject(where + "point list does not cover the candidate flat");
              const FieldMatrix ext = w.with_column(pos, pts[q]);
              if (pe.member) {
                if (!member_ok(*pe.member, ext)) reject(where + "accepted point gives an unlisted representation");
                used[*pe.member] = true;
              } else {
                if (!is_subset(pe.fault, ground)) reject(where + "fault uses elements outside the level");
                if (column_rank(ext, compress(pe.fault, ground)) == pe.rank) {
                  reject(where + "fault set does not separate the point");
                }
                if (lo.rank(pe.fault) != pe.rank) reject(where + "fault rank attestation fails");
              }
            }
            break;
          }
          default:
            break;
        }
      }
      for (std::size_t j = 0; j < used.size(); ++j) {
        if (!used[j]) reject(where + "listed representation " + std::to_string(j) + " is never produced");
      }
      lr.calls = oracle.calls() - level_start;
      rep.levels.push_back(lr);
      prev = level.reps;
    }
    rep.accepted = true;
  } catch (const detail::Rejection& r) {
    rep.accepted = false;
    rep.reason = r.reason;
  } catch (const Error& err) {
    rep.accepted = false;
    rep.reason = err.what();
  }
  rep.oracle_calls = oracle.calls() - start;
  return rep;
}

}  // namespace matroid
