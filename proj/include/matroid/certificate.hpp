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

// Certificates of non-representability over GF(p).
//
// A certificate names a minor M' = M \ D / C and a chain e_1, ..., e_k that
// rebuilds M' one element at a time: M_i is M_{i-1} with e_i put back, as a
// deletion or a contraction. Level i lists canonical forms of every
// representation of M_i (R_0 holds the empty matrix, and R_k is empty).
// For each R in R_{i-1} the level holds evidence that every extension of R
// to M_i is one of the listed forms.
//
// Contraction levels run through duals: R is replaced by its dual W, which
// represents M_i* \ e_i, and the evidence speaks about M_i*. The "working
// matroid" of a level is M_i for deletions and M_i* for contractions.
//
// Evidence for a general element (neither loop nor coloop) starts with a
// list of sets S_j with e in cl(S_j); each cuts the candidate flat K down to
// K ∩ span(S_j). It ends in one of
//   flat-chain    K has rank 0;
//   case1         a set S with e not in cl(S) whose span contains K;
//   point-faults  one entry per projective point of K, either the index of
//                 the representation it produces or a set X whose rank in
//                 the working matroid differs from its rank in R + x.
// Every rank value the verifier needs is embedded as an attestation and
// replayed against the oracle.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "matroid/error.hpp"
#include "matroid/gf.hpp"
#include "matroid/oracle.hpp"
#include "matroid/representation.hpp"
#include "matroid/subset.hpp"

namespace matroid {

struct ChainStep {
  int element = 0;  // index in the original ground set
  bool contract = false;

  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

// rank = r_N(set), rank_with = r_N(set + e), N the working matroid.
struct RankAttestation {
  ElementSet set = 0;
  int rank = 0;
  int rank_with = 0;

  friend bool operator==(const RankAttestation&, const RankAttestation&) = default;
};

struct PointEntry {
  Vector point;
  std::optional<int> member;  // accepted as this representation of the level
  ElementSet fault = 0;       // otherwise: a set whose rank exposes the point
  int rank = 0;               // r_N(fault)

  friend bool operator==(const PointEntry&, const PointEntry&) = default;
};

enum class EvidenceKind { kLoop, kColoop, kFlatChain, kCase1, kPointFaults };

inline const char* evidence_kind_name(EvidenceKind k) {
  switch (k) {
    case EvidenceKind::kLoop: return "loop";
    case EvidenceKind::kColoop: return "coloop";
    case EvidenceKind::kFlatChain: return "flat-chain";
    case EvidenceKind::kCase1: return "case1";
    case EvidenceKind::kPointFaults: return "point-faults";
  }
  return "?";
}

struct Evidence {
  EvidenceKind kind = EvidenceKind::kFlatChain;
  std::optional<FieldMatrix> dual_rep;  // contraction levels: dual of the input
  int member = -1;                      // loop / coloop
  std::vector<RankAttestation> chain;   // S_0, ..., S_{m-1}
  RankAttestation witness;              // case1
  std::vector<PointEntry> points;       // point-faults

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct LevelStatus {
  int rank_element = 0;  // r_N({e})
  int rank_all = 0;      // r_N(E_i)
  int rank_rest = 0;     // r_N(E_i - e)

  friend bool operator==(const LevelStatus&, const LevelStatus&) = default;
};

struct Level {
  LevelStatus status;
  std::vector<FieldMatrix> reps;
  std::vector<Evidence> evidence;  // one per representation of the previous level

  friend bool operator==(const Level&, const Level&) = default;
};

struct Certificate {
  std::uint32_t p = 2;
  std::vector<std::string> labels;  // ground set of the original matroid
  ElementSet contract = 0;
  ElementSet remove = 0;
  std::vector<ChainStep> chain;
  std::vector<Level> levels;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Elements present at level i (after i chain steps).
inline ElementSet level_ground(const Certificate& c, int i) {
  ElementSet x = 0;
  for (int j = 0; j < i; ++j) x |= bit(c.chain[j].element);
  return x;
}

// Contracted (resp. deleted) elements of the original matroid at level i.
inline ElementSet level_contract(const Certificate& c, int i) {
  ElementSet x = c.contract;
  for (std::size_t j = i; j < c.chain.size(); ++j) {
    if (c.chain[j].contract) x |= bit(c.chain[j].element);
  }
  return x;
}

inline ElementSet level_remove(const Certificate& c, int i) {
  ElementSet x = c.remove;
  for (std::size_t j = i; j < c.chain.size(); ++j) {
    if (!c.chain[j].contract) x |= bit(c.chain[j].element);
  }
  return x;
}

// Rank queries of the working matroid of one level, phrased in the original
// indexing. r(contract) and, for dual levels, r_{M_i}(E_i) are fetched once.
template <RankOracle O>
class LevelOracle {
 public:
  LevelOracle(const O& base, ElementSet ground, ElementSet contract, bool dual)
      : base_(&base), ground_(ground), contract_(contract), dual_(dual) {}

  ElementSet ground() const { return ground_; }
  bool dual() const { return dual_; }

  int rank_minor(ElementSet x) {
    if (!is_subset(x, ground_)) {
      throw Error(ErrorCode::kInvalidMinorQuery, "query outside the level's ground set");
    }
    if (!contract_rank_) contract_rank_ = contract_ == 0 ? 0 : base_->rank(contract_);
    return base_->rank(x | contract_) - *contract_rank_;
  }

  int rank(ElementSet x) {
    if (!dual_) return rank_minor(x);
    if (!is_subset(x, ground_)) {
      throw Error(ErrorCode::kInvalidMinorQuery, "query outside the level's ground set");
    }
    if (!full_rank_) full_rank_ = rank_minor(ground_);
    return popcount(x) + rank_minor(ground_ & ~x) - *full_rank_;
  }

 private:
  const O* base_;
  ElementSet ground_;
  ElementSet contract_;
  bool dual_;
  std::optional<int> contract_rank_;
  std::optional<int> full_rank_;
};

// Representation of the working matroid minus e, from a canonical
// representation of M_{i-1}.
inline FieldMatrix working_rep(const FieldMatrix& canonical, bool dual) {
  if (!dual) return canonical;
  return dual_representation({canonical, std::vector<std::string>(canonical.cols(), "")}).matrix;
}

// Canonical representation of M_i from a representation of the working matroid.
inline FieldMatrix level_rep(const FieldMatrix& ext, bool dual) {
  if (!dual) return canonical_form(ext);
  return canonical_form(working_rep(canonical_form(ext), true));
}

// Columns of `m` (ordered like `ground`) spanning the original-index set x.
inline Flat span_in(const FieldMatrix& m, ElementSet ground, ElementSet x) {
  return span_of_columns(m, compress(x, ground));
}

inline int position_in(ElementSet ground, int e) { return popcount(ground & (bit(e) - 1)); }

// ----------------------------------------------------------------- JSON

namespace detail {

inline nlohmann::json set_to_json(ElementSet x, const std::vector<std::string>& labels) {
  nlohmann::json out = nlohmann::json::array();
  for (int e : elements(x)) out.push_back(labels[e]);
  return out;
}

inline int index_from_json(const nlohmann::json& v, const std::vector<std::string>& labels) {
  const std::string l = v.get<std::string>();
  const auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end()) throw Error(ErrorCode::kMalformed, "unknown element '" + l + "'");
  return static_cast<int>(it - labels.begin());
}

inline ElementSet set_from_json(const nlohmann::json& j, const std::vector<std::string>& labels) {
  if (!j.is_array()) throw Error(ErrorCode::kMalformed, "element set must be a list of labels");
  ElementSet x = 0;
  for (const auto& v : j) x |= bit(index_from_json(v, labels));
  return x;
}

inline nlohmann::json attestation_to_json(const RankAttestation& a, const std::vector<std::string>& labels) {
  return {{"set", set_to_json(a.set, labels)}, {"rank", a.rank}, {"rank_with", a.rank_with}};
}

inline RankAttestation attestation_from_json(const nlohmann::json& j, const std::vector<std::string>& labels) {
  return {set_from_json(j.at("set"), labels), j.at("rank").get<int>(), j.at("rank_with").get<int>()};
}

}  // namespace detail

inline nlohmann::json certificate_to_json(const Certificate& c) {
  using nlohmann::json;
  const auto& L = c.labels;
  json chain = json::array();
  for (const auto& s : c.chain) {
    chain.push_back({{"element", L[s.element]}, {"kind", s.contract ? "contract" : "delete"}});
  }
  json levels = json::array();
  for (std::size_t i = 0; i < c.levels.size(); ++i) {
    const Level& lv = c.levels[i];
    json reps = json::array();
    for (const auto& r : lv.reps) reps.push_back(matrix_to_json(r));
    json evidence = json::array();
    for (const auto& ev : lv.evidence) {
      json e = {{"kind", evidence_kind_name(ev.kind)}};
      if (ev.dual_rep) e["dual_rep"] = matrix_to_json(*ev.dual_rep);
      if (ev.kind == EvidenceKind::kLoop || ev.kind == EvidenceKind::kColoop) {
        e["member"] = ev.member;
      } else {
        json ch = json::array();
        for (const auto& a : ev.chain) ch.push_back(detail::attestation_to_json(a, L));
        e["chain"] = ch;
      }
      if (ev.kind == EvidenceKind::kCase1) e["witness"] = detail::attestation_to_json(ev.witness, L);
      if (ev.kind == EvidenceKind::kPointFaults) {
        json pts = json::array();
        for (const auto& pe : ev.points) {
          json p = {{"point", pe.point}};
          if (pe.member) {
            p["member"] = *pe.member;
          } else {
            p["fault"] = detail::set_to_json(pe.fault, L);
            p["rank"] = pe.rank;
          }
          pts.push_back(p);
        }
        e["points"] = pts;
      }
      evidence.push_back(e);
    }
    levels.push_back({{"element", L[c.chain[i].element]},
                      {"kind", c.chain[i].contract ? "contract" : "delete"},
                      {"status",
                       {{"rank_element", lv.status.rank_element},
                        {"rank_all", lv.status.rank_all},
                        {"rank_rest", lv.status.rank_rest}}},
                      {"reps", reps},
                      {"evidence", evidence}});
  }
  return {{"v", 1},
          {"p", c.p},
          {"labels", L},
          {"minor", {{"contract", detail::set_to_json(c.contract, L)}, {"delete", detail::set_to_json(c.remove, L)}}},
          {"chain", chain},
          {"levels", levels}};
}

// Structural parsing; throws Error(kMalformed) on anything that is not a
// well-formed certificate. Semantic checks are left to the verifier.
inline Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    Certificate c;
    if (!j.is_object()) throw Error(ErrorCode::kMalformed, "certificate must be an object");
    if (j.contains("v") && j.at("v").get<int>() != 1) {
      throw Error(ErrorCode::kMalformed, "unsupported certificate version");
    }
    c.p = j.at("p").get<std::uint32_t>();
    if (c.p > kMaxModulus || !is_prime(c.p)) throw Error(ErrorCode::kMalformed, "p must be prime");
    c.labels = j.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(c.labels.size()) > kMaxElements) {
      throw Error(ErrorCode::kMalformed, "too many elements");
    }
    for (std::size_t a = 0; a < c.labels.size(); ++a)
      for (std::size_t b = a + 1; b < c.labels.size(); ++b)
        if (c.labels[a] == c.labels[b]) throw Error(ErrorCode::kMalformed, "duplicate label");
    const auto& L = c.labels;
    c.contract = detail::set_from_json(j.at("minor").at("contract"), L);
    c.remove = detail::set_from_json(j.at("minor").at("delete"), L);
    if (c.contract & c.remove) throw Error(ErrorCode::kMalformed, "contract and delete sets overlap");
    ElementSet used = c.contract | c.remove;
    for (const auto& s : j.at("chain")) {
      ChainStep step;
      step.element = detail::index_from_json(s.at("element"), L);
      const std::string kind = s.at("kind").get<std::string>();
      if (kind != "delete" && kind != "contract") throw Error(ErrorCode::kMalformed, "bad chain kind");
      step.contract = kind == "contract";
      if (contains(used, step.element)) throw Error(ErrorCode::kMalformed, "element used twice");
      used |= bit(step.element);
      c.chain.push_back(step);
    }
    if (used != full_set(static_cast<int>(L.size()))) {
      throw Error(ErrorCode::kMalformed, "chain and minor must cover the ground set exactly");
    }
    const auto& levels = j.at("levels");
    if (!levels.is_array() || levels.size() != c.chain.size()) {
      throw Error(ErrorCode::kMalformed, "one level per chain step required");
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const auto& lj = levels[i];
      Level lv;
      const auto& st = lj.at("status");
      lv.status = {st.at("rank_element").get<int>(), st.at("rank_all").get<int>(),
                   st.at("rank_rest").get<int>()};
      const int cols = static_cast<int>(i) + 1;
      for (const auto& mj : lj.at("reps")) {
        FieldMatrix m = matrix_from_json(mj);
        if (m.modulus() != c.p || m.cols() != cols) {
          throw Error(ErrorCode::kMalformed, "representation has the wrong shape");
        }
        lv.reps.push_back(std::move(m));
      }
      for (const auto& ej : lj.at("evidence")) {
        Evidence ev;
        const std::string kind = ej.at("kind").get<std::string>();
        if (kind == "loop") ev.kind = EvidenceKind::kLoop;
        else if (kind == "coloop") ev.kind = EvidenceKind::kColoop;
        else if (kind == "flat-chain") ev.kind = EvidenceKind::kFlatChain;
        else if (kind == "case1") ev.kind = EvidenceKind::kCase1;
        else if (kind == "point-faults") ev.kind = EvidenceKind::kPointFaults;
        else throw Error(ErrorCode::kMalformed, "unknown evidence kind '" + kind + "'");
        if (ej.contains("dual_rep")) ev.dual_rep = matrix_from_json(ej.at("dual_rep"));
        if (ev.kind == EvidenceKind::kLoop || ev.kind == EvidenceKind::kColoop) {
          ev.member = ej.at("member").get<int>();
        } else {
          for (const auto& a : ej.at("chain")) ev.chain.push_back(detail::attestation_from_json(a, L));
        }
        if (ev.kind == EvidenceKind::kCase1) ev.witness = detail::attestation_from_json(ej.at("witness"), L);
        if (ev.kind == EvidenceKind::kPointFaults) {
          for (const auto& pj : ej.at("points")) {
            PointEntry pe;
            pe.point = pj.at("point").get<Vector>();
            if (pj.contains("member")) {
              pe.member = pj.at("member").get<int>();
            } else {
              pe.fault = detail::set_from_json(pj.at("fault"), L);
              pe.rank = pj.at("rank").get<int>();
            }
            ev.points.push_back(std::move(pe));
          }
        }
        lv.evidence.push_back(std::move(ev));
      }
      c.levels.push_back(std::move(lv));
    }
    for (std::size_t i = 0; i < c.chain.size(); ++i) {
      const std::string el = levels[i].value("element", L[c.chain[i].element]);
      if (el != L[c.chain[i].element]) throw Error(ErrorCode::kMalformed, "level element differs from chain");
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformed, std::string("certificate: ") + e.what());
  }
}

}  // namespace matroid
