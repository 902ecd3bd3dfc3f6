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


#include <gtest/gtest.h>

#include <random>

#include "matroid/adjudicator.hpp"
#include "matroid/catalog.hpp"
#include "matroid/certificate.hpp"
#include "matroid/claimant.hpp"
#include "matroid/io.hpp"
#include "mutate.hpp"

namespace matroid {
namespace {

struct Case {
  const char* name;
  std::uint32_t p;
};

const Case kCases[] = {{"u24", 2},  {"u25", 3},     {"u35", 3},         {"fano", 3},
                       {"fano", 5}, {"fano-dual", 3}, {"non-fano", 2}, {"u24+coloop", 2},
                       {"u24+loop", 2}, {"u27", 5}};

TEST(Protocol, CertificatesAreAccepted) {
  for (const auto& c : kCases) {
    const Matroid m = catalog_entry(c.name)->matroid;
    for (bool minimize : {true, false}) {
      if (!minimize && m.size() > 7) continue;
      const Certificate cert = build_certificate(m, c.p, {.minimize = minimize});
      CountedOracle o(m);
      const auto before = o.calls();
      const auto rep = verify(o, cert);
      EXPECT_TRUE(rep.accepted) << c.name << " p=" << c.p << ": " << rep.reason;
      EXPECT_EQ(rep.oracle_calls, o.calls() - before);
      std::uint64_t per_level = 0;
      for (const auto& l : rep.levels) per_level += l.calls;
      EXPECT_LE(per_level, rep.oracle_calls);
    }
  }
}

TEST(Protocol, JsonRoundTrip) {
  for (const auto& c : kCases) {
    const Certificate cert = build_certificate(catalog_entry(c.name)->matroid, c.p);
    const auto j = certificate_to_json(cert);
    EXPECT_EQ(certificate_from_json(j), cert) << c.name;
    EXPECT_EQ(certificate_from_json(parse_json(j.dump())), cert) << c.name;
  }
}

TEST(Protocol, RepresentableMatroidHasNothingToCertify) {
  for (const char* name : {"u23", "fano", "k4", "u24"}) {
    const std::uint32_t p = std::string(name) == "fano" ? 2 : 3;
    try {
      build_certificate(catalog_entry(name)->matroid, p);
      FAIL() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNothingToCertify);
    }
  }
}

TEST(Protocol, MinimizedMinorIsAnExcludedMinor) {
  const Matroid m = catalog_entry("u24+coloop")->matroid;
  const MinorChoice mc = minimize_to_excluded_minor(m, 2);
  EXPECT_EQ(mc.contract | mc.remove, bit(4));
  const Matroid k = catalog_entry("spike-gf2-4-relaxed")->matroid;
  const MinorChoice mk = minimize_to_excluded_minor(k, 2);
  const Matroid minor = materialize(k.minor(mk.contract, mk.remove));
  EXPECT_FALSE(is_representable(minor, 2));
  for (int e = 0; e < minor.size(); ++e) {
    EXPECT_TRUE(is_representable(minor.minor(bit(e), 0), 2));
    EXPECT_TRUE(is_representable(minor.minor(0, bit(e)), 2));
  }
}

// A certificate replayed against a representable matroid on the same labels
// must be rejected.
TEST(Protocol, ReplayAgainstRepresentableMatroidsRejected) {
  for (const auto& c : kCases) {
    const Matroid m = catalog_entry(c.name)->matroid;
    const Certificate cert = build_certificate(m, c.p);
    std::vector<std::pair<std::string, Matroid>> others;
    for (const auto& other : catalog()) others.emplace_back(other.name, other.matroid);
    for (int r = 0; r <= m.size(); ++r) others.emplace_back("U" + std::to_string(r), Matroid::uniform(r, m.size()));
    int tried = 0;
    for (const auto& [name, other] : others) {
      if (other.size() != m.size() || !is_representable(other, c.p)) continue;
      const Matroid relabelled = Matroid::rank_table_unchecked(m.labels(), rank_table(other));
      CountedOracle o(relabelled);
      EXPECT_FALSE(verify(o, cert).accepted) << c.name << " replayed on " << name;
      ++tried;
    }
    EXPECT_GT(tried, 0) << c.name;
  }
}

TEST(Protocol, ReplayOnU23PlusColoop) {
  const Matroid bad = catalog_entry("u24+coloop")->matroid;
  const Certificate cert = build_certificate(bad, 2);
  const Matroid good = direct_sum(Matroid::uniform(2, 3, {"a", "b", "c"}), Matroid::uniform(2, 2, {"d", "z"}));
  ASSERT_EQ(good.labels(), bad.labels());
  CountedOracle o(good);
  const auto rep = verify(o, cert);
  EXPECT_FALSE(rep.accepted);
  EXPECT_FALSE(rep.reason.empty());
}

TEST(Protocol, LabelMismatchRejected) {
  const Certificate cert = build_certificate(Matroid::uniform(2, 4), 2);
  CountedOracle o(Matroid::uniform(2, 4, {"w", "x", "y", "z"}));
  EXPECT_FALSE(verify(o, cert).accepted);
}

TEST(Protocol, MutatedCertificatesRejected) {
  std::mt19937_64 rng(20260101);
  int total = 0;
  for (const auto& c : kCases) {
    const Matroid m = catalog_entry(c.name)->matroid;
    const Certificate cert = build_certificate(m, c.p);
    for (int i = 0; i < 80; ++i) {
      const auto mutated = testing_support::mutate(cert, rng);
      if (!mutated) continue;
      CountedOracle o(m);
      const auto rep = verify(o, *mutated);
      EXPECT_FALSE(rep.accepted) << c.name << " mutation " << i;
      ++total;
    }
  }
  EXPECT_GE(total, 500);
}

TEST(Protocol, ByteFlippedJsonNeverCrashes) {
  std::mt19937_64 rng(99);
  const Matroid m = Matroid::uniform(2, 5);
  const Certificate cert = build_certificate(m, 3);
  const std::string text = certificate_to_json(cert).dump();
  for (int i = 0; i < 300; ++i) {
    std::string t = text;
    t[rng() % t.size()] = static_cast<char>(32 + rng() % 95);
    try {
      const Certificate c = certificate_from_json(parse_json(t));
      CountedOracle o(m);
      const auto rep = verify(o, c);
      if (c == cert) {
        EXPECT_TRUE(rep.accepted);
      }
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformed) << e.what();
    }
  }
}

TEST(Protocol, MalformedJsonRejectedAtParse) {
  for (const char* bad : {R"({"v":1})", R"({"v":2,"p":2})", R"([])",
                          R"({"v":1,"p":4,"labels":["a"],"minor":{"contract":[],"delete":[]},"chain":[],"levels":[]})"}) {
    try {
      certificate_from_json(parse_json(bad));
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformed) << bad;
    }
  }
}

}  // namespace
}  // namespace matroid
