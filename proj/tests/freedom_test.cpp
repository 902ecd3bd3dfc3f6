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

#include "matroid/catalog.hpp"
#include "matroid/freedom.hpp"
#include "matroid/structure.hpp"
#include "oracles.hpp"

namespace matroid {
namespace {

TEST(Clones, MatchSwapDefinition) {
  for (const auto& entry : catalog()) {
    const Matroid& m = entry.matroid;
    const int n = m.size();
    const auto t = rank_table(m);
    for (int e = 0; e < n; ++e) {
      for (int f = e + 1; f < n; ++f) {
        EXPECT_EQ(are_clones(m, e, f), oracle::are_clones(t, n, e, f)) << entry.name << " " << e << "," << f;
      }
    }
  }
}

TEST(Clones, ClassesPartitionTheGroundSet) {
  for (const char* name : {"u25", "fano", "u24+coloop", "spike-gf2-4", "k4"}) {
    const Matroid m = catalog_entry(name)->matroid;
    ElementSet seen = 0;
    for (ElementSet c : clone_classes(m)) {
      EXPECT_EQ(seen & c, 0u);
      seen |= c;
    }
    EXPECT_EQ(seen, m.ground()) << name;
  }
  EXPECT_EQ(clone_classes(Matroid::uniform(2, 5)).size(), 1u);
  EXPECT_EQ(clone_classes(catalog_entry("fano")->matroid).size(), 7u);
}

TEST(Freer, CyclicFlatDefinition) {
  // In U_{2,3} plus a parallel copy of c, a and b are freer than c.
  const Matroid m = Matroid::linear(FieldMatrix::from_rows(3, {{1, 0, 1, 1}, {0, 1, 1, 1}}), {"a", "b", "c", "d"});
  const auto fr = freer_relation(m);
  EXPECT_TRUE(fr[0][2]);
  EXPECT_FALSE(fr[2][0]);
  EXPECT_TRUE(fr[2][3] && fr[3][2]);
}

TEST(Freedom, UniformElementsHaveFreedomEqualToRank) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = r + 1; n <= 6; ++n) {
      const Matroid u = Matroid::uniform(r, n);
      const auto f = freedom(u, 0, 6);
      ASSERT_TRUE(f.finite()) << r << "," << n;
      EXPECT_EQ(f.value, r) << r << "," << n;
    }
  }
}

TEST(Freedom, LoopsAndColoops) {
  const Matroid l = catalog_entry("u24+loop")->matroid;
  EXPECT_EQ(freedom(l, 4, 3).value, 0);
  EXPECT_TRUE(is_fixed(l, 4));
  const Matroid c = catalog_entry("u24+coloop")->matroid;
  EXPECT_TRUE(freedom(c, 4, 3).infinite());
  EXPECT_FALSE(is_fixed(c, 4));
}

TEST(Freedom, FanoIsFixed) {
  const Matroid f = catalog_entry("fano")->matroid;
  for (int e = 0; e < 7; ++e) {
    EXPECT_TRUE(is_fixed(f, e));
    EXPECT_EQ(freedom(f, e, 3).value, 1);
  }
}

TEST(Freedom, ParallelElementHasFreedomOne) {
  const Matroid m = Matroid::linear(FieldMatrix::from_rows(3, {{1, 0, 1, 1}, {0, 1, 1, 1}}), {"a", "b", "c", "d"});
  EXPECT_EQ(freedom(m, 3, 3).value, 1);
  EXPECT_TRUE(is_fixed(m, 3));
}

TEST(Freedom, OverflowIsReported) {
  const auto f = freedom(Matroid::uniform(3, 5), 0, 2);
  EXPECT_TRUE(f.overflow());
  EXPECT_FALSE(f.at_most(2));
}

TEST(Freedom, FixedIffFreedomAtMostOne) {
  for (const auto& entry : catalog()) {
    const Matroid& m = entry.matroid;
    if (m.size() > 7) continue;
    for (int e = 0; e < m.size(); ++e) {
      const auto f = freedom(m, e, 4);
      if (f.overflow()) continue;
      EXPECT_EQ(is_fixed(m, e), f.at_most(1)) << entry.name << " " << e;
    }
  }
}

TEST(Freedom, DualityIdentities) {
  for (const auto& entry : catalog()) {
    const Matroid& m = entry.matroid;
    if (m.size() > 7) continue;
    const Matroid d = materialize(m.dual());
    for (int e = 0; e < m.size(); ++e) {
      EXPECT_EQ(is_cofixed(m, e), is_fixed(d, e)) << entry.name;
      const auto a = cofreedom(m, e, 4), b = freedom(d, e, 4);
      EXPECT_EQ(a.kind, b.kind) << entry.name;
      if (a.finite()) {
        EXPECT_EQ(a.value, b.value) << entry.name;
      }
    }
  }
}

TEST(Freedom, SeparationBoundsFreedom) {
  for (const auto& entry : catalog()) {
    const Matroid& m = entry.matroid;
    if (m.size() > 7) continue;
    for (int e = 0; e < m.size(); ++e) {
      const auto f = freedom(m, e, 4);
      if (!f.finite()) continue;
      for (int t = 0; t < f.value; ++t) {
        EXPECT_FALSE(freedom_upper_from_separation(m, e, t)) << entry.name << " e=" << e << " t=" << t;
      }
    }
  }
}

TEST(UniformWitness, IsUniformMinorWithFreedomBounds) {
  for (const auto& entry : catalog()) {
    const Matroid& m = entry.matroid;
    if (m.size() > 7) continue;
    const auto t = rank_table(m);
    for (int e = 0; e < m.size(); ++e) {
      if (t[bit(e)] == 0 || coloops_of(t, m.size()) & bit(e)) {
        EXPECT_THROW(uniform_minor_witness(m, e), Error);
        continue;
      }
      const auto w = uniform_minor_witness(m, e);
      const int k = w.minor.size();
      EXPECT_TRUE(matroid_equal(w.minor, Matroid::uniform(w.gamma, k, w.minor.labels())).equal) << entry.name;
      EXPECT_GE(w.gamma, 1);
      EXPECT_GE(w.delta, 1);
      const auto f = freedom(m, e, 4), c = cofreedom(m, e, 4);
      if (f.finite()) {
        EXPECT_GE(w.gamma, f.value) << entry.name << " e=" << e;
      }
      if (c.finite()) {
        EXPECT_GE(w.delta, c.value) << entry.name << " e=" << e;
      }
    }
  }
}

TEST(UniformWitness, FanoRecordedParameters) {
  const auto w = uniform_minor_witness(catalog_entry("fano")->matroid, 0);
  EXPECT_EQ(w.gamma, 2);
  EXPECT_EQ(w.delta, 1);
  EXPECT_TRUE(contains(full_set(7) & ~(w.contract | w.remove), 0));
}

TEST(BoundCor, HoldsForExcludedMinorsAndRepresentables) {
  EXPECT_TRUE(bound_cor_check(Matroid::uniform(2, 4), 2).ok);
  EXPECT_TRUE(bound_cor_check(catalog_entry("fano")->matroid, 3).ok);
  EXPECT_TRUE(bound_cor_check(catalog_entry("u25")->matroid, 5).ok);
}

}  // namespace
}  // namespace matroid
