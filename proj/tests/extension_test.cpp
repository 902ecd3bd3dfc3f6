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
#include "matroid/extension.hpp"
#include "matroid/structure.hpp"
#include "oracles.hpp"

namespace matroid {
namespace {

TEST(ModularCuts, CountsMatchDefinition) {
  for (const auto& entry : catalog()) {
    const int n = entry.matroid.size();
    const auto t = rank_table(entry.matroid);
    if (n > 7 || oracle::flats(t, n).size() > 20) continue;
    EXPECT_EQ(modular_cuts(entry.matroid).size(), oracle::modular_cut_count(t, n)) << entry.name;
  }
}

TEST(ModularCuts, SmallCounts) {
  EXPECT_EQ(modular_cuts(Matroid::uniform(1, 1)).size(), 3u);  // loop, parallel, coloop
  EXPECT_EQ(modular_cuts(Matroid::uniform(2, 3)).size(), 6u);
  EXPECT_EQ(modular_cuts(Matroid::uniform(0, 1)).size(), 2u);
}

TEST(ModularCuts, SizeBoundEnforced) {
  try {
    modular_cuts(Matroid::uniform(3, 10));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kExhaustiveBoundExceeded);
  }
}

TEST(Extensions, AreMatroidsRestrictingToTheOriginal) {
  for (const char* name : {"u24", "fano", "k4", "whirl3", "u24+coloop"}) {
    const Matroid m = catalog_entry(name)->matroid;
    const auto exts = single_element_extensions(m);
    std::vector<std::vector<std::uint8_t>> seen;
    for (const auto& x : exts) {
      EXPECT_EQ(x.size(), m.size() + 1);
      EXPECT_TRUE(axiom_check(x).ok) << name;
      for (ElementSet s = 0; s <= m.ground(); ++s) ASSERT_EQ(x.rank(s), m.rank(s));
      seen.push_back(rank_table(x));
    }
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end()) << name << ": duplicate extension";
  }
}

TEST(Extensions, EmptyCutAddsColoopAndFullCutAddsLoop) {
  const Matroid m = Matroid::uniform(2, 3);
  const auto cuts = modular_cuts(m);
  const auto t = rank_table(m);
  for (const auto& cut : cuts) {
    const auto ext = extend_table(t, 3, cut);
    if (cut.flats.empty()) {
      EXPECT_EQ(ext[bit(3)], 1) << "empty cut";
    }
    if (cut.flats.size() == oracle::flats(t, 3).size()) {
      EXPECT_EQ(ext[bit(3)], 0);
    }
  }
}

TEST(Extensions, FreshLabelAvoidsCollisions) {
  EXPECT_EQ(fresh_label({"a", "b"}), "z");
  EXPECT_NE(fresh_label({"z", "z1"}), "z");
  EXPECT_NE(fresh_label({"z", "z1"}), "z1");
}

}  // namespace
}  // namespace matroid
