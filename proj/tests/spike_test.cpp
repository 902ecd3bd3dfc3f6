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

#include "matroid/matroid.hpp"
#include "matroid/oracle.hpp"
#include "matroid/representation.hpp"
#include "matroid/spike.hpp"
#include "matroid/structure.hpp"

namespace matroid {
namespace {

TEST(Spike, LegUnionsHaveRankOneMore) {
  const Spike s(4, {});
  EXPECT_EQ(s.rank(0b11), 2);
  EXPECT_EQ(s.rank(0b1111), 3);
  EXPECT_EQ(s.rank(0b111111), 4);
  EXPECT_EQ(s.rank(full_set(8)), 4);
}

TEST(Spike, DependentTransversalsAreCircuits) {
  const Spike s(3, {transversal_from_string("000")});
  const ElementSet t = Spike::transversal_set(0, 3);
  EXPECT_EQ(s.rank(t), 2);
  for (int e : elements(t)) EXPECT_EQ(s.rank(t & ~bit(e)), 2);
  EXPECT_EQ(s.rank(Spike::transversal_set(0b111, 3)), 3);
}

TEST(Spike, TransversalStringsRoundTrip) {
  for (Transversal t = 0; t < 32; ++t) {
    EXPECT_EQ(transversal_from_string(transversal_to_string(t, 5)), t);
  }
}

TEST(Spike, CloseDependentTransversalsRejected) {
  try {
    Spike(3, {transversal_from_string("000"), transversal_from_string("100")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidSpike);
  }
}

TEST(Spike, RelaxAndTighten) {
  const Spike s(4, {transversal_from_string("0000")});
  const Spike r = relax(s, 0);
  EXPECT_TRUE(r.dependent().empty());
  EXPECT_EQ(tighten(r, 0), s);
  try {
    relax(s, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDependent);
  }
  try {
    tighten(s, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTransversalTooClose);
  }
}

TEST(Spike, RepresentedSpikeMatchesMatrix) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto rs = representable_spike(p, p == 2 ? std::vector<std::int64_t>{1, 1, 1, 1}
                                                  : std::vector<std::int64_t>{1, 2, 1, p - 1});
    const Matroid lin = Matroid::linear(rs.matrix, rs.spike.labels());
    const Matroid sp = Matroid::spike(rs.spike);
    EXPECT_TRUE(matroid_equal(lin, sp).equal) << p;
    EXPECT_TRUE(axiom_check(sp).ok);
  }
}

TEST(Spike, ZeroAlphaRejected) {
  try {
    representable_spike(3, {1, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidAlpha);
  }
}

TEST(Spike, CensusCountsFarTransversals) {
  // Free spike: nothing dependent, so every transversal is far.
  const auto c = lower_bound_census(Spike(5, {}));
  EXPECT_EQ(c.dependent_count, 0u);
  EXPECT_EQ(c.far_count, 32u);
  EXPECT_TRUE(c.bound_ok);
  // One dependent transversal blocks itself and its five neighbours.
  const auto d = lower_bound_census(Spike(5, {0}));
  EXPECT_EQ(d.dependent_count, 1u);
  EXPECT_EQ(d.far_count, 26u);
}

TEST(Spike, Thresholds) {
  const auto t = spike_thresholds(3);
  EXPECT_EQ(t.lower_bound_rank, 27u);
  EXPECT_EQ(t.one_set_limit, 9u);
}

}  // namespace
}  // namespace matroid
