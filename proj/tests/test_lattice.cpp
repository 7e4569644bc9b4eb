// Copyright 2026 The serfact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "serfact/error.hpp"

namespace {

using namespace serfact;
using fixtures::elems;
using fixtures::ideal;
using fixtures::zmod;
namespace t2 = fixtures::t2;

TEST(Overideals, Z12) {
  const Ring r = zmod(12);
  const auto all = overideals(zero_ideal(r));
  ASSERT_EQ(all.members.size(), 6u);
  const std::vector<Elem> gens{0, 6, 4, 3, 2, 1};
  for (std::size_t i = 0; i < gens.size(); ++i) EXPECT_EQ(all.members[i], ideal(r, {gens[i]}));
  const auto over4 = overideals(ideal(r, {4}));
  ASSERT_EQ(over4.members.size(), 3u);
  EXPECT_EQ(over4.members[0], ideal(r, {4}));
  EXPECT_EQ(over4.members[1], ideal(r, {2}));
  EXPECT_EQ(over4.members[2], whole_ring(r));
}

TEST(Overideals, ZeroIdealListsEveryRightIdeal) {
  for (const Ring& r : {fixtures::t2f2(), fixtures::m2f3()}) {
    EXPECT_EQ(overideals(zero_ideal(r)).members.size(), all_right_ideals(r).size());
  }
  EXPECT_EQ(overideals(zero_ideal(fixtures::t2f2())).members.size(), 7u);
}

TEST(Overideals, ClosedUnderSumAndIntersection) {
  const Ring r = fixtures::t3f2();
  const auto lat = overideals(ideal(r, {4}));
  for (const auto& a : lat.members) {
    for (const auto& b : lat.members) {
      const auto s = ideal_sum(a, b);
      const auto m = ideal_intersection(a, b);
      EXPECT_NE(std::find(lat.members.begin(), lat.members.end(), s), lat.members.end());
      EXPECT_NE(std::find(lat.members.begin(), lat.members.end(), m), lat.members.end());
    }
  }
}

TEST(Uniserial, Examples) {
  const Ring r = zmod(12);
  EXPECT_TRUE(is_uniserial_quotient(ideal(r, {4})));
  EXPECT_FALSE(is_uniserial_quotient(zero_ideal(r)));
  EXPECT_FALSE(is_uniserial_quotient(zero_ideal(fixtures::m2f2())));
  EXPECT_TRUE(is_uniserial_quotient(zero_ideal(zmod(8))));
  try {
    is_uniserial_quotient(whole_ring(r));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ImproperIdeal);
  }
}

TEST(ChainLength, Examples) {
  const Ring r = zmod(12);
  EXPECT_EQ(chain_length(ideal(r, {4})), 2u);
  EXPECT_EQ(chain_length(ideal(r, {2})), 1u);
  EXPECT_EQ(chain_length(zero_ideal(zmod(8))), 3u);
  try {
    chain_length(zero_ideal(r));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUniserial);
  }
}

TEST(CyclicHoms, ThreeIntoFourHasNoMono) {
  const Ring r = zmod(12);
  const auto homs = cyclic_homs(ideal(r, {3}), ideal(r, {4}));
  ASSERT_FALSE(homs.empty());
  for (const auto& h : homs) {
    EXPECT_TRUE(h.is_well_defined);
    EXPECT_EQ(h.c % 4, 0u);
    EXPECT_FALSE(h.is_mono);
  }
}

TEST(CyclicHoms, TwoIntoSixByThree) {
  const Ring r = zmod(12);
  const auto homs = cyclic_homs(ideal(r, {2}), ideal(r, {6}));
  const auto it = std::find_if(homs.begin(), homs.end(), [](const HomWitness& h) { return h.c == 3; });
  ASSERT_NE(it, homs.end());
  EXPECT_TRUE(it->is_well_defined);
  EXPECT_TRUE(it->is_mono);
  EXPECT_FALSE(it->is_epi);
  EXPECT_TRUE(exists_mono(ideal(r, {2}), ideal(r, {6})));
}

TEST(CyclicHoms, IdentityWhenEqual) {
  for (const Ring& r : {zmod(12), fixtures::t2f2()}) {
    for (const auto& a : all_right_ideals(r)) {
      const auto homs = cyclic_homs(a, a);
      const auto it = std::find_if(homs.begin(), homs.end(),
                                   [&](const HomWitness& h) { return h.c == r.one() || (a.contains(r.sub(h.c, r.one()))); });
      ASSERT_NE(it, homs.end());
      EXPECT_TRUE(it->is_iso());
      EXPECT_TRUE(are_similar(a, a));
      EXPECT_TRUE(exists_mono(a, a));
      EXPECT_TRUE(exists_epi(a, a));
    }
  }
}

TEST(Similarity, Examples) {
  const Ring z12 = zmod(12);
  EXPECT_FALSE(are_similar(ideal(z12, {3}), ideal(z12, {4})));
  EXPECT_FALSE(exists_mono(ideal(z12, {3}), ideal(z12, {4})));
  EXPECT_FALSE(exists_mono(ideal(z12, {4}), ideal(z12, {3})));
  EXPECT_FALSE(exists_epi(ideal(z12, {3}), ideal(z12, {4})));
  EXPECT_FALSE(exists_epi(ideal(z12, {4}), ideal(z12, {3})));
  const Ring r = fixtures::t2f2();
  EXPECT_FALSE(are_similar(ideal(r, {t2::e12}), ideal(r, {t2::e22})));
  const RightIdeal a = ideal(r, {t2::e22});
  const RightIdeal b = ideal(r, {t2::e12 + t2::e22});
  ASSERT_EQ(elems(b), (std::vector<Elem>{0, 6}));
  EXPECT_TRUE(are_similar(a, b));
  const auto iso = find_isomorphism(a, b);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(iso->is_iso());
}

TEST(Similarity, OnlyOneDistinctPairInT2F2) {
  const auto all = all_right_ideals(fixtures::t2f2());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (are_similar(all[i], all[j])) pairs.emplace_back(i, j);
  EXPECT_EQ(pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}}));
}

TEST(Bezout, Examples) {
  EXPECT_TRUE(is_bezout_quotient(zero_ideal(zmod(12))));
  // Every right ideal of M2(F2) is principal.
  EXPECT_TRUE(is_bezout_quotient(zero_ideal(fixtures::m2f2())));
  for (const auto& a : all_right_ideals(zmod(8))) EXPECT_TRUE(is_bezout_quotient(a));
  // M1 of T2(F2) needs two generators.
  EXPECT_FALSE(is_bezout_quotient(zero_ideal(fixtures::t2f2())));
}

}  // namespace
