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

// T3(F2): stored entries (1,1),(1,2),(1,3),(2,2),(2,3),(3,3) are bits 0..5.
namespace t3 {
constexpr Elem e11 = 1, e12 = 2, e13 = 4, e22 = 8, e23 = 16, e33 = 32;
inline RightIdeal maximal(const Ring& r, int i) {
  const Elem diag[] = {e11, e22, e33};
  std::vector<Elem> gens{e12, e13, e23};
  for (int j = 0; j < 3; ++j)
    if (j != i - 1) gens.push_back(diag[j]);
  return right_ideal(r, gens);
}
}  // namespace t3

void expect_check_order(const FactorizationResult& r, std::size_t n) {
  std::vector<std::string> names;
  for (const auto& c : r.certificate()) names.push_back(c.check);
  std::vector<std::string> expected{"proper",      "commuting", "coindependent",
                                    "product",     "uniserial", "canonical_map"};
  if (n >= 2) expected.push_back("two_sided");
  if (r.ok()) {
    EXPECT_EQ(names, expected);
  } else {
    ASSERT_FALSE(names.empty());
    EXPECT_FALSE(r.certificate().back().passed);
  }
}

TEST(Verify, Z12ThreeFour) {
  const Ring r = zmod(12);
  const auto res = verify_serial_factorization(zero_ideal(r), {ideal(r, {3}), ideal(r, {4})});
  ASSERT_TRUE(res.ok());
  EXPECT_EQ(res.factorization().length(), 2u);
  expect_check_order(res, 2);
  for (const auto& c : res.certificate()) EXPECT_TRUE(c.passed) << c.check;
}

TEST(Verify, TriangularFactorsDoNotCommute) {
  const Ring r = fixtures::t2f2();
  const RightIdeal m1 = ideal(r, {t2::e12, t2::e22});
  const RightIdeal m2 = ideal(r, {t2::e11});
  const auto res = verify_serial_factorization(ideal(r, {t2::e12}), {m1, m2});
  ASSERT_FALSE(res.ok());
  EXPECT_EQ(res.failure().reason, FailureReason::FactorsDontCommute);
  EXPECT_EQ(res.failure().factor_indices, (std::vector<std::size_t>{0, 1}));
  expect_check_order(res, 2);
}

TEST(Verify, WholeRingFactorIsNotProper) {
  for (const Ring& r : {zmod(12), fixtures::m2f2()}) {
    const auto res = verify_serial_factorization(whole_ring(r), {whole_ring(r)});
    ASSERT_FALSE(res.ok());
    EXPECT_EQ(res.failure().reason, FailureReason::NotProper);
  }
}

TEST(Verify, EmptyListIsNotProper) {
  const Ring r = zmod(12);
  const auto res = verify_serial_factorization(zero_ideal(r), {});
  ASSERT_FALSE(res.ok());
  EXPECT_EQ(res.failure().reason, FailureReason::NotProper);
}

TEST(Verify, OtherFailures) {
  const Ring r = zmod(12);
  auto reason = [&](const RightIdeal& a, std::vector<RightIdeal> fs) {
    const auto res = verify_serial_factorization(a, fs);
    EXPECT_FALSE(res.ok());
    return res.ok() ? FailureReason::NotProper : res.failure().reason;
  };
  EXPECT_EQ(reason(zero_ideal(r), {ideal(r, {2}), ideal(r, {6})}), FailureReason::NotCoindependent);
  EXPECT_EQ(reason(ideal(r, {6}), {ideal(r, {3}), ideal(r, {4})}), FailureReason::ProductMismatch);
  EXPECT_EQ(reason(zero_ideal(r), {zero_ideal(r)}), FailureReason::QuotientNotUniserial);
}

TEST(Find, Z12ZeroIdeal) {
  const Ring r = zmod(12);
  const auto res = find_serial_factorization(zero_ideal(r));
  ASSERT_TRUE(res.ok());
  const auto& f = res.factorization().factors;
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], ideal(r, {3}));
  EXPECT_EQ(f[1], ideal(r, {4}));
}

TEST(Find, UniserialQuotientIsTrivial) {
  const Ring r = zmod(12);
  const auto res = find_serial_factorization(ideal(r, {4}));
  ASSERT_TRUE(res.ok());
  ASSERT_EQ(res.factorization().length(), 1u);
  EXPECT_EQ(res.factorization().factors[0], ideal(r, {4}));
  expect_check_order(res, 1);
}

TEST(Find, Failures) {
  const Ring t = fixtures::t2f2();
  const auto j = find_serial_factorization(ideal(t, {t2::e12}));
  ASSERT_FALSE(j.ok());
  EXPECT_EQ(j.failure().reason, FailureReason::FactorsDontCommute);
  const auto m = find_serial_factorization(zero_ideal(fixtures::m2f2()));
  ASSERT_FALSE(m.ok());
  EXPECT_EQ(m.failure().reason, FailureReason::NoCentralSplit);
  // R/e22R is the chain e22R < M1 < R, so the one-sided e22R still factors
  // trivially.
  EXPECT_TRUE(find_serial_factorization(ideal(t, {t2::e22})).ok());
  std::size_t one_sided = 0;
  for (const auto& a : all_right_ideals(fixtures::t3f2())) {
    if (!a.is_proper() || is_two_sided(a) || is_uniserial_quotient(a)) continue;
    ++one_sided;
    const auto res = find_serial_factorization(a);
    ASSERT_FALSE(res.ok());
    EXPECT_EQ(res.failure().reason, FailureReason::NotTwoSidedTarget);
  }
  EXPECT_GT(one_sided, 0u);
}

TEST(Find, WholeRingRejected) {
  try {
    find_serial_factorization(whole_ring(zmod(5)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ImproperIdeal);
  }
}

TEST(AllSerial, Examples) {
  const Ring r = zmod(12);
  const auto zero = all_serial_factorizations(zero_ideal(r));
  ASSERT_EQ(zero.size(), 2u);
  EXPECT_EQ(zero[0].factors.size(), 2u);
  EXPECT_EQ(zero[0].factors[0], zero[1].factors[1]);
  EXPECT_EQ(zero[0].factors[1], zero[1].factors[0]);
  const auto four = all_serial_factorizations(ideal(r, {4}));
  ASSERT_EQ(four.size(), 1u);
  EXPECT_EQ(four[0].factors, std::vector<RightIdeal>{ideal(r, {4})});
  EXPECT_TRUE(all_serial_factorizations(ideal(fixtures::t2f2(), {t2::e12})).empty());
}

TEST(AllSerial, Budget) {
  const Ring r = zmod(60);
  try {
    all_serial_factorizations(zero_ideal(r), 4, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  try {
    all_serial_factorizations(zero_ideal(r), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EXPECT_EQ(all_serial_factorizations(zero_ideal(r), 3).size(), 6u);
}

TEST(AllSerial, PermutationsAreUnique) {
  const auto all = all_serial_factorizations(zero_ideal(zmod(30)));
  ASSERT_EQ(all.size(), 6u);
  for (const auto& a : all) {
    for (const auto& b : all) EXPECT_EQ(matching_permutations(a, b).size(), 1u);
  }
}

TEST(Overideal, CriterionExamples) {
  const Ring r = zmod(12);
  const auto fact = find_serial_factorization(zero_ideal(r)).factorization();
  EXPECT_TRUE(overideal_has_factorization(fact, ideal(r, {6})));
  EXPECT_TRUE(overideal_has_factorization(fact, ideal(r, {2})));
  const auto six = overideal_factorization(fact, ideal(r, {6}));
  EXPECT_EQ(six.factors, (std::vector<RightIdeal>{ideal(r, {3}), ideal(r, {2})}));
  const auto two = overideal_factorization(fact, ideal(r, {2}));
  EXPECT_EQ(two.factors, std::vector<RightIdeal>{ideal(r, {2})});
  const auto same = overideal_factorization(fact, zero_ideal(r));
  EXPECT_EQ(same.factors, fact.factors);
}

TEST(Overideal, Errors) {
  const Ring r = zmod(12);
  const auto fact = find_serial_factorization(ideal(r, {6})).factorization();
  try {
    overideal_has_factorization(fact, ideal(r, {4}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnOverideal);
  }
  try {
    overideal_has_factorization(fact, whole_ring(r));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ImproperIdeal);
  }
}

// Every factorable A of T3(F2) and every proper overideal B: the criterion
// agrees with whether the constructed list verifies.
TEST(Overideal, T3F2CriterionMatchesConstruction) {
  const Ring r = fixtures::t3f2();
  std::size_t pairs = 0;
  std::size_t multi = 0;
  for (const auto& a : all_right_ideals(r)) {
    if (!a.is_proper()) continue;
    const auto found = find_serial_factorization(a);
    if (!found.ok()) continue;
    for (const auto& b : overideals(a).members) {
      if (!b.is_proper()) continue;
      ++pairs;
      if (found.factorization().length() >= 2) ++multi;
      const bool criterion = overideal_has_factorization(found.factorization(), b);
      bool constructed = true;
      try {
        overideal_factorization(found.factorization(), b);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotFactorizable);
        constructed = false;
      }
      EXPECT_EQ(criterion, constructed);
      EXPECT_EQ(criterion, find_serial_factorization(b).ok());
    }
  }
  EXPECT_GT(pairs, 0u);
  EXPECT_GT(multi, 0u);
}

TEST(Overideal, T3F2NonAdjacentProduct) {
  const Ring r = fixtures::t3f2();
  const RightIdeal m1 = t3::maximal(r, 1);
  const RightIdeal m2 = t3::maximal(r, 2);
  const RightIdeal m3 = t3::maximal(r, 3);
  EXPECT_EQ(ideal_product(m1, m3), ideal_product(m3, m1));
  EXPECT_EQ(ideal_product(m1, m3), ideal_intersection(m1, m3));
  EXPECT_NE(ideal_product(m1, m2), ideal_product(m2, m1));
  const RightIdeal a = ideal_product(m1, m3);
  const auto res = verify_serial_factorization(a, {m1, m3});
  ASSERT_TRUE(res.ok());
  EXPECT_EQ(maximal_ideal_profile(res.factorization()), (std::vector<RightIdeal>{m1, m3}));
  EXPECT_FALSE(find_serial_factorization(ideal_product(m1, m2)).ok());
}

TEST(Injection, Examples) {
  const Ring r = zmod(12);
  const auto fa = find_serial_factorization(zero_ideal(r)).factorization();
  const auto f6 = overideal_factorization(fa, ideal(r, {6}));
  EXPECT_EQ(divisor_injection(fa, f6), (std::vector<std::size_t>{0, 1}));
  const auto f2 = overideal_factorization(fa, ideal(r, {2}));
  EXPECT_EQ(divisor_injection(fa, f2), std::vector<std::size_t>{1});
  EXPECT_EQ(divisor_injection(fa, fa), (std::vector<std::size_t>{0, 1}));
}

TEST(Injection, RequiresOverideal) {
  const Ring r = zmod(12);
  const auto f4 = find_serial_factorization(ideal(r, {4})).factorization();
  const auto f3 = find_serial_factorization(ideal(r, {3})).factorization();
  try {
    divisor_injection(f4, f3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnOverideal);
  }
}

TEST(Classify, Examples) {
  const auto z8 = classify_all_factor(zmod(8));
  EXPECT_TRUE(z8.all_factor);
  EXPECT_EQ(z8.classification, RingClass::ChainRing);
  const auto prod = classify_all_factor(fixtures::zmods({2, 4}));
  EXPECT_TRUE(prod.all_factor);
  EXPECT_EQ(prod.classification, RingClass::DuoChainProduct);
  EXPECT_EQ(prod.blocks, 2u);
  const auto t = classify_all_factor(fixtures::t2f2());
  EXPECT_FALSE(t.all_factor);
  EXPECT_EQ(t.classification, RingClass::Neither);
  ASSERT_TRUE(t.first_unfactorable.has_value());
  for (const auto& rep : {z8, prod, t}) EXPECT_TRUE(rep.consistent());
  EXPECT_EQ(to_string(RingClass::DuoChainProduct), "duo-chain-product");
}

TEST(Profile, Examples) {
  const Ring r = zmod(12);
  const auto f = find_serial_factorization(zero_ideal(r)).factorization();
  EXPECT_EQ(maximal_ideal_profile(f), (std::vector<RightIdeal>{ideal(r, {3}), ideal(r, {2})}));
  const auto g = find_serial_factorization(ideal(r, {4})).factorization();
  EXPECT_EQ(maximal_ideal_profile(g), std::vector<RightIdeal>{ideal(r, {2})});
}

TEST(Decomposition, Z12) {
  const Ring r = zmod(12);
  const auto f = find_serial_factorization(zero_ideal(r)).factorization();
  const auto d = check_ring_decomposition(f);
  EXPECT_TRUE(d.applicable);
  EXPECT_TRUE(d.multiplicative);
  EXPECT_TRUE(d.chain_factors);
  EXPECT_FALSE(check_ring_decomposition(find_serial_factorization(ideal(r, {4})).factorization())
                   .applicable);
}

}  // namespace
