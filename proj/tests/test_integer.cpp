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

#include <cstdint>
#include <limits>
#include <numeric>

#include "serfact/error.hpp"
#include "serfact/integer.hpp"

namespace {

using namespace serfact;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ParseError;
}

TEST(FactorInt, Examples) {
  EXPECT_EQ(factor_int(12), (PrimePowerFactorization{1, {{2, 2}, {3, 1}}}));
  EXPECT_EQ(factor_int(-7), (PrimePowerFactorization{-1, {{7, 1}}}));
  EXPECT_EQ(factor_int(1), (PrimePowerFactorization{1, {}}));
  EXPECT_EQ(factor_int(-1), (PrimePowerFactorization{-1, {}}));
}

TEST(FactorInt, LargeInputs) {
  const std::int64_t p = 999'983;  // prime
  EXPECT_EQ(factor_int(p * p), (PrimePowerFactorization{1, {{p, 2}}}));
  EXPECT_EQ(factor_int(std::int64_t{1} << 62), (PrimePowerFactorization{1, {{2, 62}}}));
  EXPECT_EQ(factor_int(std::numeric_limits<std::int64_t>::max()),
            (PrimePowerFactorization{1, {{7, 2}, {73, 1}, {127, 1}, {337, 1}, {92737, 1}, {649657, 1}}}));
}

TEST(FactorInt, Errors) {
  EXPECT_EQ(code_of([] { factor_int(0); }), ErrorCode::ZeroInput);
  EXPECT_EQ(code_of([] { factor_int(std::numeric_limits<std::int64_t>::min()); }),
            ErrorCode::OutOfRange);
  // 1000003 * 1000033 has no factor below the limit.
  EXPECT_EQ(code_of([] { factor_int(std::int64_t{1'000'003} * 1'000'033); }),
            ErrorCode::FactorBudgetExceeded);
  EXPECT_EQ(code_of([] { factor_int(101 * 103, 50); }), ErrorCode::FactorBudgetExceeded);
  EXPECT_EQ(factor_int(101 * 103, 101).parts.size(), 2u);
}

TEST(ClassifyInt, Examples) {
  EXPECT_EQ(classify_int(8), ElementClass::Rigid);
  EXPECT_EQ(classify_int(-9), ElementClass::Rigid);
  EXPECT_EQ(classify_int(12), ElementClass::Semirigid);
  EXPECT_EQ(classify_int(-1), ElementClass::Invertible);
  EXPECT_EQ(classify_int(1), ElementClass::Invertible);
  EXPECT_EQ(to_string(ElementClass::Semirigid), "semirigid");
}

TEST(RigidInt, Examples) {
  const auto f60 = rigid_factorization_int(60);
  EXPECT_EQ(f60.unit, 1);
  EXPECT_EQ(f60.factors, (std::vector<std::int64_t>{4, 3, 5}));
  const auto f12 = rigid_factorization_int(-12);
  EXPECT_EQ(f12.unit, -1);
  EXPECT_EQ(f12.factors, (std::vector<std::int64_t>{4, 3}));
  EXPECT_EQ(rigid_factorization_int(7).factors, std::vector<std::int64_t>{7});
  EXPECT_EQ(code_of([] { rigid_factorization_int(-1); }), ErrorCode::NotFactorable);
}

TEST(LeftDivisor, Examples) {
  EXPECT_EQ(left_divisor_factorization_int(12, 6).factors, (std::vector<std::int64_t>{2, 3}));
  EXPECT_EQ(left_divisor_factorization_int(12, 4).factors, std::vector<std::int64_t>{4});
  const auto unit = left_divisor_factorization_int(12, 1);
  EXPECT_EQ(unit.unit, 1);
  EXPECT_TRUE(unit.factors.empty());
  const auto neg = left_divisor_factorization_int(12, -6);
  EXPECT_EQ(neg.unit, -1);
  EXPECT_EQ(neg.factors, (std::vector<std::int64_t>{2, 3}));
  EXPECT_EQ(code_of([] { left_divisor_factorization_int(12, 5); }), ErrorCode::NotADivisor);
  EXPECT_EQ(code_of([] { left_divisor_factorization_int(12, 0); }), ErrorCode::NotADivisor);
}

TEST(DivisorLattice, Examples) {
  const auto r12 = divisor_lattice_product_check(12);
  EXPECT_EQ(r12.divisors, (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(r12.chain_sizes, (std::vector<std::size_t>{3, 2}));
  EXPECT_TRUE(r12.ok());
  const auto r60 = divisor_lattice_product_check(60);
  EXPECT_EQ(r60.divisors.size(), 12u);
  EXPECT_EQ(r60.chain_sizes, (std::vector<std::size_t>{3, 2, 2}));
  EXPECT_TRUE(r60.ok());
  const auto p = divisor_lattice_product_check(9973);
  EXPECT_EQ(p.divisors, (std::vector<std::int64_t>{1, 9973}));
  EXPECT_TRUE(p.ok());
  EXPECT_EQ(divisor_lattice_product_check(1).divisors, std::vector<std::int64_t>{1});
}

TEST(DivisorLattice, Budget) {
  // Inputs above 10^12 are refused even with few divisors.
  EXPECT_EQ(code_of([] { divisor_lattice_product_check(std::int64_t{1} << 41); }),
            ErrorCode::BudgetExceeded);
}

TEST(Refinement, Examples) {
  const auto r12 = rigid_refinement_of_divisor(60, 12);
  EXPECT_EQ(r12.kind, ElementClass::Semirigid);
  EXPECT_EQ(r12.factors.factors, (std::vector<std::int64_t>{4, 3}));
  EXPECT_EQ(r12.parent_indices, (std::vector<std::size_t>{0, 1}));
  const auto r5 = rigid_refinement_of_divisor(60, 5);
  EXPECT_EQ(r5.kind, ElementClass::Rigid);
  EXPECT_EQ(r5.factors.factors, std::vector<std::int64_t>{5});
  EXPECT_EQ(r5.parent_indices, std::vector<std::size_t>{2});
  const auto r20 = rigid_refinement_of_divisor(60, 20);
  EXPECT_EQ(r20.factors.factors, (std::vector<std::int64_t>{4, 5}));
  EXPECT_EQ(r20.parent_indices, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(code_of([] { rigid_refinement_of_divisor(60, -1); }), ErrorCode::InvertibleInput);
  EXPECT_EQ(code_of([] { rigid_refinement_of_divisor(60, 7); }), ErrorCode::NotADivisor);
}

TEST(IntegerProperties, RoundTripAndDivisorSplits) {
  for (std::int64_t a = 2; a <= 3000; ++a) {
    const auto f = rigid_factorization_int(a);
    std::int64_t prod = f.unit;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      prod *= f.factors[i];
      for (std::size_t j = i + 1; j < f.factors.size(); ++j)
        EXPECT_EQ(std::gcd(f.factors[i], f.factors[j]), 1);
    }
    EXPECT_EQ(prod, a);
    for (std::int64_t b = 1; b <= a; ++b) {
      if (a % b != 0) continue;
      const auto s = left_divisor_factorization_int(a, b);
      std::int64_t q = s.unit;
      for (auto x : s.factors) q *= x;
      EXPECT_EQ(q, b) << a << " " << b;
    }
  }
}

}  // namespace
