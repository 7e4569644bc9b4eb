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


// Cross-checks against the brute-force reference in naive_oracle.hpp.

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <string>

#include "fixtures.hpp"
#include "naive_oracle.hpp"

namespace {

using namespace serfact;

struct Case {
  std::string name;
  std::function<Ring()> build;
  std::function<naive::Ring()> reference;
};

std::vector<Case> cases() {
  std::vector<Case> out;
  for (std::uint32_t n : {2u, 4u, 6u, 8u, 9u, 12u, 16u, 18u, 24u, 27u, 30u, 36u, 60u, 64u}) {
    out.push_back({"Z" + std::to_string(n), [n] { return fixtures::zmod(n); },
                   [n] { return naive::zmod(n); }});
  }
  const std::vector<std::vector<std::uint32_t>> products{
      {2, 2}, {2, 4}, {4, 2}, {3, 4}, {4, 4}, {2, 9}, {2, 2, 2}, {2, 3, 4}, {8, 4}, {2, 2, 4}};
  for (const auto& p : products) {
    std::string name = "Z";
    for (std::size_t i = 0; i < p.size(); ++i) name += (i ? "xZ" : "") + std::to_string(p[i]);
    out.push_back({name,
                   [p] {
                     std::vector<RingSpec> fs;
                     for (auto n : p) fs.push_back(RingSpec::zmod(n));
                     return build_ring(RingSpec::product(fs));
                   },
                   [p] {
                     std::vector<naive::Ring> fs;
                     for (auto n : p) fs.push_back(naive::zmod(n));
                     return naive::product(fs);
                   }});
  }
  out.push_back({"T2F2", fixtures::t2f2, [] { return naive::matrices(2, 2, true); }});
  out.push_back({"T3F2", fixtures::t3f2, [] { return naive::matrices(3, 2, true); }});
  out.push_back({"T2F3", fixtures::t2f3, [] { return naive::matrices(2, 3, true); }});
  out.push_back({"T2Z4", [] { return build_ring(RingSpec::triangular(2, RingSpec::zmod(4))); },
                 [] { return naive::matrices(2, 4, true); }});
  out.push_back({"M2F2", fixtures::m2f2, [] { return naive::matrices(2, 2, false); }});
  out.push_back({"M2F3", fixtures::m2f3, [] { return naive::matrices(2, 3, false); }});
  out.push_back({"T2F2xZ2",
                 [] {
                   return build_ring(RingSpec::product(
                       {RingSpec::triangular(2, RingSpec::zmod(2)), RingSpec::zmod(2)}));
                 },
                 [] { return naive::product({naive::matrices(2, 2, true), naive::zmod(2)}); }});
  return out;
}

void PrintTo(const Case& c, std::ostream* os) { *os << c.name; }

naive::Set to_set(const RightIdeal& a) { return {a.elements().begin(), a.elements().end()}; }

class AgainstOracle : public testing::TestWithParam<Case> {
 protected:
  void SetUp() override {
    ring_ = GetParam().build();
    ref_ = GetParam().reference();
    ideals_ = all_right_ideals(ring_);
    ref_ideals_ = naive::right_ideals(ref_);
  }

  RightIdeal lookup(const naive::Set& s) const {
    for (const auto& a : ideals_)
      if (to_set(a) == s) return a;
    ADD_FAILURE() << "ideal missing from the library lattice";
    return zero_ideal(ring_);
  }

  Ring ring_ = fixtures::zmod(2);
  naive::Ring ref_;
  std::vector<RightIdeal> ideals_;
  std::set<naive::Set> ref_ideals_;
};

TEST_P(AgainstOracle, SameTables) {
  ASSERT_EQ(ring_.order(), ref_.n);
  EXPECT_EQ(ring_.one(), ref_.one);
  for (Elem a = 0; a < ref_.n; ++a) {
    for (Elem b = 0; b < ref_.n; ++b) {
      ASSERT_EQ(ring_.add(a, b), ref_.add[a][b]);
      ASSERT_EQ(ring_.mul(a, b), ref_.mul[a][b]);
    }
  }
  EXPECT_TRUE(ring_axioms_report(ring_).ok);
}

TEST_P(AgainstOracle, SameLattice) {
  std::set<naive::Set> mine;
  for (const auto& a : ideals_) mine.insert(to_set(a));
  EXPECT_EQ(mine.size(), ideals_.size());
  EXPECT_EQ(mine, ref_ideals_);
  for (std::size_t i = 1; i < ideals_.size(); ++i) EXPECT_TRUE(size_lex_less(ideals_[i - 1], ideals_[i]));
  for (const auto& a : ideals_) {
    EXPECT_EQ(is_two_sided(a), naive::two_sided(ref_, to_set(a)));
    if (a.is_proper()) {
      EXPECT_EQ(is_uniserial_quotient(a), naive::uniserial_quotient(ref_, ref_ideals_, to_set(a)));
    }
  }
  std::size_t maximal = 0;
  for (const auto& m : maximal_right_ideals(ring_)) {
    ++maximal;
    for (const auto& s : ref_ideals_) {
      if (naive::is_subset(to_set(m), s) && s != to_set(m)) {
        EXPECT_EQ(s, naive::whole(ref_));
      }
    }
  }
  EXPECT_GT(maximal, 0u);
}

TEST_P(AgainstOracle, SameArithmetic) {
  if (ideals_.size() > 40) GTEST_SKIP() << "lattice too large for pairwise closure";
  for (const auto& a : ideals_) {
    for (const auto& b : ideals_) {
      const auto sa = to_set(a), sb = to_set(b);
      ASSERT_EQ(to_set(ideal_product(a, b)), naive::product(ref_, sa, sb));
      ASSERT_EQ(to_set(ideal_sum(a, b)), naive::sum(ref_, sa, sb));
      ASSERT_EQ(to_set(ideal_intersection(a, b)), naive::meet(sa, sb));
    }
  }
}

TEST_P(AgainstOracle, SameCentralIdempotents) {
  EXPECT_EQ(central_idempotents(ring_).all, naive::central_idempotents(ref_));
}

TEST_P(AgainstOracle, FactorizationsMatchExhaustiveSearch) {
  for (const auto& s : ref_ideals_) {
    if (s == naive::whole(ref_)) continue;
    const RightIdeal a = lookup(s);
    const auto expected = naive::factor_sets(ref_, ref_ideals_, s);
    EXPECT_LE(expected.size(), 1u);
    const auto found = find_serial_factorization(a);
    ASSERT_EQ(found.ok(), !expected.empty()) << GetParam().name << " ideal of size " << s.size();
    if (found.ok()) {
      std::set<naive::Set> got;
      for (const auto& f : found.factorization().factors) got.insert(to_set(f));
      EXPECT_EQ(got, *expected.begin());
    }
  }
}

TEST_P(AgainstOracle, SimilarityMatchesDefinition) {
  if (ideals_.size() > 40) GTEST_SKIP() << "lattice too large for pairwise scan";
  for (const auto& a : ideals_) {
    for (const auto& b : ideals_) {
      ASSERT_EQ(are_similar(a, b), naive::similar(ref_, to_set(a), to_set(b)));
    }
  }
}

TEST_P(AgainstOracle, BezoutMatchesPairScan) {
  if (ref_.n > 36) GTEST_SKIP() << "pair scan too large";
  for (const auto& a : ideals_) {
    const auto sa = to_set(a);
    bool expected = true;
    for (Elem x = 0; x < ref_.n && expected; ++x) {
      for (Elem y = x + 1; y < ref_.n && expected; ++y) {
        naive::Set g = sa;
        g.insert(x);
        g.insert(y);
        const naive::Set target = naive::closure(ref_, g);
        bool cyclic = false;
        for (Elem z : target) {
          naive::Set h = sa;
          h.insert(z);
          if (naive::closure(ref_, h) == target) {
            cyclic = true;
            break;
          }
        }
        expected = cyclic;
      }
    }
    EXPECT_EQ(is_bezout_quotient(a), expected);
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, AgainstOracle, testing::ValuesIn(cases()),
                         [](const testing::TestParamInfo<Case>& info) { return info.param.name; });

}  // namespace
