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

/**
 * @file integer.hpp
 * @brief Rigid factorizations in the integers.
 *
 * In Z every element is invariant and right coprime means gcd 1, so a rigid
 * element is a prime power up to sign and a rigid factorization is the
 * prime-power decomposition. Factors are normalized positive with the sign
 * carried as a separate unit.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace serfact {

inline constexpr std::int64_t kTrialDivisionLimit = 1'000'000;

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  std::int64_t value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct PrimePowerFactorization {
  int sign = 1;
  std::vector<PrimePower> parts;  // strictly increasing primes

  friend bool operator==(const PrimePowerFactorization&,
                         const PrimePowerFactorization&) = default;
};

// Trial division. A cofactor with no divisor up to `limit` is accepted as
// prime only when limit^2 exceeds it; otherwise FactorBudgetExceeded.
// Throws ZeroInput for 0 and OutOfRange for INT64_MIN.
PrimePowerFactorization factor_int(std::int64_t a, std::int64_t limit = kTrialDivisionLimit);

enum class ElementClass { Invertible, Rigid, Semirigid };
std::string_view to_string(ElementClass c);

ElementClass classify_int(std::int64_t a);

struct IntFactorList {
  int unit = 1;
  std::vector<std::int64_t> factors;
};

// Prime powers in increasing prime order. Throws NotFactorable for +-1.
IntFactorList rigid_factorization_int(std::int64_t a);

// b = unit * prod gcd(b, a_i) over the rigid factors a_i of a, with the
// trivial gcds omitted. Throws NotADivisor unless b divides a.
IntFactorList left_divisor_factorization_int(std::int64_t a, std::int64_t b);

struct DivisorLatticeReport {
  std::int64_t n = 0;  // |a|
  std::vector<std::int64_t> divisors;  // increasing
  std::vector<std::size_t> chain_sizes;  // t_i + 1 per prime
  std::size_t expected_count = 0;  // product of chain_sizes
  bool bijective = false;
  bool order_preserving = false;  // both directions

  bool ok() const { return bijective && order_preserving; }
};

inline constexpr std::size_t kMaxLatticeDivisors = 4096;

// Matches the divisors of |a| with exponent vectors and checks that d | e
// exactly when the vectors compare componentwise. Throws BudgetExceeded past
// kMaxLatticeDivisors divisors.
DivisorLatticeReport divisor_lattice_product_check(std::int64_t a);

struct DivisorRefinement {
  ElementClass kind = ElementClass::Rigid;
  IntFactorList factors;
  std::vector<std::size_t> parent_indices;  // strictly increasing, 0-based
};

// Throws NotADivisor or InvertibleInput.
DivisorRefinement rigid_refinement_of_divisor(std::int64_t a, std::int64_t b);

}  // namespace serfact
