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
 * @file factorization.hpp
 * @brief Serial factorizations A = A_1 ... A_n of right ideals.
 *
 * A serial factorization has proper, pairwise commuting, coindependent
 * factors with uniserial quotients R/A_i, and product A. When n >= 2 all
 * factors and A are two-sided and R/A splits as the ring product of the
 * R/A_i, which makes the factorization computable from the centrally
 * primitive idempotents of R/A.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "serfact/ideal.hpp"

namespace serfact {

enum class FailureReason {
  NotProper,
  NotTwoSidedTarget,
  NoCentralSplit,
  FactorsDontCommute,
  NotCoindependent,
  ProductMismatch,
  QuotientNotUniserial,
  CanonicalMapNotBijective,
};

std::string_view to_string(FailureReason reason);

struct FactorizationFailure {
  FailureReason reason = FailureReason::NotProper;
  std::vector<std::size_t> factor_indices;
  std::vector<Elem> witness;
  std::string detail;
};

struct CertificateEntry {
  std::string check;
  bool passed = false;
  std::string witness;
};

struct SerialFactorization {
  RightIdeal target;
  std::vector<RightIdeal> factors;
  std::vector<CertificateEntry> certificate;

  std::size_t length() const { return factors.size(); }
};

class FactorizationResult {
 public:
  FactorizationResult(SerialFactorization value) : value_(std::move(value)) {}
  FactorizationResult(FactorizationFailure failure, std::vector<CertificateEntry> certificate)
      : value_(std::move(failure)), failed_certificate_(std::move(certificate)) {}

  bool ok() const { return std::holds_alternative<SerialFactorization>(value_); }
  const SerialFactorization& factorization() const {
    return std::get<SerialFactorization>(value_);
  }
  const FactorizationFailure& failure() const { return std::get<FactorizationFailure>(value_); }
  const std::vector<CertificateEntry>& certificate() const {
    return ok() ? factorization().certificate : failed_certificate_;
  }

 private:
  std::variant<SerialFactorization, FactorizationFailure> value_;
  std::vector<CertificateEntry> failed_certificate_;
};

// Checks, in order: properness, commuting, coindependence, product,
// uniseriality, bijectivity of r + A |-> (r + A_i)_i, and two-sidedness of
// every ideal when n >= 2. The first failing check is returned.
FactorizationResult verify_serial_factorization(const RightIdeal& target,
                                                const std::vector<RightIdeal>& factors);

// Constructs the factorization from the centrally primitive idempotents
// x_i + A of R/A as A_i = A + (1 - x_i)R. The construction is forced, so a
// failure certifies that A has no serial factorization.
FactorizationResult find_serial_factorization(const RightIdeal& target);

inline constexpr std::size_t kDefaultMaxFactors = 4;

// Exhaustive search over ordered tuples of overideals with uniserial
// quotient. Throws BudgetExceeded if max_n truncates the search or more than
// `budget` tuples would be verified.
std::vector<SerialFactorization> all_serial_factorizations(
    const RightIdeal& target, std::size_t max_n = kDefaultMaxFactors,
    std::size_t budget = kDefaultSearchBudget);

// All permutations s with a.factors[i] == b.factors[s[i]].
std::vector<std::vector<std::size_t>> matching_permutations(const SerialFactorization& a,
                                                            const SerialFactorization& b);

// B (proper, containing the target) factors iff it contains some factor or
// is two-sided.
bool overideal_has_factorization(const SerialFactorization& fact, const RightIdeal& b);

// [B + A_i] with the factors equal to R omitted, verified before return.
SerialFactorization overideal_factorization(const SerialFactorization& fact,
                                            const RightIdeal& b);

// Injective s with A_{s(j)} inside B_j, lexicographically smallest;
// indices are 0-based.
std::vector<std::size_t> divisor_injection(const SerialFactorization& fact_a,
                                           const SerialFactorization& fact_b);

enum class RingClass { ChainRing, DuoChainProduct, Neither };
std::string_view to_string(RingClass c);

struct AllFactorReport {
  bool all_factor = false;
  RingClass classification = RingClass::Neither;
  std::optional<RightIdeal> first_unfactorable;
  std::size_t blocks = 0;
  std::size_t ideals_checked = 0;

  bool consistent() const { return all_factor == (classification != RingClass::Neither); }
};

// Both sides computed independently: factorization of every proper right
// ideal, and the chain / duo-chain-product structure of the ring.
AllFactorReport classify_all_factor(const Ring& ring);

// The unique maximal right ideal over each factor. Throws ProfileViolation
// if uniqueness, distinctness, coverage or two-sidedness fails.
std::vector<RightIdeal> maximal_ideal_profile(const SerialFactorization& fact);

struct RingDecompositionCheck {
  bool applicable = false;  // n >= 2
  bool multiplicative = true;
  bool chain_factors = true;
};

// For n >= 2: r + A |-> (r + A_i)_i respects multiplication and each R/A_i
// is a right chain ring.
RingDecompositionCheck check_ring_decomposition(const SerialFactorization& fact);

}  // namespace serfact
