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

#include "serfact/integer.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "serfact/error.hpp"

namespace serfact {

std::int64_t PrimePower::value() const {
  std::int64_t v = 1;
  for (int i = 0; i < exponent; ++i) v *= prime;
  return v;
}

std::string_view to_string(ElementClass c) {
  switch (c) {
    case ElementClass::Invertible: return "invertible";
    case ElementClass::Rigid: return "rigid";
    case ElementClass::Semirigid: return "semirigid";
  }
  return "?";
}

namespace {

std::int64_t checked_abs(std::int64_t a) {
  if (a == 0) throw Error(ErrorCode::ZeroInput, "0 has no factorization");
  if (a == std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::OutOfRange, "|a| exceeds 2^63 - 1");
  }
  return a < 0 ? -a : a;
}

}  // namespace

PrimePowerFactorization factor_int(std::int64_t a, std::int64_t limit) {
  std::int64_t m = checked_abs(a);
  PrimePowerFactorization out;
  out.sign = a < 0 ? -1 : 1;
  for (std::int64_t d = 2; m > 1; d += (d == 2 ? 1 : 2)) {
    if (d > m / d) {
      out.parts.push_back({m, 1});
      break;
    }
    if (d > limit) {
      throw Error(ErrorCode::FactorBudgetExceeded,
                  "no factor of " + std::to_string(m) + " up to " + std::to_string(limit));
    }
    if (m % d != 0) continue;
    int t = 0;
    while (m % d == 0) {
      m /= d;
      ++t;
    }
    out.parts.push_back({d, t});
  }
  return out;
}

ElementClass classify_int(std::int64_t a) {
  const auto f = factor_int(a);
  if (f.parts.empty()) return ElementClass::Invertible;
  return f.parts.size() == 1 ? ElementClass::Rigid : ElementClass::Semirigid;
}

IntFactorList rigid_factorization_int(std::int64_t a) {
  const auto f = factor_int(a);
  if (f.parts.empty()) {
    throw Error(ErrorCode::NotFactorable, "units have no rigid factorization");
  }
  IntFactorList out{f.sign, {}};
  for (const PrimePower& p : f.parts) out.factors.push_back(p.value());
  return out;
}

IntFactorList left_divisor_factorization_int(std::int64_t a, std::int64_t b) {
  const std::int64_t abs_a = checked_abs(a);
  if (b == 0 || b == std::numeric_limits<std::int64_t>::min() || abs_a % b != 0) {
    throw Error(ErrorCode::NotADivisor,
                std::to_string(b) + " does not divide " + std::to_string(a));
  }
  IntFactorList out{b < 0 ? -1 : 1, {}};
  if (abs_a == 1) return out;
  const std::int64_t abs_b = b < 0 ? -b : b;
  for (std::int64_t part : rigid_factorization_int(a).factors) {
    const std::int64_t g = std::gcd(abs_b, part);
    if (g != 1) out.factors.push_back(g);
  }
  return out;
}

DivisorLatticeReport divisor_lattice_product_check(std::int64_t a) {
  const auto f = factor_int(a);
  DivisorLatticeReport report;
  report.n = checked_abs(a);
  report.expected_count = 1;
  for (const PrimePower& p : f.parts) {
    report.chain_sizes.push_back(static_cast<std::size_t>(p.exponent) + 1);
    report.expected_count *= report.chain_sizes.back();
  }
  if (report.expected_count > kMaxLatticeDivisors ||
      report.n / kTrialDivisionLimit > kTrialDivisionLimit) {
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(report.expected_count) + " divisors exceed the lattice budget");
  }

  // Divisors enumerated independently of the factorization.
  for (std::int64_t d = 1; d <= report.n / d; ++d) {
    if (report.n % d != 0) continue;
    report.divisors.push_back(d);
    if (d != report.n / d) report.divisors.push_back(report.n / d);
  }
  std::sort(report.divisors.begin(), report.divisors.end());

  // d -> exponent vector, as a mixed-radix code over the chain sizes.
  const std::size_t k = f.parts.size();
  std::vector<std::vector<int>> vectors;
  std::vector<bool> hit(report.expected_count, false);
  report.bijective = report.divisors.size() == report.expected_count;
  for (std::int64_t d : report.divisors) {
    std::vector<int> v(k, 0);
    std::int64_t rest = d;
    for (std::size_t i = 0; i < k; ++i) {
      while (rest % f.parts[i].prime == 0) {
        rest /= f.parts[i].prime;
        ++v[i];
      }
    }
    std::size_t code = 0;
    for (std::size_t i = k; i-- > 0;) {
      if (static_cast<std::size_t>(v[i]) >= report.chain_sizes[i]) report.bijective = false;
      code = code * report.chain_sizes[i] + static_cast<std::size_t>(v[i]);
    }
    if (rest != 1 || code >= hit.size() || hit[code]) {
      report.bijective = false;
    } else {
      hit[code] = true;
    }
    vectors.push_back(std::move(v));
  }

  report.order_preserving = report.bijective;
  for (std::size_t x = 0; x < report.divisors.size() && report.order_preserving; ++x) {
    for (std::size_t y = 0; y < report.divisors.size(); ++y) {
      const bool divides = report.divisors[y] % report.divisors[x] == 0;
      bool below = true;
      for (std::size_t i = 0; i < k; ++i) below = below && vectors[x][i] <= vectors[y][i];
      if (divides != below) {
        report.order_preserving = false;
        break;
      }
    }
  }
  return report;
}

DivisorRefinement rigid_refinement_of_divisor(std::int64_t a, std::int64_t b) {
  const IntFactorList split = left_divisor_factorization_int(a, b);
  if (split.factors.empty()) {
    throw Error(ErrorCode::InvertibleInput, std::to_string(b) + " is a unit");
  }
  DivisorRefinement out;
  out.kind = split.factors.size() == 1 ? ElementClass::Rigid : ElementClass::Semirigid;
  out.factors = split;
  const std::vector<std::int64_t> parents = rigid_factorization_int(a).factors;
  std::size_t next = 0;
  for (std::int64_t factor : split.factors) {
    while (next < parents.size() && parents[next] % factor != 0) ++next;
    out.parent_indices.push_back(next++);
  }
  return out;
}

}  // namespace serfact
