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

#include "serfact/factorization.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "serfact/error.hpp"
#include "serfact/lattice.hpp"

namespace serfact {

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::NotProper: return "NotProper";
    case FailureReason::NotTwoSidedTarget: return "NotTwoSidedTarget";
    case FailureReason::NoCentralSplit: return "NoCentralSplit";
    case FailureReason::FactorsDontCommute: return "FactorsDontCommute";
    case FailureReason::NotCoindependent: return "NotCoindependent";
    case FailureReason::ProductMismatch: return "ProductMismatch";
    case FailureReason::QuotientNotUniserial: return "QuotientNotUniserial";
    case FailureReason::CanonicalMapNotBijective: return "CanonicalMapNotBijective";
  }
  return "?";
}

std::string_view to_string(RingClass c) {
  switch (c) {
    case RingClass::ChainRing: return "chain";
    case RingClass::DuoChainProduct: return "duo-chain-product";
    case RingClass::Neither: return "neither";
  }
  return "?";
}

namespace {

std::string index_list(const std::vector<std::size_t>& ids) {
  std::string out;
  for (std::size_t i : ids) {
    if (!out.empty()) out += ",";
    out += std::to_string(i);
  }
  return out;
}

std::string elem_list(const Ring& ring, const std::vector<Elem>& xs) {
  std::string out;
  for (Elem x : xs) {
    if (!out.empty()) out += ", ";
    out += ring.format(x);
  }
  return out;
}

// Smallest element of the symmetric difference of two member sets.
Elem first_difference(const ElementSet& a, const ElementSet& b) {
  for (Elem x = 0; x < a.universe(); ++x) {
    if (a.contains(x) != b.contains(x)) return x;
  }
  return 0;
}

class Verifier {
 public:
  Verifier(const RightIdeal& target, const std::vector<RightIdeal>& factors)
      : target_(target), factors_(factors), ring_(target.ring()) {}

  FactorizationResult run() {
    for (const RightIdeal& f : factors_) require_same_ring(target_, f);
    require_within_cap(ring_);
    if (factors_.empty()) {
      return fail("proper", {FailureReason::NotProper, {}, {}, "empty factor list"});
    }
    if (auto f = check_proper()) return fail("proper", std::move(*f));
    pass("proper");
    if (auto f = check_commuting()) return fail("commuting", std::move(*f));
    pass("commuting");
    if (auto f = check_coindependent()) return fail("coindependent", std::move(*f));
    pass("coindependent");
    if (auto f = check_product()) return fail("product", std::move(*f));
    pass("product");
    if (auto f = check_uniserial()) return fail("uniserial", std::move(*f));
    pass("uniserial");
    if (auto f = check_canonical_map()) return fail("canonical_map", std::move(*f));
    pass("canonical_map");
    if (factors_.size() >= 2) {
      // Holds for every valid factorization with n >= 2; a failure here is
      // reported rather than asserted.
      if (auto f = check_two_sided()) return fail("two_sided", std::move(*f));
      pass("two_sided");
    }
    return FactorizationResult(SerialFactorization{target_, factors_, std::move(cert_)});
  }

 private:
  void pass(const char* check) { cert_.push_back({check, true, ""}); }

  FactorizationResult fail(const char* check, FactorizationFailure failure) {
    std::string witness = failure.detail;
    if (!failure.factor_indices.empty()) {
      witness += (witness.empty() ? "" : "; ") + std::string("factors ") +
                 index_list(failure.factor_indices);
    }
    if (!failure.witness.empty()) {
      witness += (witness.empty() ? "" : "; ") + std::string("elements ") +
                 elem_list(ring_, failure.witness);
    }
    cert_.push_back({check, false, witness});
    return FactorizationResult(std::move(failure), std::move(cert_));
  }

  std::optional<FactorizationFailure> check_proper() const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (!factors_[i].is_proper()) {
        return FactorizationFailure{FailureReason::NotProper, {i}, {}, "factor equals R"};
      }
    }
    return std::nullopt;
  }

  std::optional<FactorizationFailure> check_commuting() const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      for (std::size_t j = i + 1; j < factors_.size(); ++j) {
        const RightIdeal ij = ideal_product(factors_[i], factors_[j]);
        const RightIdeal ji = ideal_product(factors_[j], factors_[i]);
        if (ij != ji) {
          return FactorizationFailure{FailureReason::FactorsDontCommute,
                                      {i, j},
                                      {first_difference(ij.members(), ji.members())},
                                      "A_i A_j differs from A_j A_i"};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<FactorizationFailure> check_coindependent() const {
    const std::size_t n = factors_.size();
    for (std::size_t i = 0; i < n && n >= 2; ++i) {
      std::vector<RightIdeal> others;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) others.push_back(factors_[j]);
      const RightIdeal sum = ideal_sum(factors_[i], ideal_intersection(ring_, others));
      if (sum.is_proper()) {
        return FactorizationFailure{FailureReason::NotCoindependent, {i}, {},
                                    "A_i + (intersection of the others) is proper"};
      }
    }
    return std::nullopt;
  }

  std::optional<FactorizationFailure> check_product() const {
    const RightIdeal product = ideal_product(ring_, factors_);
    if (product == target_) return std::nullopt;
    return FactorizationFailure{FailureReason::ProductMismatch, {},
                                {first_difference(product.members(), target_.members())},
                                "product differs from target"};
  }

  std::optional<FactorizationFailure> check_uniserial() const {
    const auto& index = lattice_index(ring_);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      std::vector<std::size_t> ids;
      index.above[index_of(factors_[i])].for_each([&](Elem j) { ids.push_back(j); });
      for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
        if (index.above[ids[k]].contains(static_cast<Elem>(ids[k + 1]))) continue;
        // Two incomparable overideals; each contributes an element the other lacks.
        const ElementSet& lo = index.ideals[ids[k]]->members;
        const ElementSet& hi = index.ideals[ids[k + 1]]->members;
        Elem x = 0;
        Elem y = 0;
        for (Elem e = 0; e < ring_.order(); ++e) {
          if (lo.contains(e) && !hi.contains(e) && x == 0) x = e;
          if (hi.contains(e) && !lo.contains(e) && y == 0) y = e;
        }
        return FactorizationFailure{FailureReason::QuotientNotUniserial, {i}, {x, y},
                                    "incomparable submodules of R/A_i"};
      }
    }
    return std::nullopt;
  }

  std::optional<FactorizationFailure> check_canonical_map() const {
    const std::vector<Elem> target_labels = coset_labels(ring_, *target_.data());
    const std::size_t domain = ring_.order() / target_.size();
    std::vector<std::vector<Elem>> labels;
    std::size_t codomain = 1;
    bool overflow = false;
    for (const RightIdeal& f : factors_) {
      labels.push_back(coset_labels(ring_, *f.data()));
      const std::size_t q = ring_.order() / f.size();
      if (codomain > std::numeric_limits<std::size_t>::max() / q) overflow = true;
      else codomain *= q;
    }
    if (overflow || codomain != domain) {
      return FactorizationFailure{FailureReason::CanonicalMapNotBijective, {}, {},
                                  "|R/A| differs from the product of the |R/A_i|"};
    }
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> code_of_class(domain, kUnset);
    std::vector<Elem> class_of_code(codomain, std::numeric_limits<Elem>::max());
    std::vector<Elem> first_of_code(codomain, 0);
    for (Elem r = 0; r < ring_.order(); ++r) {
      std::size_t code = 0;
      for (std::size_t i = factors_.size(); i-- > 0;) {
        code = code * (ring_.order() / factors_[i].size()) + labels[i][r];
      }
      const Elem cls = target_labels[r];
      if (code_of_class[cls] == kUnset) {
        code_of_class[cls] = code;
      } else if (code_of_class[cls] != code) {
        return FactorizationFailure{FailureReason::CanonicalMapNotBijective, {}, {r},
                                    "map is not well defined"};
      }
      if (class_of_code[code] == std::numeric_limits<Elem>::max()) {
        class_of_code[code] = cls;
        first_of_code[code] = r;
      } else if (class_of_code[code] != cls) {
        return FactorizationFailure{FailureReason::CanonicalMapNotBijective, {},
                                    {first_of_code[code], r}, "map is not injective"};
      }
    }
    return std::nullopt;
  }

  std::optional<FactorizationFailure> check_two_sided() const {
    if (auto v = two_sided_violation(target_)) {
      return FactorizationFailure{FailureReason::NotTwoSidedTarget, {}, {v->first, v->second},
                                  "target is not two-sided"};
    }
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (auto v = two_sided_violation(factors_[i])) {
        return FactorizationFailure{FailureReason::NotTwoSidedTarget, {i},
                                    {v->first, v->second}, "factor is not two-sided"};
      }
    }
    return std::nullopt;
  }

  const RightIdeal& target_;
  const std::vector<RightIdeal>& factors_;
  const Ring& ring_;
  std::vector<CertificateEntry> cert_;
};

}  // namespace

FactorizationResult verify_serial_factorization(const RightIdeal& target,
                                                const std::vector<RightIdeal>& factors) {
  return Verifier(target, factors).run();
}

FactorizationResult find_serial_factorization(const RightIdeal& target) {
  const Ring& ring = target.ring();
  require_within_cap(ring);
  if (!target.is_proper()) {
    throw Error(ErrorCode::ImproperIdeal, "R has no serial factorization");
  }
  if (is_uniserial_quotient(target)) return verify_serial_factorization(target, {target});

  std::vector<CertificateEntry> cert{{"uniserial_target", false, ""}};
  if (auto v = two_sided_violation(target)) {
    FactorizationFailure f{FailureReason::NotTwoSidedTarget, {}, {v->first, v->second},
                           "R/A is not uniserial and A is not two-sided"};
    cert.push_back({"two_sided", false,
                    "r*x outside A for r = " + ring.format(v->first) +
                        ", x = " + ring.format(v->second)});
    return FactorizationResult(std::move(f), std::move(cert));
  }
  cert.push_back({"two_sided", true, ""});

  const Ring quotient = quotient_ring(ring, target.members(), {ring.cap(), 0});
  const std::vector<Elem> labels = coset_labels(ring, *target.data());
  std::vector<Elem> reps(quotient.order());
  for (Elem x = ring.order(); x-- > 0;) reps[labels[x]] = x;

  const CentralIdempotentSet ci = central_idempotents(quotient);
  if (ci.primitive.size() < 2) {
    std::vector<Elem> witness;
    for (Elem e : ci.all) witness.push_back(reps[e]);
    cert.push_back({"central_split", false,
                    "central idempotents of R/A: " + elem_list(ring, witness)});
    return FactorizationResult(
        FactorizationFailure{FailureReason::NoCentralSplit, {}, std::move(witness),
                             "R/A is indecomposable but not uniserial"},
        std::move(cert));
  }

  std::vector<RightIdeal> factors;
  for (Elem e : ci.primitive) {
    const Elem complement = ring.sub(ring.one(), reps[e]);
    const Elem gens[] = {complement};
    factors.push_back(ideal_sum(target, right_ideal(ring, gens)));
  }
  return verify_serial_factorization(target, factors);
}

std::vector<SerialFactorization> all_serial_factorizations(const RightIdeal& target,
                                                           std::size_t max_n,
                                                           std::size_t budget) {
  const Ring& ring = target.ring();
  require_within_cap(ring);
  std::vector<SerialFactorization> out;
  if (!target.is_proper() || max_n == 0) return out;

  const auto& index = lattice_index(ring);
  std::vector<RightIdeal> pool;
  index.above[index_of(target)].for_each([&](Elem j) {
    if (j == index.whole()) return;
    RightIdeal b(ring, index.ideals[j]);
    if (is_uniserial_quotient(b)) pool.push_back(std::move(b));
  });

  // Commuting and pairwise comaximality are necessary for any pair of
  // factors, so tuples are cliques of this relation.
  const std::size_t m = pool.size();
  std::vector<std::vector<bool>> compatible(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool ok = ideal_product(pool[i], pool[j]) == ideal_product(pool[j], pool[i]) &&
                      !ideal_sum(pool[i], pool[j]).is_proper();
      compatible[i][j] = compatible[j][i] = ok;
    }
  }

  std::size_t visited = 0;
  std::vector<std::size_t> tuple;
  std::vector<RightIdeal> factors;
  auto extendable = [&]() {
    for (std::size_t c = 0; c < m; ++c) {
      if (std::all_of(tuple.begin(), tuple.end(),
                      [&](std::size_t t) { return compatible[t][c]; })) {
        return true;
      }
    }
    return false;
  };
  auto recurse = [&](auto&& self) -> void {
    if (!tuple.empty()) {
      if (++visited > budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    "more than " + std::to_string(budget) + " candidate tuples");
      }
      FactorizationResult r = verify_serial_factorization(target, factors);
      if (r.ok()) out.push_back(r.factorization());
      if (tuple.size() == max_n) {
        if (extendable()) {
          throw Error(ErrorCode::BudgetExceeded,
                      "factor count bound " + std::to_string(max_n) + " reached");
        }
        return;
      }
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (!std::all_of(tuple.begin(), tuple.end(),
                       [&](std::size_t t) { return compatible[t][c]; })) {
        continue;
      }
      tuple.push_back(c);
      factors.push_back(pool[c]);
      self(self);
      tuple.pop_back();
      factors.pop_back();
    }
  };
  recurse(recurse);
  return out;
}

std::vector<std::vector<std::size_t>> matching_permutations(const SerialFactorization& a,
                                                            const SerialFactorization& b) {
  std::vector<std::vector<std::size_t>> out;
  if (a.factors.size() != b.factors.size()) return out;
  std::vector<std::size_t> perm(a.factors.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (std::size_t i = 0; i < perm.size() && match; ++i) {
      match = a.factors[i] == b.factors[perm[i]];
    }
    if (match) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

void require_proper_overideal(const SerialFactorization& fact, const RightIdeal& b) {
  require_same_ring(fact.target, b);
  if (!fact.target.is_subset_of(b)) {
    throw Error(ErrorCode::NotAnOverideal, "B does not contain the factored ideal");
  }
  if (!b.is_proper()) throw Error(ErrorCode::ImproperIdeal, "B equals R");
}

}  // namespace

bool overideal_has_factorization(const SerialFactorization& fact, const RightIdeal& b) {
  require_proper_overideal(fact, b);
  for (const RightIdeal& f : fact.factors)
    if (f.is_subset_of(b)) return true;
  return is_two_sided(b);
}

SerialFactorization overideal_factorization(const SerialFactorization& fact,
                                            const RightIdeal& b) {
  if (!overideal_has_factorization(fact, b)) {
    throw Error(ErrorCode::NotFactorizable,
                "B contains no factor and is not two-sided");
  }
  std::vector<RightIdeal> factors;
  for (const RightIdeal& f : fact.factors) {
    RightIdeal s = ideal_sum(b, f);
    if (s.is_proper()) factors.push_back(std::move(s));
  }
  FactorizationResult r = verify_serial_factorization(b, factors);
  if (!r.ok()) {
    throw Error(ErrorCode::NotFactorizable,
                "induced factors fail verification: " +
                    std::string(to_string(r.failure().reason)));
  }
  return r.factorization();
}

std::vector<std::size_t> divisor_injection(const SerialFactorization& fact_a,
                                           const SerialFactorization& fact_b) {
  require_same_ring(fact_a.target, fact_b.target);
  if (!fact_a.target.is_subset_of(fact_b.target)) {
    throw Error(ErrorCode::NotAnOverideal, "B does not contain A");
  }
  const std::size_t n = fact_a.factors.size();
  const std::size_t m = fact_b.factors.size();
  std::vector<std::vector<bool>> fits(m, std::vector<bool>(n));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i)
      fits[j][i] = fact_a.factors[i].is_subset_of(fact_b.factors[j]);

  std::vector<std::size_t> sigma;
  std::vector<bool> used(n, false);
  auto search = [&](auto&& self, std::size_t j) -> bool {
    if (j == m) return true;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i] || !fits[j][i]) continue;
      used[i] = true;
      sigma.push_back(i);
      if (self(self, j + 1)) return true;
      sigma.pop_back();
      used[i] = false;
    }
    return false;
  };
  if (!search(search, 0)) {
    throw Error(ErrorCode::NoInjectionFound, "no factor of A fits under some factor of B");
  }
  return sigma;
}

AllFactorReport classify_all_factor(const Ring& ring) {
  require_within_cap(ring);
  AllFactorReport report;
  const auto& index = lattice_index(ring);

  report.all_factor = true;
  for (std::size_t i = 0; i < index.whole(); ++i) {
    RightIdeal a(ring, index.ideals[i]);
    ++report.ideals_checked;
    if (!find_serial_factorization(a).ok()) {
      report.all_factor = false;
      report.first_unfactorable = std::move(a);
      break;
    }
  }

  if (is_right_chain(ring)) {
    report.classification = RingClass::ChainRing;
    report.blocks = 1;
    return report;
  }
  const CentralIdempotentSet ci = central_idempotents(ring);
  report.blocks = ci.primitive.size();
  if (ci.primitive.size() < 2) {
    report.classification = RingClass::Neither;
    return report;
  }
  // Right ideals of the block eR are the right ideals of R inside eR.
  bool all_blocks = true;
  for (Elem e : ci.primitive) {
    const Elem gens[] = {e};
    const std::size_t block = index_of(right_ideal(ring, gens));
    std::vector<std::size_t> ids;
    for (std::size_t j = 0; j < index.ideals.size(); ++j) {
      if (index.above[j].contains(static_cast<Elem>(block))) ids.push_back(j);
    }
    for (std::size_t k = 0; k + 1 < ids.size() && all_blocks; ++k) {
      all_blocks = index.above[ids[k]].contains(static_cast<Elem>(ids[k + 1]));
    }
    for (std::size_t j : ids) all_blocks = all_blocks && index.two_sided[j];
    if (!all_blocks) break;
  }
  report.classification = all_blocks ? RingClass::DuoChainProduct : RingClass::Neither;
  return report;
}

std::vector<RightIdeal> maximal_ideal_profile(const SerialFactorization& fact) {
  const std::vector<RightIdeal> maximal = maximal_right_ideals(fact.target.ring());
  std::vector<RightIdeal> profile;
  for (std::size_t i = 0; i < fact.factors.size(); ++i) {
    std::optional<RightIdeal> found;
    for (const RightIdeal& m : maximal) {
      if (!fact.factors[i].is_subset_of(m)) continue;
      if (found) {
        throw Error(ErrorCode::ProfileViolation,
                    "factor " + std::to_string(i) + " lies in two maximal right ideals");
      }
      found = m;
    }
    if (!found) {
      throw Error(ErrorCode::ProfileViolation,
                  "factor " + std::to_string(i) + " lies in no maximal right ideal");
    }
    for (const RightIdeal& p : profile) {
      if (p == *found) {
        throw Error(ErrorCode::ProfileViolation, "two factors share a maximal right ideal");
      }
    }
    if (fact.factors.size() >= 2 && !is_two_sided(*found)) {
      throw Error(ErrorCode::ProfileViolation,
                  "maximal right ideal over factor " + std::to_string(i) +
                      " is not two-sided");
    }
    profile.push_back(std::move(*found));
  }
  for (const RightIdeal& m : maximal) {
    if (!fact.target.is_subset_of(m)) continue;
    if (std::find(profile.begin(), profile.end(), m) == profile.end()) {
      throw Error(ErrorCode::ProfileViolation,
                  "a maximal right ideal over the target matches no factor");
    }
  }
  return profile;
}

RingDecompositionCheck check_ring_decomposition(const SerialFactorization& fact) {
  RingDecompositionCheck out;
  if (fact.factors.size() < 2) return out;
  out.applicable = true;
  const Ring& ring = fact.target.ring();
  require_within_cap(ring);
  for (const RightIdeal& f : fact.factors) {
    const Ring quotient = quotient_ring(ring, f.members(), {ring.cap(), 0});
    const std::vector<Elem> labels = coset_labels(ring, *f.data());
    for (Elem x = 0; x < ring.order() && out.multiplicative; ++x) {
      for (Elem y = 0; y < ring.order(); ++y) {
        if (quotient.mul(labels[x], labels[y]) != labels[ring.mul(x, y)]) {
          out.multiplicative = false;
          break;
        }
      }
    }
    out.chain_factors = out.chain_factors && is_right_chain(quotient);
  }
  return out;
}

}  // namespace serfact
