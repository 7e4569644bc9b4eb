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


#include "serfact/cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

#include "serfact/error.hpp"
#include "serfact/factorization.hpp"
#include "serfact/integer.hpp"
#include "serfact/lattice.hpp"

namespace serfact::cli {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) v *= base;
  return v;
}

std::size_t structural_order(const RingSpec& spec) {
  switch (spec.kind()) {
    case RingSpec::Kind::ZMod: return static_cast<std::size_t>(spec.modulus());
    case RingSpec::Kind::Matrix:
      return power(structural_order(spec.base()), spec.size() * spec.size());
    case RingSpec::Kind::Triangular:
      return power(structural_order(spec.base()), spec.size() * (spec.size() + 1) / 2);
    case RingSpec::Kind::Product: {
      std::size_t v = 1;
      for (const RingSpec& f : spec.factors()) v *= structural_order(f);
      return v;
    }
    case RingSpec::Kind::Quotient: return build_ring(spec).order();
  }
  return 0;
}

bool is_prime_power(std::int64_t q) {
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::vector<PoolEntry> make_pool() {
  std::vector<RingSpec> specs;
  for (std::int64_t n = 2; n <= 64; ++n) specs.push_back(RingSpec::zmod(n));
  for (std::int64_t n : {72, 96, 128}) specs.push_back(RingSpec::zmod(n));

  std::vector<std::int64_t> chain;
  for (std::int64_t q = 2; q <= 256; ++q)
    if (is_prime_power(q)) chain.push_back(q);
  const std::size_t c = chain.size();
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i; j < c && chain[i] * chain[j] <= 512; ++j) {
      specs.push_back(RingSpec::product({RingSpec::zmod(chain[i]), RingSpec::zmod(chain[j])}));
    }
  }
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i; j < c && chain[i] * chain[j] <= 256; ++j) {
      for (std::size_t k = j; k < c && chain[i] * chain[j] * chain[k] <= 512; ++k) {
        specs.push_back(RingSpec::product({RingSpec::zmod(chain[i]), RingSpec::zmod(chain[j]),
                                           RingSpec::zmod(chain[k])}));
      }
    }
  }

  const RingSpec f2 = RingSpec::zmod(2);
  const RingSpec f3 = RingSpec::zmod(3);
  specs.push_back(RingSpec::triangular(2, f2));
  specs.push_back(RingSpec::triangular(3, f2));
  specs.push_back(RingSpec::triangular(2, f3));
  specs.push_back(RingSpec::matrix(2, f2));
  specs.push_back(RingSpec::matrix(2, f3));

  // e13 of T3(F2) is index 4, e12 of T2(F3) is 3, (2,2) in Z4 x Z8 is 10.
  specs.push_back(RingSpec::quotient(RingSpec::triangular(3, f2), {4}));
  specs.push_back(RingSpec::quotient(RingSpec::triangular(2, f3), {3}));
  specs.push_back(RingSpec::quotient(
      RingSpec::product({RingSpec::zmod(4), RingSpec::zmod(8)}), {10}));
  specs.push_back(RingSpec::quotient(RingSpec::zmod(64), {8}));

  std::vector<PoolEntry> pool;
  for (RingSpec& s : specs) {
    const std::size_t order = structural_order(s);
    pool.push_back({std::move(s), order});
  }
  return pool;
}

// Ordered counters plus the first counterexample.
class Tally {
 public:
  Tally(SuiteResult& result, const std::vector<const char*>& keys) : result_(result) {
    for (const char* k : keys) result_.counts.emplace_back(k, 0);
    result_.counts.emplace_back("violations", 0);
  }

  void add(std::string_view key, std::size_t k = 1) {
    for (auto& [name, value] : result_.counts) {
      if (name == key) {
        value += k;
        return;
      }
    }
    result_.counts.emplace_back(std::string(key), k);
  }

  void check(bool ok, const std::function<std::string()>& what) {
    if (ok) return;
    if (result_.passed) result_.counterexample = what();
    result_.passed = false;
    add("violations");
  }

 private:
  SuiteResult& result_;
};

std::string describe(const RightIdeal& a) {
  const Ring& ring = a.ring();
  std::string s = ring.name() + ", ideal {";
  std::size_t shown = 0;
  for (Elem x : a.elements()) {
    if (shown == 12) {
      s += ", ...";
      break;
    }
    if (shown++ != 0) s += ", ";
    s += std::to_string(x);
  }
  return s + "} (size " + std::to_string(a.size()) + ")";
}

Ring build(const PoolEntry& entry, const SuiteOptions& options) {
  return build_ring(entry.spec, {options.cap, kDefaultTableThreshold});
}

std::vector<RightIdeal> proper_ideals(const Ring& ring) {
  const auto& index = lattice_index(ring);
  std::vector<RightIdeal> out;
  for (std::size_t i = 0; i < index.whole(); ++i) out.emplace_back(ring, index.ideals[i]);
  return out;
}

std::size_t sum_index(const Ring& ring, std::size_t i, std::size_t j) {
  const auto& index = lattice_index(ring);
  SubgroupBuilder b(ring, *index.ideals[i]);
  for (Elem y : index.ideals[j]->basis) b.add(y);
  return *index.find(std::move(b).finish().members);
}

std::vector<std::optional<SerialFactorization>> factor_all(const std::vector<RightIdeal>& ideals) {
  std::vector<std::optional<SerialFactorization>> out;
  for (const RightIdeal& a : ideals) {
    FactorizationResult r = find_serial_factorization(a);
    if (r.ok()) {
      out.emplace_back(r.factorization());
    } else {
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

bool same_factor_set(const std::vector<RightIdeal>& a, const std::vector<RightIdeal>& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const RightIdeal& x) {
    return std::find(b.begin(), b.end(), x) != b.end();
  });
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// ---------------------------------------------------------------------------

void lemma_product_intersection(const SuiteOptions& opt, Tally& t) {
  for (const PoolEntry& e : test_pool()) {
    const Ring ring = build(e, opt);
    t.add("rings");
    const auto ideals = proper_ideals(ring);
    const std::size_t m = ideals.size();
    const std::size_t whole = lattice_index(ring).whole();
    std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        ok[i][j] = ok[j][i] = sum_index(ring, i, j) == whole &&
                              ideal_product(ideals[i], ideals[j]) ==
                                  ideal_product(ideals[j], ideals[i]);
      }
    }
    auto check_family = [&](const std::vector<RightIdeal>& fam) {
      if (!is_coindependent(fam)) return;
      t.add("families");
      const RightIdeal product = ideal_product(ring, fam);
      const RightIdeal meet = ideal_intersection(ring, fam);
      t.check(product == meet, [&] { return "product differs from intersection: " + describe(fam[0]); });
      bool all_two_sided = true;
      for (const RightIdeal& a : fam) all_two_sided = all_two_sided && is_two_sided(a);
      t.check(all_two_sided, [&] { return "member not two-sided: " + describe(fam[0]); });
      if (all_two_sided) t.add("two_sided_families");
    };
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (!ok[i][j]) continue;
        check_family({ideals[i], ideals[j]});
        for (std::size_t k = j + 1; k < m; ++k) {
          if (ok[i][k] && ok[j][k]) check_family({ideals[i], ideals[j], ideals[k]});
        }
      }
    }
  }
}

void comaximality(const SuiteOptions& opt, Tally& t) {
  for (const PoolEntry& e : test_pool()) {
    const Ring ring = build(e, opt);
    t.add("rings");
    const auto& index = lattice_index(ring);
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < index.whole(); ++i)
      if (index.two_sided[i]) ids.push_back(i);
    auto ideal = [&](std::size_t i) { return RightIdeal(ring, index.ideals[i]); };
    auto check_family = [&](const std::vector<RightIdeal>& fam) {
      t.add("families");
      const bool coindependent = is_coindependent(fam);
      if (coindependent) t.add("coindependent");
      t.check(coindependent == comaximality_criterion(fam),
              [&] { return "coindependence differs from pairwise comaximality: " + describe(fam[0]); });
    };
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        const RightIdeal x = ideal(ids[a]);
        const RightIdeal y = ideal(ids[b]);
        check_family({x, y});
        if (sum_index(ring, ids[a], ids[b]) == index.whole()) {
          t.add("comaximal_pairs");
          const RightIdeal rhs = ideal_sum(ideal_product(x, y), ideal_product(y, x));
          t.check(ideal_intersection(x, y) == rhs,
                  [&] { return "intersection differs from AB + BA: " + describe(x); });
        }
        for (std::size_t c = b + 1; c < ids.size(); ++c) check_family({x, y, ideal(ids[c])});
      }
    }
  }
}

void uniqueness(const SuiteOptions& opt, Tally& t) {
  for (const PoolEntry& e : test_pool()) {
    if (e.order > 128) continue;
    const Ring ring = build(e, opt);
    t.add("rings");
    for (const RightIdeal& a : proper_ideals(ring)) {
      t.add("ideals");
      const auto all = all_serial_factorizations(a, kDefaultMaxFactors, opt.budget);
      if (all.empty()) continue;
      t.add("factorable");
      const std::size_t n = all.front().length();
      if (n >= 2) t.add("multi_factor");
      t.check(all.size() == factorial(n),
              [&] { return "expected every permutation exactly once: " + describe(a); });
      for (const SerialFactorization& f : all) {
        t.check(f.length() == n && matching_permutations(all.front(), f).size() == 1,
                [&] { return "factorizations differ beyond a unique permutation: " + describe(a); });
      }
      const RingDecompositionCheck d = check_ring_decomposition(all.front());
      t.check(!d.applicable || (d.multiplicative && d.chain_factors),
              [&] { return "R/A is not the product of chain rings R/A_i: " + describe(a); });
    }
  }
}

void idempotent_reconstruction(const SuiteOptions& opt, Tally& t) {
  for (const PoolEntry& e : test_pool()) {
    if (e.order > 128) continue;
    const Ring ring = build(e, opt);
    t.add("rings");
    for (const RightIdeal& a : proper_ideals(ring)) {
      t.add("ideals");
      const FactorizationResult found = find_serial_factorization(a);
      const auto all = all_serial_factorizations(a, kDefaultMaxFactors, opt.budget);
      t.check(found.ok() == !all.empty(),
              [&] { return "constructive and exhaustive searches disagree: " + describe(a); });
      if (!found.ok() || all.empty()) continue;
      const bool listed = std::any_of(all.begin(), all.end(), [&](const SerialFactorization& f) {
        return f.factors == found.factorization().factors;
      });
      t.check(listed, [&] { return "constructed factorization not found exhaustively: " + describe(a); });
      t.add("reconstructed");
    }
  }
}

void zmod_concordance(const SuiteOptions& opt, Tally& t) {
  for (std::int64_t n = 2; n <= 512; ++n) {
    const Ring ring = build_ring(RingSpec::zmod(n), {opt.cap, kDefaultTableThreshold});
    t.add("moduli");
    const RightIdeal zero = zero_ideal(ring);
    const FactorizationResult r = find_serial_factorization(zero);
    t.check(r.ok(), [&] { return "zero ideal of " + ring.name() + " has no factorization"; });
    if (!r.ok()) continue;
    std::vector<RightIdeal> expected;
    for (const PrimePower& p : factor_int(n).parts) {
      const Elem gen[] = {static_cast<Elem>(p.value() % n)};
      expected.push_back(right_ideal(ring, gen));
    }
    t.add("factors", expected.size());
    t.check(same_factor_set(r.factorization().factors, expected),
            [&] { return "factors differ from prime-power ideals in " + ring.name(); });
  }
}

void triangular(const SuiteOptions& opt, Tally& t) {
  for (std::size_t k : {2, 3}) {
    const Ring ring = build_ring(RingSpec::triangular(k, RingSpec::zmod(2)),
                                 {opt.cap, kDefaultTableThreshold});
    t.add("rings");
    // Stored entries are (r, c) with r <= c in row-major order.
    std::vector<RightIdeal> maximal;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t slot = 0;
      for (std::size_t r = 0; r < i; ++r) slot += k - r;
      ElementSet members(ring.order());
      for (Elem x = 0; x < ring.order(); ++x)
        if (ring.decode(x)[slot] == 0) members.insert(x);
      const auto elems = members.to_vector();
      RightIdeal m = right_ideal(ring, elems);
      t.check(m.members() == members, [&] { return "M_i is not a right ideal in " + ring.name(); });
      maximal.push_back(std::move(m));
      t.add("maximal_ideals");
    }
    for (std::size_t i = 0; i < k; ++i) {
      const RightIdeal& mi = maximal[i];
      t.check(ideal_product(mi, mi) == mi, [&] { return "M_i^2 != M_i: " + describe(mi); });
      if (i + 1 < k) {
        const RightIdeal& mj = maximal[i + 1];
        t.check(ideal_product(mi, mj) != ideal_product(mj, mi),
                [&] { return "M_i M_{i+1} = M_{i+1} M_i: " + describe(mi); });
      }
      for (std::size_t j = i + 2; j < k; ++j) {
        const RightIdeal& mj = maximal[j];
        const RightIdeal meet = ideal_intersection(mi, mj);
        t.check(ideal_product(mi, mj) == meet && ideal_product(mj, mi) == meet,
                [&] { return "M_i M_j differs from M_i meet M_j: " + describe(mi); });
      }
    }
    // Products over nonempty index sets without consecutive indices.
    std::set<std::size_t> predicted;
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      if (mask & (mask >> 1)) continue;
      std::vector<RightIdeal> chosen;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) chosen.push_back(maximal[i]);
      predicted.insert(index_of(ideal_product(ring, chosen)));
    }
    std::set<std::size_t> found;
    const auto& index = lattice_index(ring);
    for (std::size_t i = 0; i < index.whole(); ++i) {
      if (!index.two_sided[i]) continue;
      if (find_serial_factorization(RightIdeal(ring, index.ideals[i])).ok()) found.insert(i);
    }
    t.add("predicted", predicted.size());
    t.add("two_sided_factorable", found.size());
    t.check(found == predicted, [&] {
      return "factorable two-sided ideals differ from no-consecutive products in " + ring.name();
    });
  }
}

void matrix_trivial(const SuiteOptions& opt, Tally& t) {
  for (std::int64_t q : {2, 3}) {
    const Ring ring = build_ring(RingSpec::matrix(2, RingSpec::zmod(q)),
                                 {opt.cap, kDefaultTableThreshold});
    t.add("rings");
    for (const RightIdeal& a : proper_ideals(ring)) {
      t.add("ideals");
      const auto all = all_serial_factorizations(a, kDefaultMaxFactors, opt.budget);
      for (const SerialFactorization& f : all) {
        t.check(f.length() <= 1, [&] { return "factorization with two or more factors: " + describe(a); });
      }
      if (a.is_zero()) {
        t.check(all.empty(), [&] { return "zero ideal factors in " + ring.name(); });
      }
      if (!all.empty()) t.add("factorable");
    }
  }
}

void overideal(const SuiteOptions& opt, Tally& t) {
  for (const PoolEntry& e : test_pool()) {
    if (e.order > 128) continue;
    const Ring ring = build(e, opt);
    t.add("rings");
    const auto ideals = proper_ideals(ring);
    const auto facts = factor_all(ideals);
    const auto& index = lattice_index(ring);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (!facts[i]) continue;
      const SerialFactorization& fa = *facts[i];
      index.above[i].for_each([&](Elem j) {
        if (j == index.whole()) return;
        const RightIdeal& b = ideals[j];
        t.add("pairs");
        const bool criterion = overideal_has_factorization(fa, b);
        t.check(criterion == facts[j].has_value(),
                [&] { return "criterion differs from constructive answer: " + describe(b); });
        if (!criterion || !facts[j]) return;
        t.add("factorable_overideals");
        std::vector<RightIdeal> expected;
        for (const RightIdeal& f : fa.factors) {
          RightIdeal s = ideal_sum(b, f);
          if (s.is_proper()) expected.push_back(std::move(s));
        }
        try {
          const SerialFactorization fb = overideal_factorization(fa, b);
          t.check(fb.factors == expected,
                  [&] { return "constructed factors are not (B + A_i): " + describe(b); });
          t.check(matching_permutations(fb, *facts[j]).size() == 1,
                  [&] { return "constructed factors differ from the factorization of B: " + describe(b); });
        } catch (const Error& err) {
          t.check(false, [&] { return std::string(err.what()) + ": " + describe(b); });
        }
        try {
          const auto sigma = divisor_injection(fa, *facts[j]);
          std::set<std::size_t> image(sigma.begin(), sigma.end());
          bool fits = image.size() == sigma.size() && sigma.size() == facts[j]->length();
          for (std::size_t k = 0; k < sigma.size() && fits; ++k)
            fits = fa.factors[sigma[k]].is_subset_of(facts[j]->factors[k]);
          t.check(fits, [&] { return "divisor injection is invalid: " + describe(b); });
        } catch (const Error& err) {
          t.check(false, [&] { return std::string(err.what()) + ": " + describe(b); });
        }
      });
    }
  }
}

void similarity(const SuiteOptions& opt, Tally& t) {
  for (const PoolEntry& e : test_pool()) {
    const Ring ring = build(e, opt);
    t.add("rings");
    const auto ideals = proper_ideals(ring);
    const auto facts = factor_all(ideals);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (!facts[i]) continue;
      t.add("factorable_sources");
      for (std::size_t j = 0; j < ideals.size(); ++j) {
        if (i == j || ideals[i].size() != ideals[j].size()) continue;
        if (!are_similar(ideals[i], ideals[j])) continue;
        t.add("similar_pairs");
        t.check(facts[j].has_value(),
                [&] { return "similar ideal has no factorization: " + describe(ideals[j]); });
        t.check(is_uniserial_quotient(ideals[i]),
                [&] { return "distinct similar ideals with non-uniserial quotient: " + describe(ideals[i]); });
      }
    }
  }
}

void classification(const SuiteOptions& opt, Tally& t) {
  for (const PoolEntry& e : test_pool()) {
    const Ring ring = build(e, opt);
    t.add("rings");
    const AllFactorReport r = classify_all_factor(ring);
    if (r.all_factor) t.add("all_factor");
    if (r.classification == RingClass::ChainRing) t.add("chain");
    if (r.classification == RingClass::DuoChainProduct) t.add("duo_chain_product");
    t.check(r.consistent(), [&] {
      return ring.name() + ": all_factor=" + (r.all_factor ? "true" : "false") +
             " but class " + std::string(to_string(r.classification));
    });
  }
}

void bezout_quotient(const SuiteOptions& opt, Tally& t) {
  for (const PoolEntry& e : test_pool()) {
    const Ring ring = build(e, opt);
    t.add("rings");
    const auto& index = lattice_index(ring);
    const auto ideals = proper_ideals(ring);
    const auto facts = factor_all(ideals);

    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (!facts[i]) continue;
      t.add("factorable");
      t.check(is_bezout_quotient(ideals[i]),
              [&] { return "R/A is not Bezout: " + describe(ideals[i]); });

      const std::size_t n = facts[i]->length();
      if (!generation_number_at_most(ideals[i], n, opt.budget)) continue;
      t.add("generator_bound_cases");
      for (const RightIdeal& f : facts[i]->factors) {
        t.check(generation_number_at_most(f, n + 1, opt.budget).has_value(),
                [&] { return "factor needs more than n + 1 generators: " + describe(f); });
      }
    }

    std::vector<std::size_t> principal;
    for (Elem x = 1; x < ring.order(); ++x) principal.push_back(index.principal_of[x]);
    std::sort(principal.begin(), principal.end());
    principal.erase(std::unique(principal.begin(), principal.end()), principal.end());
    const bool principal_factor = std::all_of(principal.begin(), principal.end(), [&](std::size_t p) {
      return p == index.whole() || facts[p].has_value();
    });
    if (!principal_factor) continue;
    t.add("principal_factor_rings");
    // p + q for principal p, q; A is one-and-a-half generated iff every
    // principal p inside A has a partner q inside A with p + q = A.
    const std::size_t k = principal.size();
    std::vector<std::vector<std::size_t>> sums(k, std::vector<std::size_t>(k));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b)
        sums[a][b] = sums[b][a] = sum_index(ring, principal[a], principal[b]);
    for (std::size_t target = 1; target < index.ideals.size(); ++target) {
      t.add("nonzero_ideals");
      for (std::size_t a = 0; a < k; ++a) {
        if (!index.above[principal[a]].contains(static_cast<Elem>(target))) continue;
        bool completed = false;
        for (std::size_t b = 0; b < k && !completed; ++b) completed = sums[a][b] == target;
        t.check(completed, [&] {
          return "not one-and-a-half generated: " +
                 describe(RightIdeal(ring, index.ideals[target]));
        });
      }
    }
  }
}

void maximal_profile(const SuiteOptions& opt, Tally& t) {
  for (const PoolEntry& e : test_pool()) {
    if (e.order > 128) continue;
    const Ring ring = build(e, opt);
    t.add("rings");
    const auto ideals = proper_ideals(ring);
    const auto facts = factor_all(ideals);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (!facts[i]) continue;
      t.add("factorizations");
      try {
        const auto profile = maximal_ideal_profile(*facts[i]);
        t.check(profile.size() == facts[i]->length(),
                [&] { return "profile length mismatch: " + describe(ideals[i]); });
      } catch (const Error& err) {
        t.check(false, [&] { return std::string(err.what()) + ": " + describe(ideals[i]); });
      }
    }
  }
}

void integer_rigid(const SuiteOptions& opt, Tally& t) {
  (void)opt;
  constexpr std::int64_t kLimit = 1'000'000;
  // Smallest-prime-factor sieve as an independent factorization.
  std::vector<std::int32_t> spf(kLimit + 1, 0);
  for (std::int64_t i = 2; i <= kLimit; ++i) {
    if (spf[i] != 0) continue;
    for (std::int64_t j = i; j <= kLimit; j += i)
      if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
  }
  for (std::int64_t m = 2; m <= kLimit; ++m) {
    std::vector<std::int64_t> sieve;
    for (std::int64_t rest = m; rest > 1;) {
      const std::int64_t p = spf[rest];
      std::int64_t q = 1;
      while (rest % p == 0) {
        rest /= p;
        q *= p;
      }
      sieve.push_back(q);
    }
    for (std::int64_t a : {m, -m}) {
      t.add("integers");
      const IntFactorList f = rigid_factorization_int(a);
      std::int64_t product = f.unit;
      for (std::int64_t x : f.factors) product *= x;
      t.check(product == a, [&] { return "round trip failed for " + std::to_string(a); });
      t.check(f.factors == sieve, [&] { return "factors differ from sieve for " + std::to_string(a); });
      const ElementClass cls = classify_int(a);
      t.check((cls == ElementClass::Rigid) == (sieve.size() == 1) &&
                  (cls == ElementClass::Semirigid) == (sieve.size() >= 2),
              [&] { return "classification mismatch for " + std::to_string(a); });
    }
  }

  for (std::int64_t a = 1; a <= 10'000; ++a) {
    const DivisorLatticeReport r = divisor_lattice_product_check(a);
    t.add("lattices");
    t.check(r.ok() && r.divisors.size() == r.expected_count,
            [&] { return "divisor lattice is not the product of chains for " + std::to_string(a); });
    const auto parts = factor_int(a).parts;
    auto exponents = [&](std::int64_t d) {
      std::vector<int> v;
      for (const PrimePower& p : parts) {
        int e = 0;
        while (d % p.prime == 0) {
          d /= p.prime;
          ++e;
        }
        v.push_back(e);
      }
      return v;
    };
    for (std::int64_t x : r.divisors) {
      const auto vx = exponents(x);
      for (std::int64_t y : r.divisors) {
        const auto vy = exponents(y);
        const auto vg = exponents(std::gcd(x, y));
        const auto vl = exponents(std::lcm(x, y));
        bool ok = true;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          ok = ok && vg[i] == std::min(vx[i], vy[i]) && vl[i] == std::max(vx[i], vy[i]);
        }
        t.check(ok, [&] { return "meet or join not preserved in divisors of " + std::to_string(a); });
      }
    }
  }

  for (std::int64_t a = 2; a <= 512; ++a) {
    const Ring ring = build_ring(RingSpec::zmod(a), {opt.cap, kDefaultTableThreshold});
    const FactorizationResult fact = find_serial_factorization(zero_ideal(ring));
    t.check(fact.ok(), [&] { return "zero ideal of " + ring.name() + " has no factorization"; });
    if (!fact.ok()) continue;
    for (std::int64_t b = 1; b <= a; ++b) {
      if (a % b != 0) continue;
      t.add("divisor_splits");
      const IntFactorList split = left_divisor_factorization_int(a, b);
      if (b == 1) {
        t.check(split.factors.empty(), [&] { return "unit divisor has factors for " + std::to_string(a); });
        continue;
      }
      const Elem gen[] = {static_cast<Elem>(b % a)};
      const RightIdeal big = right_ideal(ring, gen);
      std::vector<RightIdeal> expected;
      for (std::int64_t g : split.factors) {
        const Elem ggen[] = {static_cast<Elem>(g % a)};
        expected.push_back(right_ideal(ring, ggen));
      }
      const SerialFactorization over = overideal_factorization(fact.factorization(), big);
      t.check(same_factor_set(over.factors, expected), [&] {
        return "divisor split differs from overideal factors for a=" + std::to_string(a) +
               ", b=" + std::to_string(b);
      });
    }
  }
}

struct SuiteDef {
  std::string_view name;
  void (*run)(const SuiteOptions&, Tally&);
  std::vector<const char*> keys;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs = {
      {"lemma-product-intersection", lemma_product_intersection,
       {"rings", "families", "two_sided_families"}},
      {"comaximality", comaximality, {"rings", "families", "coindependent", "comaximal_pairs"}},
      {"uniqueness", uniqueness, {"rings", "ideals", "factorable", "multi_factor"}},
      {"idempotent-reconstruction", idempotent_reconstruction,
       {"rings", "ideals", "reconstructed"}},
      {"zmod-concordance", zmod_concordance, {"moduli", "factors"}},
      {"triangular", triangular,
       {"rings", "maximal_ideals", "predicted", "two_sided_factorable"}},
      {"matrix-trivial", matrix_trivial, {"rings", "ideals", "factorable"}},
      {"overideal", overideal, {"rings", "pairs", "factorable_overideals"}},
      {"similarity", similarity, {"rings", "factorable_sources", "similar_pairs"}},
      {"classification", classification,
       {"rings", "all_factor", "chain", "duo_chain_product"}},
      {"bezout-quotient", bezout_quotient,
       {"rings", "factorable", "generator_bound_cases", "principal_factor_rings",
        "nonzero_ideals"}},
      {"maximal-profile", maximal_profile, {"rings", "factorizations"}},
      {"integer-rigid", integer_rigid, {"integers", "lattices", "divisor_splits"}},
  };
  return defs;
}

}  // namespace

const std::vector<PoolEntry>& test_pool() {
  static const std::vector<PoolEntry> pool = make_pool();
  return pool;
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const SuiteDef& d : suites()) out.push_back(d.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  for (const SuiteDef& d : suites()) {
    if (d.name != name) continue;
    SuiteResult result;
    result.name = std::string(name);
    const auto start = std::chrono::steady_clock::now();
    Tally tally(result, d.keys);
    d.run(options, tally);
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }
  throw Error(ErrorCode::ParseError, "unknown suite \"" + std::string(name) + "\"");
}

}  // namespace serfact::cli
