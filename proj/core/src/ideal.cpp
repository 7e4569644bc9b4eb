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

#include "serfact/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "serfact/error.hpp"

namespace serfact {

RightIdeal::RightIdeal(Ring ring, std::shared_ptr<const Subgroup> data,
                       std::vector<Elem> generators)
    : ring_(std::move(ring)), data_(std::move(data)), generators_(std::move(generators)) {}

bool size_lex_less(const RightIdeal& a, const RightIdeal& b) {
  return size_lex_less(a.members(), b.members());
}

void require_same_ring(const RightIdeal& a, const RightIdeal& b) {
  if (!a.ring().same_as(b.ring())) {
    throw Error(ErrorCode::RingMismatch,
                "ideals live in " + a.ring().name() + " and " + b.ring().name());
  }
}

namespace {

RightIdeal wrap(const Ring& ring, Subgroup&& s, std::vector<Elem> generators = {}) {
  return RightIdeal(ring, std::make_shared<const Subgroup>(std::move(s)), std::move(generators));
}

// xR as the span of x*t over an additive generating set t of R.
Subgroup principal_subgroup(const Ring& ring, Elem x) {
  SubgroupBuilder b(ring);
  for (Elem t : ring.additive_generators()) b.add(ring.mul(x, t));
  return std::move(b).finish();
}

}  // namespace

RightIdeal right_ideal(const Ring& ring, std::span<const Elem> generators) {
  SubgroupBuilder b(ring);
  for (Elem g : generators) {
    if (g >= ring.order()) {
      throw Error(ErrorCode::OutOfRange, "generator " + std::to_string(g) + " outside " +
                                             ring.name());
    }
    for (Elem t : ring.additive_generators()) b.add(ring.mul(g, t));
  }
  return wrap(ring, std::move(b).finish(),
              std::vector<Elem>(generators.begin(), generators.end()));
}

RightIdeal zero_ideal(const Ring& ring) { return wrap(ring, SubgroupBuilder(ring).finish()); }

RightIdeal whole_ring(const Ring& ring) {
  const Elem one = ring.one();
  return right_ideal(ring, std::span<const Elem>(&one, 1));
}

RightIdeal ideal_from_members(const Ring& ring, const ElementSet& members) {
  return wrap(ring, subgroup_from_members(ring, members));
}

RightIdeal ideal_product(const RightIdeal& a, const RightIdeal& b) {
  require_same_ring(a, b);
  const Ring& ring = a.ring();
  // Products of additive generators span {x*y : x in A, y in B}.
  SubgroupBuilder out(ring);
  for (Elem x : a.additive_basis())
    for (Elem y : b.additive_basis()) out.add(ring.mul(x, y));
  return wrap(ring, std::move(out).finish());
}

RightIdeal ideal_product(const Ring& ring, std::span<const RightIdeal> factors) {
  if (factors.empty()) return whole_ring(ring);
  RightIdeal acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = ideal_product(acc, factors[i]);
  return acc;
}

RightIdeal ideal_sum(const RightIdeal& a, const RightIdeal& b) {
  require_same_ring(a, b);
  SubgroupBuilder out(a.ring(), *a.data());
  for (Elem y : b.additive_basis()) out.add(y);
  std::vector<Elem> gens;
  if (!a.generators().empty() && !b.generators().empty()) {
    gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  }
  return wrap(a.ring(), std::move(out).finish(), std::move(gens));
}

RightIdeal ideal_intersection(const RightIdeal& a, const RightIdeal& b) {
  require_same_ring(a, b);
  return ideal_from_members(a.ring(), a.members() & b.members());
}

RightIdeal ideal_intersection(const Ring& ring, std::span<const RightIdeal> family) {
  if (family.empty()) return whole_ring(ring);
  ElementSet acc = family.front().members();
  for (std::size_t i = 1; i < family.size(); ++i) {
    require_same_ring(family.front(), family[i]);
    acc &= family[i].members();
  }
  return ideal_from_members(ring, acc);
}

std::optional<std::pair<Elem, Elem>> two_sided_violation(const RightIdeal& a) {
  const Ring& ring = a.ring();
  for (Elem r : ring.additive_generators())
    for (Elem x : a.additive_basis())
      if (!a.contains(ring.mul(r, x))) return std::pair{r, x};
  return std::nullopt;
}

bool is_two_sided(const RightIdeal& a) { return !two_sided_violation(a).has_value(); }

namespace {

void require_family(std::span<const RightIdeal> family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    require_same_ring(family.front(), family[i]);
    if (!family[i].is_proper()) {
      throw Error(ErrorCode::ImproperMember,
                  "family member " + std::to_string(i) + " equals the whole ring");
    }
  }
}

}  // namespace

bool is_coindependent(std::span<const RightIdeal> family) {
  require_family(family);
  if (family.size() <= 1) return true;
  const Ring& ring = family.front().ring();
  for (std::size_t i = 0; i < family.size(); ++i) {
    ElementSet others(ring.order());
    others.fill();
    for (std::size_t j = 0; j < family.size(); ++j)
      if (j != i) others &= family[j].members();
    const RightIdeal rest = ideal_from_members(ring, others);
    if (ideal_sum(family[i], rest).size() != ring.order()) return false;
  }
  return true;
}

bool comaximality_criterion(std::span<const RightIdeal> family) {
  require_family(family);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!is_two_sided(family[i])) {
      throw Error(ErrorCode::NotTwoSided,
                  "family member " + std::to_string(i) + " is not a two-sided ideal");
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (ideal_sum(family[i], family[j]).size() != family[i].ring().order()) return false;
  return true;
}

RightIdeal annihilator_of_quotient(const RightIdeal& a) {
  const Ring& ring = a.ring();
  ElementSet members(ring.order());
  for (Elem r = 0; r < ring.order(); ++r) {
    bool kills = true;
    for (Elem t : ring.additive_generators()) {
      if (!a.contains(ring.mul(t, r))) {
        kills = false;
        break;
      }
    }
    if (kills) members.insert(r);
  }
  return ideal_from_members(ring, members);
}

// ---------------------------------------------------------------------------
// Lattice of all right ideals

namespace {

std::shared_ptr<const LatticeIndex> build_lattice_index(const Ring& ring) {
  require_within_cap(ring);
  const std::size_t n = ring.order();

  std::unordered_map<ElementSet, std::size_t, ElementSetHash> principal_ids;
  std::vector<Subgroup> principals;
  std::vector<std::size_t> principal_raw(n);
  for (Elem x = 0; x < n; ++x) {
    Subgroup p = principal_subgroup(ring, x);
    auto [it, fresh] = principal_ids.try_emplace(p.members, principals.size());
    if (fresh) principals.push_back(std::move(p));
    principal_raw[x] = it->second;
  }

  // Every right ideal is a sum of principal ones: breadth-first closure of
  // {0} under adding a principal ideal.
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  std::vector<std::shared_ptr<const Subgroup>> found;
  {
    auto zero = std::make_shared<const Subgroup>(SubgroupBuilder(ring).finish());
    seen.emplace(zero->members, 0);
    found.push_back(std::move(zero));
  }
  for (std::size_t head = 0; head < found.size(); ++head) {
    const auto current = found[head];
    for (const Subgroup& p : principals) {
      if (p.members.is_subset_of(current->members)) continue;
      SubgroupBuilder b(ring, *current);
      for (Elem y : p.basis) b.add(y);
      Subgroup next = std::move(b).finish();
      if (seen.contains(next.members)) continue;
      seen.emplace(next.members, found.size());
      found.push_back(std::make_shared<const Subgroup>(std::move(next)));
    }
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return size_lex_less(a->members, b->members);
  });

  auto index = std::make_shared<LatticeIndex>();
  index->ideals = std::move(found);
  const std::size_t m = index->ideals.size();
  for (std::size_t i = 0; i < m; ++i) {
    index->by_hash.emplace_back(index->ideals[i]->members.hash(), i);
  }
  std::sort(index->by_hash.begin(), index->by_hash.end());

  index->above.assign(m, ElementSet(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      if (index->ideals[i]->members.is_subset_of(index->ideals[j]->members)) {
        index->above[i].insert(static_cast<Elem>(j));
      }
    }
  }

  std::vector<std::size_t> principal_sorted(principals.size());
  for (std::size_t k = 0; k < principals.size(); ++k) {
    principal_sorted[k] = *index->find(principals[k].members);
  }
  index->principal_of.resize(n);
  for (Elem x = 0; x < n; ++x) index->principal_of[x] = principal_sorted[principal_raw[x]];

  index->two_sided.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Subgroup& s = *index->ideals[i];
    bool ok = true;
    for (Elem r : ring.additive_generators()) {
      for (Elem x : s.basis) {
        if (!s.members.contains(ring.mul(r, x))) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    index->two_sided[i] = ok;
  }
  return index;
}

}  // namespace

std::optional<std::size_t> LatticeIndex::find(const ElementSet& members) const {
  const std::size_t h = members.hash();
  auto it = std::lower_bound(by_hash.begin(), by_hash.end(), std::pair{h, std::size_t{0}});
  for (; it != by_hash.end() && it->first == h; ++it) {
    if (ideals[it->second]->members == members) return it->second;
  }
  return std::nullopt;
}

const LatticeIndex& lattice_index(const Ring& ring) {
  auto& memo = ring.memo();
  std::call_once(memo.lattice_once, [&] { memo.lattice = build_lattice_index(ring); });
  return *static_cast<const LatticeIndex*>(memo.lattice.get());
}

std::vector<RightIdeal> all_right_ideals(const Ring& ring) {
  const auto& index = lattice_index(ring);
  std::vector<RightIdeal> out;
  out.reserve(index.ideals.size());
  for (const auto& data : index.ideals) out.emplace_back(ring, data);
  return out;
}

RightIdeal ideal_at(const Ring& ring, std::size_t i) {
  return RightIdeal(ring, lattice_index(ring).ideals.at(i));
}

std::size_t index_of(const RightIdeal& a) {
  const auto found = lattice_index(a.ring()).find(a.members());
  if (!found) throw std::logic_error("element set is not a right ideal of " + a.ring().name());
  return *found;
}

std::vector<RightIdeal> maximal_right_ideals(const Ring& ring) {
  const auto& index = lattice_index(ring);
  std::vector<RightIdeal> out;
  for (std::size_t i = 0; i + 1 < index.ideals.size(); ++i) {
    if (index.above[i].count() == 2) out.emplace_back(ring, index.ideals[i]);
  }
  return out;
}

bool is_right_chain(const Ring& ring) {
  const auto& index = lattice_index(ring);
  for (std::size_t i = 0; i + 1 < index.ideals.size(); ++i) {
    if (!index.above[i].contains(static_cast<Elem>(i + 1))) return false;
  }
  return true;
}

bool is_right_duo(const Ring& ring) {
  const auto& index = lattice_index(ring);
  return std::all_of(index.two_sided.begin(), index.two_sided.end(), [](bool b) { return b; });
}

std::optional<std::vector<Elem>> generation_number_at_most(const RightIdeal& a, std::size_t k,
                                                           std::size_t budget) {
  if (a.is_zero()) return std::vector<Elem>{};
  const Ring& ring = a.ring();
  const auto& index = lattice_index(ring);

  // x and y generate the same right ideal whenever xR = yR, so the search
  // runs over distinct principal ideals inside A, each represented by its
  // smallest element.
  std::vector<std::size_t> classes;
  std::vector<Elem> representative;
  for (Elem x : a.elements()) {
    if (x == 0) continue;
    const std::size_t p = index.principal_of[x];
    if (std::find(classes.begin(), classes.end(), p) == classes.end()) {
      classes.push_back(p);
      representative.push_back(x);
    }
  }

  std::size_t visited = 0;
  std::vector<std::size_t> pick;
  for (std::size_t s = 1; s <= k && s <= classes.size(); ++s) {
    pick.resize(s);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      if (++visited > budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    "generator search exceeded " + std::to_string(budget) + " tuples");
      }
      SubgroupBuilder b(ring, *index.ideals[classes[pick[0]]]);
      for (std::size_t t = 1; t < s; ++t)
        for (Elem y : index.ideals[classes[pick[t]]]->basis) b.add(y);
      if (b.size() == a.size()) {
        std::vector<Elem> witness;
        for (std::size_t t : pick) witness.push_back(representative[t]);
        return witness;
      }
      // Next s-combination in lexicographic order.
      std::size_t pos = s;
      while (pos > 0 && pick[pos - 1] == classes.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t t = pos; t < s; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace serfact
