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

#include "serfact/lattice.hpp"

#include "serfact/error.hpp"

namespace serfact {

OverIdealLattice overideals(const RightIdeal& a) {
  const Ring& ring = a.ring();
  const auto& index = lattice_index(ring);
  OverIdealLattice out{a, {}};
  index.above[index_of(a)].for_each(
      [&](Elem j) { out.members.emplace_back(ring, index.ideals[j]); });
  return out;
}

namespace {

std::vector<std::size_t> chain_above(const RightIdeal& a) {
  if (!a.is_proper()) {
    throw Error(ErrorCode::ImproperIdeal, "R/R is the zero module");
  }
  const auto& index = lattice_index(a.ring());
  std::vector<std::size_t> ids;
  index.above[index_of(a)].for_each([&](Elem j) { ids.push_back(j); });
  return ids;
}

// Size-sorted members form a chain iff consecutive members are nested.
bool is_chain(const LatticeIndex& index, const std::vector<std::size_t>& ids) {
  for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
    if (!index.above[ids[k]].contains(static_cast<Elem>(ids[k + 1]))) return false;
  }
  return true;
}

}  // namespace

bool is_uniserial_quotient(const RightIdeal& a) {
  const auto ids = chain_above(a);
  return is_chain(lattice_index(a.ring()), ids);
}

std::size_t chain_length(const RightIdeal& a) {
  const auto ids = chain_above(a);
  if (!is_chain(lattice_index(a.ring()), ids)) {
    throw Error(ErrorCode::NotUniserial, "R/A is not uniserial");
  }
  return ids.size() - 1;
}

std::vector<HomWitness> cyclic_homs(const RightIdeal& a, const RightIdeal& b) {
  require_same_ring(a, b);
  const Ring& ring = a.ring();
  require_within_cap(ring);
  const std::vector<Elem> labels = coset_labels(ring, *b.data());
  std::vector<HomWitness> out;
  Elem next_label = 0;
  for (Elem c = 0; c < ring.order(); ++c) {
    if (labels[c] != next_label) continue;  // not the minimal representative
    ++next_label;
    bool defined = true;
    for (Elem y : a.additive_basis()) {
      if (!b.contains(ring.mul(c, y))) {
        defined = false;
        break;
      }
    }
    if (!defined) continue;
    // K = {r : c r in B}. The induced map R/A -> R/B is injective iff K = A,
    // and R -> R/B, r |-> cr + B, is onto iff |R|/|K| = |R|/|B|.
    std::size_t kernel = 0;
    for (Elem r = 0; r < ring.order(); ++r) kernel += b.contains(ring.mul(c, r)) ? 1 : 0;
    out.push_back(HomWitness{c, true, kernel == a.size(), kernel == b.size()});
  }
  return out;
}

std::optional<HomWitness> find_isomorphism(const RightIdeal& a, const RightIdeal& b) {
  require_same_ring(a, b);
  if (a.size() != b.size()) return std::nullopt;
  for (const HomWitness& w : cyclic_homs(a, b))
    if (w.is_iso()) return w;
  return std::nullopt;
}

bool are_similar(const RightIdeal& a, const RightIdeal& b) {
  if (a == b) return true;
  return find_isomorphism(a, b).has_value();
}

bool exists_mono(const RightIdeal& a, const RightIdeal& b) {
  require_same_ring(a, b);
  if (a.size() < b.size()) return false;  // |R/A| > |R/B|
  for (const HomWitness& w : cyclic_homs(a, b))
    if (w.is_mono) return true;
  return false;
}

bool exists_epi(const RightIdeal& a, const RightIdeal& b) {
  require_same_ring(a, b);
  if (a.size() > b.size()) return false;
  for (const HomWitness& w : cyclic_homs(a, b))
    if (w.is_epi) return true;
  return false;
}

bool is_bezout_quotient(const RightIdeal& a) {
  const Ring& ring = a.ring();
  require_within_cap(ring);
  const auto& index = lattice_index(ring);

  // Cyclic submodules zR + A, recorded by lattice position.
  ElementSet seen_principal(index.ideals.size());
  ElementSet cyclic(index.ideals.size());
  std::vector<std::size_t> cyclic_ids;
  for (Elem z = 0; z < ring.order(); ++z) {
    const auto p = static_cast<Elem>(index.principal_of[z]);
    if (!seen_principal.insert(p)) continue;
    SubgroupBuilder b(ring, *a.data());
    for (Elem y : index.ideals[p]->basis) b.add(y);
    const std::size_t id = *index.find(std::move(b).finish().members);
    if (cyclic.insert(static_cast<Elem>(id))) cyclic_ids.push_back(id);
  }
  for (std::size_t i = 0; i < cyclic_ids.size(); ++i) {
    for (std::size_t j = i + 1; j < cyclic_ids.size(); ++j) {
      SubgroupBuilder b(ring, *index.ideals[cyclic_ids[i]]);
      for (Elem y : index.ideals[cyclic_ids[j]]->basis) b.add(y);
      const std::size_t id = *index.find(std::move(b).finish().members);
      if (!cyclic.contains(static_cast<Elem>(id))) return false;
    }
  }
  return true;
}

}  // namespace serfact
