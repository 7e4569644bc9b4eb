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
 * @file ideal.hpp
 * @brief Right ideals as closed element sets, and the ideal calculus on them.
 *
 * A RightIdeal is always closed: it contains 0 and is closed under addition
 * and right multiplication by every ring element. Products, sums and
 * intersections are computed exactly on element sets.
 */

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "serfact/element_set.hpp"
#include "serfact/ring.hpp"

namespace serfact {

inline constexpr std::size_t kDefaultSearchBudget = 1'000'000;

class RightIdeal {
 public:
  RightIdeal(Ring ring, std::shared_ptr<const Subgroup> data,
             std::vector<Elem> generators = {});

  const Ring& ring() const { return ring_; }
  const ElementSet& members() const { return data_->members; }
  std::span<const Elem> elements() const { return data_->elements; }
  std::span<const Elem> additive_basis() const { return data_->basis; }
  // Generators recorded at construction; empty when not recorded.
  const std::vector<Elem>& generators() const { return generators_; }
  const std::shared_ptr<const Subgroup>& data() const { return data_; }

  std::size_t size() const { return data_->elements.size(); }
  bool contains(Elem x) const { return data_->members.contains(x); }
  bool is_zero() const { return size() == 1; }
  bool is_proper() const { return size() < ring_.order(); }
  bool is_subset_of(const RightIdeal& other) const {
    return members().is_subset_of(other.members());
  }

  friend bool operator==(const RightIdeal& a, const RightIdeal& b) {
    return a.ring_.same_as(b.ring_) && a.members() == b.members();
  }

 private:
  Ring ring_;
  std::shared_ptr<const Subgroup> data_;
  std::vector<Elem> generators_;
};

// Sorts by (size, lexicographic element list).
bool size_lex_less(const RightIdeal& a, const RightIdeal& b);

using IdealFamily = std::vector<RightIdeal>;

RightIdeal right_ideal(const Ring& ring, std::span<const Elem> generators);
RightIdeal zero_ideal(const Ring& ring);
RightIdeal whole_ring(const Ring& ring);
// Wraps a set that is already a right ideal (no closure is computed).
RightIdeal ideal_from_members(const Ring& ring, const ElementSet& members);

RightIdeal ideal_product(const RightIdeal& a, const RightIdeal& b);
// Left-to-right iterated product; the empty product is R.
RightIdeal ideal_product(const Ring& ring, std::span<const RightIdeal> factors);
RightIdeal ideal_sum(const RightIdeal& a, const RightIdeal& b);
RightIdeal ideal_intersection(const RightIdeal& a, const RightIdeal& b);
RightIdeal ideal_intersection(const Ring& ring, std::span<const RightIdeal> family);

bool is_two_sided(const RightIdeal& a);
// Some (r, x) with x in A and r*x outside A, if any.
std::optional<std::pair<Elem, Elem>> two_sided_violation(const RightIdeal& a);

// Throws ImproperMember when a member equals R.
bool is_coindependent(std::span<const RightIdeal> family);
// Pairwise comaximality; throws NotTwoSided / ImproperMember on bad input.
bool comaximality_criterion(std::span<const RightIdeal> family);

// {r : R r is contained in A}; always two-sided.
RightIdeal annihilator_of_quotient(const RightIdeal& a);

std::vector<RightIdeal> maximal_right_ideals(const Ring& ring);

// A generating set of at most k elements (the smallest size that works), or
// nullopt if none exists. Throws BudgetExceeded if the search would visit
// more than `budget` candidate tuples.
std::optional<std::vector<Elem>> generation_number_at_most(
    const RightIdeal& a, std::size_t k, std::size_t budget = kDefaultSearchBudget);

bool is_right_chain(const Ring& ring);
bool is_right_duo(const Ring& ring);

// All right ideals of a ring, computed once per ring and shared.
struct LatticeIndex {
  std::vector<std::shared_ptr<const Subgroup>> ideals;  // size-lex sorted
  std::vector<ElementSet> above;  // above[i] = {j : ideal i is inside ideal j}
  std::vector<std::size_t> principal_of;  // element x -> index of xR
  std::vector<bool> two_sided;

  std::optional<std::size_t> find(const ElementSet& members) const;
  std::size_t whole() const { return ideals.size() - 1; }

  // Internal: members hash -> candidate indices.
  std::vector<std::pair<std::size_t, std::size_t>> by_hash;
};

const LatticeIndex& lattice_index(const Ring& ring);
std::vector<RightIdeal> all_right_ideals(const Ring& ring);
RightIdeal ideal_at(const Ring& ring, std::size_t index);
// Position of A in lattice_index(A.ring()).
std::size_t index_of(const RightIdeal& a);

void require_same_ring(const RightIdeal& a, const RightIdeal& b);

}  // namespace serfact
