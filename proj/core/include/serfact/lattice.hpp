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
 * @file lattice.hpp
 * @brief Cyclic right modules R/A: submodule lattice and homomorphisms.
 *
 * Submodules of R/A are B/A for right ideals B containing A. Every module
 * map R/A -> R/B is r + A |-> c r + B for some c with cA inside B, because
 * the map is fixed by the image of 1 + A; the hom scans below are therefore
 * complete for cyclic quotients.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "serfact/ideal.hpp"

namespace serfact {

struct OverIdealLattice {
  RightIdeal base;
  std::vector<RightIdeal> members;  // size-lex sorted, base first, R last
};

struct HomWitness {
  Elem c = 0;
  bool is_well_defined = false;
  bool is_mono = false;
  bool is_epi = false;

  bool is_iso() const { return is_mono && is_epi; }
};

OverIdealLattice overideals(const RightIdeal& a);

// Throws ImproperIdeal for A = R: the zero module is never queried.
bool is_uniserial_quotient(const RightIdeal& a);
// Composition length of a uniserial R/A; throws NotUniserial otherwise.
std::size_t chain_length(const RightIdeal& a);

// One witness per class c + B (minimal representative) with cA inside B.
std::vector<HomWitness> cyclic_homs(const RightIdeal& a, const RightIdeal& b);
std::optional<HomWitness> find_isomorphism(const RightIdeal& a, const RightIdeal& b);

bool are_similar(const RightIdeal& a, const RightIdeal& b);
bool exists_mono(const RightIdeal& a, const RightIdeal& b);
bool exists_epi(const RightIdeal& a, const RightIdeal& b);

// Every two-generated submodule xR + yR + A is cyclic. For a finite module
// this is equivalent to every finitely generated submodule being cyclic:
// merge generators pairwise.
bool is_bezout_quotient(const RightIdeal& a);

}  // namespace serfact
