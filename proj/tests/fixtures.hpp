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


#pragma once

#include <initializer_list>
#include <vector>

#include "serfact/factorization.hpp"
#include "serfact/ideal.hpp"
#include "serfact/lattice.hpp"
#include "serfact/ring.hpp"

namespace fixtures {

using serfact::Elem;
using serfact::Ring;
using serfact::RingSpec;
using serfact::RightIdeal;

inline Ring zmod(std::int64_t n) { return serfact::build_ring(RingSpec::zmod(n)); }
inline Ring t2f2() { return serfact::build_ring(RingSpec::triangular(2, RingSpec::zmod(2))); }
inline Ring t3f2() { return serfact::build_ring(RingSpec::triangular(3, RingSpec::zmod(2))); }
inline Ring t2f3() { return serfact::build_ring(RingSpec::triangular(2, RingSpec::zmod(3))); }
inline Ring m2f2() { return serfact::build_ring(RingSpec::matrix(2, RingSpec::zmod(2))); }
inline Ring m2f3() { return serfact::build_ring(RingSpec::matrix(2, RingSpec::zmod(3))); }

inline Ring zmods(std::initializer_list<std::int64_t> ns) {
  std::vector<RingSpec> fs;
  for (auto n : ns) fs.push_back(RingSpec::zmod(n));
  return serfact::build_ring(RingSpec::product(std::move(fs)));
}

inline RightIdeal ideal(const Ring& r, std::initializer_list<Elem> gens) {
  const std::vector<Elem> g(gens);
  return serfact::right_ideal(r, g);
}

inline std::vector<Elem> elems(const RightIdeal& a) {
  return {a.elements().begin(), a.elements().end()};
}

// Upper triangular T2(F2): entries (a11, a12, a22) are bits 0, 1, 2.
namespace t2 {
inline constexpr Elem e11 = 1;
inline constexpr Elem e12 = 2;
inline constexpr Elem e22 = 4;
inline constexpr Elem one = 5;
}  // namespace t2

}  // namespace fixtures
