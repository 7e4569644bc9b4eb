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
 * @file ring_json.hpp
 * @brief JSON encoding of ring specs, elements and ideals for the CLI.
 *
 * Grammar: {"type": "zmod", "n": N} | {"type": "matrix" | "triangular",
 * "size": K, "base": SPEC} | {"type": "product", "factors": [SPEC, ...]} |
 * {"type": "quotient", "base": SPEC, "ideal_generators": [I, ...]}.
 * Unknown keys are rejected.
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "serfact/ideal.hpp"
#include "serfact/ring.hpp"

namespace serfact::cli {

using Json = nlohmann::ordered_json;

// Throws Error(ParseError) with a "line L, column C" prefix.
RingSpec parse_ring_spec(std::string_view text);
// Inline JSON when the argument starts with '{', otherwise a file path.
RingSpec load_ring_spec(const std::string& arg);

Json spec_to_json(const RingSpec& spec);

// "3,4" -> {3, 4}; the empty string is the empty list.
std::vector<Elem> parse_element_list(std::string_view csv);
// "[[3],[4]]" -> {{3}, {4}}.
std::vector<std::vector<Elem>> parse_generator_lists(std::string_view text);

// Size, generating set of least size and the two-sided flag.
Json ideal_to_json(const RightIdeal& ideal);
// Smallest generating set found by generation_number_at_most.
std::vector<Elem> small_generating_set(const RightIdeal& ideal);

}  // namespace serfact::cli
