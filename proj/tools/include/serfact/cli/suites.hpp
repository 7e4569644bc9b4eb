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
 * @file suites.hpp
 * @brief The test-ring pool and the named property suites.
 */

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "serfact/ideal.hpp"
#include "serfact/ring.hpp"

namespace serfact::cli {

struct PoolEntry {
  RingSpec spec;
  std::size_t order = 0;
};

// ZMod(n) for n in 2..64, 72, 96, 128; products of two or three ZMod chain
// rings with carrier at most 512; T2(F2), T3(F2), T2(F3), M2(F2), M2(F3);
// and a few quotients of these.
const std::vector<PoolEntry>& test_pool();

struct SuiteOptions {
  std::size_t budget = kDefaultSearchBudget;
  std::size_t cap = kDefaultCap;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<std::pair<std::string, std::size_t>> counts;
  std::string counterexample;  // first one found; empty when passed
  double seconds = 0;
};

const std::vector<std::string_view>& suite_names();

// Throws Error(ParseError) for an unknown name; budget and cap errors
// propagate.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace serfact::cli
