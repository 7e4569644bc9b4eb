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
 * @file commands.hpp
 * @brief CLI commands and their JSON reports.
 *
 * Exit codes: 0 ok, 1 property failure, 2 usage or parse error, 3 budget or
 * cap exceeded.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "serfact/cli/ring_json.hpp"
#include "serfact/error.hpp"

namespace serfact::cli {

enum class Status { Ok, Fail, Error };
std::string_view to_string(Status s);

struct Report {
  Json command;
  Status status = Status::Ok;
  Json payload = Json::object();
  Json witnesses = Json::array();
  double wall_time_ms = 0;
  int exit_code = 0;

  // Fields in fixed order: command, status, payload, witnesses, wall_time_ms.
  Json to_json() const;
};

struct CommandInput {
  std::string name;
  std::optional<std::string> ring;        // file path or inline JSON
  std::optional<std::string> generators;  // csv of element indices
  std::optional<std::string> factors;     // JSON list of generator lists
  std::optional<std::string> over;        // csv, the overideal B
  std::optional<std::string> other;       // csv, the second ideal
  std::optional<std::string> suite;
  std::optional<std::int64_t> integer;
  std::optional<std::int64_t> divisor;
  std::size_t cap = kDefaultCap;
  std::size_t budget = kDefaultSearchBudget;
};

const std::vector<std::string_view>& command_names();

int exit_code_for(ErrorCode code);

// Never throws; errors become status "error" with the matching exit code.
Report run_command(const CommandInput& input);

}  // namespace serfact::cli
