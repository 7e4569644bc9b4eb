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


// serfact: serial factorizations of right ideals in finite rings.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "serfact/cli/commands.hpp"
#include "serfact/cli/suites.hpp"

int main(int argc, char** argv) {
  using serfact::cli::CommandInput;

  CLI::App app{"Serial factorizations of right ideals in finite rings"};
  CommandInput in;
  std::string out_path;
  std::string command;

  std::string commands;
  for (auto name : serfact::cli::command_names()) {
    if (!commands.empty()) commands += ", ";
    commands += name;
  }
  std::string suites;
  for (auto name : serfact::cli::suite_names()) {
    if (!suites.empty()) suites += ", ";
    suites += name;
  }

  app.add_option("command", command, "One of: " + commands)->required();
  app.add_option("integer", in.integer, "Integer argument of int-factor and int-rigid");
  app.add_option("--ring", in.ring, "Ring spec: a file or inline JSON");
  app.add_option("--generators", in.generators, "Generators of the ideal A (csv of element indices)");
  app.add_option("--factors", in.factors, "Factors for ideal-verify, e.g. [[3],[4]]");
  app.add_option("--over", in.over, "Generators of the overideal B (csv)");
  app.add_option("--other", in.other, "Generators of the second ideal for similarity (csv)");
  app.add_option("--divisor", in.divisor, "Divisor b of the integer for int-rigid");
  app.add_option("--suite", in.suite, "Suite name: " + suites);
  app.add_option("--cap", in.cap, "Largest ring order scanned exhaustively");
  app.add_option("--budget", in.budget, "Search budget in candidate tuples");
  app.add_option("--out", out_path, "Also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  in.name = command;
  const serfact::cli::Report report = serfact::cli::run_command(in);
  const std::string text = report.to_json().dump(2);
  std::cout << text << '\n';
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << '\n';
      return 2;
    }
    out << text << '\n';
  }
  return report.exit_code;
}
