// Copyright 2026 The qotto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qotto/cli/commands.hpp"
#include "qotto/cli/csv.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Finite-time quantum Otto refrigerator with an engineered cold reservoir"};
  app.set_version_flag("--version", std::string("qotto ") + qotto::cli::kToolVersion);
  app.require_subcommand(1, 1);

  qotto::cli::RunOptions opt;
  std::string config;
  double step = 0.0;

  const std::pair<const char*, const char*> commands[] = {
      {"witness", "trace-distance witness for each J/kappa in `ratios`"},
      {"pair-scan", "witness over a Bloch-hemisphere grid of state pairs"},
      {"cycle", "single cycle with full ledger and identity residuals"},
      {"sweep-tauc", "figures of merit versus cold-contact time"},
      {"sweep-jkappa", "figures of merit versus J/kappa"},
      {"limit-cycle", "iterate cycles carrying the auxiliary qubit over"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config, "flat key = value configuration file")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out_dir, "output directory")
        ->capture_default_str();
    sub->add_option("--jobs", opt.jobs, "worker threads")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--step", step, "override the grid step of this subcommand [s or J/kappa]");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : qotto::cli::kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  if (!config.empty()) opt.config_path = config;
  if (sub->count("--step") > 0) opt.step = step;
  return qotto::cli::run_subcommand(sub->get_name(), opt, std::cout, std::cerr);
}
