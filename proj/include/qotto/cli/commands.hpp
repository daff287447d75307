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


// Subcommands of the qotto tool. Each returns a process exit code:
//   0 success, 1 usage/config error, 2 numerical failure,
//   3 identity-check breach, 4 single cycle ran cleanly but is not a
//   refrigerator.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qotto/cli/config.hpp"
#include "qotto/cycle.hpp"

namespace qotto::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNumerical = 2,
  kExitIdentityBreach = 3,
  kExitNotRefrigerator = 4,
};

struct RunOptions {
  std::optional<std::string> config_path;
  std::string out_dir = ".";
  int jobs = 1;
  std::optional<double> step;  // overrides the subcommand's grid step
};

/// One point of a cycle sweep with its identity-check report.
struct SweepRow {
  double delta_tau_c = 0.0;
  double j_over_kappa = 0.0;
  CycleResult result;
  IdentityReport report;
};

/// Rows ordered by `ratios` as listed, then ascending delta_tau_c.
std::vector<SweepRow> sweep_tauc_rows(const RunConfig& cfg, int jobs);

/// Rows ordered by `jk_tauc_s` as listed, then ascending J/kappa.
std::vector<SweepRow> sweep_jkappa_rows(const RunConfig& cfg, int jobs);

/// Column names shared by both sweep files.
std::vector<std::string> sweep_columns();
std::vector<std::string> sweep_cells(const SweepRow& row);

int cmd_witness(RunConfig cfg, const RunOptions& opt, std::ostream& log);
int cmd_pair_scan(RunConfig cfg, const RunOptions& opt, std::ostream& log);
int cmd_cycle(RunConfig cfg, const RunOptions& opt, std::ostream& log);
int cmd_sweep_tauc(RunConfig cfg, const RunOptions& opt, std::ostream& log);
int cmd_sweep_jkappa(RunConfig cfg, const RunOptions& opt, std::ostream& log);
int cmd_limit_cycle(RunConfig cfg, const RunOptions& opt, std::ostream& log);

/// Loads the configuration (defaults when no path is given), dispatches by
/// subcommand name and maps exceptions to exit codes, writing the message
/// to err.
int run_subcommand(const std::string& name, const RunOptions& opt,
                   std::ostream& log, std::ostream& err);

}  // namespace qotto::cli
