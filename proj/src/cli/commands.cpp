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


#include "qotto/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>

#include "qotto/cli/csv.hpp"
#include "qotto/parallel.hpp"
#include "qotto/witness.hpp"

namespace qotto::cli {

namespace {

namespace fs = std::filesystem;

std::string num(double v) { return format_number(v); }

std::string failed_checks(const IdentityReport& r) {
  std::string s;
  for (const auto& c : r.checks) {
    if (c.pass()) continue;
    if (!s.empty()) s += ';';
    s += c.name + ':' + num(c.residual);
  }
  return s;
}

// Writes passing rows to <stem>.csv and failing rows to
// <stem>_diagnostics.csv. Returns the number of failing rows.
std::size_t emit_sweep(const std::vector<SweepRow>& rows, const std::string& stem,
                       const RunConfig& cfg, const RunOptions& opt) {
  CsvTable main_table(stem + "/1", sweep_columns());
  std::vector<std::string> diag_cols = sweep_columns();
  diag_cols.push_back("failed_checks");
  CsvTable diag(stem + "_diagnostics/1", diag_cols);

  std::size_t failures = 0;
  for (const auto& row : rows) {
    if (row.report.all_pass()) {
      main_table.add_row(sweep_cells(row));
    } else {
      ++failures;
      std::vector<std::string> cells = sweep_cells(row);
      cells.push_back(failed_checks(row.report));
      diag.add_row(cells);
    }
  }
  write_atomic(fs::path(opt.out_dir) / (stem + ".csv"), main_table.render(cfg));
  write_atomic(fs::path(opt.out_dir) / (stem + "_diagnostics.csv"), diag.render(cfg));
  return failures;
}

void require_ratios(const RunConfig& cfg, const char* cmd) {
  if (cfg.ratios.empty()) {
    throw UsageError(std::string(cmd) + ": the ratios list is empty");
  }
}

void no_step(const RunOptions& opt, const char* cmd) {
  if (opt.step) throw UsageError(std::string(cmd) + ": --step does not apply");
}

}  // namespace

std::vector<std::string> sweep_columns() {
  return {"delta_tau_c_s", "J_over_kappa", "cop", "gamma", "cooling_power",
          "injected_power", "cop_lag_L", "F_lag", "I_SA_nat", "flags"};
}

std::vector<std::string> sweep_cells(const SweepRow& row) {
  const Metrics& m = row.result.metrics;
  return {num(row.delta_tau_c), num(row.j_over_kappa), num(m.cop),
          num(m.gamma), num(m.cooling_power), num(m.injected_power),
          num(m.cop_lag_L), num(m.quasistatic_lag_F),
          num(row.result.ledger.I_SA), m.flags.bits()};
}

std::vector<SweepRow> sweep_tauc_rows(const RunConfig& cfg, int jobs) {
  const std::vector<double> grid =
      make_grid(cfg.tauc_min_s, cfg.tauc_max_s, cfg.tauc_step_s, "sweep-tauc");
  require_ratios(cfg, "sweep-tauc");

  std::vector<CycleRunner> runners;
  runners.reserve(cfg.ratios.size());
  for (double jk : cfg.ratios) runners.emplace_back(cfg.cycle_config(jk, 0.0));

  std::vector<SweepRow> rows(cfg.ratios.size() * grid.size());
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    const std::size_t r = i / grid.size();
    const double dtc = grid[i % grid.size()];
    const CycleResult res = runners[r].run(dtc);
    CycleConfig point = runners[r].config();
    point.delta_tau_c = dtc;
    rows[i] = {dtc, cfg.ratios[r], res,
               cop_identity_checks(res.ledger, res.metrics, point)};
  });
  return rows;
}

std::vector<SweepRow> sweep_jkappa_rows(const RunConfig& cfg, int jobs) {
  const std::vector<double> grid =
      make_grid(cfg.jk_min, cfg.jk_max, cfg.jk_step, "sweep-jkappa");
  if (cfg.jk_tauc_s.empty()) {
    throw UsageError("sweep-jkappa: the jk_tauc_s list is empty");
  }
  const std::size_t nt = cfg.jk_tauc_s.size();
  std::vector<SweepRow> rows(nt * grid.size());
  parallel_for(grid.size(), jobs, [&](std::size_t j) {
    const CycleRunner runner(cfg.cycle_config(grid[j], 0.0));
    for (std::size_t t = 0; t < nt; ++t) {
      const double dtc = cfg.jk_tauc_s[t];
      const CycleResult res = runner.run(dtc);
      CycleConfig point = runner.config();
      point.delta_tau_c = dtc;
      rows[t * grid.size() + j] = {
          dtc, grid[j], res, cop_identity_checks(res.ledger, res.metrics, point)};
    }
  });
  return rows;
}

// ---------------------------------------------------------------------------

int cmd_witness(RunConfig cfg, const RunOptions& opt, std::ostream& log) {
  require_ratios(cfg, "witness");
  if (opt.step) cfg.witness_step_s = *opt.step;

  std::vector<WitnessReport> reports(cfg.ratios.size());
  parallel_for(reports.size(), opt.jobs, [&](std::size_t i) {
    WitnessConfig w;
    w.params = cfg.witness_params(cfg.ratios[i]);
    w.t_max = cfg.witness_t_max_s;
    w.grid_step = cfg.witness_step_s;
    w.positivity_tolerance = cfg.positivity_tolerance;
    reports[i] = trace_distance_trajectory(w);
  });

  CsvTable table("witness/1", {"t_s", "D", "dDdt", "J_over_kappa"});
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const WitnessReport& r = reports[i];
    for (std::size_t k = 0; k < r.times.size(); ++k) {
      table.add_row({num(r.times[k]), num(r.D[k]), num(r.dDdt[k]),
                     num(cfg.ratios[i])});
    }
    log << "J/kappa = " << cfg.ratios[i]
        << "  max dD/dt = " << num(r.max_positive_derivative) << " 1/s  -> "
        << (r.is_non_markovian ? "non-Markovian" : "Markovian") << "\n";
  }
  write_atomic(fs::path(opt.out_dir) / "witness.csv", table.render(cfg));
  return kExitOk;
}

int cmd_pair_scan(RunConfig cfg, const RunOptions& opt, std::ostream& log) {
  require_ratios(cfg, "pair-scan");
  if (opt.step) cfg.witness_step_s = *opt.step;

  CsvTable pairs("pair_scan/1", {"J_over_kappa", "pair_index", "bloch_x",
                                 "bloch_y", "bloch_z", "max_positive_dDdt", "blp"});
  CsvTable summary("pair_scan_summary/1",
                   {"J_over_kappa", "n_pairs", "max_positive_dDdt",
                    "worst_pair", "verdict"});
  PairScanOptions po;
  po.grid_step = cfg.witness_step_s;
  po.positivity_tolerance = cfg.positivity_tolerance;
  po.jobs = opt.jobs;
  for (double jk : cfg.ratios) {
    const PairScanReport rep =
        pair_scan(cfg.witness_params(jk), cfg.n_pairs, cfg.witness_t_max_s, po);
    for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
      const PairResult& p = rep.pairs[i];
      pairs.add_row({num(jk), std::to_string(i), num(p.bloch.x()),
                     num(p.bloch.y()), num(p.bloch.z()),
                     num(p.max_positive_derivative), num(p.blp)});
    }
    const char* verdict = rep.is_non_markovian ? "non-Markovian" : "Markovian";
    summary.add_row({num(jk), std::to_string(cfg.n_pairs),
                     num(rep.max_positive_derivative),
                     std::to_string(rep.worst_pair), verdict});
    log << "J/kappa = " << jk << "  pairs = " << cfg.n_pairs
        << "  max dD/dt = " << num(rep.max_positive_derivative)
        << " 1/s (pair " << rep.worst_pair << ")  -> " << verdict << "\n";
  }
  write_atomic(fs::path(opt.out_dir) / "pair_scan.csv", pairs.render(cfg));
  write_atomic(fs::path(opt.out_dir) / "pair_scan_summary.csv", summary.render(cfg));
  return kExitOk;
}

int cmd_cycle(RunConfig cfg, const RunOptions& opt, std::ostream& log) {
  no_step(opt, "cycle");
  const CycleConfig cc =
      cfg.cycle_config(cfg.cycle_j_over_kappa, cfg.cycle_delta_tau_c_s);
  const CycleResult res = run_cycle(cc);
  const IdentityReport rep = cop_identity_checks(res.ledger, res.metrics, cc);
  const StrokeLedger& lg = res.ledger;
  const Metrics& m = res.metrics;

  CsvTable table("cycle/1", {"quantity", "value"});
  const std::vector<std::pair<std::string, double>> values = {
      {"J_over_kappa", cc.j_over_kappa}, {"delta_tau_c_s", cc.delta_tau_c},
      {"U0", lg.U0}, {"U_tau1", lg.U_tau1}, {"U_tau2", lg.U_tau2},
      {"U_tau3", lg.U_tau3}, {"U_tau4", lg.U_tau4}, {"W1", lg.W1},
      {"W3", lg.W3}, {"W_net", lg.W_net}, {"Qc_S", lg.Qc_S}, {"Qh", lg.Qh},
      {"dV_SA", lg.dV_SA}, {"I_SA_nat", lg.I_SA}, {"cop", m.cop},
      {"gamma", m.gamma}, {"overestimation_1_over_gamma", m.overestimation},
      {"cooling_power", m.cooling_power}, {"injected_power", m.injected_power},
      {"cop_lag_L", m.cop_lag_L}, {"F_lag", m.quasistatic_lag_F},
      {"cop_otto", m.cop_otto}, {"cop_carnot", m.cop_carnot},
      {"cycle_time_s", m.cycle_time}};
  for (const auto& [k, v] : values) table.add_row({k, num(v)});
  table.add_row({"flags", m.flags.bits()});
  for (const auto& c : rep.checks) {
    table.add_row({"residual_" + c.name, c.applicable ? num(c.residual) : "n/a"});
  }
  write_atomic(fs::path(opt.out_dir) / "cycle.csv", table.render(cfg));

  char line[256];
  log << "Stroke ledger (rad/s)\n";
  for (const auto& [k, v] : values) {
    std::snprintf(line, sizeof line, "  %-28s % .10e\n", k.c_str(), v);
    log << line;
  }
  log << "  flags (Qc_R released, W_net > 0, Qh < 0, gamma > 0): "
      << m.flags.bits() << "\n";
  std::snprintf(line, sizeof line,
                "  gamma = %.6f: ignoring the interaction energy overestimates"
                " cop and cooling power by 1/gamma = %.6f\n",
                m.gamma, m.overestimation);
  log << line;
  log << "Identity checks\n";
  for (const auto& c : rep.checks) {
    if (!c.applicable) {
      std::snprintf(line, sizeof line, "  %-18s n/a\n", c.name.c_str());
    } else {
      std::snprintf(line, sizeof line, "  %-18s residual %.3e  tol %.1e  %s\n",
                    c.name.c_str(), c.residual, c.tolerance,
                    c.pass() ? "ok" : "BREACH");
    }
    log << line;
  }

  if (!rep.all_pass()) return kExitIdentityBreach;
  if (!m.flags.all()) {
    log << "not operating as a refrigerator\n";
    return kExitNotRefrigerator;
  }
  return kExitOk;
}

int cmd_sweep_tauc(RunConfig cfg, const RunOptions& opt, std::ostream& log) {
  if (opt.step) cfg.tauc_step_s = *opt.step;
  const std::vector<SweepRow> rows = sweep_tauc_rows(cfg, opt.jobs);
  const std::size_t bad = emit_sweep(rows, "sweep_tauc", cfg, opt);
  log << "sweep-tauc: " << rows.size() << " rows, " << bad
      << " identity-check failures\n";
  return bad ? kExitIdentityBreach : kExitOk;
}

int cmd_sweep_jkappa(RunConfig cfg, const RunOptions& opt, std::ostream& log) {
  if (opt.step) cfg.jk_step = *opt.step;
  const std::vector<SweepRow> rows = sweep_jkappa_rows(cfg, opt.jobs);
  const std::size_t bad = emit_sweep(rows, "sweep_jkappa", cfg, opt);
  log << "sweep-jkappa: " << rows.size() << " rows, " << bad
      << " identity-check failures\n";
  return bad ? kExitIdentityBreach : kExitOk;
}

int cmd_limit_cycle(RunConfig cfg, const RunOptions& opt, std::ostream& log) {
  no_step(opt, "limit-cycle");
  require_ratios(cfg, "limit-cycle");
  cfg.aux_init = AuxInitPolicy::kCarryOver;

  std::vector<LimitCycleResult> results(cfg.ratios.size());
  parallel_for(results.size(), opt.jobs, [&](std::size_t i) {
    results[i] = run_to_limit_cycle(
        cfg.cycle_config(cfg.ratios[i], cfg.cycle_delta_tau_c_s),
        cfg.limit_max_iters, cfg.limit_tol);
  });

  CsvTable table("limit_cycle/1",
                 {"J_over_kappa", "delta_tau_c_s", "iterations", "converged",
                  "last_delta", "distance_from_fresh", "cop", "gamma",
                  "cooling_power", "I_SA_nat"});
  bool all_converged = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const LimitCycleResult& r = results[i];
    const Metrics& m = r.result.metrics;
    all_converged = all_converged && r.converged;
    table.add_row({num(cfg.ratios[i]), num(cfg.cycle_delta_tau_c_s),
                   std::to_string(r.iterations), r.converged ? "1" : "0",
                   num(r.last_delta), num(r.distance_from_fresh), num(m.cop),
                   num(m.gamma), num(m.cooling_power),
                   num(r.result.ledger.I_SA)});
    log << "J/kappa = " << cfg.ratios[i] << "  iterations = " << r.iterations
        << (r.converged ? "  converged" : "  NOT converged")
        << "  last delta = " << num(r.last_delta)
        << "  distance from fresh-gibbs = " << num(r.distance_from_fresh) << "\n";
  }
  write_atomic(fs::path(opt.out_dir) / "limit_cycle.csv", table.render(cfg));
  return all_converged ? kExitOk : kExitNumerical;
}

int run_subcommand(const std::string& name, const RunOptions& opt,
                   std::ostream& log, std::ostream& err) {
  try {
    if (opt.jobs < 1) throw UsageError("--jobs must be >= 1");
    if (opt.step && !(*opt.step > 0.0)) throw UsageError("--step must be > 0");
    RunConfig cfg = opt.config_path ? load_config(*opt.config_path) : RunConfig{};
    if (name == "witness") return cmd_witness(cfg, opt, log);
    if (name == "pair-scan") return cmd_pair_scan(cfg, opt, log);
    if (name == "cycle") return cmd_cycle(cfg, opt, log);
    if (name == "sweep-tauc") return cmd_sweep_tauc(cfg, opt, log);
    if (name == "sweep-jkappa") return cmd_sweep_jkappa(cfg, opt, log);
    if (name == "limit-cycle") return cmd_limit_cycle(cfg, opt, log);
    throw UsageError("unknown subcommand '" + name + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const DivergentRelativeEntropy& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const InvariantError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace qotto::cli
