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


#include "qotto/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <variant>

namespace qotto::cli {

namespace {

using Slot = std::variant<double*, int*, std::vector<double>*, AuxInitPolicy*>;

struct Field {
  const char* key;
  Slot slot;
};

std::vector<Field> fields(RunConfig& c) {
  return {
      {"omega0_khz", &c.omega0_khz},
      {"omega_tau1_khz", &c.omega_tau1_khz},
      {"omega_aux_khz", &c.omega_aux_khz},
      {"kappa_per_s", &c.kappa_per_s},
      {"cold_beta_omega", &c.cold_beta_omega},
      {"hot_beta_omega", &c.hot_beta_omega},
      {"tau1_s", &c.tau1_s},
      {"delta_tau_h_s", &c.delta_tau_h_s},
      {"aux_init", &c.aux_init},
      {"ratios", &c.ratios},
      {"tauc_min_s", &c.tauc_min_s},
      {"tauc_max_s", &c.tauc_max_s},
      {"tauc_step_s", &c.tauc_step_s},
      {"jk_min", &c.jk_min},
      {"jk_max", &c.jk_max},
      {"jk_step", &c.jk_step},
      {"jk_tauc_s", &c.jk_tauc_s},
      {"cycle_j_over_kappa", &c.cycle_j_over_kappa},
      {"cycle_delta_tau_c_s", &c.cycle_delta_tau_c_s},
      {"limit_max_iters", &c.limit_max_iters},
      {"limit_tol", &c.limit_tol},
      {"witness_omega_s_khz", &c.witness_omega_s_khz},
      {"witness_beta_omega", &c.witness_beta_omega},
      {"witness_t_max_s", &c.witness_t_max_s},
      {"witness_step_s", &c.witness_step_s},
      {"positivity_tolerance", &c.positivity_tolerance},
      {"n_pairs", &c.n_pairs},
  };
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& where) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto* first = t.data();
  const auto* last = t.data() + t.size();
  const auto res = std::from_chars(first, last, v);
  if (t.empty() || res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
    throw UsageError(where + ": expected a finite number, got '" + t + "'");
  }
  return v;
}

int parse_int(const std::string& text, const std::string& where) {
  const std::string t = trim(text);
  int v = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw UsageError(where + ": expected an integer, got '" + t + "'");
  }
  return v;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_config(const RunConfig& c) {
  auto require = [](bool ok, const char* msg) {
    if (!ok) throw UsageError(std::string("config: ") + msg);
  };
  require(c.omega0_khz > c.omega_tau1_khz && c.omega_tau1_khz > 0.0,
          "need omega0_khz > omega_tau1_khz > 0");
  require(c.omega_aux_khz > 0.0, "omega_aux_khz must be > 0");
  require(c.kappa_per_s > 0.0, "kappa_per_s must be > 0");
  require(c.cold_beta_omega > 0.0 && c.hot_beta_omega > 0.0,
          "beta_omega values must be > 0");
  require(c.tau1_s >= 0.0 && c.delta_tau_h_s >= 0.0, "durations must be >= 0");
  for (double r : c.ratios) require(r >= 0.0, "ratios must be >= 0");
  for (double t : c.jk_tauc_s) require(t >= 0.0, "jk_tauc_s must be >= 0");
  require(c.tauc_step_s > 0.0 && c.jk_step > 0.0, "grid steps must be > 0");
  require(c.cycle_j_over_kappa >= 0.0 && c.cycle_delta_tau_c_s >= 0.0,
          "cycle point must be >= 0");
  require(c.limit_max_iters >= 1, "limit_max_iters must be >= 1");
  require(c.limit_tol > 0.0, "limit_tol must be > 0");
  require(c.witness_omega_s_khz > 0.0 && c.witness_beta_omega > 0.0,
          "witness frequency and beta_omega must be > 0");
  require(c.witness_t_max_s >= 0.0 && c.witness_step_s > 0.0,
          "witness_t_max_s must be >= 0 and witness_step_s > 0");
  require(c.positivity_tolerance >= 0.0, "positivity_tolerance must be >= 0");
  require(c.n_pairs >= 1, "n_pairs must be >= 1");
}

}  // namespace

double khz_to_rad_per_s(double f_khz) {
  return 2.0 * std::numbers::pi * 1e3 * f_khz;
}

CycleConfig RunConfig::cycle_config(double j_over_kappa,
                                    double delta_tau_c) const {
  CycleConfig c;
  c.omega0 = khz_to_rad_per_s(omega0_khz);
  c.omega_tau1 = khz_to_rad_per_s(omega_tau1_khz);
  c.omega_a = khz_to_rad_per_s(omega_aux_khz);
  c.kappa = kappa_per_s;
  c.beta_c = cold_beta_omega / c.omega_tau1;
  c.beta_h = hot_beta_omega / c.omega0;
  c.tau1 = tau1_s;
  c.delta_tau_c = delta_tau_c;
  c.delta_tau_h = delta_tau_h_s;
  c.j_over_kappa = j_over_kappa;
  c.aux_policy = aux_init;
  c.validate();
  return c;
}

ReservoirParams RunConfig::witness_params(double j_over_kappa) const {
  const double omega_a = khz_to_rad_per_s(omega_aux_khz);
  return ReservoirParams::from_ratio(khz_to_rad_per_s(witness_omega_s_khz),
                                     omega_a, j_over_kappa, kappa_per_s,
                                     witness_beta_omega / omega_a);
}

std::string RunConfig::resolved() const {
  RunConfig copy = *this;
  std::string out;
  for (const Field& f : fields(copy)) {
    if (!out.empty()) out += ';';
    out += f.key;
    out += '=';
    std::visit(
        [&out](auto* p) {
          using T = std::remove_pointer_t<decltype(p)>;
          if constexpr (std::is_same_v<T, double>) {
            out += format_double(*p);
          } else if constexpr (std::is_same_v<T, int>) {
            out += std::to_string(*p);
          } else if constexpr (std::is_same_v<T, AuxInitPolicy>) {
            out += *p == AuxInitPolicy::kFreshGibbs ? "fresh-gibbs" : "carry-over";
          } else {
            for (std::size_t i = 0; i < p->size(); ++i) {
              if (i) out += ',';
              out += format_double((*p)[i]);
            }
          }
        },
        f.slot);
  }
  return out;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  const std::vector<Field> table = fields(cfg);
  std::set<std::string> seen;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::string where = "config line " + std::to_string(lineno);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(where + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    const Field* field = nullptr;
    for (const Field& f : table) {
      if (key == f.key) field = &f;
    }
    if (!field) throw UsageError(where + ": unknown key '" + key + "'");
    if (!seen.insert(key).second) {
      throw UsageError(where + ": duplicate key '" + key + "'");
    }

    std::visit(
        [&](auto* p) {
          using T = std::remove_pointer_t<decltype(p)>;
          if constexpr (std::is_same_v<T, double>) {
            *p = parse_double(value, where);
          } else if constexpr (std::is_same_v<T, int>) {
            *p = parse_int(value, where);
          } else if constexpr (std::is_same_v<T, AuxInitPolicy>) {
            if (value == "fresh-gibbs") {
              *p = AuxInitPolicy::kFreshGibbs;
            } else if (value == "carry-over") {
              *p = AuxInitPolicy::kCarryOver;
            } else {
              throw UsageError(where + ": aux_init must be fresh-gibbs or carry-over");
            }
          } else {
            p->clear();
            if (!value.empty()) {
              std::istringstream items(value);
              std::string item;
              while (std::getline(items, item, ',')) {
                p->push_back(parse_double(item, where));
              }
            }
          }
        },
        field->slot);
  }
  check_config(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::vector<double> make_grid(double min, double max, double step,
                              const char* what) {
  if (!(step > 0.0) || !std::isfinite(min) || !std::isfinite(max) ||
      !(max >= min)) {
    throw UsageError(std::string(what) + ": empty grid");
  }
  const long n = static_cast<long>(std::floor((max - min) / step + 1e-9)) + 1;
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) g.push_back(min + static_cast<double>(i) * step);
  return g;
}

}  // namespace qotto::cli
