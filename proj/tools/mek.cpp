// Copyright 2026 The mek Authors
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

// mek: entanglement spectra, Renyi entropies and effective thermodynamics of
// two-mode squeezed/coherent states and the Silbey-Harris qubit-bath state.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mek/errors.hpp"
#include "mek/sweep.hpp"
#include "mek/verify.hpp"

namespace {

constexpr int kExitTolerance = 1;
constexpr int kExitError = 2;

mek::Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {std::stod(text), 0.0};
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

// Writes to `path`, or stdout when empty. Throws mek::Error when the file cannot be opened.
void emit(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw mek::Error("cannot open '" + path + "' for writing");
  file << payload;
  if (!file) throw mek::Error("write to '" + path + "' failed");
}

struct CommonFlags {
  std::string family = "squeezed";
  std::string grid = "0:3:0.5";
  std::string mu = "1,2,inf";
  bool oracle = false;
  double tail_tol = mek::kDefaultTailTolerance;
  double theta = 0.0;
  std::string alpha = "0.5";
  std::string beta_b = "0.3";
  int modes = 1;
  double hbar_omega = 1.0;
  double delta = 1.0;
  int max_cutoff = 1000;
  std::string out;
  std::string format = "csv";
};

void add_state_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--family", f.family,
                  "squeezed | displaced-squeezed | squeezed-coherent | coherent | silbey-harris")
      ->capture_default_str();
  cmd->add_option("--grid", f.grid,
                  "parameter grid, start:stop:step or a,b,c (r; |alpha| for coherent; f.f for "
                  "silbey-harris)")
      ->capture_default_str();
  cmd->add_option("--theta", f.theta, "squeezing angle")->capture_default_str();
  cmd->add_option("--alpha", f.alpha, "mode-A displacement, re or re,im")->capture_default_str();
  cmd->add_option("--beta-b", f.beta_b, "mode-B displacement, re or re,im")->capture_default_str();
  cmd->add_option("--modes", f.modes, "Silbey-Harris bath modes (f.f spread evenly)")
      ->capture_default_str();
  cmd->add_option("--hbar-omega", f.hbar_omega, "oscillator level spacing")->capture_default_str();
  cmd->add_option("--delta", f.delta, "two-level gap")->capture_default_str();
  cmd->add_option("--out", f.out, "output file (stdout when omitted)");
  cmd->add_option("--format", f.format, "csv | json")->capture_default_str();
}

mek::SweepConfig to_config(const CommonFlags& f) {
  mek::SweepConfig config;
  config.family = mek::parse_family(f.family);
  config.parameter_grid = mek::parse_grid(f.grid);
  config.mu_list = mek::parse_mu_list(f.mu);
  config.oracle = f.oracle;
  config.tail_tolerance = f.tail_tol;
  config.theta = f.theta;
  config.shift = {parse_complex(f.alpha), parse_complex(f.beta_b)};
  config.sh_modes = f.modes;
  config.hbar_omega = f.hbar_omega;
  config.delta = f.delta;
  config.max_cutoff = f.max_cutoff;
  config.memory_budget = mek::memory_budget_from_env();
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mode-entanglement spectra, Renyi entropies and effective thermodynamics"};
  app.require_subcommand(1);

  CommonFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "S_mu and effective-model columns over a parameter grid");
  add_state_flags(sweep, sweep_flags);
  sweep->add_option("--mu", sweep_flags.mu, "Renyi orders, comma separated; inf allowed")
      ->capture_default_str();
  sweep->add_flag("--oracle", sweep_flags.oracle, "cross-check against the truncated Fock-space state");
  sweep->add_option("--tail-tol", sweep_flags.tail_tol, "oracle truncation tolerance, in (0, 1e-6]")
      ->capture_default_str();
  sweep->add_option("--max-cutoff", sweep_flags.max_cutoff, "largest oracle n_max accepted")
      ->capture_default_str();

  CommonFlags thermo_flags;
  thermo_flags.grid = "0:3:0.25";
  auto* thermo = app.add_subcommand("thermo", "effective temperature, Z, ln Z, S_inf and F per parameter");
  add_state_flags(thermo, thermo_flags);

  double verify_tol = mek::kDefaultTailTolerance;
  std::uint64_t seed = 0;
  std::string fault;
  auto* verify = app.add_subcommand("verify", "run the invariant battery on seeded parameter draws");
  verify->add_option("--tail-tol", verify_tol, "oracle truncation tolerance")->capture_default_str();
  verify->add_option("--seed", seed, "seed for the parameter draws")->capture_default_str();
  verify->add_option("--inject-fault", fault)->group("")->check(CLI::IsMember({"normalization"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) {
      const mek::SweepConfig config = to_config(sweep_flags);
      const mek::SweepResult result = mek::run_sweep(config);
      std::ostringstream payload;
      if (mek::parse_format(sweep_flags.format) == mek::OutputFormat::kJson) {
        mek::write_sweep_json(payload, result);
      } else {
        mek::write_sweep_csv(payload, result);
      }
      emit(sweep_flags.out, payload.str());
      if (!result.within_tolerance()) {
        std::cerr << "oracle deviation " << result.worst_deviation << " exceeds "
                  << mek::kSweepOracleTolerance << '\n';
        return kExitTolerance;
      }
      return 0;
    }
    if (*thermo) {
      const mek::SweepConfig config = to_config(thermo_flags);
      const auto rows = mek::run_thermo_table(config);
      std::ostringstream payload;
      if (mek::parse_format(thermo_flags.format) == mek::OutputFormat::kJson) {
        mek::write_thermo_json(payload, rows);
      } else {
        mek::write_thermo_csv(payload, rows);
      }
      emit(thermo_flags.out, payload.str());
      for (const auto& row : rows) {
        if (!row.log_z_matches) return kExitTolerance;
      }
      return 0;
    }
    if (*verify) {
      mek::VerifyOptions options;
      options.tail_tolerance = verify_tol;
      options.seed = seed;
      options.corrupt_normalization = fault == "normalization";
      const auto checks = mek::run_verify(options);
      mek::write_verify_report(std::cout, checks);
      if (!mek::all_passed(checks)) {
        for (const auto& check : checks) {
          if (!check.passed()) std::cerr << "failed: " << check.name << '\n';
        }
        return kExitTolerance;
      }
      return 0;
    }
  } catch (const mek::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
