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

// Parameter sweeps and effective-thermodynamics tables behind the `mek` command
// line tool, plus their CSV and JSON writers.

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mek/fockspace.hpp"

namespace mek {

enum class StateFamily { kSqueezed, kDisplacedSqueezed, kSqueezedCoherent, kCoherent, kSilbeyHarris };
enum class OutputFormat { kCsv, kJson };

StateFamily parse_family(std::string_view name);
std::string_view family_name(StateFamily family);
OutputFormat parse_format(std::string_view name);

/// "a:b:step" (inclusive, step > 0) or a comma-separated list.
std::vector<double> parse_grid(std::string_view text);
/// Comma-separated Renyi orders; "inf" selects the single-copy limit.
std::vector<double> parse_mu_list(std::string_view text);
/// Shortest round-trip decimal; +inf prints as "inf", NaN as "nan".
std::string format_number(double value);

/// Oracle deviation above which a sweep reports failure.
inline constexpr double kSweepOracleTolerance = 1e-8;

struct SweepConfig {
  StateFamily family = StateFamily::kSqueezed;
  /// r for the squeezed families, |alpha| for coherent, f.f for Silbey-Harris.
  std::vector<double> parameter_grid;
  std::vector<double> mu_list{1.0, 2.0, std::numeric_limits<double>::infinity()};
  bool oracle = false;
  double tail_tolerance = kDefaultTailTolerance;
  double theta = 0.0;
  /// Displacements for the displaced families; beta_b also sets mode B of the coherent family.
  DisplacementParams shift{Complex{0.5, 0.0}, Complex{0.3, 0.0}};
  /// Silbey-Harris bath size; f.f is spread evenly over the modes.
  int sh_modes = 1;
  double hbar_omega = 1.0;
  double delta = 1.0;
  std::size_t memory_budget = kDefaultMemoryBudget;
  /// Oracle cutoffs above this are refused with SizeError.
  int max_cutoff = 1000;

  /// Throws DomainError for empty grids or a tolerance outside (0, 1e-6].
  void validate() const;
};

struct SweepRow {
  double param = 0.0;
  double mu = 0.0;
  double s_mu = 0.0;
  double s_vn = 0.0;
  double s_2 = 0.0;
  double purity = 0.0;
  double s_inf = 0.0;
  double beta_eff = 0.0;
  double z = 1.0;
  double f = 0.0;
  std::optional<double> oracle_s_mu;
  /// NaN when the closed form is +inf (mu = 0 on an infinite-rank spectrum).
  std::optional<double> abs_dev;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool oracle = false;
  double worst_deviation = 0.0;

  bool within_tolerance() const noexcept { return worst_deviation <= kSweepOracleTolerance; }
};

SweepResult run_sweep(const SweepConfig& config);
void write_sweep_csv(std::ostream& out, const SweepResult& result);
void write_sweep_json(std::ostream& out, const SweepResult& result);

struct ThermoRow {
  double param = 0.0;
  double beta_eff = 0.0;
  double z = 1.0;
  double log_z = 0.0;
  double s_inf = 0.0;
  double f = 0.0;
  double p_max = 1.0;
  bool log_z_matches = true;
};

inline constexpr double kThermoIdentityTolerance = 1e-12;

std::vector<ThermoRow> run_thermo_table(const SweepConfig& config);
void write_thermo_csv(std::ostream& out, const std::vector<ThermoRow>& rows);
void write_thermo_json(std::ostream& out, const std::vector<ThermoRow>& rows);

/// Reads MEK_MEM_BUDGET (entries) if set, otherwise returns `fallback`.
std::size_t memory_budget_from_env(std::size_t fallback = kDefaultMemoryBudget);

}  // namespace mek
