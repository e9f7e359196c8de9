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

#include "mek/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <nlohmann/json.hpp>

#include "mek/analytic.hpp"
#include "mek/errors.hpp"
#include "mek/spectra.hpp"
#include "mek/thermo.hpp"

namespace mek {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double parse_number(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "inf" || text == "infinity" || text == "Inf") return kInf;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError("cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool is_squeezed_family(StateFamily family) {
  return family == StateFamily::kSqueezed || family == StateFamily::kDisplacedSqueezed ||
         family == StateFamily::kSqueezedCoherent;
}

SHParams sh_params_for(double f_dot_f, int modes) {
  if (!(f_dot_f >= 0.0)) throw DomainError("f.f must be non-negative");
  if (modes < 1) throw DomainError("Silbey-Harris sweeps need at least one mode");
  return SHParams{std::vector<double>(static_cast<std::size_t>(modes),
                                      std::sqrt(f_dot_f / static_cast<double>(modes)))};
}

EffectiveThermalModel model_for(const SweepConfig& config, double param) {
  if (is_squeezed_family(config.family)) return oscillator_model_from_squeezing(param, config.hbar_omega);
  if (config.family == StateFamily::kSilbeyHarris) {
    return two_level_model_from_sh(sh_params_for(param, config.sh_modes), config.delta);
  }
  return EffectiveThermalModel::oscillator(kInf, config.hbar_omega);
}

EntropyReport analytic_report(const SweepConfig& config, double param) {
  if (is_squeezed_family(config.family)) return squeezed_entropy_report(param, config.mu_list);
  if (config.family == StateFamily::kSilbeyHarris) {
    return sh_entropy_report(sh_params_for(param, config.sh_modes), config.mu_list);
  }
  return entropy_report(EntanglementSpectrum({1.0}), config.mu_list);
}

void check_cutoff(const SweepConfig& config, int n_max, std::size_t entries) {
  if (n_max > config.max_cutoff) {
    throw SizeError("oracle cutoff n_max=" + std::to_string(n_max) + " exceeds --max-cutoff " +
                        std::to_string(config.max_cutoff),
                    entries, config.memory_budget);
  }
  if (entries > config.memory_budget) {
    throw SizeError("oracle state", entries, config.memory_budget);
  }
}

EntanglementSpectrum oracle_spectrum(const SweepConfig& config, double param) {
  const double tol = config.tail_tolerance;
  double mu_min = 1.0;
  for (double mu : config.mu_list) {
    if (mu > 0.0) mu_min = std::min(mu_min, mu);
  }
  const SqueezedStateParams squeeze{param, config.theta};
  auto two_mode_entries = [](int n) {
    return static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1);
  };

  switch (config.family) {
    case StateFamily::kSqueezed: {
      const int n = squeezed_cutoff(param, tol, mu_min);
      check_cutoff(config, n, two_mode_entries(n));
      return entanglement_spectrum(build_squeezed_vacuum(squeeze, FockCutoff(n), tol));
    }
    case StateFamily::kDisplacedSqueezed: {
      const int n = displaced_squeezed_cutoff(squeeze, config.shift, tol, mu_min);
      check_cutoff(config, n, two_mode_entries(working_n_max(FockCutoff(n))));
      const auto vacuum = build_squeezed_vacuum(squeeze, FockCutoff(n), 0.5 * tol);
      return entanglement_spectrum(apply_two_mode_displacement(vacuum, config.shift, tol));
    }
    case StateFamily::kSqueezedCoherent: {
      const int n = displaced_squeezed_cutoff(squeeze, config.shift, tol, mu_min);
      check_cutoff(config, n, two_mode_entries(working_n_max(FockCutoff(n))));
      return entanglement_spectrum(build_squeezed_coherent(squeeze, config.shift, FockCutoff(n), tol));
    }
    case StateFamily::kCoherent: {
      const DisplacementParams shift{Complex{param, 0.0}, config.shift.beta_b};
      const int n = coherent_cutoff(std::max(std::abs(shift.alpha), std::abs(shift.beta_b)), 0.5 * tol);
      check_cutoff(config, n, two_mode_entries(n));
      return entanglement_spectrum(build_coherent_two_mode(shift, FockCutoff(n), tol));
    }
    case StateFamily::kSilbeyHarris: {
      const SHParams sh = sh_params_for(param, config.sh_modes);
      const int n = silbey_harris_cutoff(sh, tol);
      if (n > config.max_cutoff) check_cutoff(config, n, 0);
      return entanglement_spectrum(build_silbey_harris(sh, FockCutoff(n), tol, config.memory_budget), 0);
    }
  }
  throw DomainError("unknown state family");
}

nlohmann::ordered_json json_number(double value) {
  if (std::isfinite(value)) return value;
  return format_number(value);
}

}  // namespace

StateFamily parse_family(std::string_view name) {
  if (name == "squeezed") return StateFamily::kSqueezed;
  if (name == "displaced-squeezed") return StateFamily::kDisplacedSqueezed;
  if (name == "squeezed-coherent") return StateFamily::kSqueezedCoherent;
  if (name == "coherent") return StateFamily::kCoherent;
  if (name == "silbey-harris") return StateFamily::kSilbeyHarris;
  throw DomainError("unknown state family '" + std::string(name) + "'");
}

std::string_view family_name(StateFamily family) {
  switch (family) {
    case StateFamily::kSqueezed: return "squeezed";
    case StateFamily::kDisplacedSqueezed: return "displaced-squeezed";
    case StateFamily::kSqueezedCoherent: return "squeezed-coherent";
    case StateFamily::kCoherent: return "coherent";
    case StateFamily::kSilbeyHarris: return "silbey-harris";
  }
  return "unknown";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw DomainError("unknown output format '" + std::string(name) + "'");
}

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> grid;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw DomainError("grid range must look like start:stop:step");
    const double start = parse_number(parts[0]);
    const double stop = parse_number(parts[1]);
    const double step = parse_number(parts[2]);
    if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop)) {
      throw DomainError("grid range needs finite bounds and a positive step");
    }
    // Index-based so that the endpoints do not depend on accumulated round-off.
    const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
    for (long long i = 0; i <= count; ++i) grid.push_back(start + static_cast<double>(i) * step);
  } else {
    for (auto part : split(text, ',')) grid.push_back(parse_number(part));
  }
  if (grid.empty()) throw DomainError("grid is empty");
  return grid;
}

std::vector<double> parse_mu_list(std::string_view text) {
  std::vector<double> mus;
  for (auto part : split(text, ',')) {
    const double mu = parse_number(part);
    RenyiOrder{mu};
    mus.push_back(mu);
  }
  return mus;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void SweepConfig::validate() const {
  if (parameter_grid.empty()) throw DomainError("parameter grid is empty");
  if (mu_list.empty()) throw DomainError("mu list is empty");
  if (!(tail_tolerance > 0.0 && tail_tolerance <= 1e-6)) {
    throw DomainError("tail tolerance must lie in (0, 1e-6]");
  }
  for (double mu : mu_list) RenyiOrder{mu};
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  SweepResult result;
  result.oracle = config.oracle;
  for (double param : config.parameter_grid) {
    const EntropyReport report = analytic_report(config, param);
    const EffectiveThermalModel model = model_for(config, param);
    std::optional<EntanglementSpectrum> oracle;
    if (config.oracle) oracle = oracle_spectrum(config, param);

    for (const auto& [mu, s_mu] : report.s_mu_grid) {
      SweepRow row;
      row.param = param;
      row.mu = mu;
      row.s_mu = s_mu;
      row.s_vn = report.s_vn;
      row.s_2 = report.s_2;
      row.purity = report.purity_gamma;
      row.s_inf = report.sce;
      row.beta_eff = model.beta();
      row.z = model.partition_function();
      row.f = model.free_energy();
      if (oracle) {
        row.oracle_s_mu = renyi_general(*oracle, RenyiOrder(mu));
        if (std::isinf(s_mu)) {
          row.abs_dev = std::numeric_limits<double>::quiet_NaN();
        } else {
          row.abs_dev = std::abs(s_mu - *row.oracle_s_mu);
          result.worst_deviation = std::max(result.worst_deviation, *row.abs_dev);
        }
      }
      result.rows.push_back(row);
    }
  }
  return result;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "param,mu,S_mu,S_vn,S_2,purity,S_inf,beta_eff,Z,F";
  if (result.oracle) out << ",oracle_S_mu,abs_dev";
  out << '\n';
  for (const auto& row : result.rows) {
    out << format_number(row.param) << ',' << format_number(row.mu) << ',' << format_number(row.s_mu)
        << ',' << format_number(row.s_vn) << ',' << format_number(row.s_2) << ','
        << format_number(row.purity) << ',' << format_number(row.s_inf) << ','
        << format_number(row.beta_eff) << ',' << format_number(row.z) << ',' << format_number(row.f);
    if (result.oracle) {
      out << ',' << format_number(row.oracle_s_mu.value_or(std::nan(""))) << ','
          << format_number(row.abs_dev.value_or(std::nan("")));
    }
    out << '\n';
  }
}

void write_sweep_json(std::ostream& out, const SweepResult& result) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : result.rows) {
    nlohmann::ordered_json j;
    j["param"] = json_number(row.param);
    j["mu"] = json_number(row.mu);
    j["S_mu"] = json_number(row.s_mu);
    j["S_vn"] = json_number(row.s_vn);
    j["S_2"] = json_number(row.s_2);
    j["purity"] = json_number(row.purity);
    j["S_inf"] = json_number(row.s_inf);
    j["beta_eff"] = json_number(row.beta_eff);
    j["Z"] = json_number(row.z);
    j["F"] = json_number(row.f);
    if (result.oracle) {
      j["oracle_S_mu"] = json_number(row.oracle_s_mu.value_or(std::nan("")));
      j["abs_dev"] = json_number(row.abs_dev.value_or(std::nan("")));
    }
    rows.push_back(std::move(j));
  }
  out << rows.dump(2) << '\n';
}

std::vector<ThermoRow> run_thermo_table(const SweepConfig& config) {
  if (config.parameter_grid.empty()) throw DomainError("parameter grid is empty");
  std::vector<ThermoRow> rows;
  for (double param : config.parameter_grid) {
    const EffectiveThermalModel model = model_for(config, param);
    ThermoRow row;
    row.param = param;
    row.beta_eff = model.beta();
    row.z = model.partition_function();
    row.log_z = model.log_partition_function();
    row.f = model.free_energy();
    if (is_squeezed_family(config.family)) {
      row.s_inf = renyi_squeezed(param, RenyiOrder::infinity());
      row.p_max = squeezed_spectrum(param, 0);
    } else if (config.family == StateFamily::kSilbeyHarris) {
      const SHParams sh = sh_params_for(param, config.sh_modes);
      row.s_inf = renyi_sh(sh, RenyiOrder::infinity());
      row.p_max = sh_spectrum(sh).largest();
    } else {
      row.s_inf = 0.0;
      row.p_max = 1.0;
    }
    row.log_z_matches = std::abs(row.log_z - row.s_inf) < kThermoIdentityTolerance;
    rows.push_back(row);
  }
  return rows;
}

void write_thermo_csv(std::ostream& out, const std::vector<ThermoRow>& rows) {
  out << "param,beta_eff,Z,ln_Z,S_inf,F,p_max,lnZ_eq_S_inf\n";
  for (const auto& row : rows) {
    out << format_number(row.param) << ',' << format_number(row.beta_eff) << ','
        << format_number(row.z) << ',' << format_number(row.log_z) << ','
        << format_number(row.s_inf) << ',' << format_number(row.f) << ','
        << format_number(row.p_max) << ',' << (row.log_z_matches ? "true" : "false") << '\n';
  }
}

void write_thermo_json(std::ostream& out, const std::vector<ThermoRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    j["param"] = json_number(row.param);
    j["beta_eff"] = json_number(row.beta_eff);
    j["Z"] = json_number(row.z);
    j["ln_Z"] = json_number(row.log_z);
    j["S_inf"] = json_number(row.s_inf);
    j["F"] = json_number(row.f);
    j["p_max"] = json_number(row.p_max);
    j["lnZ_eq_S_inf"] = row.log_z_matches;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

std::size_t memory_budget_from_env(std::size_t fallback) {
  const char* raw = std::getenv("MEK_MEM_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  std::string_view text(raw);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw DomainError("MEK_MEM_BUDGET must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace mek
