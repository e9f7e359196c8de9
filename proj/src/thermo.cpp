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

#include "mek/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mek/errors.hpp"
#include "numerics.hpp"

namespace mek {
namespace {

using detail::log_tanh;


void require_scale(double scale, const char* name) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw DomainError(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

EffectiveThermalModel::EffectiveThermalModel(ThermalModelKind kind, double beta, double scale,
                                             double log_z)
    : kind_(kind), beta_(beta), scale_(scale), log_z_(log_z) {}

EffectiveThermalModel EffectiveThermalModel::oscillator(double beta, double hbar_omega) {
  require_scale(hbar_omega, "hbar_omega");
  if (!(beta > 0.0)) throw DomainError("reciprocal temperature must be positive");
  // Z = 1 / (1 - e^{-beta hbar_omega})
  const double log_z = std::isinf(beta) ? 0.0 : -std::log(-std::expm1(-beta * hbar_omega));
  return {ThermalModelKind::kOscillator, beta, hbar_omega, log_z};
}

EffectiveThermalModel EffectiveThermalModel::two_level(double beta, double delta) {
  require_scale(delta, "delta");
  if (!(beta >= 0.0)) throw DomainError("reciprocal temperature must be non-negative");
  const double log_z = std::isinf(beta) ? 0.0 : std::log1p(std::exp(-beta * delta));
  return {ThermalModelKind::kTwoLevel, beta, delta, log_z};
}

double EffectiveThermalModel::free_energy() const noexcept {
  return is_zero_temperature() ? 0.0 : -log_z_ / beta_;
}

std::size_t EffectiveThermalModel::level_count() const noexcept {
  return kind_ == ThermalModelKind::kTwoLevel ? 2 : std::numeric_limits<std::size_t>::max();
}

std::vector<double> EffectiveThermalModel::energy_levels(std::size_t count) const {
  if (count > level_count()) {
    throw DimensionError("two-level model has 2 levels, " + std::to_string(count) + " requested");
  }
  std::vector<double> levels(count);
  for (std::size_t n = 0; n < count; ++n) levels[n] = static_cast<double>(n) * scale_;
  return levels;
}

std::vector<double> EffectiveThermalModel::boltzmann_weights(std::size_t count) const {
  const std::vector<double> levels = energy_levels(count);
  std::vector<double> weights(count, 0.0);
  if (is_zero_temperature()) {
    if (count > 0) weights[0] = 1.0;
    return weights;
  }
  for (std::size_t n = 0; n < count; ++n) weights[n] = std::exp(-beta_ * levels[n] - log_z_);
  return weights;
}

double oscillator_beta(double r, double hbar_omega) {
  require_scale(hbar_omega, "hbar_omega");
  if (!(r >= 0.0)) throw DomainError("squeezing magnitude must be >= 0");
  if (r == 0.0) return std::numeric_limits<double>::infinity();
  return -2.0 * log_tanh(r) / hbar_omega;
}

double oscillator_beta_from_tanh_squared(double r, double hbar_omega) {
  require_scale(hbar_omega, "hbar_omega");
  if (!(r >= 0.0)) throw DomainError("squeezing magnitude must be >= 0");
  if (r == 0.0) return std::numeric_limits<double>::infinity();
  // ln(tanh^2 r) through the cancellation-free ln tanh.
  const double log_tanh_squared = 2.0 * log_tanh(r);
  return -log_tanh_squared / hbar_omega;
}

double two_level_beta(const SHParams& params, double delta) {
  require_scale(delta, "delta");
  const double x = params.norm_squared();
  if (x == 0.0) return std::numeric_limits<double>::infinity();
  return -log_tanh(x) / delta;
}

EffectiveThermalModel oscillator_model_from_squeezing(double r, double hbar_omega) {
  return EffectiveThermalModel::oscillator(oscillator_beta(r, hbar_omega), hbar_omega);
}

EffectiveThermalModel two_level_model_from_sh(const SHParams& params, double delta) {
  return EffectiveThermalModel::two_level(two_level_beta(params, delta), delta);
}

double ThermalConsistency::worst() const noexcept {
  return std::max({max_weight_deviation, log_z_deviation, free_energy_deviation});
}

ThermalConsistency verify_thermal_consistency(const EffectiveThermalModel& model,
                                              const EntanglementSpectrum& spectrum) {
  if (spectrum.size() > model.level_count()) {
    throw DimensionError("spectrum has " + std::to_string(spectrum.size()) +
                         " entries but the model only " + std::to_string(model.level_count()) +
                         " levels");
  }
  ThermalConsistency report;
  const std::vector<double> weights = model.boltzmann_weights(spectrum.size());
  for (std::size_t n = 0; n < spectrum.size(); ++n) {
    report.max_weight_deviation = std::max(report.max_weight_deviation, std::abs(weights[n] - spectrum[n]));
  }
  const double sce = -std::log(spectrum.largest());
  report.log_z_deviation = std::abs(model.log_partition_function() - sce);
  const double sce_over_beta = model.is_zero_temperature() ? 0.0 : sce / model.beta();
  report.free_energy_deviation = std::abs(model.free_energy() + sce_over_beta);
  return report;
}

}  // namespace mek
