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

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "mek/fockspace.hpp"
#include "mek/spectra.hpp"

namespace mek {

enum class ThermalModelKind { kOscillator, kTwoLevel };

/// Canonical ensemble whose Boltzmann weights reproduce an entanglement spectrum.
/// Levels start at E_0 = 0. beta may be +inf (separable state, zero temperature).
class EffectiveThermalModel {
 public:
  /// Ladder E_n = n * hbar_omega at reciprocal temperature beta.
  static EffectiveThermalModel oscillator(double beta, double hbar_omega);
  /// Levels {0, delta} at reciprocal temperature beta.
  static EffectiveThermalModel two_level(double beta, double delta);

  ThermalModelKind kind() const noexcept { return kind_; }
  double beta() const noexcept { return beta_; }
  double energy_scale() const noexcept { return scale_; }
  double partition_function() const noexcept { return std::exp(log_z_); }
  double log_partition_function() const noexcept { return log_z_; }
  /// F = -ln Z / beta, 0 at zero temperature.
  double free_energy() const noexcept;
  bool is_zero_temperature() const noexcept {
    return beta_ == std::numeric_limits<double>::infinity();
  }

  /// Number of levels; the oscillator ladder reports SIZE_MAX.
  std::size_t level_count() const noexcept;
  /// First `count` levels. Throws DimensionError past level_count().
  std::vector<double> energy_levels(std::size_t count) const;
  /// e^{-beta E_n} / Z for the first `count` levels.
  std::vector<double> boltzmann_weights(std::size_t count) const;

 private:
  EffectiveThermalModel(ThermalModelKind kind, double beta, double scale, double log_z);

  ThermalModelKind kind_;
  double beta_;
  double scale_;
  double log_z_;
};

/// beta from e^{-beta hbar_omega / 2} = tanh r.
double oscillator_beta(double r, double hbar_omega);
/// The same quantity written as -ln(tanh^2 r) / hbar_omega.
double oscillator_beta_from_tanh_squared(double r, double hbar_omega);
/// beta from e^{-beta delta} = tanh(f . f).
double two_level_beta(const SHParams& params, double delta);

EffectiveThermalModel oscillator_model_from_squeezing(double r, double hbar_omega = 1.0);
EffectiveThermalModel two_level_model_from_sh(const SHParams& params, double delta = 1.0);

struct ThermalConsistency {
  double max_weight_deviation = 0.0;
  /// |ln Z - S_inf|
  double log_z_deviation = 0.0;
  /// |F + S_inf / beta|
  double free_energy_deviation = 0.0;

  double worst() const noexcept;
};

/// Compares the model's Boltzmann weights and ln Z with a spectrum.
ThermalConsistency verify_thermal_consistency(const EffectiveThermalModel& model,
                                              const EntanglementSpectrum& spectrum);

}  // namespace mek
