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

// Closed-form entanglement spectra and Renyi entropies for the two-mode squeezed
// vacuum and the Silbey-Harris qubit-bath state.

#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "mek/fockspace.hpp"
#include "mek/spectra.hpp"

namespace mek {

/// Renyi parameter mu in [0, inf]. mu = 0, 1 and inf select the limiting forms.
class RenyiOrder {
 public:
  explicit RenyiOrder(double mu);
  static RenyiOrder infinity() { return RenyiOrder(std::numeric_limits<double>::infinity()); }

  double value() const noexcept { return mu_; }
  bool is_zero() const noexcept { return mu_ == 0.0; }
  bool is_von_neumann() const noexcept { return mu_ == 1.0; }
  bool is_infinite() const noexcept { return mu_ == std::numeric_limits<double>::infinity(); }

 private:
  double mu_;
};

/// S_mu over a grid plus the named special cases.
struct EntropyReport {
  std::vector<std::pair<double, double>> s_mu_grid;
  double s_vn = 0.0;
  double s_2 = 0.0;
  double purity_gamma = 1.0;
  double sce = 0.0;
  /// ln(Schmidt rank); +inf for the infinite-rank squeezed spectrum.
  double schmidt_rank_log = 0.0;
};

/// ln p_n = 2n ln tanh r - 2 ln cosh r (log-domain, finite for any n when r > 0).
double log_squeezed_spectrum(double r, long long n);
/// p_n = tanh^{2n} r / cosh^2 r.
double squeezed_spectrum(double r, long long n);
/// First `count` entries of the squeezed-vacuum spectrum.
EntanglementSpectrum squeezed_spectrum_prefix(double r, std::size_t count);

/// S_mu of the two-mode squeezed vacuum. mu = 0 returns +inf for r > 0.
double renyi_squeezed(double r, RenyiOrder mu);

/// S_mu of an arbitrary normalized spectrum. Throws ContractError when the
/// spectrum sums to 1 only within more than 1e-8.
double renyi_general(const EntanglementSpectrum& spectrum, RenyiOrder mu);

/// c = prod_k <f_k|-f_k> = exp(-2 f.f).
double sh_overlap_constant(const SHParams& params);
/// {(1 + c)/2, (1 - c)/2}
EntanglementSpectrum sh_spectrum(const SHParams& params);
/// S_mu of the qubit reduction of the Silbey-Harris state.
double renyi_sh(const SHParams& params, RenyiOrder mu);

/// |S_{1+eps}(r) - S_1(r)| for the squeezed vacuum.
double von_neumann_limit_check(double r, double epsilon);

EntropyReport entropy_report(const EntanglementSpectrum& spectrum, std::span<const double> mu_grid);
EntropyReport squeezed_entropy_report(double r, std::span<const double> mu_grid);
EntropyReport sh_entropy_report(const SHParams& params, std::span<const double> mu_grid);

}  // namespace mek
