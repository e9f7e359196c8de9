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

#include "mek/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "mek/errors.hpp"
#include "numerics.hpp"

namespace mek {
namespace {

using detail::log_cosh;
using detail::log_sinh;
using detail::kLn2;
using detail::log_tanh;

constexpr double kNormalizationContract = 1e-8;

void require_squeezing(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("squeezing magnitude must be finite and >= 0, got " + std::to_string(r));
  }
}


double log_sum_exp(double a, double b) {
  const double hi = std::max(a, b);
  if (hi == -std::numeric_limits<double>::infinity()) return hi;
  return hi + std::log(std::exp(a - hi) + std::exp(b - hi));
}

// -p ln p with the 0 ln 0 = 0 convention.
double shannon_term(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

}  // namespace

RenyiOrder::RenyiOrder(double mu) : mu_(mu) {
  if (std::isnan(mu) || mu < 0.0) throw DomainError("Renyi order must be >= 0");
}

double log_squeezed_spectrum(double r, long long n) {
  require_squeezing(r);
  if (n < 0) throw DomainError("spectrum index must be non-negative");
  if (r == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  return 2.0 * static_cast<double>(n) * log_tanh(r) - 2.0 * log_cosh(r);
}

double squeezed_spectrum(double r, long long n) { return std::exp(log_squeezed_spectrum(r, n)); }

EntanglementSpectrum squeezed_spectrum_prefix(double r, std::size_t count) {
  std::vector<double> p(count);
  for (std::size_t n = 0; n < count; ++n) p[n] = squeezed_spectrum(r, static_cast<long long>(n));
  return EntanglementSpectrum(std::move(p));
}

double renyi_squeezed(double r, RenyiOrder mu) {
  require_squeezing(r);
  if (r == 0.0) return 0.0;
  if (mu.is_zero()) return std::numeric_limits<double>::infinity();
  if (mu.is_infinite()) return 2.0 * log_cosh(r);
  const double lt = log_tanh(r);
  if (mu.is_von_neumann()) {
    // cosh^2 ln cosh^2 - sinh^2 ln sinh^2 rewritten as 2 ln cosh r - sinh^2 r ln tanh^2 r.
    return 2.0 * log_cosh(r) + 2.0 * std::exp(2.0 * log_sinh(r) + std::log(-lt));
  }
  const double m = mu.value();
  const double log_one_minus = detail::log1m_exp(2.0 * m * lt);
  return (log_one_minus + 2.0 * m * log_cosh(r)) / (m - 1.0);
}

double renyi_general(const EntanglementSpectrum& spectrum, RenyiOrder mu) {
  if (spectrum.size() == 0) throw ContractError("renyi_general: empty spectrum");
  const double defect = spectrum.normalization_defect();
  if (defect > kNormalizationContract) {
    throw ContractError("renyi_general: spectrum sums to 1 only within " + std::to_string(defect));
  }
  const auto& p = spectrum.probabilities();
  if (mu.is_infinite()) return -std::log(spectrum.largest());
  if (mu.is_zero()) return std::log(static_cast<double>(schmidt_rank(spectrum)));
  if (mu.is_von_neumann()) {
    double s = 0.0;
    for (double x : p) s += shannon_term(x);
    return s;
  }
  const double m = mu.value();
  const double log_max = std::log(spectrum.largest());
  double sum = 0.0;
  for (double x : p) {
    if (x > 0.0) sum += std::exp(m * (std::log(x) - log_max));
  }
  return (m * log_max + std::log(sum)) / (1.0 - m);
}

double sh_overlap_constant(const SHParams& params) { return std::exp(-2.0 * params.norm_squared()); }

EntanglementSpectrum sh_spectrum(const SHParams& params) {
  const double x = params.norm_squared();
  const double c = std::exp(-2.0 * x);
  return EntanglementSpectrum({0.5 * (1.0 + c), -0.5 * std::expm1(-2.0 * x)});
}

double renyi_sh(const SHParams& params, RenyiOrder mu) {
  const double x = params.norm_squared();
  if (x == 0.0) return 0.0;
  const double c = std::exp(-2.0 * x);
  const double log_plus = std::log1p(c) - kLn2;
  const double log_minus = detail::log1m_exp(-2.0 * x) - kLn2;
  if (mu.is_zero()) return kLn2;
  if (mu.is_infinite()) return -log_plus;
  if (mu.is_von_neumann()) {
    return -std::exp(log_plus) * log_plus - std::exp(log_minus) * log_minus;
  }
  const double m = mu.value();
  return log_sum_exp(m * log_plus, m * log_minus) / (1.0 - m);
}

double von_neumann_limit_check(double r, double epsilon) {
  if (!(r > 0.0)) throw DomainError("von_neumann_limit_check needs r > 0");
  if (!(epsilon > 0.0 && epsilon < 0.1)) {
    throw DomainError("von_neumann_limit_check needs 0 < epsilon < 0.1");
  }
  return std::abs(renyi_squeezed(r, RenyiOrder(1.0 + epsilon)) - renyi_squeezed(r, RenyiOrder(1.0)));
}

EntropyReport entropy_report(const EntanglementSpectrum& spectrum, std::span<const double> mu_grid) {
  EntropyReport report;
  for (double mu : mu_grid) report.s_mu_grid.emplace_back(mu, renyi_general(spectrum, RenyiOrder(mu)));
  report.s_vn = renyi_general(spectrum, RenyiOrder(1.0));
  report.s_2 = renyi_general(spectrum, RenyiOrder(2.0));
  report.purity_gamma = 0.0;
  for (double p : spectrum.probabilities()) report.purity_gamma += p * p;
  report.sce = renyi_general(spectrum, RenyiOrder::infinity());
  report.schmidt_rank_log = renyi_general(spectrum, RenyiOrder(0.0));
  return report;
}

EntropyReport squeezed_entropy_report(double r, std::span<const double> mu_grid) {
  EntropyReport report;
  for (double mu : mu_grid) report.s_mu_grid.emplace_back(mu, renyi_squeezed(r, RenyiOrder(mu)));
  report.s_vn = renyi_squeezed(r, RenyiOrder(1.0));
  report.s_2 = renyi_squeezed(r, RenyiOrder(2.0));
  report.purity_gamma = 1.0 / std::cosh(2.0 * r);
  report.sce = renyi_squeezed(r, RenyiOrder::infinity());
  report.schmidt_rank_log = renyi_squeezed(r, RenyiOrder(0.0));
  return report;
}

EntropyReport sh_entropy_report(const SHParams& params, std::span<const double> mu_grid) {
  EntropyReport report;
  for (double mu : mu_grid) report.s_mu_grid.emplace_back(mu, renyi_sh(params, RenyiOrder(mu)));
  report.s_vn = renyi_sh(params, RenyiOrder(1.0));
  report.s_2 = renyi_sh(params, RenyiOrder(2.0));
  const double c = sh_overlap_constant(params);
  report.purity_gamma = 0.5 * (1.0 + c * c);
  report.sce = renyi_sh(params, RenyiOrder::infinity());
  report.schmidt_rank_log = renyi_sh(params, RenyiOrder(0.0));
  return report;
}

}  // namespace mek
