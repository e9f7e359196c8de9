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

#include "mek/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>

#include "mek/analytic.hpp"
#include "mek/spectra.hpp"
#include "mek/thermo.hpp"

namespace mek {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Portable uniform draws; std::uniform_real_distribution is not specified bit-exactly.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  Complex disc(double lo, double hi) {
    return std::polar(uniform(lo, hi), uniform(0.0, 2.0 * std::numbers::pi));
  }

 private:
  std::mt19937_64 engine_;
};

double tail_entropy_bound(double tail) { return tail * std::max(1.0, -std::log(tail)); }

}  // namespace

std::vector<VerifyCheck> run_verify(const VerifyOptions& options) {
  Draws draws(options.seed);
  const double tol = options.tail_tolerance;
  std::vector<VerifyCheck> checks;
  auto record = [&](std::string name, double deviation, double tolerance) {
    checks.push_back({std::move(name), deviation, tolerance});
  };

  const SqueezedStateParams squeeze{draws.uniform(0.3, 0.8), draws.uniform(0.0, 2.0 * std::numbers::pi)};
  const DisplacementParams shift{draws.disc(0.1, 0.5), draws.disc(0.1, 0.5)};
  const SHParams sh{{draws.uniform(0.1, 0.5), draws.uniform(0.1, 0.5), draws.uniform(0.1, 0.5)}};
  const std::array<double, 6> mu_grid{0.5, 1.0, 2.0, 5.0, 10.0, kInf};
  const std::array<double, 4> r_grid{0.1, 0.5, 1.0, 2.0};

  {
    ComplexMatrix x(12, 12);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = draws.disc(0.0, 1.0);
    }
    const ComplexMatrix u = operator_exponential(x - x.adjoint());
    record("operator_exponential.unitary",
           (u.adjoint() * u - ComplexMatrix::Identity(12, 12)).cwiseAbs().maxCoeff(), 1e-12);
  }
  {
    const FockCutoff cutoff(40);
    const ComplexMatrix u = operator_exponential(displacement_generator(shift.alpha, cutoff));
    const auto series = coherent_series(shift.alpha, cutoff);
    double worst = 0.0;
    for (int n = 0; n < cutoff.dim(); ++n) {
      worst = std::max(worst, std::abs(u(n, 0) - series[static_cast<std::size_t>(n)]));
    }
    record("coherent.series_vs_exponential", worst, 1e-10);
  }
  {
    const int n = coherent_cutoff(std::max(std::abs(shift.alpha), std::abs(shift.beta_b)), 0.5 * tol);
    const auto state = build_coherent_two_mode(shift, FockCutoff(n), tol);
    const auto sv = singular_values(state.as_matrix());
    record("coherent.schmidt_rank_one", sv.size() > 1 ? sv[1] : 0.0, 1e-10);
  }
  const int n_sq = squeezed_cutoff(squeeze.r, tol, 0.5);
  const auto squeezed = build_squeezed_vacuum(squeeze, FockCutoff(n_sq), tol);
  {
    double worst = 0.0;
    for (int m = 0; m <= n_sq; ++m) {
      for (int n = 0; n <= n_sq; ++n) {
        Complex expected = 0.0;
        if (m == n) {
          expected = std::polar(std::pow(std::tanh(squeeze.r), n) / std::cosh(squeeze.r),
                                n * squeeze.theta);
        }
        worst = std::max(worst, std::abs(squeezed.at({m, n}) - expected));
      }
    }
    record("squeezed.series_term_by_term", worst, 1e-14);
  }
  const EntanglementSpectrum squeezed_spec = entanglement_spectrum(squeezed);
  {
    double worst = 0.0;
    for (double theta : {0.0, std::numbers::pi / 4, std::numbers::pi / 2, std::numbers::pi}) {
      const auto other = entanglement_spectrum(build_squeezed_vacuum({squeeze.r, theta}, FockCutoff(n_sq), tol));
      worst = std::max(worst, max_abs_difference(other, squeezed_spec));
    }
    record("squeezed.theta_independence", worst, 1e-12);
  }
  {
    std::vector<double> p = squeezed_spec.probabilities();
    if (options.corrupt_normalization) p[0] *= 1.01;
    record("spectra.normalization", EntanglementSpectrum(std::move(p)).normalization_defect(), 1e-10);
  }

  const int n_disp = displaced_squeezed_cutoff(squeeze, shift, tol);
  const auto displaced = apply_two_mode_displacement(
      build_squeezed_vacuum(squeeze, FockCutoff(n_disp), 0.5 * tol), shift, tol);
  const auto displaced_spec = entanglement_spectrum(displaced, 0);
  const auto reference_spec =
      entanglement_spectrum(build_squeezed_vacuum(squeeze, FockCutoff(n_disp), 0.5 * tol));
  record("spectra.partition_symmetry",
         max_abs_difference(displaced_spec, entanglement_spectrum(displaced, 1)), 1e-10);
  record("displaced_squeezed.spectrum_invariance", max_abs_difference(displaced_spec, reference_spec), 1e-9);
  {
    const auto sc = build_squeezed_coherent(squeeze, shift, FockCutoff(n_disp), tol);
    record("squeezed_coherent.spectrum_invariance",
           max_abs_difference(entanglement_spectrum(sc), reference_spec), 1e-9);
    const auto reordered = apply_two_mode_displacement(
        build_squeezed_vacuum(squeeze, FockCutoff(n_disp), 0.5 * tol),
        reordered_displacement(squeeze, shift), tol);
    record("squeezed_coherent.reordering_identity", max_abs_difference(sc, reordered), 1e-9);
  }
  {
    double worst = 0.0;
    for (double mu : {0.5, 1.0, 2.0, 5.0}) {
      worst = std::max(worst, std::abs(renyi_general(squeezed_spec, RenyiOrder(mu)) -
                                       renyi_squeezed(squeeze.r, RenyiOrder(mu))));
    }
    worst = std::max(worst, std::abs(renyi_general(squeezed_spec, RenyiOrder::infinity()) -
                                     renyi_squeezed(squeeze.r, RenyiOrder::infinity())));
    record("analytic.squeezed_oracle_equivalence", worst, 1e-9);
  }
  {
    const int n = silbey_harris_cutoff(sh, tol);
    const auto spec = entanglement_spectrum(build_silbey_harris(sh, FockCutoff(n), tol), 0);
    record("analytic.sh_oracle_equivalence", max_abs_difference(spec, sh_spectrum(sh)), 1e-9);
  }
  {
    SHParams permuted{{sh.f[2], sh.f[0], sh.f[1]}};
    SHParams flipped{{-sh.f[0], sh.f[1], -sh.f[2]}};
    double worst = 0.0;
    for (double mu : mu_grid) {
      const double base = renyi_sh(sh, RenyiOrder(mu));
      worst = std::max({worst, std::abs(renyi_sh(permuted, RenyiOrder(mu)) - base),
                        std::abs(renyi_sh(flipped, RenyiOrder(mu)) - base)});
    }
    record("analytic.sh_depends_only_on_dot_product", worst, 1e-14);
  }
  {
    // Largest increase of S_mu along increasing mu; zero when non-increasing.
    double rise = 0.0;
    for (std::size_t i = 1; i < mu_grid.size(); ++i) {
      rise = std::max(rise, renyi_squeezed(squeeze.r, RenyiOrder(mu_grid[i])) -
                                renyi_squeezed(squeeze.r, RenyiOrder(mu_grid[i - 1])));
      rise = std::max(rise, renyi_sh(sh, RenyiOrder(mu_grid[i])) - renyi_sh(sh, RenyiOrder(mu_grid[i - 1])));
    }
    record("analytic.monotone_in_mu", rise, 0.0);
  }
  {
    // Strictly increasing in r: record the largest non-positive step as a positive number.
    double violation = 0.0;
    for (double mu : mu_grid) {
      for (std::size_t i = 1; i < r_grid.size(); ++i) {
        const double step = renyi_squeezed(r_grid[i], RenyiOrder(mu)) - renyi_squeezed(r_grid[i - 1], RenyiOrder(mu));
        if (!(step > 0.0)) violation = std::max(violation, 1.0 - step);
      }
    }
    record("analytic.increasing_in_r", violation, 0.0);
  }
  {
    double worst = 0.0;
    for (double r : r_grid) {
      worst = std::max(worst, std::abs(std::exp(-renyi_squeezed(r, RenyiOrder(2.0))) - 1.0 / std::cosh(2.0 * r)));
    }
    record("analytic.purity_sech_2r", worst, 1e-12);
  }
  {
    const double ratio = von_neumann_limit_check(1.0, 1e-3) / von_neumann_limit_check(1.0, 1e-4);
    record("analytic.von_neumann_limit", std::abs(ratio / 10.0 - 1.0), 0.2);
  }
  {
    const auto model = oscillator_model_from_squeezing(squeeze.r);
    record("thermo.oscillator_vs_closed_form",
           verify_thermal_consistency(model, squeezed_spectrum_prefix(squeeze.r, 200)).worst(), 1e-12);
    record("thermo.oscillator_vs_oracle", verify_thermal_consistency(model, squeezed_spec).worst(), 1e-9);
    record("thermo.two_level_vs_closed_form",
           verify_thermal_consistency(two_level_model_from_sh(sh), sh_spectrum(sh)).worst(), 1e-12);
  }
  {
    double worst = 0.0;
    for (double r : r_grid) {
      const double a = oscillator_beta(r, 1.0);
      worst = std::max(worst, std::abs(a - oscillator_beta_from_tanh_squared(r, 1.0)) / a);
    }
    record("thermo.beta_forms_agree", worst, 1e-15);
  }
  {
    double violation = 0.0;
    for (std::size_t i = 1; i < r_grid.size(); ++i) {
      const double t0 = 1.0 / oscillator_beta(r_grid[i - 1], 1.0);
      const double t1 = 1.0 / oscillator_beta(r_grid[i], 1.0);
      if (!(t1 > t0)) violation = std::max(violation, t0 - t1 + 1.0);
      const double s0 = 1.0 / two_level_beta(SHParams{{std::sqrt(r_grid[i - 1])}}, 1.0);
      const double s1 = 1.0 / two_level_beta(SHParams{{std::sqrt(r_grid[i])}}, 1.0);
      if (!(s1 > s0)) violation = std::max(violation, s0 - s1 + 1.0);
    }
    record("thermo.temperature_increasing", violation, 0.0);
  }
  {
    // Doubling the cutoff moves each named entropy by at most the entropy carried
    // by the dropped tail.
    const int n = squeezed_cutoff(squeeze.r, tol);
    const double tail = std::pow(std::tanh(squeeze.r), 2.0 * (n + 1));
    const auto coarse = entanglement_spectrum(build_squeezed_vacuum(squeeze, FockCutoff(n), tol));
    const auto fine = entanglement_spectrum(build_squeezed_vacuum(squeeze, FockCutoff(2 * n + 1), tol));
    double worst = 0.0;
    for (double mu : {1.0, 2.0, kInf}) {
      worst = std::max(worst, std::abs(renyi_general(coarse, RenyiOrder(mu)) - renyi_general(fine, RenyiOrder(mu))));
    }
    record("fockspace.truncation_convergence", worst, 10.0 * tail_entropy_bound(tail));
  }
  return checks;
}

void write_verify_report(std::ostream& out, const std::vector<VerifyCheck>& checks) {
  std::size_t failed = 0;
  for (const auto& check : checks) {
    out << (check.passed() ? "PASS  " : "FAIL  ") << std::left << std::setw(44) << check.name
        << " max_dev=" << std::scientific << std::setprecision(3) << check.max_deviation
        << " tol=" << check.tolerance << std::defaultfloat << '\n';
    if (!check.passed()) ++failed;
  }
  out << checks.size() - failed << '/' << checks.size() << " checks passed\n";
}

bool all_passed(const std::vector<VerifyCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed(); });
}

}  // namespace mek
