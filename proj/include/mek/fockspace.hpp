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

// Truncated occupation-number representation of the two-mode and qubit-plus-bath
// pure states, built from ladder-operator matrices. This is the brute-force
// side of every closed-form comparison in the library.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace mek {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTailTolerance = 1e-12;
inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 28;

/// Highest occupation number kept per bosonic mode.
class FockCutoff {
 public:
  explicit FockCutoff(int n_max);
  int n_max() const noexcept { return n_max_; }
  int dim() const noexcept { return n_max_ + 1; }

 private:
  int n_max_;
};

/// z = r e^{i theta}.
struct SqueezedStateParams {
  double r = 0.0;
  double theta = 0.0;

  Complex z() const { return std::polar(r, theta); }
};

/// Mode-A displacement `alpha` and mode-B displacement `beta_b`.
struct DisplacementParams {
  Complex alpha{};
  Complex beta_b{};
};

/// Real per-mode displacements of the Silbey-Harris ansatz.
struct SHParams {
  std::vector<double> f;

  std::size_t modes() const noexcept { return f.size(); }
  /// f . f
  double norm_squared() const noexcept;
};

/// Dense amplitudes of a pure state on a product of truncated factors, stored
/// row-major (last factor fastest).
class AmplitudeTensor {
 public:
  AmplitudeTensor() = default;
  explicit AmplitudeTensor(std::vector<int> mode_dims);
  AmplitudeTensor(std::vector<int> mode_dims, std::vector<Complex> amplitudes);

  const std::vector<int>& mode_dims() const noexcept { return dims_; }
  std::size_t factors() const noexcept { return dims_.size(); }
  std::size_t size() const noexcept { return amps_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }

  Complex& at(std::span<const int> index);
  const Complex& at(std::span<const int> index) const;
  Complex& at(std::initializer_list<int> index) { return at(std::span<const int>(index.begin(), index.size())); }
  const Complex& at(std::initializer_list<int> index) const {
    return at(std::span<const int>(index.begin(), index.size()));
  }

  /// <psi|psi>
  double norm_squared() const noexcept;
  /// 1 - <psi|psi>, the probability dropped by truncation.
  double tail_mass() const noexcept { return 1.0 - norm_squared(); }

  /// Two-factor tensors as a dim_A x dim_B matrix.
  ComplexMatrix as_matrix() const;
  static AmplitudeTensor from_matrix(const ComplexMatrix& m);

  /// Keeps the leading `new_dims[k]` levels of every factor.
  AmplitudeTensor truncated(std::span<const int> new_dims) const;
  /// Zero-pads every factor to `new_dims[k]` levels.
  AmplitudeTensor padded(std::span<const int> new_dims) const;

 private:
  std::size_t flat_index(std::span<const int> index) const;

  std::vector<int> dims_;
  std::vector<Complex> amps_;
};

/// a on span{|0>, ..., |n_max>}: entry (n-1, n) = sqrt(n).
ComplexMatrix annihilation(FockCutoff cutoff);
/// a^dagger, the conjugate transpose of annihilation().
ComplexMatrix creation(FockCutoff cutoff);

/// Kronecker product, first argument acting on the slow index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// e^G by scaling and squaring of a truncated Taylor series. The series order is
/// picked from the scaled norm and grows until the next term is negligible.
/// Throws DimensionError for non-square input, DomainError for non-finite entries
/// and NumericalError if the series has not converged at the maximal order.
ComplexMatrix operator_exponential(const ComplexMatrix& generator);

/// alpha a^dagger - alpha^* a on one mode.
ComplexMatrix displacement_generator(Complex alpha, FockCutoff cutoff);
/// z a^dagger b^dagger - z^* a b on the tensored two-mode space (dense).
ComplexMatrix two_mode_squeeze_generator(Complex z, FockCutoff cutoff);

/// Coherent-state series e^{-|alpha|^2/2} alpha^n / sqrt(n!), n = 0..n_max.
std::vector<Complex> coherent_series(Complex alpha, FockCutoff cutoff);

/// Smallest n_max whose Poissonian tail for mean |alpha|^2 is below tolerance.
int coherent_cutoff(double abs_alpha, double tolerance = kDefaultTailTolerance);
/// Smallest n_max with tanh^{2 mu (n_max+1)} r below tolerance. With mu = 1 this
/// bounds the dropped probability; smaller mu bounds the relative tail of the
/// Renyi power sum sum_n p_n^mu.
int squeezed_cutoff(double r, double tolerance = kDefaultTailTolerance, double mu_min = 1.0);
/// Cutoff for D(alpha, beta_B) S(z)|00> and S(z) D(alpha, beta_B)|00>.
int displaced_squeezed_cutoff(const SqueezedStateParams& squeeze, const DisplacementParams& shift,
                              double tolerance = kDefaultTailTolerance, double mu_min = 1.0);
/// Cutoff for the Silbey-Harris bath, shared by all modes.
int silbey_harris_cutoff(const SHParams& params, double tolerance = kDefaultTailTolerance);

/// Working dimension used internally before truncating back to `cutoff`; the
/// exponentials are evaluated on this larger space so that the edge of the
/// truncated ladder does not reach the retained levels.
int working_n_max(FockCutoff cutoff);

/// |alpha>_A |beta_B>_B.
AmplitudeTensor build_coherent_two_mode(const DisplacementParams& params, FockCutoff cutoff,
                                        double tolerance = kDefaultTailTolerance);

/// sum_n e^{i n theta} tanh^n r / cosh r |n>|n>, written term by term.
AmplitudeTensor build_squeezed_vacuum(const SqueezedStateParams& params, FockCutoff cutoff,
                                      double tolerance = kDefaultTailTolerance);

/// (D_A(alpha) x D_B(beta_B)) |state>, keeping the input's cutoff. Throws
/// TailMassError when the displaced amplitudes leak past the cutoff.
AmplitudeTensor apply_two_mode_displacement(const AmplitudeTensor& state,
                                            const DisplacementParams& params,
                                            double tolerance = kDefaultTailTolerance);

/// S(z)|state> on the tensored space, keeping the input's cutoff.
AmplitudeTensor apply_two_mode_squeeze(const AmplitudeTensor& state, Complex z,
                                       double tolerance = kDefaultTailTolerance);

/// S(z) D(alpha, beta_B) |0>|0>.
AmplitudeTensor build_squeezed_coherent(const SqueezedStateParams& squeeze,
                                        const DisplacementParams& shift, FockCutoff cutoff,
                                        double tolerance = kDefaultTailTolerance);

/// Displacement D' with S(z) D(alpha, beta_B) = D' S(z):
/// alpha' = alpha cosh r + e^{i theta} beta_B^* sinh r, and symmetrically for beta_B'.
DisplacementParams reordered_displacement(const SqueezedStateParams& squeeze,
                                          const DisplacementParams& shift);

/// (|up> |f> - |down> |-f>) / sqrt(2), qubit first (index 0 = up), then the N modes.
AmplitudeTensor build_silbey_harris(const SHParams& params, FockCutoff cutoff,
                                    double tolerance = kDefaultTailTolerance,
                                    std::size_t memory_budget = kDefaultMemoryBudget);

/// Max-norm distance between amplitude tensors of identical shape.
double max_abs_difference(const AmplitudeTensor& a, const AmplitudeTensor& b);

}  // namespace mek
