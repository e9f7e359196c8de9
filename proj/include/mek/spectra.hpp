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

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "mek/fockspace.hpp"

namespace mek {

inline constexpr double kRankTolerance = 1e-10;
inline constexpr double kNegativeClamp = 1e-10;

/// rho = Tr_rest |psi><psi| for one retained factor.
struct ReducedDensityMatrix {
  ComplexMatrix entries;

  int subsystem_dim() const noexcept { return static_cast<int>(entries.rows()); }
};

/// Reduced-density eigenvalues, sorted descending and clamped to be non-negative.
class EntanglementSpectrum {
 public:
  EntanglementSpectrum() = default;
  /// Sorts `probabilities` descending. Entries in [-kNegativeClamp, 0) become 0;
  /// anything more negative is a ContractError.
  explicit EntanglementSpectrum(std::vector<double> probabilities,
                                double rank_tolerance = kRankTolerance);

  const std::vector<double>& probabilities() const noexcept { return p_; }
  double rank_tolerance() const noexcept { return rank_tolerance_; }
  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t n) const { return p_[n]; }
  double largest() const noexcept { return p_.empty() ? 0.0 : p_.front(); }

  double total() const noexcept;
  /// |1 - sum_n p_n|
  double normalization_defect() const noexcept { return std::abs(1.0 - total()); }

 private:
  std::vector<double> p_;
  double rank_tolerance_ = kRankTolerance;
};

/// Traces out every factor except `keep_factor`.
ReducedDensityMatrix partial_trace(const AmplitudeTensor& state, std::size_t keep_factor);

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, unsorted.
/// Stops once the off-diagonal Frobenius norm falls below `relative_tolerance`
/// times |trace| (or times the Frobenius norm when the trace vanishes).
std::vector<double> jacobi_symmetric_eigenvalues(Eigen::MatrixXd matrix,
                                                 double relative_tolerance = 1e-14,
                                                 int max_sweeps = 100);

/// Spectrum of a Hermitian matrix through its real-symmetric embedding
/// [[Re, -Im], [Im, Re]], whose eigenvalues come in exact pairs.
EntanglementSpectrum hermitian_eigenvalues(const ReducedDensityMatrix& rho,
                                           double hermiticity_tolerance = 1e-12);

/// Number of entries above the spectrum's rank tolerance.
std::size_t schmidt_rank(const EntanglementSpectrum& spectrum);

/// Singular values of a complex matrix by one-sided (Hestenes) Jacobi, descending.
/// Resolves tiny singular values to absolute precision near machine epsilon times
/// the largest one, which the square roots of density eigenvalues cannot.
std::vector<double> singular_values(const ComplexMatrix& matrix, int max_sweeps = 60);

/// partial_trace followed by hermitian_eigenvalues.
EntanglementSpectrum entanglement_spectrum(const AmplitudeTensor& state, std::size_t keep_factor = 0);

/// Largest element-wise difference, treating missing trailing entries as zero.
double max_abs_difference(const EntanglementSpectrum& a, const EntanglementSpectrum& b);

}  // namespace mek
