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

#include "mek/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "mek/errors.hpp"

namespace mek {

EntanglementSpectrum::EntanglementSpectrum(std::vector<double> probabilities, double rank_tolerance)
    : p_(std::move(probabilities)), rank_tolerance_(rank_tolerance) {
  for (double& p : p_) {
    if (!std::isfinite(p)) throw ContractError("entanglement spectrum entry is not finite");
    if (p < -kNegativeClamp) {
      throw ContractError("entanglement spectrum entry " + std::to_string(p) +
                          " is below the round-off window");
    }
    if (p < 0.0) p = 0.0;
  }
  std::stable_sort(p_.begin(), p_.end(), std::greater<>());
}

double EntanglementSpectrum::total() const noexcept {
  return std::accumulate(p_.begin(), p_.end(), 0.0);
}

ReducedDensityMatrix partial_trace(const AmplitudeTensor& state, std::size_t keep_factor) {
  const auto& dims = state.mode_dims();
  if (keep_factor >= dims.size()) {
    throw DimensionError("partial_trace: factor " + std::to_string(keep_factor) +
                         " does not exist in a tensor with " + std::to_string(dims.size()) +
                         " factors");
  }
  Eigen::Index left = 1;
  Eigen::Index right = 1;
  for (std::size_t k = 0; k < keep_factor; ++k) left *= dims[k];
  for (std::size_t k = keep_factor + 1; k < dims.size(); ++k) right *= dims[k];
  const Eigen::Index kept = dims[keep_factor];

  using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  ReducedDensityMatrix rho{ComplexMatrix::Zero(kept, kept)};
  const Complex* data = state.amplitudes().data();
  for (Eigen::Index l = 0; l < left; ++l) {
    Eigen::Map<const RowMajor> block(data + l * kept * right, kept, right);
    rho.entries.noalias() += block * block.adjoint();
  }
  return rho;
}

std::vector<double> jacobi_symmetric_eigenvalues(Eigen::MatrixXd a, double relative_tolerance,
                                                 int max_sweeps) {
  if (a.rows() != a.cols()) throw DimensionError("jacobi: matrix must be square");
  const Eigen::Index n = a.rows();
  const double trace = std::abs(a.trace());
  const double scale = trace > 0.0 ? trace : a.norm();

  auto off_norm = [&] {
    double sum = 0.0;
    for (Eigen::Index q = 1; q < n; ++q) {
      for (Eigen::Index p = 0; p < q; ++p) sum += a(p, q) * a(p, q);
    }
    return std::sqrt(2.0 * sum);
  };

  double residual = off_norm();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (residual <= relative_tolerance * scale) {
      std::vector<double> out(static_cast<std::size_t>(n));
      for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a(i, i);
      return out;
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
      }
    }
    residual = off_norm();
  }
  throw NumericalError("jacobi: no convergence after " + std::to_string(max_sweeps) + " sweeps",
                       residual);
}

EntanglementSpectrum hermitian_eigenvalues(const ReducedDensityMatrix& rho,
                                           double hermiticity_tolerance) {
  const ComplexMatrix& m = rho.entries;
  if (m.rows() != m.cols()) throw DimensionError("hermitian_eigenvalues: matrix must be square");
  const double asymmetry = m.size() == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > hermiticity_tolerance) {
    throw ContractError("hermitian_eigenvalues: matrix deviates from Hermitian by " +
                        std::to_string(asymmetry));
  }
  const Eigen::Index d = m.rows();
  // Symmetrize first so the embedding is exactly symmetric.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::MatrixXd embedded(2 * d, 2 * d);
  embedded.topLeftCorner(d, d) = h.real();
  embedded.bottomRightCorner(d, d) = h.real();
  embedded.topRightCorner(d, d) = -h.imag();
  embedded.bottomLeftCorner(d, d) = h.imag();

  std::vector<double> doubled = jacobi_symmetric_eigenvalues(std::move(embedded));
  std::sort(doubled.begin(), doubled.end(), std::greater<>());
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < doubled.size(); i += 2) values.push_back(doubled[i]);
  return EntanglementSpectrum(std::move(values));
}

std::size_t schmidt_rank(const EntanglementSpectrum& spectrum) {
  const auto& p = spectrum.probabilities();
  return static_cast<std::size_t>(std::count_if(
      p.begin(), p.end(), [&](double x) { return x > spectrum.rank_tolerance(); }));
}

std::vector<double> singular_values(const ComplexMatrix& matrix, int max_sweeps) {
  ComplexMatrix a = matrix.rows() >= matrix.cols() ? matrix : ComplexMatrix(matrix.adjoint());
  const Eigen::Index cols = a.cols();
  const double eps = std::numeric_limits<double>::epsilon();

  bool rotated = true;
  for (int sweep = 0; sweep < max_sweeps && rotated; ++sweep) {
    rotated = false;
    for (Eigen::Index i = 0; i < cols - 1; ++i) {
      for (Eigen::Index j = i + 1; j < cols; ++j) {
        const double alpha = a.col(i).squaredNorm();
        const double beta = a.col(j).squaredNorm();
        const Complex gamma = a.col(i).dot(a.col(j));
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        // Rephase column j so that <a_i, a_j> is real and positive, then rotate.
        a.col(j) *= std::conj(gamma) / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        const Eigen::VectorXcd ai = a.col(i);
        a.col(i) = c * ai - s * a.col(j);
        a.col(j) = s * ai + c * a.col(j);
      }
    }
  }
  if (rotated) throw NumericalError("singular_values: one-sided Jacobi did not converge", 0.0);

  std::vector<double> out(static_cast<std::size_t>(cols));
  for (Eigen::Index i = 0; i < cols; ++i) out[static_cast<std::size_t>(i)] = a.col(i).norm();
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

EntanglementSpectrum entanglement_spectrum(const AmplitudeTensor& state, std::size_t keep_factor) {
  return hermitian_eigenvalues(partial_trace(state, keep_factor));
}

double max_abs_difference(const EntanglementSpectrum& a, const EntanglementSpectrum& b) {
  const std::size_t n = std::max(a.size(), b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    worst = std::max(worst, std::abs(x - y));
  }
  return worst;
}

}  // namespace mek
