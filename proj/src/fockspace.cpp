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

#include "mek/fockspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mek/errors.hpp"
#include "numerics.hpp"

namespace mek {
namespace {

using detail::log_cosh;
using detail::log_tanh;

constexpr int kMaxTaylorOrder = 40;
constexpr double kScaledNormTarget = 0.5;

double one_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().colwise().sum().maxCoeff();
}



void require_two_factors(const AmplitudeTensor& state, const char* op) {
  if (state.factors() != 2) {
    throw DimensionError(std::string(op) + ": expected a two-mode tensor, got " +
                         std::to_string(state.factors()) + " factors");
  }
}

void require_tolerance(double tolerance) {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw DomainError("tail tolerance must be positive and finite");
  }
}

std::vector<Complex> vacuum_column(const ComplexMatrix& u, int keep) {
  std::vector<Complex> out(static_cast<std::size_t>(keep));
  for (int n = 0; n < keep; ++n) out[static_cast<std::size_t>(n)] = u(n, 0);
  return out;
}

// S(z) applied on the space the tensor already lives on. The generator commutes
// with n_a - n_b, so it is exponentiated one sector at a time.
AmplitudeTensor squeeze_without_padding(const AmplitudeTensor& state, Complex z) {
  const int dim_a = state.mode_dims()[0];
  const int dim_b = state.mode_dims()[1];
  const ComplexMatrix a = annihilation(FockCutoff(dim_a - 1));
  const ComplexMatrix b = annihilation(FockCutoff(dim_b - 1));
  const ComplexMatrix a_dag = a.adjoint();
  const ComplexMatrix b_dag = b.adjoint();

  AmplitudeTensor out(state.mode_dims());
  const auto in = state.amplitudes();
  auto dst = out.amplitudes();
  for (int delta = -(dim_b - 1); delta <= dim_a - 1; ++delta) {
    const int m0 = std::max(delta, 0);
    const int n0 = std::max(-delta, 0);
    const int length = std::min(dim_a - m0, dim_b - n0);
    if (length <= 0) continue;

    ComplexMatrix g = ComplexMatrix::Zero(length, length);
    for (int k = 0; k + 1 < length; ++k) {
      const int m = m0 + k;
      const int n = n0 + k;
      g(k + 1, k) = z * a_dag(m + 1, m) * b_dag(n + 1, n);
      g(k, k + 1) = -std::conj(z) * a(m, m + 1) * b(n, n + 1);
    }
    const ComplexMatrix u = operator_exponential(g);

    Eigen::VectorXcd v(length);
    for (int k = 0; k < length; ++k) {
      v(k) = in[static_cast<std::size_t>(m0 + k) * dim_b + static_cast<std::size_t>(n0 + k)];
    }
    const Eigen::VectorXcd w = u * v;
    for (int k = 0; k < length; ++k) {
      dst[static_cast<std::size_t>(m0 + k) * dim_b + static_cast<std::size_t>(n0 + k)] = w(k);
    }
  }
  return out;
}

}  // namespace

FockCutoff::FockCutoff(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
}

double SHParams::norm_squared() const noexcept {
  return std::inner_product(f.begin(), f.end(), f.begin(), 0.0);
}

// ---------------------------------------------------------------------------
// AmplitudeTensor

AmplitudeTensor::AmplitudeTensor(std::vector<int> mode_dims) : dims_(std::move(mode_dims)) {
  std::size_t total = 1;
  for (int d : dims_) {
    if (d <= 0) throw DimensionError("tensor factor dimensions must be positive");
    total *= static_cast<std::size_t>(d);
  }
  amps_.assign(total, Complex{});
}

AmplitudeTensor::AmplitudeTensor(std::vector<int> mode_dims, std::vector<Complex> amplitudes)
    : AmplitudeTensor(std::move(mode_dims)) {
  if (amplitudes.size() != amps_.size()) {
    throw DimensionError("amplitude count " + std::to_string(amplitudes.size()) +
                         " does not match mode dimensions (" + std::to_string(amps_.size()) + ")");
  }
  amps_ = std::move(amplitudes);
}

std::size_t AmplitudeTensor::flat_index(std::span<const int> index) const {
  if (index.size() != dims_.size()) {
    throw DimensionError("index rank " + std::to_string(index.size()) + " != tensor rank " +
                         std::to_string(dims_.size()));
  }
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (index[k] < 0 || index[k] >= dims_[k]) {
      throw DimensionError("index " + std::to_string(index[k]) + " out of range for factor " +
                           std::to_string(k) + " of dimension " + std::to_string(dims_[k]));
    }
    flat = flat * static_cast<std::size_t>(dims_[k]) + static_cast<std::size_t>(index[k]);
  }
  return flat;
}

Complex& AmplitudeTensor::at(std::span<const int> index) { return amps_[flat_index(index)]; }

const Complex& AmplitudeTensor::at(std::span<const int> index) const {
  return amps_[flat_index(index)];
}

double AmplitudeTensor::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& c : amps_) sum += std::norm(c);
  return sum;
}

ComplexMatrix AmplitudeTensor::as_matrix() const {
  if (dims_.size() != 2) throw DimensionError("as_matrix needs a two-factor tensor");
  using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  return Eigen::Map<const RowMajor>(amps_.data(), dims_[0], dims_[1]);
}

AmplitudeTensor AmplitudeTensor::from_matrix(const ComplexMatrix& m) {
  AmplitudeTensor out({static_cast<int>(m.rows()), static_cast<int>(m.cols())});
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out.amps_[static_cast<std::size_t>(i * m.cols() + j)] = m(i, j);
    }
  }
  return out;
}

AmplitudeTensor AmplitudeTensor::truncated(std::span<const int> new_dims) const {
  if (new_dims.size() != dims_.size()) throw DimensionError("truncated: rank mismatch");
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (new_dims[k] > dims_[k]) throw DimensionError("truncated: cannot grow a factor");
  }
  AmplitudeTensor out(std::vector<int>(new_dims.begin(), new_dims.end()));
  std::vector<int> idx(dims_.size(), 0);
  for (std::size_t flat = 0; flat < out.amps_.size(); ++flat) {
    out.amps_[flat] = at(idx);
    for (std::size_t k = idx.size(); k-- > 0;) {
      if (++idx[k] < new_dims[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

AmplitudeTensor AmplitudeTensor::padded(std::span<const int> new_dims) const {
  if (new_dims.size() != dims_.size()) throw DimensionError("padded: rank mismatch");
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (new_dims[k] < dims_[k]) throw DimensionError("padded: cannot shrink a factor");
  }
  AmplitudeTensor out(std::vector<int>(new_dims.begin(), new_dims.end()));
  std::vector<int> idx(dims_.size(), 0);
  for (std::size_t flat = 0; flat < amps_.size(); ++flat) {
    out.at(idx) = amps_[flat];
    for (std::size_t k = idx.size(); k-- > 0;) {
      if (++idx[k] < dims_[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

double max_abs_difference(const AmplitudeTensor& a, const AmplitudeTensor& b) {
  if (a.mode_dims() != b.mode_dims()) throw DimensionError("max_abs_difference: shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Operators

ComplexMatrix annihilation(FockCutoff cutoff) {
  const int d = cutoff.dim();
  ComplexMatrix a = ComplexMatrix::Zero(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix creation(FockCutoff cutoff) { return annihilation(cutoff).adjoint(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix operator_exponential(const ComplexMatrix& generator) {
  if (generator.rows() != generator.cols()) {
    throw DimensionError("operator_exponential: matrix is " + std::to_string(generator.rows()) +
                         "x" + std::to_string(generator.cols()) + ", expected square");
  }
  if (!generator.allFinite()) throw DomainError("operator_exponential: non-finite entries");
  const Eigen::Index n = generator.rows();
  if (n == 0) return generator;

  const double norm = one_norm(generator);
  int squarings = 0;
  if (norm > kScaledNormTarget) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kScaledNormTarget)));
  }
  const ComplexMatrix scaled = generator * std::ldexp(1.0, -squarings);

  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  const double eps = std::numeric_limits<double>::epsilon();
  double residual = std::numeric_limits<double>::infinity();
  for (int order = 1; order <= kMaxTaylorOrder; ++order) {
    term = (term * scaled) / static_cast<double>(order);
    result += term;
    residual = one_norm(term);
    if (residual <= eps * one_norm(result)) break;
  }
  if (!(residual <= eps * one_norm(result))) {
    throw NumericalError("operator_exponential: Taylor series did not converge", residual);
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

ComplexMatrix displacement_generator(Complex alpha, FockCutoff cutoff) {
  const ComplexMatrix a = annihilation(cutoff);
  return alpha * a.adjoint() - std::conj(alpha) * a;
}

ComplexMatrix two_mode_squeeze_generator(Complex z, FockCutoff cutoff) {
  const ComplexMatrix a = annihilation(cutoff);
  const ComplexMatrix id = ComplexMatrix::Identity(cutoff.dim(), cutoff.dim());
  const ComplexMatrix big_a = kron(a, id);
  const ComplexMatrix big_b = kron(id, a);
  return z * big_a.adjoint() * big_b.adjoint() - std::conj(z) * big_a * big_b;
}

std::vector<Complex> coherent_series(Complex alpha, FockCutoff cutoff) {
  std::vector<Complex> out(static_cast<std::size_t>(cutoff.dim()));
  Complex term = std::exp(-0.5 * std::norm(alpha));
  for (int n = 0; n < cutoff.dim(); ++n) {
    if (n > 0) term *= alpha / std::sqrt(static_cast<double>(n));
    out[static_cast<std::size_t>(n)] = term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cutoff selection

int coherent_cutoff(double abs_alpha, double tolerance) {
  require_tolerance(tolerance);
  if (!std::isfinite(abs_alpha)) throw DomainError("coherent_cutoff: non-finite displacement");
  const double mean = abs_alpha * abs_alpha;
  if (mean == 0.0) return 0;
  const double log_mean = std::log(mean);
  for (int n = 0;; ++n) {
    const double next = static_cast<double>(n + 1);
    if (next + 1.0 <= mean) continue;
    // Poisson tail beyond n is bounded by a geometric series started at term n+1.
    const double log_term = -mean + next * log_mean - std::lgamma(next + 1.0);
    const double bound = std::exp(log_term) / (1.0 - mean / (next + 1.0));
    if (bound < tolerance) return n;
  }
}

int squeezed_cutoff(double r, double tolerance, double mu_min) {
  require_tolerance(tolerance);
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("squeezing magnitude must be >= 0");
  if (!(mu_min > 0.0)) throw DomainError("squeezed_cutoff: mu_min must be positive");
  if (r == 0.0) return 0;
  const double levels = std::log(tolerance) / (2.0 * mu_min * log_tanh(r));
  return std::max(0, static_cast<int>(std::ceil(levels)) - 1);
}

int displaced_squeezed_cutoff(const SqueezedStateParams& squeeze, const DisplacementParams& shift,
                              double tolerance, double mu_min) {
  // |alpha cosh r + e^{i theta} beta^* sinh r| <= max(|alpha|, |beta|) e^r covers both orderings.
  const double reach = std::max(std::abs(shift.alpha), std::abs(shift.beta_b)) * std::exp(squeeze.r);
  return squeezed_cutoff(squeeze.r, 0.5 * tolerance, mu_min) +
         coherent_cutoff(reach, 0.5 * tolerance);
}

int silbey_harris_cutoff(const SHParams& params, double tolerance) {
  if (params.f.empty()) throw DomainError("Silbey-Harris state needs at least one mode");
  double largest = 0.0;
  for (double fk : params.f) largest = std::max(largest, std::abs(fk));
  return coherent_cutoff(largest, tolerance / static_cast<double>(params.modes()));
}

int working_n_max(FockCutoff cutoff) { return cutoff.n_max() + cutoff.n_max() / 2 + 16; }

// ---------------------------------------------------------------------------
// State builders

AmplitudeTensor build_coherent_two_mode(const DisplacementParams& params, FockCutoff cutoff,
                                        double tolerance) {
  require_tolerance(tolerance);
  const FockCutoff work(working_n_max(cutoff));
  const auto mode_a = vacuum_column(
      operator_exponential(displacement_generator(params.alpha, work)), cutoff.dim());
  const auto mode_b = vacuum_column(
      operator_exponential(displacement_generator(params.beta_b, work)), cutoff.dim());

  AmplitudeTensor out({cutoff.dim(), cutoff.dim()});
  auto amps = out.amplitudes();
  for (int m = 0; m < cutoff.dim(); ++m) {
    for (int n = 0; n < cutoff.dim(); ++n) {
      amps[static_cast<std::size_t>(m * cutoff.dim() + n)] =
          mode_a[static_cast<std::size_t>(m)] * mode_b[static_cast<std::size_t>(n)];
    }
  }
  const double tail = out.tail_mass();
  if (tail > tolerance) {
    throw TailMassError("build_coherent_two_mode", tail,
                        coherent_cutoff(std::max(std::abs(params.alpha), std::abs(params.beta_b)),
                                        0.5 * tolerance));
  }
  return out;
}

AmplitudeTensor build_squeezed_vacuum(const SqueezedStateParams& params, FockCutoff cutoff,
                                      double tolerance) {
  require_tolerance(tolerance);
  if (!(params.r >= 0.0) || !std::isfinite(params.r)) {
    throw DomainError("squeezing magnitude must be >= 0");
  }
  AmplitudeTensor out({cutoff.dim(), cutoff.dim()});
  auto amps = out.amplitudes();
  if (params.r == 0.0) {
    amps[0] = 1.0;
    return out;
  }
  const double lt = log_tanh(params.r);
  const double tail = std::exp(2.0 * lt * static_cast<double>(cutoff.dim()));
  if (tail > tolerance) {
    throw TailMassError("build_squeezed_vacuum", tail, squeezed_cutoff(params.r, tolerance));
  }
  const double lc = log_cosh(params.r);
  for (int n = 0; n < cutoff.dim(); ++n) {
    const double magnitude = std::exp(static_cast<double>(n) * lt - lc);
    amps[static_cast<std::size_t>(n * cutoff.dim() + n)] =
        std::polar(magnitude, static_cast<double>(n) * params.theta);
  }
  return out;
}

AmplitudeTensor apply_two_mode_displacement(const AmplitudeTensor& state,
                                            const DisplacementParams& params, double tolerance) {
  require_two_factors(state, "apply_two_mode_displacement");
  require_tolerance(tolerance);
  const int dim_a = state.mode_dims()[0];
  const int dim_b = state.mode_dims()[1];
  const FockCutoff work_a(working_n_max(FockCutoff(dim_a - 1)));
  const FockCutoff work_b(working_n_max(FockCutoff(dim_b - 1)));
  const std::vector<int> work_dims{work_a.dim(), work_b.dim()};

  const ComplexMatrix u_a = operator_exponential(displacement_generator(params.alpha, work_a));
  const ComplexMatrix u_b = operator_exponential(displacement_generator(params.beta_b, work_b));
  const ComplexMatrix psi = state.padded(work_dims).as_matrix();
  const ComplexMatrix moved = u_a * psi * u_b.transpose();

  const std::vector<int> dims{dim_a, dim_b};
  AmplitudeTensor out = AmplitudeTensor::from_matrix(moved).truncated(dims);
  const double leakage = state.norm_squared() - out.norm_squared();
  if (leakage > tolerance) {
    const double reach = std::max(std::abs(params.alpha), std::abs(params.beta_b));
    throw TailMassError("apply_two_mode_displacement", leakage,
                        std::max(dim_a, dim_b) - 1 + coherent_cutoff(reach, tolerance));
  }
  return out;
}

AmplitudeTensor apply_two_mode_squeeze(const AmplitudeTensor& state, Complex z, double tolerance) {
  require_two_factors(state, "apply_two_mode_squeeze");
  require_tolerance(tolerance);
  const int dim_a = state.mode_dims()[0];
  const int dim_b = state.mode_dims()[1];
  const std::vector<int> work_dims{working_n_max(FockCutoff(dim_a - 1)) + 1,
                                   working_n_max(FockCutoff(dim_b - 1)) + 1};
  const std::vector<int> dims{dim_a, dim_b};
  AmplitudeTensor out = squeeze_without_padding(state.padded(work_dims), z).truncated(dims);
  const double leakage = state.norm_squared() - out.norm_squared();
  if (leakage > tolerance) {
    throw TailMassError("apply_two_mode_squeeze", leakage,
                        std::max(dim_a, dim_b) - 1 + squeezed_cutoff(std::abs(z), tolerance));
  }
  return out;
}

AmplitudeTensor build_squeezed_coherent(const SqueezedStateParams& squeeze,
                                        const DisplacementParams& shift, FockCutoff cutoff,
                                        double tolerance) {
  require_tolerance(tolerance);
  if (!(squeeze.r >= 0.0) || !std::isfinite(squeeze.r)) {
    throw DomainError("squeezing magnitude must be >= 0");
  }
  const FockCutoff work(working_n_max(cutoff));
  // The coherent tail beyond the working cutoff is far below any retained amplitude,
  // so the intermediate state is checked against the loosest meaningful bound.
  const AmplitudeTensor coherent = build_coherent_two_mode(shift, work, 1e-6);
  const std::vector<int> dims{cutoff.dim(), cutoff.dim()};
  AmplitudeTensor out = squeeze_without_padding(coherent, squeeze.z()).truncated(dims);
  const double tail = out.tail_mass();
  if (tail > tolerance) {
    throw TailMassError("build_squeezed_coherent", tail,
                        displaced_squeezed_cutoff(squeeze, shift, tolerance));
  }
  return out;
}

DisplacementParams reordered_displacement(const SqueezedStateParams& squeeze,
                                          const DisplacementParams& shift) {
  const double c = std::cosh(squeeze.r);
  const double s = std::sinh(squeeze.r);
  const Complex phase = std::polar(1.0, squeeze.theta);
  return {shift.alpha * c + phase * std::conj(shift.beta_b) * s,
          shift.beta_b * c + phase * std::conj(shift.alpha) * s};
}

AmplitudeTensor build_silbey_harris(const SHParams& params, FockCutoff cutoff, double tolerance,
                                    std::size_t memory_budget) {
  require_tolerance(tolerance);
  if (params.f.empty()) throw DomainError("Silbey-Harris state needs at least one mode");
  for (double fk : params.f) {
    if (!std::isfinite(fk)) throw DomainError("Silbey-Harris displacements must be finite");
  }
  const auto d = static_cast<std::size_t>(cutoff.dim());
  std::size_t entries = 2;
  for (std::size_t k = 0; k < params.modes(); ++k) {
    if (entries > memory_budget / d) {
      throw SizeError("build_silbey_harris", std::numeric_limits<std::size_t>::max(),
                      memory_budget);
    }
    entries *= d;
  }
  if (entries > memory_budget) throw SizeError("build_silbey_harris", entries, memory_budget);

  const FockCutoff work(working_n_max(cutoff));
  std::vector<std::vector<Complex>> plus;
  std::vector<std::vector<Complex>> minus;
  for (double fk : params.f) {
    plus.push_back(vacuum_column(operator_exponential(displacement_generator(fk, work)),
                                 cutoff.dim()));
    minus.push_back(vacuum_column(operator_exponential(displacement_generator(-fk, work)),
                                  cutoff.dim()));
  }

  std::vector<int> dims(params.modes() + 1, cutoff.dim());
  dims[0] = 2;
  AmplitudeTensor out(dims);
  auto amps = out.amplitudes();
  const std::size_t bath = entries / 2;
  const double weight = 1.0 / std::sqrt(2.0);
  std::vector<int> occ(params.modes(), 0);
  for (std::size_t flat = 0; flat < bath; ++flat) {
    Complex up = weight;
    Complex down = -weight;
    for (std::size_t k = 0; k < params.modes(); ++k) {
      up *= plus[k][static_cast<std::size_t>(occ[k])];
      down *= minus[k][static_cast<std::size_t>(occ[k])];
    }
    amps[flat] = up;
    amps[bath + flat] = down;
    for (std::size_t k = occ.size(); k-- > 0;) {
      if (++occ[k] < cutoff.dim()) break;
      occ[k] = 0;
    }
  }
  const double tail = out.tail_mass();
  if (tail > tolerance) {
    throw TailMassError("build_silbey_harris", tail, silbey_harris_cutoff(params, tolerance));
  }
  return out;
}

}  // namespace mek
