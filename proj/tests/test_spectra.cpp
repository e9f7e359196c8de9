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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mek/errors.hpp"
#include "mek/fockspace.hpp"

namespace mek {
namespace {

ComplexMatrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  ComplexMatrix x(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) x(i, j) = {gauss(rng), gauss(rng)};
  }
  return 0.5 * (x + x.adjoint());
}

TEST(PartialTrace, ProductVacuumGivesProjector) {
  const auto state = build_squeezed_vacuum({0.0, 0.0}, FockCutoff(3));
  const auto rho = partial_trace(state, 0);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  EXPECT_EQ((rho.entries - expected).cwiseAbs().maxCoeff(), 0.0);
}

TEST(PartialTrace, SqueezedVacuumIsGeometric) {
  const auto rho = partial_trace(build_squeezed_vacuum({1.0, 0.0}, FockCutoff(60)), 0);
  EXPECT_NEAR(rho.entries(0, 0).real(), 0.419974341614026069, 1e-15);
  EXPECT_NEAR(rho.entries(1, 1).real(), 0.243595893999891400, 1e-15);
  EXPECT_EQ(rho.entries(0, 1), Complex(0.0));
  EXPECT_NEAR(rho.entries.trace().real(), 1.0, 1e-12);
}

TEST(PartialTrace, SilbeyHarrisQubit) {
  const auto rho = partial_trace(build_silbey_harris({{0.5, 0.5}}, FockCutoff(20)), 0);
  const double c = 0.367879441171442322;
  EXPECT_NEAR(rho.entries(0, 0).real(), 0.5, 1e-12);
  EXPECT_NEAR(rho.entries(1, 1).real(), 0.5, 1e-12);
  EXPECT_NEAR(rho.entries(0, 1).real(), -0.5 * c, 1e-12);
  EXPECT_NEAR(rho.entries(1, 0).real(), -0.5 * c, 1e-12);
}

TEST(PartialTrace, MiddleFactorOfThree) {
  // |psi> = |0>|x>|1> with |x> = (|0> + i|1>)/sqrt2 reduces to |x><x| on the middle factor.
  AmplitudeTensor state({2, 2, 2});
  state.at({0, 0, 1}) = 1.0 / std::sqrt(2.0);
  state.at({0, 1, 1}) = Complex(0.0, 1.0 / std::sqrt(2.0));
  const auto rho = partial_trace(state, 1);
  EXPECT_NEAR(rho.entries(1, 0).imag(), 0.5, 1e-15);
  EXPECT_NEAR(rho.entries(0, 1).imag(), -0.5, 1e-15);
}

TEST(PartialTrace, InvalidFactor) {
  const auto state = build_squeezed_vacuum({0.0, 0.0}, FockCutoff(3));
  EXPECT_THROW(partial_trace(state, 2), DimensionError);
}

TEST(PartialTrace, BothSidesShareSpectrum) {
  const SqueezedStateParams s{0.7, 0.3};
  const DisplacementParams p{{0.4, -0.1}, {0.2, 0.3}};
  const FockCutoff cutoff(displaced_squeezed_cutoff(s, p));
  const auto state = apply_two_mode_displacement(build_squeezed_vacuum(s, cutoff, 5e-13), p);
  EXPECT_LT(max_abs_difference(entanglement_spectrum(state, 0), entanglement_spectrum(state, 1)), 1e-10);
}

TEST(Jacobi, DiagonalInput) {
  ReducedDensityMatrix rho{ComplexMatrix::Zero(2, 2)};
  rho.entries(0, 0) = 0.3;
  rho.entries(1, 1) = 0.7;
  const auto spec = hermitian_eigenvalues(rho);
  ASSERT_EQ(spec.size(), 2u);
  EXPECT_DOUBLE_EQ(spec[0], 0.7);
  EXPECT_DOUBLE_EQ(spec[1], 0.3);
}

TEST(Jacobi, QubitWithCoherence) {
  const double c = std::exp(-1.0);
  ReducedDensityMatrix rho{ComplexMatrix::Constant(2, 2, -0.5 * c)};
  rho.entries(0, 0) = rho.entries(1, 1) = 0.5;
  const auto spec = hermitian_eigenvalues(rho);
  EXPECT_NEAR(spec[0], 0.683939720585721161, 1e-15);
  EXPECT_NEAR(spec[1], 0.316060279414278839, 1e-15);
}

TEST(Jacobi, MatchesReferenceSolverOnRandomHermitian) {
  std::mt19937_64 rng(5);
  for (int n : {2, 5, 17, 40}) {
    const ComplexMatrix h = random_hermitian(n, rng);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ref(h);
    Eigen::VectorXd expected = ref.eigenvalues();
    std::sort(expected.data(), expected.data() + n, std::greater<>());
    // Shift to a positive semidefinite matrix so the spectrum contract holds.
    const double shift = -expected(n - 1);
    const auto spec = hermitian_eigenvalues({h + shift * ComplexMatrix::Identity(n, n)});
    for (int i = 0; i < n; ++i) EXPECT_NEAR(spec[static_cast<std::size_t>(i)], expected(i) + shift, 1e-12) << n;
    EXPECT_NEAR(spec.total(), (h.trace().real() + n * shift), 1e-10);
  }
}

TEST(Jacobi, RejectsNonHermitian) {
  ReducedDensityMatrix rho{ComplexMatrix::Identity(2, 2)};
  rho.entries(0, 1) = 0.1;
  EXPECT_THROW(hermitian_eigenvalues(rho), ContractError);
}

TEST(Jacobi, SqueezedSpectrumMatchesClosedForm) {
  const double r = 0.5;
  const auto spec = entanglement_spectrum(build_squeezed_vacuum({r, 0.0}, FockCutoff(squeezed_cutoff(r))));
  for (std::size_t n = 0; n < spec.size(); ++n) {
    const double expected = std::pow(std::tanh(r), 2.0 * n) / std::pow(std::cosh(r), 2.0);
    EXPECT_NEAR(spec[n], expected, 1e-10) << n;
  }
}

TEST(Spectrum, ClampsRoundOffAndRejectsLargeNegatives) {
  const EntanglementSpectrum spec({0.2, -5e-11, 0.8});
  EXPECT_EQ(spec.probabilities(), (std::vector<double>{0.8, 0.2, 0.0}));
  EXPECT_THROW(EntanglementSpectrum({1.0, -1e-9}), ContractError);
}

TEST(SchmidtRank, Examples) {
  const auto coherent = build_coherent_two_mode({0.6, {0.0, -0.3}}, FockCutoff(30));
  EXPECT_EQ(schmidt_rank(entanglement_spectrum(coherent)), 1u);
  const auto sh = build_silbey_harris({{0.4}}, FockCutoff(25));
  EXPECT_EQ(schmidt_rank(entanglement_spectrum(sh, 0)), 2u);
  // tanh^{2n}(0.1)/cosh^2(0.1) > 1e-10 for n = 0..4 only.
  const auto sq = build_squeezed_vacuum({0.1, 0.0}, FockCutoff(60));
  EXPECT_EQ(schmidt_rank(entanglement_spectrum(sq)), 5u);
  const auto wide = build_squeezed_vacuum({3.0, 0.0}, FockCutoff(60), 1.0);
  EXPECT_EQ(schmidt_rank(entanglement_spectrum(wide)), 61u);
}

TEST(SingularValues, MatchReferenceSvd) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> gauss;
  for (auto [rows, cols] : {std::pair{6, 6}, std::pair{9, 4}, std::pair{3, 8}}) {
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m(i, j) = {gauss(rng), gauss(rng)};
    }
    Eigen::JacobiSVD<ComplexMatrix> ref(m);
    const auto sv = singular_values(m);
    ASSERT_EQ(sv.size(), static_cast<std::size_t>(std::min(rows, cols)));
    for (std::size_t i = 0; i < sv.size(); ++i) {
      EXPECT_NEAR(sv[i], ref.singularValues()(static_cast<Eigen::Index>(i)), 1e-12);
    }
  }
}

TEST(SingularValues, RankOneHasTinyTail) {
  Eigen::VectorXcd u = Eigen::VectorXcd::Random(30).normalized();
  Eigen::VectorXcd v = Eigen::VectorXcd::Random(25).normalized();
  const auto sv = singular_values(u * v.transpose());
  EXPECT_NEAR(sv[0], 1.0, 1e-14);
  EXPECT_LT(sv[1], 1e-14);
}

}  // namespace
}  // namespace mek
