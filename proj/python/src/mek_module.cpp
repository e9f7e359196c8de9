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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <sstream>

#include "mek/analytic.hpp"
#include "mek/errors.hpp"
#include "mek/fockspace.hpp"
#include "mek/spectra.hpp"
#include "mek/sweep.hpp"
#include "mek/thermo.hpp"
#include "mek/verify.hpp"

namespace py = pybind11;

namespace {

mek::SHParams sh(const std::vector<double>& f) { return mek::SHParams{f}; }

std::vector<double> oracle_squeezed_spectrum(double r, double theta, double tail_tolerance, double mu_min) {
  const mek::FockCutoff cutoff(mek::squeezed_cutoff(r, tail_tolerance, mu_min));
  return mek::entanglement_spectrum(mek::build_squeezed_vacuum({r, theta}, cutoff, tail_tolerance)).probabilities();
}

std::vector<double> oracle_sh_spectrum(const std::vector<double>& f, double tail_tolerance) {
  const auto params = sh(f);
  const mek::FockCutoff cutoff(mek::silbey_harris_cutoff(params, tail_tolerance));
  return mek::entanglement_spectrum(mek::build_silbey_harris(params, cutoff, tail_tolerance), 0).probabilities();
}

std::string sweep_csv(const std::string& family, const std::string& grid, const std::string& mu, bool oracle) {
  mek::SweepConfig config;
  config.family = mek::parse_family(family);
  config.parameter_grid = mek::parse_grid(grid);
  config.mu_list = mek::parse_mu_list(mu);
  config.oracle = oracle;
  std::ostringstream out;
  mek::write_sweep_csv(out, mek::run_sweep(config));
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_mek, m) {
  m.doc() = "Entanglement spectra, Renyi entropies and effective thermodynamics of bosonic states";

  auto error = py::register_exception<mek::Error>(m, "MekError", PyExc_RuntimeError);
  py::register_exception<mek::DomainError>(m, "DomainError", error.ptr());
  py::register_exception<mek::DimensionError>(m, "DimensionError", error.ptr());
  py::register_exception<mek::ContractError>(m, "ContractError", error.ptr());
  py::register_exception<mek::TailMassError>(m, "TailMassError", error.ptr());
  py::register_exception<mek::SizeError>(m, "SizeError", error.ptr());
  py::register_exception<mek::NumericalError>(m, "NumericalError", error.ptr());

  m.def("renyi_squeezed", [](double r, double mu) { return mek::renyi_squeezed(r, mek::RenyiOrder(mu)); },
        py::arg("r"), py::arg("mu"), "S_mu of the two-mode squeezed vacuum; mu may be 0 or inf.");
  m.def("renyi_sh", [](const std::vector<double>& f, double mu) { return mek::renyi_sh(sh(f), mek::RenyiOrder(mu)); },
        py::arg("f"), py::arg("mu"));
  m.def(
      "renyi",
      [](const std::vector<double>& p, double mu) {
        return mek::renyi_general(mek::EntanglementSpectrum(p), mek::RenyiOrder(mu));
      },
      py::arg("spectrum"), py::arg("mu"), "S_mu of an arbitrary normalized spectrum.");
  m.def(
      "squeezed_spectrum",
      [](double r, std::size_t count) { return mek::squeezed_spectrum_prefix(r, count).probabilities(); },
      py::arg("r"), py::arg("count"));
  m.def("sh_spectrum", [](const std::vector<double>& f) { return mek::sh_spectrum(sh(f)).probabilities(); },
        py::arg("f"));
  m.def("oracle_squeezed_spectrum", &oracle_squeezed_spectrum, py::arg("r"), py::arg("theta") = 0.0,
        py::arg("tail_tolerance") = mek::kDefaultTailTolerance, py::arg("mu_min") = 1.0,
        "Spectrum from the truncated Fock-space state and its partial trace. The cutoff\n"
        "keeps the tail of sum p_n^mu below tail_tolerance for every mu >= mu_min.");
  m.def("oracle_sh_spectrum", &oracle_sh_spectrum, py::arg("f"),
        py::arg("tail_tolerance") = mek::kDefaultTailTolerance);

  py::class_<mek::EffectiveThermalModel>(m, "ThermalModel")
      .def_static("from_squeezing", &mek::oscillator_model_from_squeezing, py::arg("r"), py::arg("hbar_omega") = 1.0)
      .def_static(
          "from_silbey_harris",
          [](const std::vector<double>& f, double delta) { return mek::two_level_model_from_sh(sh(f), delta); },
          py::arg("f"), py::arg("delta") = 1.0)
      .def_property_readonly("beta", &mek::EffectiveThermalModel::beta)
      .def_property_readonly("partition_function", &mek::EffectiveThermalModel::partition_function)
      .def_property_readonly("log_partition_function", &mek::EffectiveThermalModel::log_partition_function)
      .def_property_readonly("free_energy", &mek::EffectiveThermalModel::free_energy)
      .def("boltzmann_weights", &mek::EffectiveThermalModel::boltzmann_weights, py::arg("count"));

  m.def("sweep_csv", &sweep_csv, py::arg("family"), py::arg("grid"), py::arg("mu") = "1,2,inf",
        py::arg("oracle") = false);
  m.def(
      "verify",
      [](std::uint64_t seed) {
        std::vector<std::tuple<std::string, double, double, bool>> rows;
        for (const auto& c : mek::run_verify({.seed = seed})) {
          rows.emplace_back(c.name, c.max_deviation, c.tolerance, c.passed());
        }
        return rows;
      },
      py::arg("seed") = 0, "Runs the invariant battery; returns (name, deviation, tolerance, passed) tuples.");
}
