# Copyright 2026 The mek Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import mek


def test_squeezed_entropies():
    assert mek.renyi_squeezed(1.0, 2.0) == pytest.approx(math.log(math.cosh(2.0)), abs=1e-15)
    assert mek.renyi_squeezed(0.5, 0.5) == pytest.approx(1.0, abs=1e-14)
    assert mek.renyi_squeezed(1.0, 1.0) == pytest.approx(1.61982209289770226, abs=1e-14)
    assert mek.renyi_squeezed(1.0, math.inf) == pytest.approx(2.0 * math.log(math.cosh(1.0)), abs=1e-15)
    assert mek.renyi_squeezed(0.3, 0.0) == math.inf


def test_oracle_matches_closed_form():
    spectrum = mek.oracle_squeezed_spectrum(0.5, mu_min=0.5)
    for mu in (0.5, 1.0, 2.0, math.inf):
        assert mek.renyi(spectrum, mu) == pytest.approx(mek.renyi_squeezed(0.5, mu), abs=1e-9)
    sh = mek.oracle_sh_spectrum([0.4, 0.5])
    assert sh == pytest.approx(mek.sh_spectrum([0.4, 0.5]), abs=1e-9)


def test_silbey_harris():
    c = math.exp(-2.0)
    assert mek.sh_spectrum([1.0]) == pytest.approx([(1 + c) / 2, (1 - c) / 2], abs=1e-15)
    assert mek.renyi_sh([10.0], 1.0) == pytest.approx(math.log(2.0), abs=1e-15)


def test_thermal_model():
    model = mek.ThermalModel.from_squeezing(1.0)
    assert model.beta == pytest.approx(0.544682937823663107, abs=1e-15)
    assert model.log_partition_function == pytest.approx(mek.renyi_squeezed(1.0, math.inf), abs=1e-14)
    weights = model.boltzmann_weights(3)
    assert weights == pytest.approx(mek.squeezed_spectrum(1.0, 3), abs=1e-15)
    assert mek.ThermalModel.from_squeezing(0.0).beta == math.inf
    two_level = mek.ThermalModel.from_silbey_harris([1.0])
    assert two_level.partition_function == pytest.approx(1.0 + math.tanh(1.0), abs=1e-15)


def test_errors_map_to_python():
    with pytest.raises(mek.DomainError):
        mek.renyi_squeezed(-1.0, 1.0)
    with pytest.raises(mek.ContractError):
        mek.renyi([0.5, 0.3], 1.0)
    with pytest.raises(mek.MekError):
        mek.sweep_csv("thermal", "0,1")


def test_sweep_and_verify():
    csv = mek.sweep_csv("squeezed", "0:1:0.5", "2", oracle=True)
    lines = csv.strip().splitlines()
    assert lines[0].endswith("oracle_S_mu,abs_dev")
    assert len(lines) == 4
    checks = mek.verify(1)
    assert len(checks) >= 10
    assert all(passed for _, _, _, passed in checks)
