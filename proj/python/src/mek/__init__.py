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

"""Python bindings for the mek entanglement library."""

from ._mek import (
    ContractError,
    DimensionError,
    DomainError,
    MekError,
    NumericalError,
    SizeError,
    TailMassError,
    ThermalModel,
    oracle_sh_spectrum,
    oracle_squeezed_spectrum,
    renyi,
    renyi_sh,
    renyi_squeezed,
    sh_spectrum,
    squeezed_spectrum,
    sweep_csv,
    verify,
)

__all__ = [
    "ContractError",
    "DimensionError",
    "DomainError",
    "MekError",
    "NumericalError",
    "SizeError",
    "TailMassError",
    "ThermalModel",
    "oracle_sh_spectrum",
    "oracle_squeezed_spectrum",
    "renyi",
    "renyi_sh",
    "renyi_squeezed",
    "sh_spectrum",
    "squeezed_spectrum",
    "sweep_csv",
    "verify",
]
