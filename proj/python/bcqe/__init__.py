# Copyright 2026 The bcqe Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Contracted quantum eigensolver for coupled bosonic oscillators."""

from bcqe._bcqe import (
    CQEConfig,
    CQEResult,
    CapacityError,
    ContractViolation,
    Error,
    IndexError,
    InvalidArgument,
    IoError,
    IterationRecord,
    ModelSpec,
    NumericalConsistencyError,
    ParseError,
    ShapeError,
    ShotConfig,
    UnboundSystemError,
    exact_energy,
    full_ci,
    gamma,
    mean_field_energy,
    normal_mode_constants,
    product_basis_eigenvalues,
    reduced_hamiltonian,
    run,
)

__all__ = [
    "CQEConfig",
    "CQEResult",
    "CapacityError",
    "ContractViolation",
    "Error",
    "IndexError",
    "InvalidArgument",
    "IoError",
    "IterationRecord",
    "ModelSpec",
    "NumericalConsistencyError",
    "ParseError",
    "ShapeError",
    "ShotConfig",
    "UnboundSystemError",
    "exact_energy",
    "full_ci",
    "gamma",
    "mean_field_energy",
    "normal_mode_constants",
    "product_basis_eigenvalues",
    "reduced_hamiltonian",
    "run",
]
