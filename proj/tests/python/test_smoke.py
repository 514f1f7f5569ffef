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

import math

import numpy as np
import pytest

import bcqe


def test_closed_forms():
    spec = bcqe.ModelSpec(2, 10.0, 2)
    assert bcqe.exact_energy(spec) == pytest.approx(math.sqrt(10) + math.sqrt(8), abs=1e-12)
    assert bcqe.mean_field_energy(spec) == pytest.approx(6.0, abs=1e-12)
    assert bcqe.exact_energy(bcqe.ModelSpec(4, 5.0, 2)) == pytest.approx(5.236068, abs=1e-6)


def test_unbound_raises():
    with pytest.raises(bcqe.UnboundSystemError):
        bcqe.exact_energy(bcqe.ModelSpec(2, 1.5, 2))
    assert issubclass(bcqe.UnboundSystemError, bcqe.Error)


def test_full_ci_and_product_basis():
    spec = bcqe.ModelSpec(2, 5.0, 2)
    fci = bcqe.full_ci(spec)
    assert fci["eigenvalues"][0] == pytest.approx(3.968379, abs=1e-6)
    assert sum(fci["occupations"]) == pytest.approx(1.0, abs=1e-10)
    assert bcqe.product_basis_eigenvalues(spec)[1] == pytest.approx(7.492909, abs=1e-6)


def test_reduced_hamiltonian_shape():
    k = bcqe.reduced_hamiltonian(bcqe.ModelSpec(2, 10.0, 3))
    assert k.shape == (3, 3, 3, 3)
    assert np.allclose(k, k.transpose(1, 0, 3, 2))


def test_cqe_run():
    result = bcqe.run(bcqe.ModelSpec(2, 2.2, 2))
    assert result.converged
    assert abs(result.energy - result.fci_reference) < 1e-6
    assert result.trace[0].iteration == 0
    assert result.rdm.shape == (2, 2, 2, 2)
    assert abs(np.einsum("pqpq->", result.rdm) - 2.0) < 1e-10
    assert np.isclose(np.linalg.norm(result.final_state), 1.0)


def test_config_fields():
    cfg = bcqe.CQEConfig()
    cfg.initial = "1001"
    cfg.encoding = "pair"
    cfg.shots = bcqe.ShotConfig(8192, 7)
    cfg.max_iterations = 4
    a = bcqe.run(bcqe.ModelSpec(2, 5.0, 2), cfg)
    b = bcqe.run(bcqe.ModelSpec(2, 5.0, 2), cfg)
    assert [r.energy for r in a.trace] == [r.energy for r in b.trace]
    with pytest.raises(bcqe.ParseError):
        cfg.encoding = "binary"
