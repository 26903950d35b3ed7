# Copyright 2026 The gcelab Authors
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

import numpy as np
import pytest

import gcelab


def test_reference_values():
    assert gcelab.gce(gcelab.ghz_state(3), 2.0) == pytest.approx(0.375, abs=1e-12)
    assert gcelab.gce(gcelab.w_state(3), 2.0) == pytest.approx(1 / 3, abs=1e-12)
    assert gcelab.gce(gcelab.random_product_state(4, 1), 3.0, [0, 1]) == pytest.approx(0.0, abs=1e-12)


def test_state_from_numpy_and_json():
    amps = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
    bell = gcelab.PureState(2, amps)
    assert np.allclose(bell.amplitudes, amps)
    back = gcelab.PureState.from_json(bell.to_json())
    assert abs(back.inner(bell)) == pytest.approx(1.0)
    rho = gcelab.reduced_density_matrix(bell, [0])
    assert np.allclose(rho, np.eye(2) / 2)
    with pytest.raises(ValueError):
        gcelab.PureState(2, np.ones(3, dtype=complex))


def test_bell_table_and_estimator():
    bell = gcelab.PureState.normalized(2, np.array([1, 0, 0, 1], dtype=complex))
    table = gcelab.exact_probability_table(bell, 3)
    probs = table.as_dict()
    assert probs["00"] == pytest.approx(0.5)
    assert probs["12"] == pytest.approx(0.25)
    assert probs["21"] == pytest.approx(0.25)
    zero, nonzero = gcelab.estimate_gce(table)
    assert zero == pytest.approx(0.1875)
    assert nonzero == pytest.approx(0.1875)
    again = gcelab.ProbabilityTable.from_csv(table.to_csv(), 3)
    assert gcelab.total_variation(table, again) == 0.0


def test_composite_order_rejected():
    with pytest.raises(gcelab.UnsupportedOrderError):
        gcelab.exact_probability_table(gcelab.haar_random_state(2, 0), 4)
    with pytest.raises(gcelab.ResourceLimitError):
        gcelab.exact_probability_table(gcelab.haar_random_state(9, 0), 3)


def test_circuit_matches_kraus_path():
    psi = gcelab.haar_random_state(2, 5)
    text = gcelab.compile_circuit(2, 3)
    assert text.startswith("GCE-CIRCUIT v1")
    tv = gcelab.total_variation(gcelab.simulate_circuit(text, psi), gcelab.exact_probability_table(psi, 3))
    assert tv < 1e-10


def test_concentration_and_robustness():
    for seed in range(20):
        for report in gcelab.concentrate_random(seed, 1e-6):
            assert report["fidelity_after"] == pytest.approx(1.0, abs=1e-10)
    psi = gcelab.haar_random_state(3, 2)
    err, bound = gcelab.measured_error(psi, [0.1, 0.0, 0.0], 7, [0, 1])
    assert 0.0 <= err <= bound


def test_closed_forms_and_conjecture_helpers():
    assert gcelab.gce_ghz_closed_form(5, 3, 3.0) > gcelab.gce_w_closed_form(5, 3, 3.0)
    assert 0.2 <= gcelab.gce_spin_squeezed(40, 3.0, 40, 5.0) <= 0.25
    psi = gcelab.haar_random_state(3, 4)
    assert gcelab.q_of_z(psi, [1, 0, 0], 3) == pytest.approx(0.0, abs=1e-12)
    assert gcelab.q_of_z(psi, [1, 1, 0], 3) >= -1e-12
    assert gcelab.nsssa_sum(gcelab.haar_random_state(5, 1), [0, 1, 2], 3, [4], 2.0) <= 1e-12
