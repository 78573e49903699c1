import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from driven_entanglement.dynamics import (
    DriveSpec,
    Party,
    QubitDrive,
    QutritDrive,
    Scenario,
    embed_drive,
    evolve,
    make_scenario,
    qubit_drive_hamiltonian,
    qutrit_drive_hamiltonian,
)
from driven_entanglement.entanglement import negativity
from driven_entanglement.errors import DimensionMismatch, UnsupportedScenario
from driven_entanglement.states import DensityMatrix, OneParam, QutritPure, TwoParam, XState
from oracles import ket, propagator_oracle, random_density

MES = {
    "qubit-qubit": XState(-1, -1, -1),
    "qubit-qutrit/drive-qubit": OneParam(0),
    "qubit-qutrit/drive-qutrit": TwoParam(0, 0, 1),
    "qutrit-qutrit": QutritPure(*(3 * [1 / math.sqrt(3)])),
}


def test_qubit_hamiltonian_examples():
    np.testing.assert_array_equal(qubit_drive_hamiltonian(1, 0), [[0, 1j], [-1j, 0]])
    np.testing.assert_array_equal(qubit_drive_hamiltonian(1, math.pi), -qubit_drive_hamiltonian(1, 0))
    for g in (0, 0.3, 2.5):
        h = qubit_drive_hamiltonian(g, 0)
        assert np.array_equal(h, h.conj().T)


def test_qutrit_hamiltonian_examples():
    h = qutrit_drive_hamiltonian(1, 1, 0)
    expected = np.zeros((3, 3))
    expected[1, 2] = expected[2, 1] = expected[2, 0] = expected[0, 2] = 1
    np.testing.assert_array_equal(h, expected)
    np.testing.assert_array_equal(qutrit_drive_hamiltonian(0.7, 1.3, math.pi), -qutrit_drive_hamiltonian(0.7, 1.3, 0))


@settings(max_examples=50, deadline=None)
@given(g1=st.floats(-5, 5), g2=st.floats(-5, 5), phi=st.sampled_from([0.0, math.pi]))
def test_qutrit_hamiltonian_forbidden_transition(g1, g2, phi):
    h = qutrit_drive_hamiltonian(g1, g2, phi)
    assert h[0, 1] == 0 and h[1, 0] == 0
    assert np.array_equal(h, h.conj().T)


def test_embed_drive_structure():
    h = qubit_drive_hamiltonian(1, 0)
    big = embed_drive(h, (2, 3), Party.FIRST)
    for i in range(2):
        for j in range(2):
            np.testing.assert_array_equal(big[3 * i:3 * i + 3, 3 * j:3 * j + 3], h[i, j] * np.eye(3))
    np.testing.assert_array_equal(embed_drive(np.eye(3), (2, 3), Party.SECOND), np.eye(6))
    with pytest.raises(DimensionMismatch):
        embed_drive(h, (2, 3), Party.SECOND)


def test_embed_drive_spectrum_repeats():
    h = qutrit_drive_hamiltonian(0.4, 1.1, 0)
    local = np.linalg.eigvalsh(h)
    big = np.linalg.eigvalsh(embed_drive(h, (2, 3), Party.SECOND))
    np.testing.assert_allclose(big, np.sort(np.repeat(local, 2)), atol=1e-14)


def test_scenario_dimension_check():
    with pytest.raises(DimensionMismatch):
        Scenario(OneParam(0), DriveSpec(Party.SECOND, QubitDrive()))
    with pytest.raises(DimensionMismatch):
        Scenario(XState(0, 0, 0), DriveSpec(Party.FIRST, QutritDrive()))
    with pytest.raises(UnsupportedScenario):
        make_scenario("qutrit-qutrit", OneParam(0))
    with pytest.raises(UnsupportedScenario):
        make_scenario("qubit-qutrit", OneParam(0))


def test_scenario_targets():
    assert make_scenario("qubit-qutrit/drive-qubit", OneParam(0)).drive.target is Party.FIRST
    assert make_scenario("qubit-qutrit/drive-qutrit", OneParam(0)).drive.target is Party.SECOND
    assert make_scenario("qutrit-qutrit", MES["qutrit-qutrit"]).drive.target is Party.FIRST
    for name, fam in MES.items():
        assert make_scenario(name, fam).name == name
        drive = make_scenario(name, fam).drive
        assert drive.phases == (0.0, math.pi)


@pytest.mark.parametrize("name", list(MES))
def test_evolve_at_zero_is_identity(name):
    sc = make_scenario(name, MES[name])
    rho0 = sc.initial_state()
    np.testing.assert_allclose(evolve(rho0, sc, 0.0).mat, rho0.mat, atol=1e-15)


def test_evolve_rejects_wrong_dims():
    sc = make_scenario("qubit-qubit", MES["qubit-qubit"])
    with pytest.raises(DimensionMismatch):
        evolve(DensityMatrix(np.eye(6) / 6, 2, 3), sc, 0.3)


def test_evolve_one_param_mes_quarter_period():
    sc = make_scenario("qubit-qutrit/drive-qubit", OneParam(0))
    rho = evolve(sc.initial_state(), sc, math.pi / 2)
    psi = (ket("00", (2, 3)) - ket("12", (2, 3))) / math.sqrt(2)
    np.testing.assert_allclose(rho.mat, np.outer(psi, psi), atol=1e-12)


def test_evolve_x_state_matches_trig_form():
    # the qubit channel is c^2 rho + s^2 J rho J^T with J the 90 degree rotation
    sc = make_scenario("qubit-qubit", MES["qubit-qubit"])
    rho0 = sc.initial_state().mat
    c, s = math.cos(0.8), math.sin(0.8)
    j = np.kron(np.array([[0, 1], [-1, 0]]), np.eye(2))
    expected = c * c * rho0 + s * s * j @ rho0 @ j.T
    np.testing.assert_allclose(evolve(sc.initial_state(), sc, 0.8).mat, expected, atol=1e-14)


@pytest.mark.parametrize("name", list(MES))
def test_evolve_matches_series_propagator(name):
    sc = make_scenario(name, MES[name], g1=0.8, g2=1.3)
    rho0 = sc.initial_state()
    for t in np.linspace(0, 2 * math.pi, 25):
        a = evolve(rho0, sc, t).mat
        b = evolve(rho0, sc, t, propagator=propagator_oracle).mat
        assert np.max(np.abs(a - b)) <= 1e-10


@pytest.mark.parametrize("name", ["qubit-qubit", "qubit-qutrit/drive-qubit"])
def test_qubit_drive_period_pi(name):
    sc = make_scenario(name, MES[name], g=1.0)
    rho0 = sc.initial_state()
    for t in np.linspace(0, 3, 13):
        np.testing.assert_allclose(evolve(rho0, sc, t + math.pi).mat, evolve(rho0, sc, t).mat, atol=1e-10)


@pytest.mark.parametrize("name", list(MES))
def test_evolve_is_even_in_time(name):
    sc = make_scenario(name, MES[name], g1=0.6, g2=1.4)
    rho0 = sc.initial_state()
    for t in (0.3, 1.1, 2.9):
        np.testing.assert_allclose(evolve(rho0, sc, -t).mat, evolve(rho0, sc, t).mat, atol=1e-12)


@pytest.mark.parametrize("name", list(MES))
def test_evolve_is_unital(name):
    sc = make_scenario(name, MES[name])
    d = sc.dims[0] * sc.dims[1]
    mixed = DensityMatrix(np.eye(d) / d, *sc.dims)
    for t in (0.4, 1.7, 5.0):
        np.testing.assert_allclose(evolve(mixed, sc, t).mat, np.eye(d) / d, atol=1e-15)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), name=st.sampled_from(list(MES)), t=st.floats(0, 2 * math.pi))
def test_evolve_preserves_density(seed, name, t):
    sc = make_scenario(name, MES[name], g1=0.9, g2=1.2)
    d = sc.dims[0] * sc.dims[1]
    rho = evolve(DensityMatrix(random_density(d, np.random.default_rng(seed)), *sc.dims), sc, t).mat
    assert abs(np.trace(rho) - 1) <= 1e-12
    assert np.max(np.abs(rho - rho.conj().T)) <= 1e-12
    assert np.linalg.eigvalsh(rho)[0] >= -1e-10


def test_one_param_mes_negativity_is_abs_cos():
    sc = make_scenario("qubit-qutrit/drive-qubit", OneParam(0))
    rho0 = sc.initial_state()
    for t in np.linspace(0, math.pi, 500):
        assert abs(negativity(evolve(rho0, sc, t)) - abs(math.cos(2 * t))) <= 1e-9


def test_zero_coupling_freezes_state():
    sc = make_scenario("qutrit-qutrit", MES["qutrit-qutrit"], g1=0, g2=0)
    rho0 = sc.initial_state()
    np.testing.assert_allclose(evolve(rho0, sc, 3.0).mat, rho0.mat, atol=1e-15)
