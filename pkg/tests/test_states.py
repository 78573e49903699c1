import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from driven_entanglement.entanglement import negativity
from driven_entanglement.errors import (
    ConstraintViolated,
    DimensionMismatch,
    NegativeParameter,
    NotNormalized,
    NotPositive,
    OutOfRange,
)
from driven_entanglement.states import (
    DensityMatrix,
    OneParam,
    QutritPure,
    TwoParam,
    XState,
    basis_index,
    basis_label,
    make_one_param,
    make_qutrit_pure,
    make_two_param,
    make_x_state,
    two_param_matrix,
    validate_density,
    x_state_matrix,
)
from oracles import ket, negativity_oracle

corr = st.floats(-1, 1)


def test_basis_ordering():
    assert [basis_label(i, (2, 3)) for i in range(6)] == ["00", "01", "02", "10", "11", "12"]
    assert basis_index("21", (3, 3)) == 7
    with pytest.raises(DimensionMismatch):
        basis_index("20", (2, 3))


def test_density_matrix_checks_dims_and_is_read_only():
    with pytest.raises(DimensionMismatch):
        DensityMatrix(np.eye(4) / 4, 2, 3)
    rho = DensityMatrix(np.eye(4) / 4, 2, 2)
    with pytest.raises(ValueError):
        rho.mat[0, 0] = 1
    assert rho["11", "11"] == 0.25


def test_x_state_mes_is_singlet():
    rho = make_x_state(-1, -1, -1)
    psi = (ket("01", (2, 2)) - ket("10", (2, 2))) / math.sqrt(2)
    np.testing.assert_allclose(rho.mat, np.outer(psi, psi), atol=1e-15)
    assert negativity(rho) == pytest.approx(1, abs=1e-12)


def test_x_state_maximally_mixed():
    rho = make_x_state(0, 0, 0)
    np.testing.assert_array_equal(rho.mat, np.eye(4) / 4)
    assert negativity(rho) == 0


def test_werner_spectrum_and_negativity():
    rho = XState.werner(-0.8).state()
    np.testing.assert_allclose(np.linalg.eigvalsh(rho.mat), [0.05, 0.05, 0.05, 0.85], atol=1e-15)
    assert negativity(rho) == pytest.approx(0.7, abs=1e-12)


def test_x_state_range_and_positivity():
    with pytest.raises(OutOfRange):
        make_x_state(1.2, 0, 0)
    with pytest.raises(NotPositive):
        make_x_state(1, 1, 1)


def test_one_param_mes():
    rho = make_one_param(0)
    psi = (ket("02", (2, 3)) + ket("10", (2, 3))) / math.sqrt(2)
    np.testing.assert_allclose(rho.mat, np.outer(psi, psi), atol=1e-15)
    assert negativity(rho) == pytest.approx(1, abs=1e-12)


def test_one_param_separable_point():
    assert negativity(make_one_param(1 / 3)) == 0


def test_one_param_half_matches_brute_force():
    rho = make_one_param(0.5)
    assert np.trace(rho.mat).real == pytest.approx(1)
    assert validate_density(rho).ok
    assert negativity(rho) == pytest.approx(negativity_oracle(rho.mat, 2, 3), abs=1e-12)


def test_one_param_range():
    for bad in (-0.01, 0.51):
        with pytest.raises(OutOfRange):
            make_one_param(bad)


def test_two_param_mes_is_embedded_singlet():
    rho = make_two_param(0, 0, 1)
    psi = (ket("01", (2, 3)) - ket("10", (2, 3))) / math.sqrt(2)
    np.testing.assert_allclose(rho.mat, np.outer(psi, psi), atol=1e-15)
    assert negativity(rho) == pytest.approx(1, abs=1e-12)


def test_two_param_pes_spectrum():
    rho = make_two_param(0.05, 0.1, 0.6)
    np.testing.assert_allclose(np.linalg.eigvalsh(rho.mat), [0.05, 0.05, 0.1, 0.1, 0.1, 0.6], atol=1e-15)


def test_two_param_beta_zero_matches_brute_force():
    rho = make_two_param(0.2, 0, 0.6)
    assert negativity(rho) == pytest.approx(negativity_oracle(rho.mat, 2, 3), abs=1e-12)


def test_two_param_constraint_messages():
    with pytest.raises(ConstraintViolated, match=r"2\*alpha \+ 3\*beta \+ gamma"):
        make_two_param(0.5, 0, 1)
    with pytest.raises(ConstraintViolated):
        TwoParam(0.0, 0.2, 0.7)
    with pytest.raises(NegativeParameter):
        make_two_param(-0.15, 0.2, 0.7)


def test_qutrit_pure_examples():
    s = 1 / math.sqrt(3)
    assert negativity(make_qutrit_pure(s, s, s)) == pytest.approx(1, abs=1e-12)
    assert negativity(make_qutrit_pure(1, 0, 0)) == 0
    rho = make_qutrit_pure(0.3, 0.4, math.sqrt(0.75))
    assert negativity(rho) == pytest.approx(0.726, abs=1e-3)
    assert negativity(rho) == pytest.approx(((0.7 + math.sqrt(0.75)) ** 2 - 1) / 2, abs=1e-12)


def test_qutrit_pure_normalization():
    with pytest.raises(NotNormalized):
        QutritPure(0.5, 0.5, 0.5)


def test_validate_examples():
    assert validate_density(DensityMatrix(np.eye(4) / 4, 2, 2)).ok
    report = validate_density(DensityMatrix(np.eye(4) * 1.1 / 4, 2, 2))
    assert not report.ok
    assert report.trace_defect == pytest.approx(0.1)
    assert str(report).startswith("fail:")


def test_validate_caption_point_under_constraint():
    # beta = 0.2, gamma = 0.7 forces alpha = (1 - 0.6 - 0.7)/2 = -0.15
    alpha = (1 - 3 * 0.2 - 0.7) / 2
    report = validate_density(DensityMatrix(two_param_matrix(alpha, 0.2, 0.7), 2, 3))
    assert not report.ok
    assert report.min_eigenvalue == pytest.approx(-0.15, abs=1e-12)
    assert any("negative eigenvalue" in f for f in report.failures())


def test_validate_flags_non_hermitian():
    m = np.eye(4, dtype=complex) / 4
    m[0, 1] = 0.1
    assert any("Hermitian" in f for f in validate_density(DensityMatrix(m, 2, 2)).failures())


@settings(max_examples=100, deadline=None)
@given(c=st.tuples(corr, corr, corr))
def test_x_state_outputs_validate(c):
    try:
        rho = make_x_state(*c)
    except NotPositive:
        return
    assert validate_density(rho).ok


@settings(max_examples=60, deadline=None)
@given(c=st.tuples(corr, corr, corr), pair=st.sampled_from([(0, 1), (0, 2), (1, 2)]))
def test_x_state_spectrum_two_sign_flip(c, pair):
    flipped = list(c)
    for i in pair:
        flipped[i] = -flipped[i]
    w1 = np.linalg.eigvalsh(x_state_matrix(*c))
    w2 = np.linalg.eigvalsh(x_state_matrix(*flipped))
    np.testing.assert_allclose(w1, w2, atol=1e-14)


@settings(max_examples=100, deadline=None)
@given(P=st.floats(0, 0.5))
def test_one_param_outputs_validate(P):
    assert validate_density(OneParam(P).state()).ok


@st.composite
def two_param_points(draw):
    alpha = draw(st.floats(0, 0.5))
    beta = draw(st.floats(0, (1 - 2 * alpha) / 3))
    gamma = 1 - 2 * alpha - 3 * beta
    assume(gamma >= 0)
    return alpha, beta, gamma


@settings(max_examples=100, deadline=None)
@given(p=two_param_points())
def test_two_param_spectrum_multiset(p):
    alpha, beta, gamma = p
    try:
        rho = make_two_param(alpha, beta, gamma)
    except ConstraintViolated:
        return
    np.testing.assert_allclose(
        np.linalg.eigvalsh(rho.mat), sorted([alpha, alpha, beta, beta, beta, gamma]), atol=1e-15
    )


@settings(max_examples=100, deadline=None)
@given(v=st.tuples(st.floats(-1, 1), st.floats(-1, 1), st.floats(-1, 1)))
def test_qutrit_pure_is_pure(v):
    norm = math.sqrt(sum(x * x for x in v))
    assume(norm > 1e-3)
    a = [x / norm for x in v]
    try:
        rho = make_qutrit_pure(*a)
    except NotNormalized:
        return
    assert validate_density(rho).ok
    assert np.trace(rho.mat @ rho.mat).real == pytest.approx(1, abs=1e-12)
