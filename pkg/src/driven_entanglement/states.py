"""Initial-state families and density-matrix validation.

Composite kets are ordered row-major as |first>|second>. Qubit-qutrit states
put the qubit first, so the six basis kets read 00, 01, 02, 10, 11, 12.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import (
    ConstraintViolated,
    DimensionMismatch,
    NegativeParameter,
    NotNormalized,
    NotPositive,
    OutOfRange,
)
from .linalg import as_square, hermiticity_defect

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
EIGEN_TOL = 1e-10
PARAM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A square matrix together with its bipartition ``(dA, dB)``.

    Construction only checks the dimensions. Physical validity is reported by
    :func:`validate_density`; the family constructors below refuse to return
    anything that fails it.
    """

    mat: np.ndarray
    dA: int
    dB: int

    def __post_init__(self):
        mat = as_square(self.mat)
        if self.dA * self.dB != mat.shape[0]:
            raise DimensionMismatch(f"dA*dB = {self.dA * self.dB} but matrix is {mat.shape[0]}-dimensional")
        mat = mat.copy()
        mat.setflags(write=False)
        object.__setattr__(self, "mat", mat)

    @property
    def dims(self) -> tuple[int, int]:
        return (self.dA, self.dB)

    @property
    def dim(self) -> int:
        return self.dA * self.dB

    def __getitem__(self, labels: tuple[str, str]) -> complex:
        """Matrix element by ket labels, e.g. ``rho["00", "12"]``."""
        row, col = labels
        return complex(self.mat[basis_index(row, self.dims), basis_index(col, self.dims)])


@dataclass(frozen=True)
class ValidationReport:
    hermiticity_defect: float
    trace_defect: float
    min_eigenvalue: float

    @property
    def ok(self) -> bool:
        return (
            self.hermiticity_defect <= HERMITIAN_TOL
            and self.trace_defect <= TRACE_TOL
            and self.min_eigenvalue >= -EIGEN_TOL
        )

    def failures(self) -> list[str]:
        out = []
        if self.hermiticity_defect > HERMITIAN_TOL:
            out.append(f"not Hermitian (defect {self.hermiticity_defect:.3e})")
        if self.trace_defect > TRACE_TOL:
            out.append(f"trace differs from 1 by {self.trace_defect:.3e}")
        if self.min_eigenvalue < -EIGEN_TOL:
            out.append(f"negative eigenvalue {self.min_eigenvalue:.6g}")
        return out

    def __str__(self):
        status = "pass" if self.ok else "fail"
        return (
            f"{status}: hermiticity_defect={self.hermiticity_defect:.3e} "
            f"trace_defect={self.trace_defect:.3e} min_eigenvalue={self.min_eigenvalue:.6g}"
        )


def validate_density(rho: DensityMatrix) -> ValidationReport:
    """Hermiticity defect, trace defect and smallest eigenvalue of ``rho``."""
    mat = rho.mat
    herm = hermiticity_defect(mat)
    trace = abs(np.trace(mat) - 1.0)
    min_eig = float(np.linalg.eigvalsh(0.5 * (mat + mat.conj().T))[0])
    return ValidationReport(herm, float(trace), min_eig)


def basis_index(label: str, dims: tuple[int, int]) -> int:
    """Index of the product ket ``|label[0] label[1]>`` in row-major ordering."""
    if len(label) != 2:
        raise ValueError(f"bad ket label {label!r}")
    a, b = int(label[0]), int(label[1])
    dA, dB = dims
    if not (0 <= a < dA and 0 <= b < dB):
        raise DimensionMismatch(f"ket |{label}> outside a {dA}x{dB} space")
    return a * dB + b


def basis_label(index: int, dims: tuple[int, int]) -> str:
    return f"{index // dims[1]}{index % dims[1]}"


def _outer_sum(dims, terms) -> np.ndarray:
    """Matrix from ``[(weight, ket_label, bra_label), ...]``."""
    n = dims[0] * dims[1]
    m = np.zeros((n, n), dtype=complex)
    for weight, ket, bra in terms:
        m[basis_index(ket, dims), basis_index(bra, dims)] += weight
    return m


def _checked(mat, dims) -> DensityMatrix:
    rho = DensityMatrix(mat, *dims)
    report = validate_density(rho)
    if not report.ok:
        raise NotPositive("; ".join(report.failures()))
    return rho


# --- family parameter sets -------------------------------------------------


@dataclass(frozen=True)
class XState:
    """Two-qubit X state with Pauli correlations ``c11, c22, c33``."""

    c11: float
    c22: float
    c33: float
    dims: tuple[int, int] = field(default=(2, 2), init=False)

    @classmethod
    def werner(cls, x: float) -> "XState":
        return cls(x, x, x)

    def state(self) -> DensityMatrix:
        return make_x_state(self.c11, self.c22, self.c33)


@dataclass(frozen=True)
class OneParam:
    P: float
    dims: tuple[int, int] = field(default=(2, 3), init=False)

    def state(self) -> DensityMatrix:
        return make_one_param(self.P)


@dataclass(frozen=True)
class TwoParam:
    alpha: float
    beta: float
    gamma: float
    dims: tuple[int, int] = field(default=(2, 3), init=False)

    def __post_init__(self):
        _check_two_param(self.alpha, self.beta, self.gamma)

    def state(self) -> DensityMatrix:
        return make_two_param(self.alpha, self.beta, self.gamma)


@dataclass(frozen=True)
class QutritPure:
    a1: float
    a2: float
    a3: float
    dims: tuple[int, int] = field(default=(3, 3), init=False)

    def __post_init__(self):
        _check_qutrit_pure(self.a1, self.a2, self.a3)

    def state(self) -> DensityMatrix:
        return make_qutrit_pure(self.a1, self.a2, self.a3)


StateFamily = Union[XState, OneParam, TwoParam, QutritPure]


# --- constructors ----------------------------------------------------------


def x_state_matrix(c11: float, c22: float, c33: float) -> np.ndarray:
    """Unvalidated X-state matrix, normalized as ``(I + sum_i c_ii s_i s_i)/4``."""
    diag_even, diag_odd = (1 + c33) / 4, (1 - c33) / 4
    return _outer_sum(
        (2, 2),
        [
            (diag_even, "00", "00"),
            (diag_even, "11", "11"),
            (diag_odd, "01", "01"),
            (diag_odd, "10", "10"),
            ((c11 + c22) / 4, "01", "10"),
            ((c11 + c22) / 4, "10", "01"),
            ((c11 - c22) / 4, "00", "11"),
            ((c11 - c22) / 4, "11", "00"),
        ],
    )


def make_x_state(c11: float, c22: float, c33: float) -> DensityMatrix:
    """Two-qubit X state.

    ``(-1, -1, -1)`` is the singlet, ``(x, x, x)`` a Werner state. Raises
    :class:`NotPositive` when the correlation triple lies outside the
    tetrahedron of physical states.
    """
    for name, value in (("c11", c11), ("c22", c22), ("c33", c33)):
        if not (-1.0 <= value <= 1.0):
            raise OutOfRange(f"{name} must lie in [-1, 1], got {value}")
    return _checked(x_state_matrix(c11, c22, c33), (2, 2))


def one_param_matrix(P: float) -> np.ndarray:
    p, q = P / 2, (1 - 2 * P) / 2
    return _outer_sum(
        (2, 3),
        [
            (p, "00", "00"),
            (p, "01", "01"),
            (p, "11", "11"),
            (p, "12", "12"),
            (p, "12", "00"),
            (p, "00", "12"),
            (q, "02", "02"),
            (q, "10", "02"),
            (q, "10", "10"),
            (q, "02", "10"),
        ],
    )


def make_one_param(P: float) -> DensityMatrix:
    """Qubit-qutrit one-parameter family, ``0 <= P <= 1/2``.

    ``P = 0`` is the maximally entangled ``(|02> + |10>)/sqrt(2)``; the state is
    PPT only at ``P = 1/3``.
    """
    if not (0.0 <= P <= 0.5):
        raise OutOfRange(f"P must lie in [0, 0.5], got {P}")
    return _checked(one_param_matrix(P), (2, 3))


def _check_two_param(alpha, beta, gamma):
    for name, value in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        if value < 0:
            raise NegativeParameter(f"{name} must be >= 0, got {value}")
    total = 2 * alpha + 3 * beta + gamma
    if abs(total - 1) > PARAM_TOL:
        raise ConstraintViolated(f"2*alpha + 3*beta + gamma must equal 1, got {total:.12g}")


def two_param_matrix(alpha: float, beta: float, gamma: float) -> np.ndarray:
    """Unvalidated two-parameter matrix; useful for probing constraint violations."""
    return _outer_sum(
        (2, 3),
        [
            (alpha, "02", "02"),
            (alpha, "12", "12"),
            (beta, "00", "00"),
            (beta, "11", "11"),
            ((beta + gamma) / 2, "01", "01"),
            ((beta + gamma) / 2, "10", "10"),
            ((beta - gamma) / 2, "01", "10"),
            ((beta - gamma) / 2, "10", "01"),
        ],
    )


def make_two_param(alpha: float, beta: float, gamma: float) -> DensityMatrix:
    """Qubit-qutrit two-parameter family with ``2 alpha + 3 beta + gamma = 1``.

    The spectrum is ``{alpha, alpha, beta, beta, beta, gamma}``; ``(0, 0, 1)``
    is the embedded singlet ``(|01> - |10>)/sqrt(2)``.
    """
    _check_two_param(alpha, beta, gamma)
    return _checked(two_param_matrix(alpha, beta, gamma), (2, 3))


def _check_qutrit_pure(a1, a2, a3):
    norm = a1 * a1 + a2 * a2 + a3 * a3
    if abs(norm - 1) > PARAM_TOL:
        raise NotNormalized(f"a1^2 + a2^2 + a3^2 = {norm:.12g}, expected 1")


def make_qutrit_pure(a1: float, a2: float, a3: float) -> DensityMatrix:
    """Projector onto ``a1|00> + a2|11> + a3|22>`` (real, normalized coefficients)."""
    _check_qutrit_pure(a1, a2, a3)
    psi = np.zeros(9, dtype=complex)
    psi[[0, 4, 8]] = a1, a2, a3
    return _checked(np.outer(psi, psi.conj()), (3, 3))
