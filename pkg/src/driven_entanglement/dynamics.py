"""Random-phase drive Hamiltonians and the exact two-phase evolution channel.

One subsystem is driven by a classical field whose phase is 0 or pi with
probability 1/2 each. The evolved state is the equal-weight mixture of the two
unitary conjugations, evaluated as an exact two-term sum.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .errors import DimensionMismatch, UnsupportedScenario
from .linalg import dagger, kron, unitary_exp
from .states import DensityMatrix, OneParam, QutritPure, StateFamily, TwoParam, XState

PHASES = (0.0, np.pi)
PHASE_WEIGHTS = (0.5, 0.5)


class Party(enum.Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class QubitDrive:
    g: float = 1.0
    dim: int = field(default=2, init=False)


@dataclass(frozen=True)
class QutritDrive:
    """Lambda-configuration drive: ``g1`` couples 1<->2, ``g2`` couples 0<->2."""

    g1: float = 1.0
    g2: float = 1.0
    dim: int = field(default=3, init=False)


DriveKind = Union[QubitDrive, QutritDrive]


@dataclass(frozen=True)
class DriveSpec:
    target: Party
    kind: DriveKind

    @property
    def phases(self) -> tuple[float, float]:
        return PHASES

    def local_hamiltonian(self, phi: float) -> np.ndarray:
        if isinstance(self.kind, QubitDrive):
            return qubit_drive_hamiltonian(self.kind.g, phi)
        return qutrit_drive_hamiltonian(self.kind.g1, self.kind.g2, phi)

    def scaled_times(self, t: float) -> tuple[float, float]:
        """Dimensionless angles ``(tau1, tau2)``; for a qubit drive both equal ``g t``."""
        if isinstance(self.kind, QubitDrive):
            return self.kind.g * t, self.kind.g * t
        return self.kind.g1 * t, self.kind.g2 * t


@dataclass(frozen=True)
class Scenario:
    family: StateFamily
    drive: DriveSpec

    def __post_init__(self):
        dims = self.family.dims
        idx = 0 if self.drive.target is Party.FIRST else 1
        if dims[idx] != self.drive.kind.dim:
            raise DimensionMismatch(
                f"{type(self.drive.kind).__name__} needs a {self.drive.kind.dim}-level "
                f"{self.drive.target.value} party, family has dims {dims}"
            )

    @property
    def dims(self) -> tuple[int, int]:
        return self.family.dims

    def initial_state(self) -> DensityMatrix:
        return self.family.state()

    @property
    def name(self) -> str:
        dims = self.dims
        if dims == (2, 2):
            return "qubit-qubit"
        if dims == (3, 3):
            return "qutrit-qutrit"
        driven = "qubit" if isinstance(self.drive.kind, QubitDrive) else "qutrit"
        return f"qubit-qutrit/drive-{driven}"

    def describe(self) -> str:
        return f"{self.name} {self.family} {self.drive.kind} target={self.drive.target.value}"


SCENARIO_NAMES = (
    "qubit-qubit",
    "qubit-qutrit/drive-qubit",
    "qubit-qutrit/drive-qutrit",
    "qutrit-qutrit",
)


def make_scenario(name: str, family: StateFamily, g: float = 1.0, g1: float = 1.0, g2: float = 1.0) -> Scenario:
    """Scenario by configuration name.

    ``qubit-qubit`` and ``qubit-qutrit/drive-qubit`` drive the first party (the
    qubit), ``qubit-qutrit/drive-qutrit`` drives the qutrit, and
    ``qutrit-qutrit`` drives the first qutrit.
    """
    if name == "qubit-qubit" and isinstance(family, XState):
        drive = DriveSpec(Party.FIRST, QubitDrive(g))
    elif name == "qubit-qutrit/drive-qubit" and isinstance(family, (OneParam, TwoParam)):
        drive = DriveSpec(Party.FIRST, QubitDrive(g))
    elif name == "qubit-qutrit/drive-qutrit" and isinstance(family, (OneParam, TwoParam)):
        drive = DriveSpec(Party.SECOND, QutritDrive(g1, g2))
    elif name == "qutrit-qutrit" and isinstance(family, QutritPure):
        drive = DriveSpec(Party.FIRST, QutritDrive(g1, g2))
    else:
        raise UnsupportedScenario(f"scenario {name!r} cannot host family {type(family).__name__}")
    return Scenario(family, drive)


def qubit_drive_hamiltonian(g: float, phi: float) -> np.ndarray:
    """``i g (s+ e^{-i phi} - s- e^{i phi})`` with ``s+ = |0><1|``.

    At ``phi = 0`` this is ``[[0, i g], [-i g, 0]]``, whose propagator is the
    real rotation ``[[cos gt, sin gt], [-sin gt, cos gt]]``.
    """
    h = np.zeros((2, 2), dtype=complex)
    h[0, 1] = 1j * g * np.conj(_phase(phi))
    h[1, 0] = -1j * g * _phase(phi)
    return h


def qutrit_drive_hamiltonian(g1: float, g2: float, phi: float) -> np.ndarray:
    """``g1 (e^{-i phi} S12 + e^{i phi} S21) + g2 (e^{-i phi} S20 + e^{i phi} S02)``, ``Sij = |i><j|``.

    The 0<->1 element is always zero.
    """
    h = np.zeros((3, 3), dtype=complex)
    h[1, 2] = g1 * np.conj(_phase(phi))
    h[2, 1] = g1 * _phase(phi)
    h[2, 0] = g2 * np.conj(_phase(phi))
    h[0, 2] = g2 * _phase(phi)
    return h


def _phase(phi: float) -> complex:
    """``e^{i phi}``, exact on the drive's two phases."""
    if phi == 0.0:
        return 1.0
    if phi == np.pi:
        return -1.0
    return complex(np.exp(1j * phi))


def embed_drive(h_local: np.ndarray, dims: tuple[int, int], target: Party) -> np.ndarray:
    """``h (x) I`` or ``I (x) h`` depending on which party is driven."""
    dA, dB = dims
    h_local = np.asarray(h_local, dtype=complex)
    want = dA if target is Party.FIRST else dB
    if h_local.shape != (want, want):
        raise DimensionMismatch(f"local drive is {h_local.shape}, {target.value} party has dim {want}")
    if target is Party.FIRST:
        return kron(h_local, np.eye(dB))
    return kron(np.eye(dA), h_local)


Propagator = Callable[[np.ndarray, float], np.ndarray]


def evolve(rho0: DensityMatrix, scenario: Scenario, t: float, propagator: Propagator = unitary_exp) -> DensityMatrix:
    """State at time ``t`` (units of 1/g): ``sum_phi p_phi U_phi rho0 U_phi^dagger``.

    ``propagator(h, t)`` must return ``exp(-i h t)``; the default uses the
    Hermitian eigendecomposition. Only the driven factor is exponentiated, then
    embedded.
    """
    if rho0.dims != scenario.dims:
        raise DimensionMismatch(f"state dims {rho0.dims} != scenario dims {scenario.dims}")
    out = np.zeros_like(rho0.mat)
    for phi, weight in zip(scenario.drive.phases, PHASE_WEIGHTS):
        u_local = propagator(scenario.drive.local_hamiltonian(phi), t)
        u = embed_drive(u_local, scenario.dims, scenario.drive.target)
        out += weight * (u @ rho0.mat @ dagger(u))
    return DensityMatrix(out, *rho0.dims)
