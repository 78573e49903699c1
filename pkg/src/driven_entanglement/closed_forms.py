"""Closed-form evolved states and an auditor that checks them against the channel.

Each closed form is a list of named matrix elements. Two modes exist:

* ``corrected=False`` transcribes the printed listings term by term, keeping
  duplicated labels, missing conjugates, odd-in-time terms and all.
* ``corrected=True`` returns forms that agree with :func:`dynamics.evolve`.
  For the qubit drive these are the printed coefficient lists with the wrong
  entries fixed. For the Lambda-type qutrit drive the propagator depends on
  ``sqrt(tau1^2 + tau2^2)``, which no product of ``cos tau_i, sin tau_i``
  terms reproduces, so the corrected form is the two-operator closed form
  ``A rho A + sin^2(theta) B rho B`` built from the dark/bright decomposition.

Numeric evolution is the ground truth; the closed forms exist to be audited.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import cos, hypot, sin

import numpy as np

from .dynamics import Party, QubitDrive, QutritDrive, Scenario, evolve
from .errors import UnsupportedScenario
from .states import (
    DensityMatrix,
    OneParam,
    QutritPure,
    TwoParam,
    XState,
    basis_index,
    basis_label,
    x_state_matrix,
)

AUDIT_TOL = 1e-8


@dataclass(frozen=True)
class ListedEntry:
    """One printed matrix element ``<row|rho|col> = value``."""

    name: str
    row: str
    col: str
    value: complex


# --- qubit drive, first party ----------------------------------------------


def _x_state_qubit(f: XState, tau: float, corrected: bool) -> list[ListedEntry]:
    c, s = cos(tau), sin(tau)
    c11, c22, c33 = f.c11, f.c22, f.c33
    if corrected:
        k = 4.0
        r1 = (1 + c33) / k * c * c + (1 - c33) / k * s * s
        r2 = 0.0
        r3 = (c11 - c22) / k * c * c - (c11 + c22) / k * s * s
        r4 = (1 - c33) / k * c * c + (1 + c33) / k * s * s
        r5 = (c11 + c22) / k * c * c - (c11 - c22) / k * s * s
        r7 = r4
        r8 = r10 = 0.0
    else:
        r1 = (1 + c33) / 2 * c * c + (1 - c33) / 2 * s * s
        r2 = -(1 + c33) / 2 * s * c
        r3 = (c11 - c22) / 2 * c * c - (c11 + c22) / 2 * s * s
        r4 = (1 - c33) / 2 * c * c + (1 + c33) / 2 * s * s
        r5 = (c11 + c22) / 2 * c * c - (c11 - c22) / 2 * s * s
        r7 = (1 - c33) / 2 * c * c - (1 + c33) / 2 * s * s
        r8 = -(c11 + c22) / 4 * sin(2 * tau)
        r10 = -(c11 - c22) / 4 * sin(2 * tau)
    entries = [
        ("R1", "00", "00", r1),
        ("R2", "00", "10", r2),
        ("R3", "00", "11", r3),
        ("R4", "01", "01", r4),
        ("R5", "01", "10", r5),
        ("R6", "10", "01", r5),
        ("R7", "10", "10", r7),
        ("R8", "10", "11", r8),
        ("R9", "11", "00", r3),
        ("R10", "11", "10", r10),
        ("R11", "11", "11", r1),
    ]
    if corrected:
        entries = [e for e in entries if e[0] not in ("R2", "R8", "R10")]
    return [ListedEntry(*e) for e in entries]


def _one_param_qubit(f: OneParam, tau: float, corrected: bool) -> list[ListedEntry]:
    P = f.P
    c2, s2 = cos(tau) ** 2, sin(tau) ** 2
    l1 = P / 2 * c2 + (1 - 2 * P) / 2 * s2
    l2 = P / 2 * c2 - (1 - 2 * P) / 2 * s2
    l3 = P / 2
    l4 = P / 2 * s2 + (1 - 2 * P) / 2 * c2
    l6 = (1 - 2 * P) / 2 * c2 - P / 2 * s2
    # printed as L10 = L1; the conjugate of L2 is what the channel produces
    l10 = l2 if corrected else l1
    return [
        ListedEntry(*e)
        for e in [
            ("L1", "00", "00", l1),
            ("L2", "00", "12", l2),
            ("L3", "01", "01", l3),
            ("L4", "02", "02", l4),
            ("L5", "10", "10", l4),
            ("L6", "10", "02", l6),
            ("L7", "02", "10", l6),
            ("L8", "11", "11", l3),
            ("L9", "12", "12", l1),
            ("L10", "12", "00", l10),
        ]
    ]


def _two_param_qubit(f: TwoParam, tau: float, corrected: bool) -> list[ListedEntry]:
    # the printed listing already agrees with the channel; both modes coincide
    al, be, ga = f.alpha, f.beta, f.gamma
    c2, s2 = cos(tau) ** 2, sin(tau) ** 2
    m1 = be * c2 + (be + ga) / 2 * s2
    m2 = be * s2 + (be + ga) / 2 * c2
    m4 = (be - ga) / 2 * c2
    m7 = -(be - ga) / 2 * s2
    return [
        ListedEntry(*e)
        for e in [
            ("M1", "00", "00", m1),
            ("M2", "01", "01", m2),
            ("M3", "10", "10", m2),
            ("M4", "01", "10", m4),
            ("M5", "10", "01", m4),
            ("M6", "11", "11", m1),
            ("M7", "00", "11", m7),
            ("M8", "11", "00", m7),
            ("M9", "02", "02", al),
            ("M10", "12", "12", al),
        ]
    ]


# --- qutrit drive, printed listings ----------------------------------------


def _one_param_qutrit_printed(f: OneParam, tau1: float, tau2: float) -> list[ListedEntry]:
    P = f.P
    c1, s1, c2, s2 = cos(tau1), sin(tau1), cos(tau2), sin(tau2)
    sd1, sd2 = sin(2 * tau1), sin(2 * tau2)
    L = {}
    L[1] = P / 2 * c1**2 + (1 - 2 * P) / 2 * s1**2
    L[2] = -(1 - 2 * P) / 4 * s1 * sd2
    L[3] = -(1 - P) / 4 * sd1 * s2
    L[4] = P / 2 * c1 * c2
    L[5] = (1 - 2 * P) / 8 * sd1 * sd2
    L[6] = P / 2 * (s1**2 + c2**2 * c2**2) + (1 - 2 * P) / 2 * c1**2 * s2**2
    L[7] = P / 2 * s1**2 * c2
    L[8] = (1 - P) / 4 * sd1 * s2
    L[9] = -(1 - 2 * P) / 4 * s1 * sd2
    L[10] = P / 2 * s2**2 + (1 - 2 * P) / 2 * c2**2
    L[11] = P / 2 * s1 * s2 * (c1 + c2)
    L[12] = (1 - 2 * P) / 2 * c1 * c2
    L[13] = P / 2 * s1**2 + (1 - 2 * P) / 2 * c2**2
    L[14] = P / 8 * sd1 * sd2
    L[15] = -P / 4 * sd1 * c2
    L[16] = (1 - 2 * P) / 2 * s1**2 * c2
    L[17] = P / 2 * c1**2 + (1 - 2 * P) / 2 * s2**2
    L[18] = L[14]
    L[19] = L[15]
    L[20] = P / 2
    L[21] = L[16]
    L[22] = L[12]
    L[23] = L[7]
    L[24] = P / 4 * s1 * s2
    L[25] = L[4]
    positions = {
        1: ("00", "00"), 2: ("00", "02"), 3: ("00", "10"), 4: ("00", "12"),
        5: ("01", "00"), 6: ("01", "01"), 7: ("01", "10"), 8: ("01", "11"),
        9: ("02", "00"), 10: ("02", "02"), 11: ("10", "00"), 12: ("10", "02"),
        13: ("10", "10"), 14: ("10", "11"), 15: ("10", "12"), 16: ("11", "00"),
        17: ("11", "11"), 18: ("11", "10"), 19: ("12", "10"), 20: ("12", "12"),
        21: ("00", "11"), 22: ("02", "10"), 23: ("10", "01"), 24: ("11", "01"),
        25: ("12", "00"),
    }  # fmt: skip
    return [ListedEntry(f"L{k}", *positions[k], L[k]) for k in range(1, 26)]


def _two_param_qutrit_printed(f: TwoParam, tau1: float, tau2: float) -> list[ListedEntry]:
    al, be, ga = f.alpha, f.beta, f.gamma
    c1, s1, c2, s2 = cos(tau1), sin(tau1), cos(tau2), sin(tau2)
    v00_02 = -al / 2 * s1 * sin(2 * tau2)
    v02_10 = (be - ga) / 2 * s1 * s2
    v10_11 = al / 4 * sin(2 * tau1) * s2
    v10_12 = -al / 2 * s1 * sin(2 * tau2)
    rows = [
        ("00", "00", be * c1**2 + al * s1**2),
        ("00", "01", al / 4 * s1 * s2),
        ("01", "00", al / 4 * s1 * s2),
        ("00", "02", v00_02),
        ("01", "01", be * s1**2 + c1**2 * (al * s2**2 + (be + ga) / 2 * c2**2)),
        ("01", "10", (be - ga) / 2 * c1**2 * c2),
        ("10", "01", (be - ga) / 2 * c1**2 * c2),
        # printed with the malformed label "0,02"; read as the conjugate of 00,02
        ("02", "00", v00_02),
        ("02", "02", al * c2**2 + (be + ga) / 2 * s2**2),
        ("02", "10", v02_10),
        ("10", "10", al * s1**2 + (be + ga) / 2 * c1**2),
        ("10", "11", v10_11),
        ("10", "12", v10_12),
        ("11", "02", v02_10),
        ("11", "10", v10_11),
        ("12", "10", v10_12),
        ("11", "02", al * c2**2 + s2**2 * be),
    ]
    return _label_entries(rows)


def _qutrit_pure_printed(f: QutritPure, tau1: float, tau2: float) -> list[ListedEntry]:
    a1, a2, a3 = f.a1, f.a2, f.a3
    c1, s1, c2, s2 = cos(tau1), sin(tau1), cos(tau2), sin(tau2)
    rows = [
        ("00", "00", a1**2 * c1**2),
        ("00", "11", a1 * a2 * c1**2 * c2),
        ("00", "22", a1 * a3 * c1 * c2),
        ("00", "02", -a1 * a3 * c1 * s1 * s2),
        ("11", "00", a1 * a2 * c1**2 * c2),
        ("11", "11", a2**2 * c1**2 * c2**2),
        ("11", "22", a2 * a3 * c1 * c2**2),
        ("00", "02", -a2 * a3 * c1 * c2 * s1 * s2),
        ("22", "00", a3 * a1 * c1 * c2),
        ("22", "11", a2 * a3 * c1 * c2**2),
        ("22", "22", a3**2 * c2**2),
        ("22", "02", -(a3**2) * c2 * s1 * s2),
        ("02", "00", -a3 * a1 * s1 * s2 * c1),
        ("02", "11", -a3 * a2 * s1 * s2 * c1 * c2),
        ("02", "22", -(a3**2) * s1 * s2 * c2),
        ("02", "02", a3**2 * s1**2 * s2**2),
        ("21", "10", a2 * a1 * s1 * s2),
        ("21", "21", a2**2 * s2**2),
        ("21", "12", a2 * a3 * s1 * s2 * c1),
        ("21", "02", a2 * a3 * s1**2 * s2 * c2),
        ("12", "10", a3 * a1 * c1 * s1 * s2),
        ("12", "21", a2 * a3 * c1 * s2**2),
        ("12", "12", a3**2 * c1**2 * s2**2),
        ("12", "02", a3**2 * c1 * c2 * s1 * s2),
        ("10", "10", a1**2 * s1**2),
        ("10", "21", a1 * a2 * c1 * s2),
        ("10", "12", a1 * a3**2 * s1 * c1 * s2),
        ("10", "02", a1 * a3 * s1**2 * c2),
        ("02", "10", a3 * a1 * s1**2 * c2),
        ("02", "21", a3 * a2 * s1 * s2 * c2),
        ("02", "12", a3**2 * s1 * c1 * s2 * c2),
        ("02", "02", a3**2 * s1**2 * c2**2),
    ]
    return _label_entries(rows)


def _label_entries(rows) -> list[ListedEntry]:
    """Name entries ``rho[ab,cd]``; a repeated label gets a ``#2``, ``#3`` suffix."""
    seen: dict[tuple[str, str], int] = {}
    out = []
    for row, col, value in rows:
        n = seen.get((row, col), 0) + 1
        seen[(row, col)] = n
        name = f"rho[{row},{col}]" + (f"#{n}" if n > 1 else "")
        out.append(ListedEntry(name, row, col, value))
    return out


# --- qutrit drive, exact closed form ---------------------------------------


def lambda_kraus(tau1: float, tau2: float) -> tuple[np.ndarray, np.ndarray, float]:
    """Operators ``A, B`` and ``sin(theta)`` with the phase-averaged Lambda channel
    ``rho -> A rho A + sin(theta)^2 B rho B``, ``theta = sqrt(tau1^2 + tau2^2)``.

    With ``|b> = (tau2|0> + tau1|1>)/theta`` (bright), ``|d> = (tau1|0> - tau2|1>)/theta``
    (dark): ``A = |d><d| + cos(theta)(|b><b| + |2><2|)`` and ``B = |b><2| + |2><b|``.
    """
    theta = hypot(tau1, tau2)
    if theta == 0.0:
        return np.eye(3), np.zeros((3, 3)), 0.0
    bright = np.array([tau2, tau1, 0.0]) / theta
    dark = np.array([tau1, -tau2, 0.0]) / theta
    upper = np.array([0.0, 0.0, 1.0])
    a = np.outer(dark, dark) + cos(theta) * (np.outer(bright, bright) + np.outer(upper, upper))
    b = np.outer(bright, upper) + np.outer(upper, bright)
    return a, b, sin(theta)


def _qutrit_kraus_state(rho0: np.ndarray, dims, target: Party, tau1: float, tau2: float) -> np.ndarray:
    a, b, s = lambda_kraus(tau1, tau2)
    other = np.eye(dims[1] if target is Party.FIRST else dims[0])
    if target is Party.FIRST:
        A, B = np.kron(a, other), np.kron(b, other)
    else:
        A, B = np.kron(other, a), np.kron(other, b)
    return A @ rho0 @ A + s * s * (B @ rho0 @ B)


def _all_entries(mat: np.ndarray, dims) -> list[ListedEntry]:
    n = mat.shape[0]
    return [
        ListedEntry(f"rho[{basis_label(i, dims)},{basis_label(j, dims)}]", basis_label(i, dims), basis_label(j, dims), mat[i, j])
        for i in range(n)
        for j in range(n)
    ]


# --- dispatch --------------------------------------------------------------


def printed_initial_matrix(scenario: Scenario) -> np.ndarray:
    """Initial matrix exactly as printed for the scenario's family.

    The printed X state carries ``(1 +- c33)/2`` weights on both kets of each
    pair, i.e. twice the normalized state; the other families are printed
    normalized.
    """
    fam = scenario.family
    if isinstance(fam, XState):
        return 2.0 * x_state_matrix(fam.c11, fam.c22, fam.c33)
    return np.array(fam.state().mat)


def closed_form_label(scenario: Scenario) -> str:
    fam, kind = scenario.family, scenario.drive.kind
    return f"{type(fam).__name__}/{type(kind).__name__}"


def listing_entries(scenario: Scenario, tau1: float, tau2: float, corrected: bool = False) -> list[ListedEntry]:
    """Named matrix elements of the closed form at angles ``tau1, tau2``.

    ``tau2`` is ignored for qubit-driven scenarios.
    """
    fam, kind, target = scenario.family, scenario.drive.kind, scenario.drive.target
    if isinstance(kind, QubitDrive):
        if target is not Party.FIRST:
            raise UnsupportedScenario("closed forms for a qubit drive assume the first party is driven")
        if isinstance(fam, XState):
            return _x_state_qubit(fam, tau1, corrected)
        if isinstance(fam, OneParam):
            return _one_param_qubit(fam, tau1, corrected)
        if isinstance(fam, TwoParam):
            return _two_param_qubit(fam, tau1, corrected)
    elif isinstance(kind, QutritDrive):
        if corrected:
            mat = _qutrit_kraus_state(scenario.initial_state().mat, scenario.dims, target, tau1, tau2)
            return _all_entries(mat, scenario.dims)
        expected = Party.SECOND if scenario.dims == (2, 3) else Party.FIRST
        if target is not expected:
            raise UnsupportedScenario(f"printed listing assumes the {expected.value} party is driven")
        if isinstance(fam, OneParam):
            return _one_param_qutrit_printed(fam, tau1, tau2)
        if isinstance(fam, TwoParam):
            return _two_param_qutrit_printed(fam, tau1, tau2)
        if isinstance(fam, QutritPure):
            return _qutrit_pure_printed(fam, tau1, tau2)
    raise UnsupportedScenario(f"no closed form for {closed_form_label(scenario)}")


def assemble(entries: list[ListedEntry], dims: tuple[int, int]) -> np.ndarray:
    """Matrix from listed entries.

    A later entry with the same label overrides an earlier one. Where only one
    of a conjugate pair is listed, the other is filled in as its conjugate.
    """
    n = dims[0] * dims[1]
    mat = np.zeros((n, n), dtype=complex)
    listed = set()
    for e in entries:
        i, j = basis_index(e.row, dims), basis_index(e.col, dims)
        mat[i, j] = e.value
        listed.add((i, j))
    for i, j in list(listed):
        if (j, i) not in listed:
            mat[j, i] = np.conj(mat[i, j])
    return mat


def analytic_state(scenario: Scenario, tau1: float, tau2: float | None = None, corrected: bool = False) -> DensityMatrix:
    """Closed-form evolved state. The result is not validated: printed listings
    need not be Hermitian, normalized or positive."""
    if tau2 is None:
        tau2 = tau1
    entries = listing_entries(scenario, tau1, tau2, corrected)
    return DensityMatrix(assemble(entries, scenario.dims), *scenario.dims)


# --- audit -----------------------------------------------------------------


@dataclass(frozen=True)
class CoefficientError:
    name: str
    row: str
    col: str
    peak_error: float
    tau_at_peak: float


@dataclass
class AuditReport:
    scenario: str
    corrected: bool
    taus: np.ndarray
    max_error: np.ndarray
    coefficients: list[CoefficientError]
    omitted: list[CoefficientError]
    duplicates: list[str]
    reference_trace: float
    tol: float = AUDIT_TOL
    notes: list[str] = field(default_factory=list)

    @property
    def flagged(self) -> list[CoefficientError]:
        bad = [c for c in self.coefficients + self.omitted if c.peak_error > self.tol]
        return sorted(bad, key=lambda c: -c.peak_error)

    @property
    def worst(self) -> CoefficientError | None:
        pool = self.coefficients + self.omitted
        return max(pool, key=lambda c: c.peak_error) if pool else None

    @property
    def agrees(self) -> bool:
        return not self.flagged and float(np.max(self.max_error)) <= self.tol

    def format(self) -> str:
        mode = "corrected" if self.corrected else "verbatim"
        lines = [
            f"scenario {self.scenario}",
            f"mode {mode}",
            f"grid {self.taus[0]:.12g} {self.taus[-1]:.12g} {len(self.taus)}",
            f"reference_trace {self.reference_trace:.12g}",
            f"max_elementwise_error {float(np.max(self.max_error)):.6e}",
            f"tolerance {self.tol:.1e}",
            f"verdict {'agree' if self.agrees else 'discrepancy'}",
        ]
        lines += [f"note {n}" for n in self.notes]
        lines += [f"duplicate_label {d}" for d in self.duplicates]
        for c in self.flagged:
            kind = "omitted" if c in self.omitted else "coefficient"
            lines.append(f"flag {kind} {c.name} <{c.row}|.|{c.col}> peak_error {c.peak_error:.6e} at_tau {c.tau_at_peak:.12g}")
        for c in self.coefficients:
            lines.append(f"coefficient {c.name} <{c.row}|.|{c.col}> peak_error {c.peak_error:.6e} at_tau {c.tau_at_peak:.12g}")
        return "\n".join(lines) + "\n"


def audit_analytic(scenario: Scenario, grid, corrected: bool = False, tol: float = AUDIT_TOL) -> AuditReport:
    """Compare a closed form against :func:`dynamics.evolve` on every grid point.

    ``grid`` needs a ``points()`` method returning times in units of 1/g.

    The reference is the channel applied to the initial matrix as printed, so
    an initial-state normalization slip is reported once (as
    ``reference_trace``) rather than smeared over every coefficient.
    """
    dims = scenario.dims
    taus = np.asarray(grid.points(), dtype=float)
    rho0 = DensityMatrix(printed_initial_matrix(scenario) if not corrected else scenario.initial_state().mat, *dims)
    peaks: dict[str, list] = {}
    omitted_peaks: dict[tuple[int, int], list] = {}
    max_error = np.zeros(len(taus))
    duplicates: list[str] = []
    for k, t in enumerate(taus):
        tau1, tau2 = scenario.drive.scaled_times(t)
        numeric = evolve(rho0, scenario, t).mat
        entries = listing_entries(scenario, tau1, tau2, corrected)
        if k == 0:
            duplicates = [e.name for e in entries if "#" in e.name]
        listed = set()
        for e in entries:
            i, j = basis_index(e.row, dims), basis_index(e.col, dims)
            listed.add((i, j))
            err = abs(e.value - numeric[i, j])
            rec = peaks.setdefault(e.name, [e, -1.0, t])
            if err > rec[1]:
                rec[1], rec[2] = err, t
        full = assemble(entries, dims)
        max_error[k] = float(np.max(np.abs(full - numeric)))
        # positions the listing never names (conjugate fill-ins included)
        n = full.shape[0]
        for i in range(n):
            for j in range(n):
                if (i, j) in listed:
                    continue
                err = abs(full[i, j] - numeric[i, j])
                rec = omitted_peaks.setdefault((i, j), [-1.0, t])
                if err > rec[0]:
                    rec[0], rec[1] = err, t
    coefficients = [CoefficientError(e.name, e.row, e.col, float(err), float(t)) for e, err, t in peaks.values()]
    omitted = [
        CoefficientError(
            f"rho[{basis_label(i, dims)},{basis_label(j, dims)}]", basis_label(i, dims), basis_label(j, dims), float(err), float(t)
        )
        for (i, j), (err, t) in omitted_peaks.items()
    ]
    report = AuditReport(
        scenario=scenario.describe(),
        corrected=corrected,
        taus=taus,
        max_error=max_error,
        coefficients=coefficients,
        omitted=omitted,
        duplicates=duplicates,
        reference_trace=float(np.trace(rho0.mat).real),
        tol=tol,
    )
    if abs(report.reference_trace - 1) > 1e-12:
        report.notes.append(f"printed initial state has trace {report.reference_trace:.12g}, not 1")
    if isinstance(scenario.drive.kind, QutritDrive) and not corrected:
        report.notes.append("qutrit propagator depends on sqrt(tau1^2+tau2^2); products of cos/sin of tau1, tau2 are not exact in general")
    return report
