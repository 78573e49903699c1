"""Negativity time sweeps, death/rebirth event extraction and trace comparison."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .closed_forms import analytic_state
from .dynamics import Scenario, evolve
from .entanglement import negativity
from .errors import EmptyTrace, GridMismatch

DEFAULT_THRESHOLD = 1e-3
BACKENDS = ("numeric", "analytic-verbatim", "analytic-corrected")


@dataclass(frozen=True)
class TimeGrid:
    """``steps`` equally spaced times from ``t_start`` to ``t_end`` inclusive, in units of 1/g."""

    t_start: float = 0.0
    t_end: float = 2 * np.pi
    steps: int = 1000

    def __post_init__(self):
        if self.t_start < 0:
            raise ValueError(f"t_start must be >= 0, got {self.t_start}")
        if not self.t_end > self.t_start:
            raise ValueError(f"t_end ({self.t_end}) must exceed t_start ({self.t_start})")
        if int(self.steps) != self.steps or self.steps < 2:
            raise ValueError(f"steps must be an integer >= 2, got {self.steps}")

    def points(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, int(self.steps))

    @property
    def spacing(self) -> float:
        return (self.t_end - self.t_start) / (self.steps - 1)


@dataclass(frozen=True, eq=False)
class NegativityTrace:
    scenario: str
    taus: np.ndarray
    values: np.ndarray
    backend: str = "numeric"

    def __post_init__(self):
        taus = np.asarray(self.taus, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if taus.shape != values.shape or taus.ndim != 1:
            raise ValueError("taus and values must be 1-d arrays of equal length")
        if taus.size > 1 and not np.all(np.diff(taus) > 0):
            raise ValueError("taus must be strictly increasing")
        object.__setattr__(self, "taus", taus)
        object.__setattr__(self, "values", values)

    @property
    def samples(self) -> list[tuple[float, float]]:
        return list(zip(self.taus.tolist(), self.values.tolist()))

    def __len__(self):
        return self.taus.size

    def at(self, tau: float) -> float:
        """Sample value at the grid point nearest to ``tau``."""
        return float(self.values[np.argmin(np.abs(self.taus - tau))])


@dataclass(frozen=True)
class EntanglementEvents:
    death_intervals: list[tuple[float, float]]
    rebirth_times: list[float]
    extrema: list[tuple[float, float, str]]
    threshold: float
    global_min: tuple[float, float] = field(default=(np.nan, np.nan))

    @property
    def first_death_onset(self) -> float | None:
        return self.death_intervals[0][0] if self.death_intervals else None

    def minima(self) -> list[tuple[float, float]]:
        return [(t, n) for t, n, kind in self.extrema if kind == "min"]

    def maxima(self) -> list[tuple[float, float]]:
        return [(t, n) for t, n, kind in self.extrema if kind == "max"]

    def format(self) -> str:
        lines = [f"threshold {self.threshold:.17g}"]
        lines += [f"death_interval {on:.17g} {off:.17g}" for on, off in self.death_intervals]
        lines += [f"rebirth {t:.17g}" for t in self.rebirth_times]
        lines += [f"extremum {kind} {t:.17g} {n:.17g}" for t, n, kind in self.extrema]
        return "\n".join(lines) + "\n"


def sweep(scenario: Scenario, grid: TimeGrid, backend: str = "numeric") -> NegativityTrace:
    """Negativity at every grid point.

    ``numeric`` evolves the initial state through the channel; the analytic
    backends evaluate the closed forms. Printed listings can be non-Hermitian,
    so ``analytic-verbatim`` measures them with the singular-value trace norm.
    """
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}; choose from {', '.join(BACKENDS)}")
    taus = grid.points()
    values = np.empty_like(taus)
    if backend == "numeric":
        rho0 = scenario.initial_state()
        for k, t in enumerate(taus):
            values[k] = negativity(evolve(rho0, scenario, t))
    else:
        corrected = backend == "analytic-corrected"
        for k, t in enumerate(taus):
            tau1, tau2 = scenario.drive.scaled_times(t)
            rho = analytic_state(scenario, tau1, tau2, corrected=corrected)
            values[k] = negativity(rho, strict=corrected)
    return NegativityTrace(scenario.describe(), taus, values, backend)


def _crossing(t0, n0, t1, n1, level):
    if n1 == n0:
        return t1
    return t0 + (level - n0) * (t1 - t0) / (n1 - n0)


def detect_events(trace: NegativityTrace, threshold: float = DEFAULT_THRESHOLD) -> EntanglementEvents:
    """Death intervals, rebirths and strict local extrema of a sampled trace.

    A death interval is a maximal run of consecutive samples with
    ``N <= threshold``. Its ends are placed where the straight line between the
    bracketing samples crosses ``threshold``; a run touching either end of the
    trace keeps that grid endpoint. A rebirth is the end of an interval after
    which ``N`` rises above ``threshold`` again.
    """
    if len(trace) == 0:
        raise EmptyTrace("cannot extract events from an empty trace")
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    t, n = trace.taus, trace.values
    dead = n <= threshold
    intervals, rebirths = [], []
    k, size = 0, len(n)
    while k < size:
        if not dead[k]:
            k += 1
            continue
        start = k
        while k < size and dead[k]:
            k += 1
        end = k - 1
        on = t[start] if start == 0 else _crossing(t[start - 1], n[start - 1], t[start], n[start], threshold)
        if end == size - 1:
            off = t[end]
        else:
            off = _crossing(t[end], n[end], t[end + 1], n[end + 1], threshold)
            rebirths.append(float(off))
        intervals.append((float(on), float(off)))
    extrema = []
    for k in range(1, size - 1):
        if n[k] < n[k - 1] and n[k] < n[k + 1]:
            extrema.append((float(t[k]), float(n[k]), "min"))
        elif n[k] > n[k - 1] and n[k] > n[k + 1]:
            extrema.append((float(t[k]), float(n[k]), "max"))
    kmin = int(np.argmin(n))
    return EntanglementEvents(intervals, rebirths, extrema, threshold, (float(t[kmin]), float(n[kmin])))


@dataclass(frozen=True)
class TraceComparison:
    max_deviation: float
    tau_of_max: float
    fraction_a_ge_b: float


def compare_traces(a: NegativityTrace, b: NegativityTrace) -> TraceComparison:
    if a.taus.shape != b.taus.shape or not np.array_equal(a.taus, b.taus):
        raise GridMismatch("traces must share an identical grid")
    if len(a) == 0:
        raise EmptyTrace("cannot compare empty traces")
    diff = np.abs(a.values - b.values)
    k = int(np.argmax(diff))
    return TraceComparison(float(diff[k]), float(a.taus[k]), float(np.mean(a.values >= b.values)))
