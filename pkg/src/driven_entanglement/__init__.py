"""Entanglement dynamics of qubit/qutrit pairs with one party under a two-phase random drive."""

from .analysis import (
    EntanglementEvents,
    NegativityTrace,
    TimeGrid,
    TraceComparison,
    compare_traces,
    detect_events,
    sweep,
)
from .closed_forms import AuditReport, analytic_state, audit_analytic, lambda_kraus, listing_entries
from .dynamics import (
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
from .entanglement import negativity
from .errors import *  # noqa: F401,F403
from .linalg import complex_matrix, hermitian_eig, kron, partial_transpose, trace_norm, unitary_exp
from .states import (
    DensityMatrix,
    OneParam,
    QutritPure,
    TwoParam,
    XState,
    make_one_param,
    make_qutrit_pure,
    make_two_param,
    make_x_state,
    validate_density,
)

__version__ = "0.1.0"
