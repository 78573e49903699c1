"""Negativity of bipartite density matrices."""

from __future__ import annotations

from .linalg import partial_transpose, singular_trace_norm, trace_norm
from .states import DensityMatrix

ZERO_CLAMP = 1e-12


def negativity(rho: DensityMatrix, strict: bool = True) -> float:
    """Normalized negativity ``(||rho^T2||_1 - 1) / (d - 1)`` with ``d = min(dA, dB)``.

    The transpose acts on the second factor. Values within ``1e-12`` of zero
    are returned as exactly ``0.0``, so PPT plateaus compare equal to zero.

    With ``strict=False`` the trace norm is taken from singular values, which
    keeps the quantity defined for non-Hermitian input (e.g. a printed
    closed form with mismatched conjugate entries). No clamping is applied in
    that mode.
    """
    d = min(rho.dA, rho.dB)
    pt = partial_transpose(rho.mat, rho.dA, rho.dB)
    if strict:
        value = (trace_norm(pt) - 1.0) / (d - 1)
        return 0.0 if abs(value) <= ZERO_CLAMP else value
    return (singular_trace_norm(pt) - 1.0) / (d - 1)
