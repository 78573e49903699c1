"""Dense complex-matrix primitives for 2 to 9 dimensional Hilbert spaces.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``. Every
function here is pure: inputs are never modified.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, NotHermitian

HERMITIAN_TOL = 1e-10


def complex_matrix(entries: Sequence[complex], dim: int | None = None) -> np.ndarray:
    """Build a ``dim x dim`` complex matrix from a flat row-major entry list."""
    entries = np.asarray(entries, dtype=complex).ravel()
    if dim is None:
        dim = int(round(np.sqrt(entries.size)))
    if dim < 1 or entries.size != dim * dim:
        raise DimensionMismatch(f"expected {dim}*{dim} entries, got {entries.size}")
    return entries.reshape(dim, dim)


def as_square(a) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    return a


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conj(a).T


def kron(a, b) -> np.ndarray:
    """Kronecker product with row-major composite ordering |a>|b>.

    Entry ``(i*db + k, j*db + l)`` of the result is ``a[i, j] * b[k, l]``.
    """
    return np.kron(as_square(a), as_square(b))


def hermiticity_defect(a) -> float:
    """Largest entrywise modulus of ``a - a^dagger``."""
    a = as_square(a)
    return float(np.max(np.abs(a - dagger(a))))


def hermitian_part(a, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Return ``(a + a^dagger)/2``, raising if ``a`` is not Hermitian within ``tol``."""
    a = as_square(a)
    defect = hermiticity_defect(a)
    if defect > tol:
        raise NotHermitian(f"Hermiticity defect {defect:.3e} exceeds {tol:.1e}")
    return 0.5 * (a + dagger(a))


def hermitian_eig(a, tol: float = HERMITIAN_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    The input is symmetrized before decomposition, so round-off accumulated
    by repeated conjugations does not leak into the spectrum.

    Returns
    -------
    eigenvalues : ndarray
        Real eigenvalues in ascending order.
    eigenvectors : ndarray
        Unitary matrix whose columns are the matching eigenvectors.
    """
    w, v = np.linalg.eigh(hermitian_part(a, tol))
    return w, v


def unitary_exp(h, t: float) -> np.ndarray:
    """``exp(-i h t)`` for Hermitian ``h`` via its eigendecomposition."""
    w, v = hermitian_eig(h)
    return (v * np.exp(-1j * w * t)) @ dagger(v)


def trace_norm(a, tol: float = HERMITIAN_TOL) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    w, _ = hermitian_eig(a, tol)
    return float(np.sum(np.abs(w)))


def singular_trace_norm(a) -> float:
    """Sum of singular values. Agrees with :func:`trace_norm` on Hermitian input
    and stays defined for the non-Hermitian matrices some printed listings produce."""
    return float(np.sum(np.linalg.svd(as_square(a), compute_uv=False)))


def partial_transpose(rho, dA: int, dB: int) -> np.ndarray:
    """Transpose the second tensor factor: ``<a i|out|b j> = <a j|rho|b i>``."""
    rho = as_square(rho)
    if dA * dB != rho.shape[0]:
        raise DimensionMismatch(f"{dA}*{dB} != {rho.shape[0]}")
    return rho.reshape(dA, dB, dA, dB).transpose(0, 3, 2, 1).reshape(dA * dB, dA * dB)
