"""Independent reference implementations used only by the tests.

Nothing here calls into the package's linear-algebra routines.
"""

import math

import numpy as np


def expm_scaling_squaring(a, terms=30):
    """Matrix exponential by Taylor series with scaling and squaring."""
    a = np.asarray(a, dtype=complex)
    norm = np.max(np.sum(np.abs(a), axis=1))
    squarings = max(0, int(math.ceil(math.log2(norm))) + 1) if norm > 0 else 0
    x = a / (2**squarings)
    out = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for k in range(1, terms):
        term = term @ x / k
        out = out + term
    for _ in range(squarings):
        out = out @ out
    return out


def propagator_oracle(h, t):
    """``exp(-i h t)`` from the scaling-and-squaring series."""
    return expm_scaling_squaring(-1j * np.asarray(h) * t)


def partial_transpose_loops(rho, dA, dB):
    """Second-factor partial transpose by explicit index loops."""
    out = np.zeros_like(rho)
    for a in range(dA):
        for b in range(dA):
            for i in range(dB):
                for j in range(dB):
                    out[a * dB + i, b * dB + j] = rho[a * dB + j, b * dB + i]
    return out


def negativity_oracle(rho, dA, dB):
    """Negativity via the loop transpose and numpy's Hermitian eigensolver."""
    w = np.linalg.eigvalsh(partial_transpose_loops(np.asarray(rho), dA, dB))
    return (np.sum(np.abs(w)) - 1) / (min(dA, dB) - 1)


def random_unitary(d, rng):
    z = (rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_hermitian(d, rng):
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return (z + z.conj().T) / 2


def random_density(d, rng, rank=None):
    rank = rank or d
    z = rng.normal(size=(d, rank)) + 1j * rng.normal(size=(d, rank))
    rho = z @ z.conj().T
    return rho / np.trace(rho).real


def ket(label, dims):
    """Product basis vector ``|ab>`` for a two-character label."""
    v = np.zeros(dims[0] * dims[1], dtype=complex)
    v[int(label[0]) * dims[1] + int(label[1])] = 1
    return v
