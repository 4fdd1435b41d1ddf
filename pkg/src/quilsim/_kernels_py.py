"""Numpy reference implementation of the statevector kernels.

All functions operate in place on a 1-D complex128 array of length 2**n.
Bit positions are counted from the least significant end of the flat index
(the caller translates qubit numbers, which are MSB-first, into positions).
The Cython module `_kernels_cy` implements the same signatures; `kernels`
picks one at import time.
"""

from __future__ import annotations

import numpy as np


def _split_indices(n_amps: int, b: int) -> np.ndarray:
    """Indices whose bit `b` is zero, in increasing order."""
    i = np.arange(n_amps // 2)
    low = i & ((1 << b) - 1)
    return ((i >> b) << (b + 1)) | low


def apply_1q(amps: np.ndarray, b: int, u: np.ndarray) -> None:
    i0 = _split_indices(amps.shape[0], b)
    i1 = i0 | (1 << b)
    a0 = amps[i0]
    a1 = amps[i1]
    amps[i0] = u[0, 0] * a0 + u[0, 1] * a1
    amps[i1] = u[1, 0] * a0 + u[1, 1] * a1


def apply_2q(amps: np.ndarray, b_hi: int, b_lo: int, u: np.ndarray) -> None:
    """Two-qubit gate; `b_hi` is the position of the gate's high-order bit."""
    idx = np.arange(amps.shape[0])
    base = idx[((idx >> b_hi) & 1 == 0) & ((idx >> b_lo) & 1 == 0)]
    rows = [base, base | (1 << b_lo), base | (1 << b_hi), base | (1 << b_hi) | (1 << b_lo)]
    v = np.stack([amps[r] for r in rows])
    w = u @ v
    for k, r in enumerate(rows):
        amps[r] = w[k]


def apply_3q(amps: np.ndarray, b2: int, b1: int, b0: int, u: np.ndarray) -> None:
    """Three-qubit gate; b2/b1/b0 are the positions of the gate's bits, high to low."""
    idx = np.arange(amps.shape[0])
    mask = ((idx >> b2) & 1 == 0) & ((idx >> b1) & 1 == 0) & ((idx >> b0) & 1 == 0)
    base = idx[mask]
    rows = []
    for local in range(8):
        off = 0
        if local & 4:
            off |= 1 << b2
        if local & 2:
            off |= 1 << b1
        if local & 1:
            off |= 1 << b0
        rows.append(base | off)
    v = np.stack([amps[r] for r in rows])
    w = u @ v
    for k, r in enumerate(rows):
        amps[r] = w[k]


def branch_probability(amps: np.ndarray, b: int) -> float:
    """Probability that bit `b` of the index is 1."""
    idx = np.arange(amps.shape[0])
    sel = (idx >> b) & 1 == 1
    return float(np.sum(np.abs(amps[sel]) ** 2))


def collapse(amps: np.ndarray, b: int, outcome: int, prob: float) -> None:
    """Zero the discarded branch and renormalize by sqrt(prob)."""
    idx = np.arange(amps.shape[0])
    keep = (idx >> b) & 1 == outcome
    amps[~keep] = 0.0
    amps[keep] /= np.sqrt(prob)


def norm_sq(amps: np.ndarray) -> float:
    return float(np.sum(np.abs(amps) ** 2))
