"""Kernel backend selection.

Imports the compiled Cython kernels when available, otherwise the numpy
fallback. Set QUILSIM_PURE_PYTHON=1 to force the fallback (used by the
benchmark and the backend-equivalence tests).
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

if os.environ.get("QUILSIM_PURE_PYTHON") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

apply_1q = _impl.apply_1q
apply_2q = _impl.apply_2q
apply_3q = _impl.apply_3q
branch_probability = _impl.branch_probability
collapse = _impl.collapse


def norm_sq(amps: np.ndarray) -> float:
    return _kernels_py.norm_sq(amps)


def apply_dense(amps: np.ndarray, bit_positions: list[int], u: np.ndarray) -> None:
    """Generic k-qubit gate application (k >= 4); gather/scatter, not hot."""
    k = len(bit_positions)
    n_amps = amps.shape[0]
    idx = np.arange(n_amps)
    base = idx
    for b in bit_positions:
        base = base[(base >> b) & 1 == 0]
    offsets = np.zeros(1 << k, dtype=np.int64)
    for local in range(1 << k):
        off = 0
        for j, b in enumerate(bit_positions):
            if (local >> (k - 1 - j)) & 1:
                off |= 1 << b
        offsets[local] = off
    gathered = amps[base[None, :] + offsets[:, None]]
    amps[base[None, :] + offsets[:, None]] = u @ gathered
