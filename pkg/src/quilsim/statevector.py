"""Dense complex statevector with MSB-first qubit indexing.

Qubit 0 is the leftmost bit of a ket label, i.e. bit position n-1 of the
flat amplitude index. `|q0 q1 ... q_{n-1}>` therefore reads exactly like the
printed label.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import kernels

MAX_QUBITS = 24
NORM_DRIFT_TOL = 1e-6


class InvalidStateError(ValueError):
    """Raised for malformed state construction or indexing."""


class NormDriftError(RuntimeError):
    """Internal error: the state norm drifted by more than NORM_DRIFT_TOL."""


class StateVector:
    """2**n complex amplitudes; operations return new states."""

    __slots__ = ("n_qubits", "amps")

    def __init__(self, n_qubits: int, amps: np.ndarray):
        if amps.shape != (1 << n_qubits,):
            raise InvalidStateError(
                f"expected {1 << n_qubits} amplitudes, got {amps.shape}"
            )
        if not np.all(np.isfinite(amps)):
            raise InvalidStateError("non-finite amplitude")
        self.n_qubits = n_qubits
        self.amps = amps

    def bit_position(self, qubit: int) -> int:
        """Flat-index bit position of a qubit (MSB-first convention)."""
        return self.n_qubits - 1 - qubit

    def copy(self) -> "StateVector":
        return StateVector(self.n_qubits, self.amps.copy())

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amps) ** 2

    def to_json_dict(self) -> dict:
        return {
            "n": self.n_qubits,
            "amps": [[float(a.real), float(a.imag)] for a in self.amps],
        }

    @staticmethod
    def from_json_dict(d: dict) -> "StateVector":
        amps = np.array([complex(re, im) for re, im in d["amps"]], dtype=np.complex128)
        return StateVector(int(d["n"]), amps)

    def __repr__(self) -> str:
        return f"StateVector(n_qubits={self.n_qubits})"


def new_zero_state(n: int) -> StateVector:
    if n < 1 or n > MAX_QUBITS:
        raise InvalidStateError(f"qubit count must be in [1, {MAX_QUBITS}], got {n}")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(n, amps)


def label_to_index(bits: Sequence[int], n_qubits: int) -> int:
    if len(bits) != n_qubits:
        raise InvalidStateError(
            f"label length {len(bits)} does not match {n_qubits} qubits"
        )
    index = 0
    for b in bits:
        if b in ("0", "1"):
            b = int(b)
        if b not in (0, 1):
            raise InvalidStateError(f"label bit must be 0 or 1, got {b}")
        index = (index << 1) | b
    return index


def index_to_label(index: int, n_qubits: int) -> tuple[int, ...]:
    return tuple((index >> (n_qubits - 1 - j)) & 1 for j in range(n_qubits))


def amplitude(state: StateVector, label: Sequence[int]) -> complex:
    return complex(state.amps[label_to_index(label, state.n_qubits)])


def _check_norm(amps: np.ndarray) -> None:
    drift = abs(kernels.norm_sq(amps) - 1.0)
    if drift > NORM_DRIFT_TOL:
        raise NormDriftError(f"state norm drifted by {drift:.3e}")


def apply_unitary(
    state: StateVector, matrix: np.ndarray, qubits: Sequence[int]
) -> StateVector:
    """Apply a 2**k unitary to the listed qubits (first listed = high-order bit)."""
    k = len(qubits)
    if matrix.shape != (1 << k, 1 << k):
        raise InvalidStateError(
            f"matrix of shape {matrix.shape} does not act on {k} qubits"
        )
    if len(set(qubits)) != k:
        raise InvalidStateError(f"duplicate qubit in {list(qubits)}")
    for q in qubits:
        if q < 0 or q >= state.n_qubits:
            raise InvalidStateError(f"qubit {q} out of range for {state.n_qubits} qubits")

    amps = state.amps.copy()
    u = np.ascontiguousarray(matrix, dtype=np.complex128)
    bits = [state.bit_position(q) for q in qubits]
    if k == 1:
        kernels.apply_1q(amps, bits[0], u)
    elif k == 2:
        kernels.apply_2q(amps, bits[0], bits[1], u)
    elif k == 3:
        kernels.apply_3q(amps, bits[0], bits[1], bits[2], u)
    else:
        kernels.apply_dense(amps, bits, u)
    _check_norm(amps)
    return StateVector(state.n_qubits, amps)


def approx_eq_up_to_global_phase(
    a: StateVector, b: StateVector, tol: float = 1e-9
) -> bool:
    """True iff a == c*b for some unit complex c, within tol in 2-norm."""
    if a.n_qubits != b.n_qubits:
        raise InvalidStateError("states have different qubit counts")
    pivot = int(np.argmax(np.abs(b.amps)))
    if abs(b.amps[pivot]) == 0.0:
        return bool(np.linalg.norm(a.amps) <= tol)
    phase = a.amps[pivot] / b.amps[pivot]
    mag = abs(phase)
    phase = phase / mag if mag > 0 else 1.0
    return bool(np.linalg.norm(a.amps - phase * b.amps) <= tol)
