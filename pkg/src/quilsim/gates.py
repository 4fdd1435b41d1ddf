"""Standard gate catalog, user-defined gates, and Kronecker products.

Multi-qubit control gates list control qubit(s) first, target(s) last, and
their matrices are stored explicitly so the catalog is self-checking against
the unitarity validator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

UNITARITY_TOL = 1e-9
TENSOR_DIM_CAP = 1 << 10


class GateError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GateDef:
    name: str
    arity: int
    matrix: np.ndarray
    param: float | None = None

    def __post_init__(self):
        if self.matrix.shape != (1 << self.arity, 1 << self.arity):
            raise GateError(
                f"{self.name}: matrix shape {self.matrix.shape} is not 2^{self.arity} square"
            )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GateDef)
            and self.name == other.name
            and self.arity == other.arity
            and self.param == other.param
            and np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self) -> int:
        return hash((self.name, self.arity, self.param))


def is_unitary(matrix: np.ndarray, tol: float = UNITARITY_TOL) -> bool:
    d = matrix.shape[0]
    return bool(np.max(np.abs(matrix @ matrix.conj().T - np.eye(d))) <= tol)


def _m(rows) -> np.ndarray:
    return np.array(rows, dtype=np.complex128)


def _phase_diag(dim: int, hot: int, phi: float) -> np.ndarray:
    d = np.ones(dim, dtype=np.complex128)
    d[hot] = np.exp(1j * phi)
    return np.diag(d)


_FIXED = {
    "I": _m([[1, 0], [0, 1]]),
    "X": _m([[0, 1], [1, 0]]),
    "Y": _m([[0, -1j], [1j, 0]]),
    "Z": _m([[1, 0], [0, -1]]),
    "H": _m([[1, 1], [1, -1]]) / math.sqrt(2),
    "S": _m([[1, 0], [0, 1j]]),
    "T": _m([[1, 0], [0, np.exp(1j * math.pi / 4)]]),
    "CNOT": _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    "CZ": _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]),
    "SWAP": _m([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]),
}

# CSWAP: control is the high-order qubit; swap the last two.
_cswap = np.eye(8, dtype=np.complex128)
_cswap[[5, 6]] = _cswap[[6, 5]]
_FIXED["CSWAP"] = _cswap

# CCNOT: X on the target exactly for |110> and |111>.
_ccnot = np.eye(8, dtype=np.complex128)
_ccnot[[6, 7]] = _ccnot[[7, 6]]
_FIXED["CCNOT"] = _ccnot

_PARAMETRIC = {
    "PHASE": lambda phi: _phase_diag(2, 1, phi),
    "RX": lambda th: _m(
        [
            [math.cos(th / 2), -1j * math.sin(th / 2)],
            [-1j * math.sin(th / 2), math.cos(th / 2)],
        ]
    ),
    "RY": lambda th: _m(
        [
            [math.cos(th / 2), -math.sin(th / 2)],
            [math.sin(th / 2), math.cos(th / 2)],
        ]
    ),
    "RZ": lambda th: np.diag(
        np.array([np.exp(-1j * th / 2), np.exp(1j * th / 2)], dtype=np.complex128)
    ),
    "CPHASE": lambda phi: _phase_diag(4, 3, phi),
    "CPHASE00": lambda phi: _phase_diag(4, 0, phi),
    "CPHASE01": lambda phi: _phase_diag(4, 1, phi),
    "CPHASE10": lambda phi: _phase_diag(4, 2, phi),
}

STANDARD_GATE_NAMES = frozenset(_FIXED) | frozenset(_PARAMETRIC)


def gate_arity(name: str) -> int:
    if name in _FIXED:
        return _FIXED[name].shape[0].bit_length() - 1
    if name in _PARAMETRIC:
        return 2 if name.startswith("CPHASE") else 1
    raise GateError(f"unknown gate {name!r}")


def is_parametric(name: str) -> bool:
    return name in _PARAMETRIC


def standard_gate(name: str, param: float | None = None) -> GateDef:
    if name in _FIXED:
        if param is not None:
            raise GateError(f"{name} takes no parameter")
        return GateDef(name, gate_arity(name), _FIXED[name])
    if name in _PARAMETRIC:
        if param is None:
            raise GateError(f"{name} requires an angle parameter")
        return GateDef(name, gate_arity(name), _PARAMETRIC[name](param), param)
    raise GateError(f"unknown gate {name!r}")


def def_gate(name: str, matrix: np.ndarray) -> GateDef:
    """Validate and wrap a user-supplied unitary."""
    if name in STANDARD_GATE_NAMES:
        raise GateError(f"{name!r} collides with a standard gate")
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise GateError(f"{name}: matrix is not square")
    dim = matrix.shape[0]
    if dim < 2 or dim & (dim - 1):
        raise GateError(f"{name}: dimension {dim} is not a power of two >= 2")
    if not is_unitary(matrix):
        raise GateError(f"{name}: matrix is not unitary (tol {UNITARITY_TOL})")
    return GateDef(name, dim.bit_length() - 1, matrix)


def tensor(a: GateDef, b: GateDef) -> GateDef:
    if a.matrix.shape[0] > TENSOR_DIM_CAP or b.matrix.shape[0] > TENSOR_DIM_CAP:
        raise GateError(f"tensor operand exceeds dense cap {TENSOR_DIM_CAP}")
    return GateDef(
        f"({a.name}(x){b.name})", a.arity + b.arity, np.kron(a.matrix, b.matrix)
    )
