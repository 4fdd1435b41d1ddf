"""Independent dense-matrix oracles used to check the simulator.

Everything here is built with plain index arithmetic and numpy only, so the
tests do not trust the kernel code they are checking.
"""

from __future__ import annotations

import numpy as np

from quilsim.program import DefGateDecl, GateApp, Measure, Program
from quilsim.statevector import StateVector


def embed(u: np.ndarray, qubits: list[int], n: int) -> np.ndarray:
    """Expand a 2^k unitary on the listed qubits (first = high-order bit of the
    gate's local index; qubit 0 = MSB of the flat index) to the full 2^n space."""
    k = len(qubits)
    bits = [n - 1 - q for q in qubits]
    rest = [b for b in range(n) if b not in bits]
    dim = 1 << n
    full = np.zeros((dim, dim), dtype=np.complex128)
    for rest_val in range(1 << len(rest)):
        base = 0
        for pos, b in enumerate(rest):
            if (rest_val >> pos) & 1:
                base |= 1 << b
        for r in range(1 << k):
            ri = base
            for t in range(k):
                if (r >> (k - 1 - t)) & 1:
                    ri |= 1 << bits[t]
            for c in range(1 << k):
                ci = base
                for t in range(k):
                    if (c >> (k - 1 - t)) & 1:
                        ci |= 1 << bits[t]
                full[ri, ci] = u[r, c]
    return full


def program_matrix(p: Program, n: int) -> np.ndarray:
    """Total unitary of a measurement-free program on n qubits."""
    total = np.eye(1 << n, dtype=np.complex128)
    for ins in p.instructions:
        if isinstance(ins, DefGateDecl):
            continue
        if isinstance(ins, Measure):
            raise ValueError("program_matrix needs a measurement-free program")
        assert isinstance(ins, GateApp)
        total = embed(p.resolve_matrix(ins), list(ins.qubits), n) @ total
    return total


def dft_matrix(dim: int) -> np.ndarray:
    """Normalized DFT with the positive-exponent convention."""
    j, k = np.meshgrid(np.arange(dim), np.arange(dim), indexing="ij")
    return np.exp(2j * np.pi * j * k / dim) / np.sqrt(dim)


def bit_reversal(m: int) -> np.ndarray:
    """Permutation matrix sending index i to its m-bit reversal."""
    dim = 1 << m
    perm = np.zeros((dim, dim), dtype=np.complex128)
    for i in range(dim):
        rev = int(format(i, f"0{m}b")[::-1], 2)
        perm[rev, i] = 1.0
    return perm


def random_program(rng, max_insts: int = 50) -> Program:
    """Random valid program exercising every instruction kind and angle shape."""
    import math

    from quilsim.gates import STANDARD_GATE_NAMES, def_gate, gate_arity, is_parametric
    from quilsim.program import gate_app

    names = sorted(STANDARD_GATE_NAMES)
    p = Program()
    declared: list[str] = []
    n_qubits = int(rng.integers(3, 8))
    for i in range(int(rng.integers(1, max_insts + 1))):
        kind = rng.integers(0, 10)
        if kind == 0:
            name = f"U{len(declared)}"
            phi = float(rng.uniform(-math.pi, math.pi))
            g = def_gate(name, np.diag([1.0, np.exp(1j * phi)]))
            p = p.inst(DefGateDecl(g))
            declared.append(name)
            continue
        if kind == 1:
            q = int(rng.integers(0, n_qubits))
            creg = int(rng.integers(0, 8)) if rng.integers(0, 2) else None
            p = p.inst(Measure(q, creg))
            continue
        if kind == 2 and declared:
            name = declared[int(rng.integers(0, len(declared)))]
            q = int(rng.integers(0, n_qubits))
            p = p.inst(gate_app(name, q))
            continue
        name = names[int(rng.integers(0, len(names)))]
        arity = gate_arity(name)
        qubits = [int(q) for q in rng.choice(n_qubits, size=arity, replace=False)]
        param = None
        if is_parametric(name):
            style = rng.integers(0, 3)
            if style == 0:
                param = float(rng.uniform(-2 * math.pi, 2 * math.pi))
            elif style == 1:
                param = math.pi / int(rng.integers(1, 9))
            else:
                param = -int(rng.integers(1, 6)) * math.pi / int(rng.integers(1, 9))
        p = p.inst(gate_app(name, *qubits, param=param))
    return p


def basis_state(n: int, index: int) -> StateVector:
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(n, amps)
