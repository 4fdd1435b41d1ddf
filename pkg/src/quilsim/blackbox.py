"""Oracle generators: each returns a program fragment computing
|x>|a> -> |x>|a xor f(x)> plus the hidden classical f for verification.

Synthesis is per-marked-input: every input x with a 1-output contributes an
X-basis transform, a controlled write into the output register, and the
inverse transform. Work ancillas are restored to |0> on every basis input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .composite import ControlSpec, n_control_u, x_transformation
from .program import Program, gate_app
from .rng import Rng

Bits = tuple[int, ...]


class BlackboxError(ValueError):
    pass


class DeutschKind(str, Enum):
    CONST0 = "const0"
    CONST1 = "const1"
    BALANCED_ID = "balanced-id"
    BALANCED_FLIP = "balanced-flip"


@dataclass(frozen=True)
class DeutschHidden:
    kind: DeutschKind


@dataclass(frozen=True)
class DJHidden:
    n: int
    constant: int | None = None          # 0/1 for constant f
    ones: frozenset[Bits] = frozenset()  # inputs mapping to 1 for balanced f

    @property
    def is_constant(self) -> bool:
        return self.constant is not None


@dataclass(frozen=True)
class BVHidden:
    a: Bits
    b: int


@dataclass(frozen=True)
class SimonHidden:
    s: Bits
    table: dict[Bits, Bits] = field(hash=False, compare=False, default_factory=dict)


HiddenSpec = DeutschHidden | DJHidden | BVHidden | SimonHidden


@dataclass
class BlackboxInstance:
    fragment: Program
    main_qubits: list[int]
    ancilla_out: list[int]
    work_ancillas: list[int]
    hidden: HiddenSpec


def _as_bits(x: Sequence[int]) -> Bits:
    return tuple(int(b) for b in x)


def eval_f(hidden: HiddenSpec, x: Sequence[int]) -> Bits:
    """Classical evaluation of the hidden function (1 bit, or n bits for Simon)."""
    x = _as_bits(x)
    if isinstance(hidden, DeutschHidden):
        if len(x) != 1:
            raise BlackboxError("Deutsch f takes a single bit")
        return {
            DeutschKind.CONST0: (0,),
            DeutschKind.CONST1: (1,),
            DeutschKind.BALANCED_ID: (x[0],),
            DeutschKind.BALANCED_FLIP: (1 - x[0],),
        }[hidden.kind]
    if isinstance(hidden, DJHidden):
        if len(x) != hidden.n:
            raise BlackboxError(f"expected {hidden.n} bits, got {len(x)}")
        if hidden.is_constant:
            return (hidden.constant,)
        return (1 if x in hidden.ones else 0,)
    if isinstance(hidden, BVHidden):
        if len(x) != len(hidden.a):
            raise BlackboxError(f"expected {len(hidden.a)} bits, got {len(x)}")
        dot = sum(ai * xi for ai, xi in zip(hidden.a, x)) % 2
        return ((dot + hidden.b) % 2,)
    if isinstance(hidden, SimonHidden):
        if len(x) != len(hidden.s):
            raise BlackboxError(f"expected {len(hidden.s)} bits, got {len(x)}")
        return hidden.table[x]
    raise BlackboxError(f"unknown hidden spec {hidden!r}")


def deutsch_g(kind: DeutschKind) -> BlackboxInstance:
    """The four 2-qubit Deutsch oracles (input qubit 0, output ancilla qubit 1)."""
    p = Program()
    if kind is DeutschKind.CONST0:
        p = p.inst(gate_app("I", 0), gate_app("I", 1))
    elif kind is DeutschKind.CONST1:
        p = p.inst(gate_app("I", 0), gate_app("X", 1))
    elif kind is DeutschKind.BALANCED_ID:
        p = p.inst(gate_app("CNOT", 0, 1))
    else:
        p = p.inst(gate_app("X", 0), gate_app("CNOT", 0, 1), gate_app("X", 0))
    return BlackboxInstance(p, [0], [1], [], DeutschHidden(kind))


def _all_inputs(n: int) -> list[Bits]:
    return [tuple((i >> (n - 1 - j)) & 1 for j in range(n)) for i in range(1 << n)]


def _write_one(p: Program, main: list[int], out_actions: list[tuple], work: list[int], x: Bits) -> Program:
    p = x_transformation(p, main, x)
    p = n_control_u(p, ControlSpec(list(main), list(work), out_actions))
    return x_transformation(p, main, x)


def dj_blackbox(n: int, kind: str, rng: Rng) -> BlackboxInstance:
    """Deutsch-Jozsa oracle: constant-random or balanced-random on n inputs."""
    if n < 2:
        raise BlackboxError("Deutsch-Jozsa needs n >= 2")
    main = list(range(n))
    out = n
    work = list(range(n + 1, n + 1 + max(n - 2, 0)))
    p = Program()
    if kind == "constant-random":
        bit = rng.randint(2)
        if bit == 1:
            p = p.inst(gate_app("X", out))
        else:
            p = p.inst(gate_app("I", out))
        hidden: HiddenSpec = DJHidden(n, constant=bit)
    elif kind == "balanced-random":
        inputs = _all_inputs(n)
        rng.shuffle(inputs)
        ones = frozenset(inputs[: 1 << (n - 1)])
        for x in sorted(ones):
            p = _write_one(p, main, [("X", out)], work, x)
        hidden = DJHidden(n, ones=ones)
    else:
        raise BlackboxError(f"unknown DJ kind {kind!r}")
    return BlackboxInstance(p, main, [out], work, hidden)


def bv_blackbox(n: int, a: Sequence[int], b: int) -> BlackboxInstance:
    """Bernstein-Vazirani oracle for f(x) = a.x xor b; no work ancillas."""
    a = _as_bits(a)
    if len(a) != n:
        raise BlackboxError(f"key a has length {len(a)}, expected {n}")
    main = list(range(n))
    out = n
    p = Program()
    insts = [gate_app("CNOT", i, out) for i in range(n) if a[i] == 1]
    if b == 1:
        insts.append(gate_app("X", out))
    if not insts:
        insts.append(gate_app("I", out))
    p = p.inst(insts)
    return BlackboxInstance(p, main, [out], [], BVHidden(a, int(b)))


def make_simon_table(n: int, s: Sequence[int], rng: Rng) -> dict[Bits, Bits]:
    """Random two-to-one table keyed by s (a permutation when s is all zeros)."""
    s = _as_bits(s)
    inputs = _all_inputs(n)
    outputs = list(inputs)
    rng.shuffle(outputs)
    table: dict[Bits, Bits] = {}
    if all(b == 0 for b in s):
        for x, y in zip(inputs, outputs):
            table[x] = y
        return table
    k = 0
    for x in inputs:
        if x in table:
            continue
        partner = tuple(xi ^ si for xi, si in zip(x, s))
        table[x] = outputs[k]
        table[partner] = outputs[k]
        k += 1
    return table


def simon_fragment(n: int, table: dict[Bits, Bits]) -> Program:
    main = list(range(n))
    out = list(range(n, 2 * n))
    work = list(range(2 * n, 2 * n + max(n - 2, 0)))
    p = Program()
    p = p.inst(gate_app("I", out[-1]))  # pin the register width even if f == 0
    for x in sorted(table):
        actions = [("X", out[j]) for j in range(n) if table[x][j] == 1]
        if actions:
            p = _write_one(p, main, actions, work, x)
    return p


def simon_blackbox(n: int, s: Sequence[int], rng: Rng) -> BlackboxInstance:
    s = _as_bits(s)
    if len(s) != n:
        raise BlackboxError(f"key s has length {len(s)}, expected {n}")
    table = make_simon_table(n, s, rng)
    p = simon_fragment(n, table)
    main = list(range(n))
    out = list(range(n, 2 * n))
    work = list(range(2 * n, 2 * n + max(n - 2, 0)))
    return BlackboxInstance(p, main, out, work, SimonHidden(s, table))
