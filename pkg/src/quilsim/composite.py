"""Multi-gate building blocks built from the standard catalog only.

The N-controlled constructions use the CCNOT ladder: pairs of controls are
condensed onto ancillas until two qubits (the last control and the last
ancilla) hold the full condition, every action is applied double-controlled
on that pair, and the ladder is uncomputed so all ancillas return to |0>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .program import GateApp, Program, ProgramError, gate_app


class CompositeError(ValueError):
    pass


ACTION_KINDS = {"X", "Z", "PHASE", "SWAP"}


@dataclass
class ControlSpec:
    controls: list[int]
    ancillas: list[int]
    actions: list[tuple] = field(default_factory=list)

    def validate(self) -> None:
        if not self.controls:
            raise CompositeError("at least one control qubit required")
        targets: list[int] = []
        for a in self.actions:
            kind = a[0]
            if kind not in ACTION_KINDS:
                raise CompositeError(f"unsupported action kind {kind!r}")
            if kind == "SWAP":
                targets.extend(a[1:3])
            else:
                targets.append(a[1])
        used = self.controls + self.ancillas
        if len(set(used)) != len(used):
            raise CompositeError("controls and ancillas overlap")
        if set(targets) & set(used):
            raise CompositeError("action target overlaps controls/ancillas")
        need = max(len(self.controls) - 2, 0)
        if len(self.ancillas) < need:
            raise CompositeError(
                f"{len(self.controls)} controls need {need} ancillas, got {len(self.ancillas)}"
            )


def x_transformation(p: Program, qubits: Sequence[int], pattern: Sequence[int]) -> Program:
    """X every qubit whose pattern bit is 0, so the pattern maps to all-ones."""
    if len(qubits) != len(pattern):
        raise CompositeError("pattern length must match qubit list")
    return p.inst([gate_app("X", q) for q, bit in zip(qubits, pattern) if bit == 0])


def _ladder(controls: Sequence[int], ancillas: Sequence[int]) -> tuple[list[GateApp], tuple[int, int]]:
    """CCNOT rungs condensing len(controls) >= 3 controls; returns (rungs, final pair)."""
    rungs = [gate_app("CCNOT", controls[0], controls[1], ancillas[0])]
    for k in range(2, len(controls) - 1):
        rungs.append(gate_app("CCNOT", controls[k], ancillas[k - 2], ancillas[k - 1]))
    return rungs, (controls[-1], ancillas[len(controls) - 3])


def _cc_phase(c1: int, c2: int, t: int, phi: float) -> list[GateApp]:
    """Doubly controlled PHASE(phi) from CPHASE and CNOT (exact)."""
    half = phi / 2.0
    return [
        gate_app("CPHASE", c2, t, param=half),
        gate_app("CNOT", c1, c2),
        gate_app("CPHASE", c2, t, param=-half),
        gate_app("CNOT", c1, c2),
        gate_app("CPHASE", c1, t, param=half),
    ]


def _ccc_z(a: int, b: int, c: int, t: int) -> list[GateApp]:
    """Triply controlled Z via the parity phase ladder, CPHASE(+-pi/4) only."""
    q = math.pi / 4.0
    return [
        gate_app("CPHASE", a, t, param=q),
        gate_app("CPHASE", b, t, param=q),
        gate_app("CPHASE", c, t, param=q),
        gate_app("CNOT", a, b),          # b <- a^b
        gate_app("CPHASE", b, t, param=-q),
        gate_app("CNOT", a, c),          # c <- a^c
        gate_app("CPHASE", c, t, param=-q),
        gate_app("CNOT", b, c),          # c <- b^c
        gate_app("CPHASE", c, t, param=-q),
        gate_app("CNOT", a, c),          # c <- a^b^c
        gate_app("CPHASE", c, t, param=q),
        # uncompute the parities
        gate_app("CNOT", a, c),
        gate_app("CNOT", b, c),
        gate_app("CNOT", a, c),
        gate_app("CNOT", a, b),
    ]


def _ccc_not(a: int, b: int, c: int, t: int) -> list[GateApp]:
    return [gate_app("H", t), *_ccc_z(a, b, c, t), gate_app("H", t)]


def _pair_controlled_action(pair: tuple[int, int], action: tuple) -> list[GateApp]:
    c1, c2 = pair
    kind = action[0]
    if kind == "X":
        return [gate_app("CCNOT", c1, c2, action[1])]
    if kind == "Z":
        return _cc_phase(c1, c2, action[1], math.pi)
    if kind == "PHASE":
        return _cc_phase(c1, c2, action[1], action[2])
    # SWAP: Fredkin with a doubled control, via CNOT conjugation
    t1, t2 = action[1], action[2]
    return [
        gate_app("CNOT", t2, t1),
        *_ccc_not(c1, c2, t1, t2),
        gate_app("CNOT", t2, t1),
    ]


def _single_controlled_action(c: int, action: tuple) -> GateApp:
    kind = action[0]
    if kind == "X":
        return gate_app("CNOT", c, action[1])
    if kind == "Z":
        return gate_app("CZ", c, action[1])
    if kind == "PHASE":
        return gate_app("CPHASE", c, action[1], param=action[2])
    return gate_app("CSWAP", c, action[1], action[2])


def n_control_u(p: Program, spec: ControlSpec) -> Program:
    spec.validate()
    n = len(spec.controls)
    if n == 1:
        return p.inst([_single_controlled_action(spec.controls[0], a) for a in spec.actions])
    if n == 2:
        pair = (spec.controls[0], spec.controls[1])
        body: list[GateApp] = []
        for a in spec.actions:
            body.extend(_pair_controlled_action(pair, a))
        return p.inst(body)
    rungs, pair = _ladder(spec.controls, spec.ancillas)
    body = list(rungs)
    for a in spec.actions:
        body.extend(_pair_controlled_action(pair, a))
    body.extend(reversed(rungs))
    return p.inst(body)


def n_not(p: Program, controls: Sequence[int], target: int, ancillas: Sequence[int]) -> Program:
    """X on target exactly when every control is 1; ancillas come back to |0>."""
    n = len(controls)
    if target in controls or target in ancillas:
        raise CompositeError("target overlaps controls/ancillas")
    if len(set(list(controls) + list(ancillas))) != n + len(ancillas):
        raise CompositeError("controls and ancillas overlap")
    if n == 1:
        return p.inst(gate_app("CNOT", controls[0], target))
    if n == 2:
        return p.inst(gate_app("CCNOT", controls[0], controls[1], target))
    if len(ancillas) < n - 2:
        raise CompositeError(f"{n} controls need {n - 2} ancillas, got {len(ancillas)}")
    rungs, pair = _ladder(controls, ancillas)
    return p.inst(
        [*rungs, gate_app("CCNOT", pair[0], pair[1], target), *reversed(rungs)]
    )


def hadamard_layer(p: Program, qubits: Sequence[int]) -> Program:
    return p.inst([gate_app("H", q) for q in qubits])


def qft(p: Program, qubits: Sequence[int]) -> Program:
    """QFT circuit without the terminal swap layer (DFT up to bit reversal)."""
    if not qubits:
        raise CompositeError("qft needs at least one qubit")
    body: list[GateApp] = []
    m = len(qubits)
    for j in range(m):
        body.append(gate_app("H", qubits[j]))
        for k in range(j + 1, m):
            body.append(
                gate_app("CPHASE", qubits[k], qubits[j], param=math.pi / (1 << (k - j)))
            )
    return p.inst(body)


def qft_dagger(p: Program, qubits: Sequence[int]) -> Program:
    """Mirror-image of qft with negated phases."""
    if not qubits:
        raise CompositeError("qft needs at least one qubit")
    body: list[GateApp] = []
    m = len(qubits)
    for j in range(m):
        body.append(gate_app("H", qubits[j]))
        for k in range(j + 1, m):
            body.append(
                gate_app("CPHASE", qubits[k], qubits[j], param=math.pi / (1 << (k - j)))
            )
    mirrored = [
        GateApp(g.name, -g.param if g.param is not None else None, g.qubits)
        for g in reversed(body)
    ]
    return p.inst(mirrored)
