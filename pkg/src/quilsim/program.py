"""Instruction-list program model with value-semantic editing.

Programs are immutable from the caller's view: inst/pop/slice/concat return
new Program objects, so `+`-style composition has no aliasing surprises.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from . import gates
from .gates import GateDef, GateError


@dataclass(frozen=True)
class GateApp:
    name: str
    param: float | None
    qubits: tuple[int, ...]

    def __post_init__(self):
        if any(q < 0 for q in self.qubits):
            raise ProgramError(f"negative qubit index in {self}")


@dataclass(frozen=True)
class Measure:
    qubit: int
    creg: int | None = None

    def __post_init__(self):
        if self.qubit < 0:
            raise ProgramError("negative qubit index in MEASURE")
        if self.creg is not None and self.creg < 0:
            raise ProgramError("negative classical register index in MEASURE")


@dataclass(frozen=True)
class DefGateDecl:
    gate: GateDef


Instruction = Union[GateApp, Measure, DefGateDecl]


class ProgramError(ValueError):
    pass


def gate_app(name: str, *qubits: int, param: float | None = None) -> GateApp:
    return GateApp(name, param, tuple(qubits))


class Program:
    """Ordered instructions plus the table of declared (non-standard) gates."""

    __slots__ = ("instructions", "gate_table")

    def __init__(
        self,
        instructions: Iterable[Instruction] = (),
        gate_table: dict[str, GateDef] | None = None,
    ):
        self.instructions: tuple[Instruction, ...] = tuple(instructions)
        self.gate_table: dict[str, GateDef] = dict(gate_table or {})
        for ins in self.instructions:
            self._validate(ins)

    def _validate(self, ins: Instruction) -> None:
        if isinstance(ins, DefGateDecl):
            name = ins.gate.name
            if name in gates.STANDARD_GATE_NAMES:
                raise ProgramError(f"DEFGATE {name} collides with a standard gate")
            return
        if isinstance(ins, GateApp):
            arity, parametric = self._resolve_signature(ins.name)
            if len(ins.qubits) != arity:
                raise ProgramError(
                    f"{ins.name} expects {arity} qubits, got {len(ins.qubits)}"
                )
            if parametric != (ins.param is not None):
                want = "an angle" if parametric else "no angle"
                raise ProgramError(f"{ins.name} takes {want}")
            if len(set(ins.qubits)) != len(ins.qubits):
                raise ProgramError(f"duplicate qubit in {ins.name} {ins.qubits}")

    def _resolve_signature(self, name: str) -> tuple[int, bool]:
        if name in gates.STANDARD_GATE_NAMES:
            return gates.gate_arity(name), gates.is_parametric(name)
        if name in self.gate_table:
            return self.gate_table[name].arity, False
        raise ProgramError(f"unknown gate {name!r}")

    def resolve_matrix(self, ins: GateApp):
        if ins.name in gates.STANDARD_GATE_NAMES:
            return gates.standard_gate(ins.name, ins.param).matrix
        return self.gate_table[ins.name].matrix

    # -- editing -----------------------------------------------------------

    def inst(self, *items: Instruction | Iterable[Instruction]) -> "Program":
        """Append instructions; accepts single items and iterables."""
        new: list[Instruction] = list(self.instructions)
        table = dict(self.gate_table)
        stack: list = list(items)
        flat: list[Instruction] = []
        for item in stack:
            if isinstance(item, (GateApp, Measure, DefGateDecl)):
                flat.append(item)
            else:
                flat.extend(item)
        for ins in flat:
            if isinstance(ins, DefGateDecl):
                _merge_gate(table, ins.gate)
            new.append(ins)
        return Program(new, table)

    def pop(self) -> tuple["Program", Instruction]:
        if not self.instructions:
            raise ProgramError("pop from empty program")
        return Program(self.instructions[:-1], self.gate_table), self.instructions[-1]

    def slice(self, start: int, stop: int) -> "Program":
        n = len(self.instructions)
        if not (0 <= start <= stop <= n):
            raise ProgramError(f"slice [{start}, {stop}) out of range for length {n}")
        return Program(self.instructions[start:stop], self.gate_table)

    def concat(self, other: "Program") -> "Program":
        table = dict(self.gate_table)
        for g in other.gate_table.values():
            _merge_gate(table, g)
        return Program(self.instructions + other.instructions, table)

    def __add__(self, other: "Program") -> "Program":
        return self.concat(other)

    def measure(self, qubit: int, creg: int | None = None) -> "Program":
        return self.inst(Measure(qubit, creg))

    def measure_all(
        self, pairs: Iterable[tuple[int, int]] | None = None
    ) -> "Program":
        if pairs is None:
            pairs = [(q, q) for q in range(self.n_qubits)]
        return self.inst([Measure(q, c) for q, c in pairs])

    # -- inspection --------------------------------------------------------

    @property
    def n_qubits(self) -> int:
        top = -1
        for ins in self.instructions:
            if isinstance(ins, GateApp):
                top = max(top, max(ins.qubits))
            elif isinstance(ins, Measure):
                top = max(top, ins.qubit)
        return top + 1

    def __len__(self) -> int:
        return len(self.instructions)

    def __iter__(self) -> Iterator[Instruction]:
        return iter(self.instructions)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Program)
            and self.instructions == other.instructions
        )

    def __repr__(self) -> str:
        return f"Program({len(self.instructions)} instructions)"


def _merge_gate(table: dict[str, GateDef], g: GateDef) -> None:
    import numpy as np

    if g.name in table:
        if not np.allclose(table[g.name].matrix, g.matrix, atol=1e-12):
            raise ProgramError(f"DEFGATE {g.name} redefined with a different matrix")
        return
    table[g.name] = g


def remove_at(p: Program, i: int) -> Program:
    """Drop instruction i by splitting and rejoining."""
    return p.slice(0, i).concat(p.slice(i + 1, len(p)))
