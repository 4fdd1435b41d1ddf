"""Program execution: wavefunction inspection, collapse, and multi-trial runs.

Measurements always execute (and collapse) inside wavefunction(), using the
seeded RNG, so the displayed state matches what a post-measurement system
looks like. Each trial of run() gets an independent RNG substream.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .program import DefGateDecl, GateApp, Measure, Program, ProgramError
from .rng import Rng
from .statevector import StateVector, apply_unitary, new_zero_state

DEFAULT_PRECISION = 5


class SimulationError(RuntimeError):
    pass


@dataclass
class DisplayOptions:
    precision: int = DEFAULT_PRECISION
    column: bool = False
    systems: list[int] | None = None
    show_systems: list[bool] | None = None

    def validate(self, n_qubits: int) -> None:
        if self.systems is not None:
            if any(s <= 0 for s in self.systems):
                raise SimulationError("systems entries must be positive")
            if sum(self.systems) != n_qubits:
                raise SimulationError(
                    f"systems {self.systems} does not sum to {n_qubits} qubits"
                )
        if self.show_systems is not None:
            if self.systems is None:
                raise SimulationError("show_systems requires systems")
            if len(self.show_systems) != len(self.systems):
                raise SimulationError("show_systems length must match systems")


@dataclass
class TrialResults:
    rows: list[list[int]]
    histogram: dict[str, int] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "trials": len(self.rows),
            "rows": self.rows,
            "histogram": dict(self.histogram),
        }


def measure_collapse(
    state: StateVector, qubit: int, rng: Rng
) -> tuple[int, StateVector]:
    """Sample one qubit (one RNG draw), collapse, renormalize."""
    from . import kernels

    if qubit < 0 or qubit >= state.n_qubits:
        raise SimulationError(f"qubit {qubit} out of range")
    b = state.bit_position(qubit)
    amps = state.amps.copy()
    p1 = kernels.branch_probability(amps, b)
    p0 = kernels.norm_sq(amps) - p1
    if p0 < 1e-12 and p1 < 1e-12:
        raise SimulationError("state norm vanished before measurement")
    outcome = 1 if rng.random() < p1 else 0
    kernels.collapse(amps, b, outcome, p1 if outcome else p0)
    return outcome, StateVector(state.n_qubits, amps)


def apply_fragment(
    state: StateVector, p: Program, rng: Rng, creg: dict[int, int] | None = None
) -> StateVector:
    """Execute every instruction of p against an existing state."""
    for ins in p.instructions:
        if isinstance(ins, DefGateDecl):
            continue
        if isinstance(ins, GateApp):
            state = apply_unitary(state, p.resolve_matrix(ins), ins.qubits)
        else:
            bit, state = measure_collapse(state, ins.qubit, rng)
            if creg is not None and ins.creg is not None:
                creg[ins.creg] = bit
    return state


def execute(p: Program, rng: Rng) -> tuple[StateVector, dict[int, int]]:
    if p.n_qubits == 0:
        raise ProgramError("program references no qubits")
    creg: dict[int, int] = {}
    state = apply_fragment(new_zero_state(p.n_qubits), p, rng, creg)
    return state, creg


# -- rendering ---------------------------------------------------------------


def _format_amp(z: complex, precision: int) -> str:
    re_ = round(z.real, precision)
    im = round(z.imag, precision)
    fmt = f"{{:.{precision}g}}"

    def num(x: float) -> str:
        s = fmt.format(x)
        return s

    if im == 0.0:
        return num(re_)
    if re_ == 0.0:
        return f"{num(im)}i"
    sign = "+" if im > 0 else "-"
    return f"({num(re_)}{sign}{num(abs(im))}i)"


def render_wavefunction(state: StateVector, opts: DisplayOptions) -> str:
    opts.validate(state.n_qubits)
    threshold = 10.0 ** (-opts.precision)
    systems = opts.systems or [state.n_qubits]
    show = opts.show_systems or [True] * len(systems)
    bounds = []
    start = 0
    for size in systems:
        bounds.append((start, start + size))
        start += size

    terms: list[str] = []
    for index in range(state.amps.shape[0]):
        amp = complex(state.amps[index])
        if abs(amp) < threshold:
            continue
        bits = format(index, f"0{state.n_qubits}b")
        kets = "".join(
            f"|{bits[a:b]}⟩" for (a, b), s in zip(bounds, show) if s
        )
        terms.append(f"{_format_amp(amp, opts.precision)}{kets}")
    joiner = "\n" if opts.column else " + "
    return joiner.join(terms)


def wavefunction(
    p: Program, seed: int = 0, opts: DisplayOptions | None = None
) -> tuple[StateVector, str]:
    opts = opts or DisplayOptions()
    state, _ = execute(p, Rng(seed))
    return state, render_wavefunction(state, opts)


# -- trials -------------------------------------------------------------------


def run(p: Program, cregs: list[int], trials: int, seed: int = 0) -> TrialResults:
    if trials < 1:
        raise SimulationError("trials must be >= 1")
    rows: list[list[int]] = []
    histogram: dict[str, int] = {}
    for t in range(trials):
        _, written = execute(p, Rng.for_trial(seed, t))
        row = [written.get(c, 0) for c in cregs]
        rows.append(row)
        key = "".join(str(b) for b in row)
        histogram[key] = histogram.get(key, 0) + 1
    return TrialResults(rows, histogram)


def measurement_histogram(
    p: Program,
    creg_order: list[int],
    runs: int = 1,
    print_m: bool = True,
    return_m: bool = False,
    seed: int = 0,
) -> dict[str, int] | None:
    if not any(isinstance(i, Measure) and i.creg is not None for i in p.instructions):
        raise SimulationError("program records no measurements")
    results = run(p, creg_order, runs, seed)
    if print_m:
        for key in sorted(results.histogram):
            print(f"{key}  {results.histogram[key]}")
    return dict(results.histogram) if return_m else None
