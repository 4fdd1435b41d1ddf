"""End-to-end algorithms: Deutsch, Deutsch-Jozsa, Bernstein-Vazirani, Simon
(with the GF(2) solver), and Grover in both the Hadamard and QFT flavors.

Each entry point returns a JSON-serializable result record carrying the
inputs, the hidden spec where applicable, per-step traces, the decision,
and a correctness flag checked against the hidden spec.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .blackbox import (
    BlackboxInstance,
    BVHidden,
    DeutschHidden,
    DJHidden,
    SimonHidden,
    eval_f,
)
from .composite import hadamard_layer, n_not, qft, qft_dagger, x_transformation
from .program import Program, gate_app
from .rng import Rng
from .simulator import apply_fragment, measure_collapse
from .statevector import StateVector, new_zero_state

Bits = tuple[int, ...]


class AlgorithmError(ValueError):
    pass


# -- shared helpers -----------------------------------------------------------


def _main_marginal_probs(state: StateVector, n_main: int) -> np.ndarray:
    """Probability of each main-register basis state, ancillas traced out."""
    m = state.amps.reshape(1 << n_main, -1)
    return np.sum(np.abs(m) ** 2, axis=1)


def main_register_state(state: StateVector, n_main: int) -> np.ndarray:
    """Main-register amplitudes when the ancillas factor out as a pure state."""
    m = state.amps.reshape(1 << n_main, -1)
    col = int(np.argmax(np.sum(np.abs(m) ** 2, axis=0)))
    vec = m[:, col]
    norm = np.linalg.norm(vec)
    if norm < 1e-9:
        raise AlgorithmError("main register has no weight on the pivot ancilla column")
    return vec / norm


def _bits_of(index: int, n: int) -> Bits:
    return tuple((index >> (n - 1 - j)) & 1 for j in range(n))


def _sample_main(state: StateVector, n_main: int, rng: Rng) -> Bits:
    probs = _main_marginal_probs(state, n_main)
    u = rng.random()
    acc = 0.0
    for i, pr in enumerate(probs):
        acc += pr
        if u < acc:
            return _bits_of(i, n_main)
    return _bits_of(len(probs) - 1, n_main)


def _bitstr(bits: Bits) -> str:
    return "".join(str(b) for b in bits)


# -- Deutsch ------------------------------------------------------------------


@dataclass
class DeutschResult:
    hidden_kind: str
    decision: str
    correct: bool

    def to_json_dict(self) -> dict:
        return asdict(self)


def deutsch(instance: BlackboxInstance) -> DeutschResult:
    """|01> -> H^2 -> g -> H^2; qubit 0 reads 1 iff f is balanced."""
    if not isinstance(instance.hidden, DeutschHidden):
        raise AlgorithmError("not a Deutsch oracle")
    prep = Program().inst(gate_app("X", 1))
    prep = hadamard_layer(prep, [0, 1])
    state = apply_fragment(new_zero_state(2), prep, Rng(0))
    state = apply_fragment(state, instance.fragment, Rng(0))
    state = apply_fragment(state, hadamard_layer(Program(), [0, 1]), Rng(0))
    p_q0_one = float(np.sum(np.abs(state.amps[2:]) ** 2))
    decision = "balanced" if p_q0_one > 0.5 else "constant"
    truth = "balanced" if instance.hidden.kind.value.startswith("balanced") else "constant"
    return DeutschResult(instance.hidden.kind.value, decision, decision == truth)


# -- Deutsch-Jozsa --------------------------------------------------------------


@dataclass
class DJResult:
    n: int
    hidden_constant: bool
    zero_amplitude: float
    decision: str
    correct: bool

    def to_json_dict(self) -> dict:
        return asdict(self)


def kickback_state(instance: BlackboxInstance, final_h: bool = True) -> StateVector:
    """Prepare |0..0>|1>, H everything relevant, apply g, H the main register."""
    n = len(instance.main_qubits)
    out = instance.ancilla_out[0]
    total = 1 + max(
        [*instance.main_qubits, *instance.ancilla_out, *instance.work_ancillas]
    )
    p = Program().inst(gate_app("X", out))
    p = hadamard_layer(p, [*instance.main_qubits, out])
    state = apply_fragment(new_zero_state(total), p, Rng(0))
    state = apply_fragment(state, instance.fragment, Rng(0))
    if final_h:
        state = apply_fragment(
            state, hadamard_layer(Program(), instance.main_qubits), Rng(0)
        )
    return state


def deutsch_jozsa(n: int, instance: BlackboxInstance) -> DJResult:
    if not isinstance(instance.hidden, DJHidden):
        raise AlgorithmError("not a Deutsch-Jozsa oracle")
    state = kickback_state(instance)
    zero_amp = math.sqrt(float(_main_marginal_probs(state, n)[0]))
    decision = "constant" if zero_amp > 0.5 else "balanced"
    truth = "constant" if instance.hidden.is_constant else "balanced"
    return DJResult(n, instance.hidden.is_constant, zero_amp, decision, decision == truth)


# -- Bernstein-Vazirani ---------------------------------------------------------


@dataclass
class BVResult:
    n: int
    hidden_a: str
    hidden_b: int
    recovered_a: str
    correct: bool

    def to_json_dict(self) -> dict:
        return asdict(self)


def bernstein_vazirani(n: int, instance: BlackboxInstance) -> BVResult:
    if not isinstance(instance.hidden, BVHidden):
        raise AlgorithmError("not a Bernstein-Vazirani oracle")
    state = kickback_state(instance)
    probs = _main_marginal_probs(state, n)
    recovered = _bits_of(int(np.argmax(probs)), n)
    return BVResult(
        n,
        _bitstr(instance.hidden.a),
        instance.hidden.b,
        _bitstr(recovered),
        recovered == instance.hidden.a,
    )


# -- Simon ----------------------------------------------------------------------


def simons_solver(rows: list[Bits], n: int | None = None) -> list[Bits]:
    """All nonzero v with y.v = 0 (mod 2) for every row y, by GF(2) elimination."""
    if rows:
        lengths = {len(r) for r in rows}
        if len(lengths) != 1:
            raise AlgorithmError(f"inconsistent row lengths {sorted(lengths)}")
        width = lengths.pop()
        if n is not None and n != width:
            raise AlgorithmError(f"rows have width {width}, expected {n}")
        n = width
    if n is None:
        raise AlgorithmError("cannot infer width from an empty system; pass n")
    return solve_nullspace(rows, n)


def solve_nullspace(rows: list[Bits], n: int) -> list[Bits]:
    mat = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                mat[i] = [a ^ b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis: list[Bits] = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = mat[i][f]
        basis.append(tuple(v))
    out: list[Bits] = []
    for mask in range(1, 1 << len(basis)):
        v = [0] * n
        for j, b in enumerate(basis):
            if (mask >> j) & 1:
                v = [a ^ c for a, c in zip(v, b)]
        out.append(tuple(v))
    return sorted(set(out))


@dataclass
class SimonsResult:
    n: int
    hidden_s: str
    s: str | None
    converged: bool
    runs_used: int
    measured: list[str] = field(default_factory=list)
    candidates: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return asdict(self)


def simons(
    n: int, instance: BlackboxInstance, max_runs: int | None = None, seed: int = 0
) -> SimonsResult:
    """Collect orthogonal rows until the solver pins a single candidate, then
    confirm it classically against f(0...0)."""
    if not isinstance(instance.hidden, SimonHidden):
        raise AlgorithmError("not a Simon oracle")
    hidden = instance.hidden
    if max_runs is None:
        max_runs = 20 * n
    total = 1 + max(
        [*instance.main_qubits, *instance.ancilla_out, *instance.work_ancillas]
    )
    zero = tuple([0] * n)
    collected: list[Bits] = []
    measured_log: list[str] = []
    candidates: list[Bits] = solve_nullspace([], n)

    def finish(s: Bits, runs: int, converged: bool = True) -> SimonsResult:
        return SimonsResult(
            n,
            _bitstr(hidden.s),
            _bitstr(s),
            converged,
            runs,
            measured_log,
            [_bitstr(c) for c in candidates],
        )

    for t in range(max_runs):
        rng = Rng.for_trial(seed, t)
        p = hadamard_layer(Program(), instance.main_qubits)
        state = apply_fragment(new_zero_state(total), p, Rng(0))
        state = apply_fragment(state, instance.fragment, Rng(0))
        state = apply_fragment(
            state, hadamard_layer(Program(), instance.main_qubits), Rng(0)
        )
        y = []
        for q in instance.main_qubits:
            bit, state = measure_collapse(state, q, rng)
            y.append(bit)
        y = tuple(y)
        measured_log.append(_bitstr(y))
        dot = sum(a * b for a, b in zip(y, hidden.s)) % 2
        if dot != 0:
            raise AlgorithmError(f"measured row {y} not orthogonal to hidden s")
        if y == zero or y in collected:
            continue
        collected.append(y)
        candidates = solve_nullspace(collected, n)
        if len(candidates) == 1:
            s_prime = candidates[0]
            if eval_f(hidden, zero) == eval_f(hidden, s_prime):
                return finish(s_prime, t + 1)
            return finish(zero, t + 1)
        if not candidates:
            return finish(zero, t + 1)
    return SimonsResult(
        n,
        _bitstr(hidden.s),
        None,
        False,
        max_runs,
        measured_log,
        [_bitstr(c) for c in candidates],
    )


# -- Grover -----------------------------------------------------------------------


def optimal_grover_iterations(num_states: int) -> int:
    """floor(pi/4 * sqrt(N)), never below 1."""
    if num_states < 4:
        raise AlgorithmError("need at least 4 states")
    return max(1, int(math.pi / 4.0 * math.sqrt(num_states)))


@dataclass
class GroverResult:
    n: int
    marked: str
    iterations: int
    trace: list[float]
    measured: str
    found: bool

    def to_json_dict(self) -> dict:
        return asdict(self)


def _grover_run(
    n: int,
    marked: Bits,
    iterations: int | None,
    seed: int,
    use_qft: bool,
) -> GroverResult:
    if n < 2:
        raise AlgorithmError("Grover needs n >= 2")
    if len(marked) != n:
        raise AlgorithmError(f"marked pattern has length {len(marked)}, expected {n}")
    if iterations is None:
        iterations = optimal_grover_iterations(1 << n)
    main = list(range(n))
    anc = n
    work = list(range(n + 1, n + 1 + max(n - 2, 0)))
    total = n + 1 + len(work)

    def flip(pattern: Bits) -> Program:
        p = x_transformation(Program(), main, pattern)
        p = n_not(p, main, anc, work)
        return x_transformation(p, main, pattern)

    zeros = tuple([0] * n)
    if use_qft:
        diffusion = qft_dagger(Program(), main) + flip(zeros) + qft(Program(), main)
    else:
        diffusion = (
            hadamard_layer(Program(), main)
            + flip(zeros)
            + hadamard_layer(Program(), main)
        )
    oracle = flip(marked)

    prep = hadamard_layer(Program(), main).inst(gate_app("X", anc), gate_app("H", anc))
    state = apply_fragment(new_zero_state(total), prep, Rng(0))
    marked_index = int("".join(str(b) for b in marked), 2)
    trace: list[float] = []
    for _ in range(iterations):
        state = apply_fragment(state, oracle, Rng(0))
        state = apply_fragment(state, diffusion, Rng(0))
        trace.append(float(_main_marginal_probs(state, n)[marked_index]))
    measured = _sample_main(state, n, Rng(seed))
    return GroverResult(
        n, _bitstr(marked), iterations, trace, _bitstr(measured), measured == marked
    )


def grover(
    n: int, marked: Bits, iterations: int | None = None, seed: int = 0
) -> GroverResult:
    """Oracle sign-flip plus diffusion, tracing P(marked) per iteration."""
    return _grover_run(n, tuple(marked), iterations, seed, use_qft=False)


def grover_via_qft(
    n: int, marked: Bits, iterations: int | None = None, seed: int = 0
) -> GroverResult:
    """Grover with the diffusion's Hadamard layers replaced by QFT/inverse QFT."""
    return _grover_run(n, tuple(marked), iterations, seed, use_qft=True)
