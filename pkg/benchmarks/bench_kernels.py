"""Compare the compiled kernels against the pure-numpy fallback.

Runs a Hadamard layer and a full QFT gate sequence at several qubit counts,
timing the raw kernel calls for both backends on identical inputs.

Usage: python benchmarks/bench_kernels.py [--qubits 16] [--repeat 5]
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from quilsim import _kernels_py

try:
    from quilsim import _kernels_cy
except ImportError:
    _kernels_cy = None

H = np.array([[1, 1], [1, -1]], dtype=np.complex128) / math.sqrt(2)


def cphase(phi: float) -> np.ndarray:
    m = np.eye(4, dtype=np.complex128)
    m[3, 3] = np.exp(1j * phi)
    return m


def random_state(n: int, seed: int = 7) -> np.ndarray:
    rng = np.random.default_rng(seed)
    amps = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return (amps / np.linalg.norm(amps)).astype(np.complex128)


def run_qft(mod, amps: np.ndarray, n: int) -> None:
    for j in range(n):
        mod.apply_1q(amps, n - 1 - j, H)
        for k in range(j + 1, n):
            u = cphase(math.pi / (1 << (k - j)))
            mod.apply_2q(amps, n - 1 - k, n - 1 - j, u)


def run_h_layer(mod, amps: np.ndarray, n: int) -> None:
    for b in range(n):
        mod.apply_1q(amps, b, H)


def bench(label: str, fn, mod, n: int, repeat: int) -> float:
    best = math.inf
    for _ in range(repeat):
        amps = random_state(n)
        t0 = time.perf_counter()
        fn(mod, amps, n)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--qubits", type=int, default=16)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    n, repeat = args.qubits, args.repeat

    backends = [("python", _kernels_py)]
    if _kernels_cy is not None:
        backends.append(("cython", _kernels_cy))
    else:
        print("compiled backend unavailable; benchmarking the fallback only")

    print(f"n = {n} qubits, best of {repeat}")
    for workload, fn in (("H layer", run_h_layer), ("QFT", run_qft)):
        times = {}
        for name, mod in backends:
            times[name] = bench(name, fn, mod, n, repeat)
            print(f"  {workload:8s} {name:7s} {times[name] * 1e3:9.2f} ms")
        if len(times) == 2:
            print(f"  {workload:8s} speedup {times['python'] / times['cython']:.2f}x")

    # the two backends must agree bit-for-bit in semantics
    if _kernels_cy is not None:
        a = random_state(10)
        b = a.copy()
        run_qft(_kernels_py, a, 10)
        run_qft(_kernels_cy, b, 10)
        worst = float(np.max(np.abs(a - b)))
        print(f"max |python - cython| after 10-qubit QFT: {worst:.3e}")


if __name__ == "__main__":
    main()
