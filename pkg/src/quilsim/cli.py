"""Command-line experiment runner.

Subcommands: run, wavefunction, lesson, coinflip, qft. Every command takes a
seed that defaults to a fixed constant so transcripts reproduce exactly; pass
--seed random for entropy. --json output carries a top-level "schema": 1.
Exit codes: 0 success, 1 source errors in a .quil file, 2 bad flags.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys

from . import algorithms, blackbox, simulator
from .composite import qft as qft_fragment
from .composite import qft_dagger
from .program import Measure, Program, gate_app
from .quiltext import SourceError, parse
from .rng import Rng

DEFAULT_SEED = 20200709


class CliError(Exception):
    """Bad flag combination detected after argparse."""


def _seed_value(text: str) -> int:
    if text == "random":
        return secrets.randbits(64)
    try:
        return int(text)
    except ValueError:
        raise CliError(f"seed must be an integer or 'random', got {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise CliError(f"expected a comma-separated integer list, got {text!r}")


def _bool_list(text: str) -> list[bool]:
    out = []
    for part in text.split(","):
        if part not in ("t", "f"):
            raise CliError(f"expected t/f entries, got {text!r}")
        out.append(part == "t")
    return out


def _bits(text: str) -> tuple[int, ...]:
    if not text or any(c not in "01" for c in text):
        raise CliError(f"expected a bitstring of 0s and 1s, got {text!r}")
    return tuple(int(c) for c in text)


def _load_program(path: str) -> Program:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def _emit_json(payload: dict) -> None:
    payload = {"schema": 1, **payload}
    print(json.dumps(payload, indent=2, sort_keys=True))


# -- subcommands ---------------------------------------------------------------


def _cmd_run(args: argparse.Namespace) -> int:
    p = _load_program(args.file)
    if args.cregs is not None:
        cregs = _int_list(args.cregs)
    else:
        seen: list[int] = []
        for ins in p.instructions:
            if isinstance(ins, Measure) and ins.creg is not None and ins.creg not in seen:
                seen.append(ins.creg)
        cregs = sorted(seen)
    if not cregs:
        raise CliError("program records no measurements; nothing to run")
    seed = _seed_value(args.seed)
    results = simulator.run(p, cregs, args.shots, seed)
    if args.json:
        _emit_json({"cregs": cregs, "seed": seed, **results.to_json_dict()})
        return 0
    for row in results.rows:
        print("".join(str(b) for b in row))
    print("--")
    for key in sorted(results.histogram):
        print(f"{key}  {results.histogram[key]}")
    return 0


def _cmd_wavefunction(args: argparse.Namespace) -> int:
    p = _load_program(args.file)
    opts = simulator.DisplayOptions(
        precision=args.precision,
        column=args.column,
        systems=_int_list(args.systems) if args.systems else None,
        show_systems=_bool_list(args.show) if args.show else None,
    )
    _, text = simulator.wavefunction(p, _seed_value(args.seed), opts)
    print(text)
    return 0


def _cmd_qft(args: argparse.Namespace) -> int:
    p = _load_program(args.file)
    qubits = _int_list(args.qubits)
    if not qubits:
        raise CliError("--qubits needs at least one qubit")
    p = qft_dagger(p, qubits) if args.inverse else qft_fragment(p, qubits)
    _, text = simulator.wavefunction(p, _seed_value(args.seed))
    print(text)
    return 0


def _cmd_coinflip(args: argparse.Namespace) -> int:
    p = Program().inst(gate_app("H", 0)).measure(0, 0)
    results = simulator.run(p, [0], 1, _seed_value(args.seed))
    print("Heads" if results.rows[0][0] == 0 else "Tails")
    return 0


_LESSONS = ("deutsch", "dj", "bv", "simon", "grover", "qft-grover")


def _lesson_trial(name: str, args: argparse.Namespace, seed: int, trial: int) -> dict:
    rng = Rng.for_trial(seed, trial)
    n = args.qubits
    if name == "deutsch":
        kind = list(blackbox.DeutschKind)[rng.randint(4)]
        return algorithms.deutsch(blackbox.deutsch_g(kind)).to_json_dict()
    if name == "dj":
        kind = "constant-random" if rng.randint(2) == 0 else "balanced-random"
        return algorithms.deutsch_jozsa(n, blackbox.dj_blackbox(n, kind, rng)).to_json_dict()
    if name == "bv":
        a = tuple(rng.randint(2) for _ in range(n))
        b = rng.randint(2)
        return algorithms.bernstein_vazirani(n, blackbox.bv_blackbox(n, a, b)).to_json_dict()
    if name == "simon":
        s = tuple(rng.randint(2) for _ in range(n))
        inst = blackbox.simon_blackbox(n, s, rng)
        return algorithms.simons(n, inst, seed=rng.next_u64()).to_json_dict()
    marked = _bits(args.marked) if args.marked else tuple(rng.randint(2) for _ in range(n))
    if len(marked) != n:
        raise CliError(f"--marked has {len(marked)} bits but --qubits is {n}")
    fn = algorithms.grover if name == "grover" else algorithms.grover_via_qft
    return fn(n, marked, args.iterations, seed=rng.next_u64()).to_json_dict()


def _cmd_lesson(args: argparse.Namespace) -> int:
    seed = _seed_value(args.seed)
    records = [_lesson_trial(args.name, args, seed, t) for t in range(args.trials)]
    if args.json:
        _emit_json({"lesson": args.name, "seed": seed, "trials": records})
        return 0
    for t, rec in enumerate(records):
        print(f"trial {t}")
        for key, value in rec.items():
            print(f"  {key}: {value}")
    return 0


# -- wiring ---------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="quilsim")
    sub = top.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute a .quil program over many shots")
    run_p.add_argument("file")
    run_p.add_argument("--shots", type=int, default=1)
    run_p.add_argument("--seed", default=str(DEFAULT_SEED))
    run_p.add_argument("--cregs", default=None)
    run_p.add_argument("--json", action="store_true")
    run_p.set_defaults(handler=_cmd_run)

    wf_p = sub.add_parser("wavefunction", help="print the final statevector")
    wf_p.add_argument("file")
    wf_p.add_argument("--seed", default=str(DEFAULT_SEED))
    wf_p.add_argument("--precision", type=int, default=simulator.DEFAULT_PRECISION)
    wf_p.add_argument("--column", action="store_true")
    wf_p.add_argument("--systems", default=None)
    wf_p.add_argument("--show", default=None)
    wf_p.set_defaults(handler=_cmd_wavefunction)

    lesson_p = sub.add_parser("lesson", help="run one of the algorithm demos")
    lesson_p.add_argument("name", choices=_LESSONS)
    lesson_p.add_argument("--qubits", type=int, default=3)
    lesson_p.add_argument("--marked", default=None)
    lesson_p.add_argument("--iterations", type=int, default=None)
    lesson_p.add_argument("--seed", default=str(DEFAULT_SEED))
    lesson_p.add_argument("--trials", type=int, default=1)
    lesson_p.add_argument("--json", action="store_true")
    lesson_p.set_defaults(handler=_cmd_lesson)

    coin_p = sub.add_parser("coinflip", help="single-qubit coin flip demo")
    coin_p.add_argument("--seed", default=str(DEFAULT_SEED))
    coin_p.set_defaults(handler=_cmd_coinflip)

    qft_p = sub.add_parser("qft", help="append a (inverse) QFT and print the state")
    qft_p.add_argument("file")
    qft_p.add_argument("--qubits", required=True)
    qft_p.add_argument("--inverse", action="store_true")
    qft_p.add_argument("--seed", default=str(DEFAULT_SEED))
    qft_p.set_defaults(handler=_cmd_qft)
    return top


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except SourceError as exc:
        print(
            f"error: line {exc.line}, column {exc.column}: {exc.kind}: {exc.message}",
            file=sys.stderr,
        )
        return 1
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
