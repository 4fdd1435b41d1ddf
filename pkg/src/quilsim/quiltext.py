"""Parser and canonical printer for the Quil-subset text format.

One instruction per line; '#' starts a comment; DEFGATE blocks hold indented
rows of comma-separated complex literals and end at a blank line. The printer
emits the canonical form that parse() maps back to the identical program.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

import numpy as np

from . import gates
from .program import DefGateDecl, GateApp, Measure, Program, ProgramError

_GATE_LINE = re.compile(r"^([A-Za-z][A-Za-z0-9_-]*)(\(([^)]*)\))?((\s+\d+)*)\s*$")
_MEASURE_LINE = re.compile(r"^MEASURE\s+(\d+)(\s+\[(\d+)\])?\s*$")
_DEFGATE_LINE = re.compile(r"^DEFGATE\s+([A-Za-z][A-Za-z0-9_-]*)\s*:\s*$")
_ANGLE = re.compile(
    r"^(?P<sign>-)?(?:"
    r"(?P<num>\d+)\s*\*\s*pi\s*/\s*(?P<den>\d+)"
    r"|pi\s*/\s*(?P<den2>\d+)"
    r"|pi"
    r"|(?P<lit>\d+(\.\d*)?([eE][+-]?\d+)?|\.\d+([eE][+-]?\d+)?)"
    r")$"
)
_COMPLEX = re.compile(
    r"^\s*(?P<re>[+-]?\d*\.?\d+([eE][+-]?\d+)?)?"
    r"\s*(?P<im>[+-]\s*\d*\.?\d+([eE][+-]?\d+)?\s*i|[+-]?\s*\d*\.?\d+([eE][+-]?\d+)?\s*i)?\s*$"
)


class SourceError(ValueError):
    """Parse failure with a 1-based position into the input text."""

    KINDS = {
        "unknown-gate",
        "arity-mismatch",
        "bad-number",
        "malformed-measure",
        "bad-defgate",
        "nonunitary-defgate",
    }

    def __init__(self, line: int, column: int, kind: str, message: str):
        assert kind in self.KINDS
        super().__init__(f"{line}:{column}: {kind}: {message}")
        self.line = line
        self.column = column
        self.kind = kind
        self.message = message


def _parse_angle(text: str, line_no: int, col: int) -> float:
    m = _ANGLE.match(text.strip())
    if not m:
        raise SourceError(line_no, col, "bad-number", f"cannot parse angle {text!r}")
    sign = -1.0 if m.group("sign") else 1.0
    if m.group("lit") is not None:
        return sign * float(m.group("lit"))
    if m.group("num") is not None:
        return sign * int(m.group("num")) * math.pi / int(m.group("den"))
    if m.group("den2") is not None:
        return sign * math.pi / int(m.group("den2"))
    return sign * math.pi


def _parse_complex(tok: str, line_no: int, col: int) -> complex:
    t = tok.strip().replace(" ", "")
    if not t:
        raise SourceError(line_no, col, "bad-defgate", "empty matrix entry")
    try:
        if t.endswith("i"):
            # a+bi / a-bi / bi forms
            body = t[:-1]
            for k in range(len(body) - 1, 0, -1):
                if body[k] in "+-" and body[k - 1] not in "eE":
                    return complex(float(body[:k]), float(body[k:] or "1"))
            if body in ("", "+"):
                return complex(0.0, 1.0)
            if body == "-":
                return complex(0.0, -1.0)
            return complex(0.0, float(body))
        return complex(float(t), 0.0)
    except ValueError:
        raise SourceError(line_no, col, "bad-defgate", f"bad complex literal {tok!r}")


def parse(text: str) -> Program:
    lines = text.replace("\r\n", "\n").split("\n")
    p = Program()
    i = 0
    while i < len(lines):
        raw = lines[i]
        line_no = i + 1
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            i += 1
            continue

        m = _DEFGATE_LINE.match(line)
        if m:
            name = m.group(1)
            rows: list[list[complex]] = []
            i += 1
            while i < len(lines):
                row_raw = lines[i].split("#", 1)[0]
                if not row_raw.strip():
                    break
                if not row_raw[0].isspace():
                    break
                rows.append(
                    [
                        _parse_complex(tok, i + 1, row_raw.index(tok.strip()) + 1)
                        for tok in row_raw.split(",")
                    ]
                )
                i += 1
            if not rows:
                raise SourceError(line_no, 1, "bad-defgate", f"DEFGATE {name} has no rows")
            widths = {len(r) for r in rows}
            if widths != {len(rows)}:
                raise SourceError(line_no, 1, "bad-defgate", f"DEFGATE {name} is not square")
            try:
                g = gates.def_gate(name, np.array(rows, dtype=np.complex128))
            except gates.GateError as exc:
                kind = "nonunitary-defgate" if "unitary" in str(exc) else "bad-defgate"
                raise SourceError(line_no, 1, kind, str(exc))
            try:
                p = p.inst(DefGateDecl(g))
            except ProgramError as exc:
                raise SourceError(line_no, 1, "bad-defgate", str(exc))
            continue

        if line.lstrip().startswith("MEASURE"):
            mm = _MEASURE_LINE.match(line.strip())
            if not mm:
                raise SourceError(
                    line_no, 1, "malformed-measure", f"cannot parse {line.strip()!r}"
                )
            creg = int(mm.group(3)) if mm.group(3) is not None else None
            p = p.inst(Measure(int(mm.group(1)), creg))
            i += 1
            continue

        mg = _GATE_LINE.match(line.strip())
        if not mg:
            raise SourceError(line_no, 1, "unknown-gate", f"cannot parse {line.strip()!r}")
        name = mg.group(1)
        angle_src = mg.group(3)
        qubits = tuple(int(tok) for tok in mg.group(4).split())
        if name not in gates.STANDARD_GATE_NAMES and name not in p.gate_table:
            raise SourceError(line_no, 1, "unknown-gate", f"unknown gate {name!r}")
        param = None
        if angle_src is not None:
            col = line.index("(") + 2
            param = _parse_angle(angle_src, line_no, col)
        try:
            p = p.inst(GateApp(name, param, qubits))
        except ProgramError as exc:
            msg = str(exc)
            if "angle" in msg:
                raise SourceError(line_no, 1, "bad-number", msg)
            raise SourceError(line_no, 1, "arity-mismatch", msg)
        i += 1
    return p


# -- printing ---------------------------------------------------------------


def format_angle(x: float) -> str:
    """Shortest of a pi-fraction (grammar-expressible) or a 17-sig-digit decimal."""
    decimal = f"{x:.17g}"
    if x == 0.0:
        return "0"
    frac = Fraction(x / math.pi).limit_denominator(1 << 12)
    num, den = frac.numerator, frac.denominator
    if num != 0:
        exact = num * math.pi / den
        if exact == x:
            sign = "-" if num < 0 else ""
            num = abs(num)
            if num == 1 and den == 1:
                pi_form = f"{sign}pi"
            elif num == 1:
                pi_form = f"{sign}pi/{den}"
            elif den == 1:
                pi_form = f"{sign}{num}*pi/1"
            else:
                pi_form = f"{sign}{num}*pi/{den}"
            if len(pi_form) <= len(decimal):
                return pi_form
    return decimal


def format_number(x: float) -> str:
    if x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return f"{x:.17g}"


def format_complex(z: complex) -> str:
    re_, im = z.real, z.imag
    if im == 0.0:
        return format_number(re_)
    if re_ == 0.0:
        return f"{format_number(im)}i"
    sign = "+" if im > 0 else "-"
    return f"{format_number(re_)}{sign}{format_number(abs(im))}i"


def print_program(p: Program) -> str:
    out: list[str] = []
    for ins in p.instructions:
        if isinstance(ins, DefGateDecl):
            out.append(f"DEFGATE {ins.gate.name}:")
            for row in ins.gate.matrix:
                out.append("    " + ", ".join(format_complex(z) for z in row))
            out.append("")
        elif isinstance(ins, Measure):
            if ins.creg is None:
                out.append(f"MEASURE {ins.qubit}")
            else:
                out.append(f"MEASURE {ins.qubit} [{ins.creg}]")
        else:
            qs = " ".join(str(q) for q in ins.qubits)
            if ins.param is None:
                out.append(f"{ins.name} {qs}")
            else:
                out.append(f"{ins.name}({format_angle(ins.param)}) {qs}")
    return "\n".join(out) + ("\n" if out else "")
