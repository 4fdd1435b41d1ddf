import numpy as np
import pytest

from quilsim.gates import def_gate
from quilsim.program import (
    DefGateDecl,
    GateApp,
    Measure,
    Program,
    ProgramError,
    gate_app,
    remove_at,
)


def test_inst_is_value_semantic():
    p = Program().inst(gate_app("H", 0))
    q = p.inst(gate_app("X", 1))
    assert len(p) == 1
    assert len(q) == 2
    assert p.instructions[0] == GateApp("H", None, (0,))


def test_inst_flattens_iterables():
    p = Program().inst([gate_app("H", 0), gate_app("H", 1)], gate_app("X", 2))
    assert len(p) == 3


def test_arity_and_param_validation():
    with pytest.raises(ProgramError):
        Program().inst(gate_app("CNOT", 0))
    with pytest.raises(ProgramError):
        Program().inst(gate_app("H", 0, param=0.5))
    with pytest.raises(ProgramError):
        Program().inst(gate_app("RX", 0))
    with pytest.raises(ProgramError):
        Program().inst(gate_app("CNOT", 1, 1))
    with pytest.raises(ProgramError):
        Program().inst(gate_app("NOPE", 0))


def test_pop_and_slice_and_remove():
    p = Program().inst(gate_app("H", 0), gate_app("X", 1), gate_app("Z", 2))
    q, last = p.pop()
    assert last == GateApp("Z", None, (2,))
    assert len(q) == 2
    assert p.slice(1, 3).instructions == p.instructions[1:3]
    assert remove_at(p, 1).instructions == (p.instructions[0], p.instructions[2])
    with pytest.raises(ProgramError):
        Program().pop()
    with pytest.raises(ProgramError):
        p.slice(2, 5)


def test_concat_merges_gate_tables():
    g = def_gate("ROOT", np.diag([1, 1j]))
    a = Program().inst(DefGateDecl(g), gate_app("ROOT", 0))
    b = Program().inst(gate_app("H", 1))
    c = a + b
    assert "ROOT" in c.gate_table
    assert len(c) == 3
    clash = def_gate("ROOT", np.diag([1, -1j]))
    with pytest.raises(ProgramError):
        a + Program().inst(DefGateDecl(clash))


def test_defgate_cannot_shadow_standard_gate():
    class FakeGate:
        name = "X"
        arity = 1
        matrix = np.eye(2)

    with pytest.raises(Exception):
        Program().inst(DefGateDecl(FakeGate()))


def test_measure_helpers():
    p = Program().inst(gate_app("H", 0), gate_app("CNOT", 0, 1))
    assert p.measure(0, 5).instructions[-1] == Measure(0, 5)
    full = p.measure_all()
    assert full.instructions[-2:] == (Measure(0, 0), Measure(1, 1))
    custom = p.measure_all([(1, 7)])
    assert custom.instructions[-1] == Measure(1, 7)


def test_n_qubits():
    assert Program().n_qubits == 0
    assert Program().inst(gate_app("H", 4)).n_qubits == 5
    assert Program().measure(2).n_qubits == 3


def test_resolve_matrix():
    g = def_gate("MYZ", np.diag([1.0, -1.0]))
    p = Program().inst(DefGateDecl(g), gate_app("MYZ", 0), gate_app("X", 0))
    assert np.allclose(p.resolve_matrix(p.instructions[1]), np.diag([1, -1]))
    assert np.allclose(p.resolve_matrix(p.instructions[2]), [[0, 1], [1, 0]])
