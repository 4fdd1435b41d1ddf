import math

import numpy as np
import pytest

from quilsim.gates import (
    STANDARD_GATE_NAMES,
    GateError,
    def_gate,
    gate_arity,
    is_parametric,
    is_unitary,
    standard_gate,
    tensor,
)


def test_catalog_is_unitary():
    for name in sorted(STANDARD_GATE_NAMES):
        g = standard_gate(name, 0.3) if is_parametric(name) else standard_gate(name)
        assert is_unitary(g.matrix), name
        assert g.arity == gate_arity(name)


def test_fixed_matrices():
    assert np.allclose(
        standard_gate("H").matrix,
        np.array([[1, 1], [1, -1]]) / math.sqrt(2),
    )
    assert np.allclose(standard_gate("S").matrix, np.diag([1, 1j]))
    assert np.allclose(
        standard_gate("T").matrix, np.diag([1, np.exp(1j * math.pi / 4)])
    )
    assert standard_gate("T").matrix[1, 1] != standard_gate("S").matrix[1, 1]
    # control listed first: CNOT flips the target only for |1x>
    cnot = standard_gate("CNOT").matrix
    assert cnot[2, 3] == 1 and cnot[3, 2] == 1 and cnot[0, 0] == 1


def test_phase_gate_family_hot_indices():
    phi = 0.9
    z = np.exp(1j * phi)
    assert np.allclose(standard_gate("PHASE", phi).matrix, np.diag([1, z]))
    for name, hot in [("CPHASE00", 0), ("CPHASE01", 1), ("CPHASE10", 2), ("CPHASE", 3)]:
        diag = np.ones(4, dtype=complex)
        diag[hot] = z
        assert np.allclose(standard_gate(name, phi).matrix, np.diag(diag)), name


def test_rotations_half_angle():
    th = 1.1
    rx = standard_gate("RX", th).matrix
    assert rx[0, 0] == pytest.approx(math.cos(th / 2))
    assert rx[0, 1] == pytest.approx(-1j * math.sin(th / 2))
    ry = standard_gate("RY", th).matrix
    assert ry[1, 0] == pytest.approx(math.sin(th / 2))
    rz = standard_gate("RZ", th).matrix
    assert rz[0, 0] == pytest.approx(np.exp(-1j * th / 2))


def test_three_qubit_gates():
    ccnot = standard_gate("CCNOT").matrix
    assert ccnot[6, 7] == 1 and ccnot[7, 6] == 1
    assert np.allclose(ccnot[:6, :6], np.eye(6))
    cswap = standard_gate("CSWAP").matrix
    assert cswap[5, 6] == 1 and cswap[6, 5] == 1
    assert cswap[4, 4] == 1 and cswap[7, 7] == 1


def test_param_handling():
    with pytest.raises(GateError):
        standard_gate("H", 0.5)
    with pytest.raises(GateError):
        standard_gate("RX")
    with pytest.raises(GateError):
        standard_gate("NOPE")


def test_def_gate_validation():
    sqrt_x = 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]])
    g = def_gate("SQRT-X", sqrt_x)
    assert g.arity == 1
    assert np.allclose(g.matrix @ g.matrix, np.array([[0, 1], [1, 0]]), atol=1e-12)
    with pytest.raises(GateError):
        def_gate("X", np.eye(2))  # standard-name collision
    with pytest.raises(GateError):
        def_gate("BAD", np.eye(3))  # not a power of two
    with pytest.raises(GateError):
        def_gate("BAD", np.array([[1, 0], [0, 2]], dtype=complex))  # not unitary
    with pytest.raises(GateError):
        def_gate("BAD", np.ones((2, 4)))  # not square


def test_tensor():
    hh = tensor(standard_gate("H"), standard_gate("H"))
    assert hh.arity == 2
    assert np.allclose(
        hh.matrix, np.kron(standard_gate("H").matrix, standard_gate("H").matrix)
    )
    assert is_unitary(hh.matrix)
