import numpy as np
import pytest

from gentoffoli.circuit import Circuit, CircuitError, GateKind, cnot, gate_counts, toffoli, toffoli_depth, two_qubit_depth
from gentoffoli.primitives import ceil_log2, dirty_ladder, log_depth_and, lower_toffoli
from gentoffoli.verify import unitary, unitary_equal

from conftest import layout, naive_cnx_ok


def ladder(n):
    c, a, t = layout(n, n - 2)
    return dirty_ladder(c, a, t)


def tree(n):
    c, a, t = layout(n, n - 2)
    return log_depth_and(c, a, t)


def test_ceil_log2():
    assert [ceil_log2(n) for n in range(1, 10)] == [0, 1, 2, 2, 3, 3, 3, 3, 4]


def test_dirty_ladder_gate_sequence():
    # controls C1..C4 = 0..3, A1 = 4, A2 = 5, T = 6, read column by column
    expected = [
        toffoli(5, 3, 6), toffoli(4, 2, 5), toffoli(0, 1, 4), toffoli(4, 2, 5),
        toffoli(5, 3, 6), toffoli(4, 2, 5), toffoli(0, 1, 4), toffoli(4, 2, 5),
    ]
    assert list(ladder(4).gates) == expected


def test_dirty_ladder_three_controls():
    c = ladder(3)
    assert len(c) == 4
    assert toffoli_depth(c) == 4


@pytest.mark.parametrize("n", range(3, 9))
def test_dirty_ladder_contract(n):
    c = ladder(n)
    assert len(c) == 4 * n - 8
    assert toffoli_depth(c) == 4 * n - 8
    assert naive_cnx_ok(c, range(n), 2 * n - 2)


def test_dirty_ladder_errors():
    with pytest.raises(CircuitError):
        dirty_ladder([0, 1], [], 2)
    with pytest.raises(CircuitError):
        dirty_ladder([0, 1, 2, 3], [4], 5)
    with pytest.raises(CircuitError):
        dirty_ladder([0, 1, 2], [2], 3)


def test_log_depth_and_four_controls():
    c = tree(4)
    assert list(c.gates) == [
        toffoli(0, 1, 4), toffoli(2, 3, 5), toffoli(4, 5, 6), toffoli(2, 3, 5), toffoli(0, 1, 4),
    ]
    assert toffoli_depth(c) == 3


def test_log_depth_and_two_controls():
    c = log_depth_and([0, 1], [], 2)
    assert list(c.gates) == [toffoli(0, 1, 2)]
    assert toffoli_depth(c) == 1


@pytest.mark.parametrize("n", range(2, 9))
def test_log_depth_and_contract(n):
    c = tree(n)
    assert toffoli_depth(c) == 2 * ceil_log2(n) - 1
    clean = range(n, 2 * n - 2)
    assert naive_cnx_ok(c, range(n), 2 * n - 2, clean=clean)


def test_log_depth_and_errors():
    with pytest.raises(CircuitError):
        log_depth_and([0], [], 1)
    with pytest.raises(CircuitError):
        log_depth_and([0, 1, 2], [], 3)


def ccx_matrix():
    m = np.eye(8)
    m[[3, 7]] = m[[7, 3]]  # |011> <-> |111> with qubit 0 as the low bit
    return m


def test_lowered_toffoli_matches_ccx():
    lowered = lower_toffoli(Circuit(3, gates=(toffoli(0, 1, 2),)))
    counts = gate_counts(lowered)
    assert counts["CNOT"] == 6
    assert sum(counts.values()) - 6 == 9
    assert counts["T"] + counts["Tdg"] == 7
    u = unitary(lowered)
    k = np.unravel_index(np.argmax(np.abs(u)), u.shape)
    phase = ccx_matrix()[k] / u[k]
    assert np.max(np.abs(u * phase - ccx_matrix())) < 1e-9
    assert two_qubit_depth(lowered) == 6


def test_lowering_without_toffolis_is_identity_map():
    c = Circuit(3, gates=(cnot(0, 1), cnot(1, 2)))
    assert lower_toffoli(c) == c


def test_lowering_rejects_placeholders():
    from gentoffoli.circuit import mcx

    with pytest.raises(CircuitError):
        lower_toffoli(Circuit(4, gates=(mcx([0, 1, 2], 3),)))


def test_lowered_and_tree_two_qubit_depth():
    # regression value measured on this lowering
    assert two_qubit_depth(lower_toffoli(tree(4))) == 16


@pytest.mark.parametrize("make, n", [(ladder, 3), (ladder, 4), (ladder, 5), (tree, 3), (tree, 4), (tree, 5)])
def test_lowering_preserves_unitary(make, n):
    c = make(n)
    lowered = lower_toffoli(c)
    assert all(len(g.qubits) <= 2 for g in lowered.gates)
    assert not any(g.kind is GateKind.TOFFOLI for g in lowered.gates)
    assert unitary_equal(c, lowered, 1e-9)
