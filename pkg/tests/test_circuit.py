import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentoffoli.circuit import (
    Circuit,
    CircuitError,
    Gate,
    GateKind,
    Role,
    append,
    cnot,
    gate_counts,
    inverse,
    mcx,
    toffoli,
    toffoli_depth,
    two_qubit_depth,
    x,
)
from gentoffoli.primitives import dirty_ladder, log_depth_and

from conftest import naive_run


def test_append_single_toffoli():
    c = append(Circuit(3), toffoli(0, 1, 2))
    assert len(c) == 1
    assert c.gates[0] == toffoli(0, 1, 2)


def test_append_twice_keeps_order():
    g1, g2 = toffoli(0, 1, 2), cnot(0, 1)
    c = Circuit(3).append(g1).append(g1).append(g2)
    assert c.gates == (g1, g1, g2)


def test_append_is_pure():
    base = Circuit(3)
    base.append(x(0))
    assert len(base) == 0


def test_duplicate_qubit_rejected():
    with pytest.raises(CircuitError):
        cnot(5, 5)
    with pytest.raises(CircuitError):
        toffoli(0, 0, 1)


def test_out_of_range_rejected():
    with pytest.raises(CircuitError):
        Circuit(3).append(toffoli(0, 1, 3))


@pytest.mark.parametrize(
    "kind, controls",
    [(GateKind.X, (1,)), (GateKind.CNOT, ()), (GateKind.TOFFOLI, (1,)), (GateKind.GEN_TOFFOLI, (1, 2))],
)
def test_control_counts_enforced(kind, controls):
    with pytest.raises(CircuitError):
        Gate(kind, controls, 0)


def test_mcx_picks_kind():
    assert mcx([], 0).kind is GateKind.X
    assert mcx([1], 0).kind is GateKind.CNOT
    assert mcx([1, 2], 0).kind is GateKind.TOFFOLI
    assert mcx([1, 2, 3], 0).kind is GateKind.GEN_TOFFOLI


def test_roles_length_checked():
    with pytest.raises(CircuitError):
        Circuit(3, (Role.CONTROL,))
    assert Circuit(2).roles == (Role.IDLE, Role.IDLE)


def test_inverse_reverses():
    g = [x(0), cnot(0, 1), toffoli(0, 1, 2)]
    c = Circuit(3, gates=tuple(g))
    assert inverse(c).gates == tuple(reversed(g))
    assert inverse(Circuit(3)).gates == ()


def test_inverse_swaps_t_phases():
    c = Circuit(1, gates=(Gate(GateKind.T, (), 0), Gate(GateKind.H, (), 0)))
    assert [g.kind for g in inverse(c)] == [GateKind.H, GateKind.TDG]


def test_toffoli_depth_of_primitives():
    # 4 controls, 2 ancilla: dirty ladder is 4n-8 deep, the AND tree 2*ceil(log n)-1
    assert toffoli_depth(dirty_ladder([0, 1, 2, 3], [4, 5], 6)) == 8
    assert toffoli_depth(log_depth_and([0, 1, 2, 3], [4, 5], 6)) == 3


def test_toffoli_depth_ignores_cnots():
    c = Circuit(3, gates=(cnot(0, 1), cnot(1, 2), x(0)))
    assert toffoli_depth(c) == 0


def test_toffoli_depth_rejects_placeholders():
    with pytest.raises(CircuitError):
        toffoli_depth(Circuit(4, gates=(mcx([0, 1, 2], 3),)))


def test_two_qubit_depth_basics():
    assert two_qubit_depth(Circuit(2, gates=(cnot(0, 1),))) == 1
    assert two_qubit_depth(Circuit(4, gates=(cnot(0, 1), cnot(2, 3)))) == 1
    with pytest.raises(CircuitError):
        two_qubit_depth(Circuit(3, gates=(toffoli(0, 1, 2),)))


def test_gate_counts():
    assert gate_counts(Circuit(3)) == {}
    assert gate_counts(dirty_ladder([0, 1, 2, 3], [4, 5], 6)) == {"Toffoli": 8}
    assert gate_counts(log_depth_and([0, 1, 2, 3], [4, 5], 6)) == {"Toffoli": 5}


def test_json_round_trip_and_field_order():
    c = dirty_ladder([0, 1, 2], [3], 4)
    text = c.to_json()
    assert list(json.loads(text)) == ["qubits", "roles", "gates"]
    assert list(json.loads(text)["gates"][0]) == ["kind", "controls", "target"]
    assert Circuit.from_json(text) == c


@st.composite
def reversible_circuits(draw, max_qubits=8, max_gates=30):
    q = draw(st.integers(3, max_qubits))
    gates = []
    for _ in range(draw(st.integers(0, max_gates))):
        k = draw(st.integers(0, min(3, q - 1)))
        qubits = draw(st.permutations(range(q)))[: k + 1]
        gates.append(mcx(qubits[:k], qubits[k]))
    return Circuit(q, gates=tuple(gates))


@given(reversible_circuits())
def test_inverse_is_involution(c):
    assert inverse(inverse(c)) == c


@settings(max_examples=40)
@given(reversible_circuits(), st.data())
def test_circuit_then_inverse_is_identity(c, data):
    bits = data.draw(st.lists(st.integers(0, 1), min_size=c.num_qubits, max_size=c.num_qubits))
    assert naive_run(inverse(c), naive_run(c, bits)) == bits


@given(reversible_circuits())
def test_toffoli_depth_at_most_toffoli_count(c):
    c = c.with_gates(g for g in c.gates if g.kind is not GateKind.GEN_TOFFOLI)
    assert toffoli_depth(c) <= gate_counts(c).get("Toffoli", 0)


@given(reversible_circuits(), st.integers(0, 3))
def test_depth_unchanged_by_cheap_gates_on_fresh_qubits(c, extra):
    c = c.with_gates(g for g in c.gates if g.kind is not GateKind.GEN_TOFFOLI)
    base = toffoli_depth(c)
    q = c.num_qubits
    wider = Circuit(q + 3, gates=c.gates)
    fresh = [toffoli(q, q + 1, q + 2)] * min(extra, base)
    assert toffoli_depth(wider.extend(fresh)) == base
