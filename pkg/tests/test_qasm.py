import numpy as np
import pytest

from gentoffoli.circuit import Circuit, CircuitError, mcx
from gentoffoli.primitives import lower_toffoli
from gentoffoli.qasm import from_qasm, to_qasm
from gentoffoli.synth import cnx, fanout
from gentoffoli.verify import simulate_all, unitary_equal


def permutation(c):
    return simulate_all(c, np.arange(1 << c.num_qubits, dtype=np.int64))


@pytest.mark.parametrize("n, m, kind", [(4, 2, "dirty"), (7, 3, "dirty"), (6, 2, "clean"), (9, 3, "clean")])
def test_cnx_round_trip(n, m, kind):
    c = cnx(n, m, kind).circuit
    back = from_qasm(to_qasm(c))
    assert back == c
    assert np.array_equal(permutation(back), permutation(c))


def test_fanout_round_trip_keeps_roles():
    c = fanout(6, 2, "dirty").circuit
    assert from_qasm(to_qasm(c)).roles == c.roles


def test_lowered_round_trip():
    c = lower_toffoli(cnx(3, 1, "clean").circuit)
    back = from_qasm(to_qasm(c))
    assert back == c
    assert unitary_equal(back, c, 1e-12)


def test_header_and_gate_lines():
    text = to_qasm(cnx(4, 2, "dirty").circuit)
    lines = text.splitlines()
    assert lines[0] == "OPENQASM 2.0;"
    assert lines[3] == "qreg q[7];"
    assert sum(line.startswith("ccx ") for line in lines) == 8
    assert text.endswith("\n") and "\r" not in text


def test_placeholder_gates_are_refused():
    with pytest.raises(CircuitError):
        to_qasm(Circuit(4, gates=(mcx([0, 1, 2], 3),)))


def test_parser_rejects_foreign_input():
    with pytest.raises(CircuitError):
        from_qasm("OPENQASM 2.0;\nqreg q[2];\nswap q[0],q[1];\n")
    with pytest.raises(CircuitError):
        from_qasm("cx q[0],q[1];\n")
