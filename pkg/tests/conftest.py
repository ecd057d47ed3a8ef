import itertools

import pytest

from gentoffoli.circuit import GateKind

# (criterion, ok, detail) rows filled in by test_acceptance.py
ACCEPTANCE = []


def naive_run(circuit, bits):
    """Bit-list simulator kept separate from gentoffoli.verify on purpose."""
    bits = list(bits)
    for g in circuit.gates:
        assert g.kind in (GateKind.X, GateKind.CNOT, GateKind.TOFFOLI, GateKind.GEN_TOFFOLI)
        if all(bits[c] for c in g.controls):
            bits[g.target] ^= 1
    return bits


def naive_cnx_ok(circuit, controls, target, clean=(), swept=None):
    """Check C^nX semantics over every assignment of the non-clean qubits."""
    q = circuit.num_qubits
    free = [i for i in range(q) if i not in set(clean)] if swept is None else list(swept)
    for values in itertools.product((0, 1), repeat=len(free)):
        bits = [0] * q
        for i, v in zip(free, values):
            bits[i] = v
        want = list(bits)
        if all(bits[c] for c in controls):
            want[target] ^= 1
        if naive_run(circuit, bits) != want:
            return False
    return True


def layout(n, m):
    return list(range(n)), list(range(n, n + m)), n + m


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")


@pytest.fixture
def record():
    def _record(name, ok, detail=""):
        ACCEPTANCE.append((name, bool(ok), detail))
        return ok

    return _record


def naive_depth(circuit, counted):
    """Critical path that counts only gates whose kind is in ``counted``."""
    level = [0] * circuit.num_qubits
    for g in circuit.gates:
        qs = g.qubits
        top = max(level[q] for q in qs) + (1 if g.kind in counted else 0)
        for q in qs:
            level[q] = top
    return max(level, default=0)
