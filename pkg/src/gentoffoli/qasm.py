"""OpenQASM 2.0 emission and re-import of our own output.

Only the gates this package produces are understood: ``x cx ccx h t tdg``
on a single register ``q``.  Qubit roles travel in a ``// roles:`` comment
so a round trip restores the full registry.
"""
from __future__ import annotations

import re

from .circuit import Circuit, CircuitError, Gate, GateKind, Role

_NAMES = {
    GateKind.X: "x",
    GateKind.CNOT: "cx",
    GateKind.TOFFOLI: "ccx",
    GateKind.H: "h",
    GateKind.T: "t",
    GateKind.TDG: "tdg",
}
_KINDS = {v: k for k, v in _NAMES.items()}
_LINE = re.compile(r"^(\w+)\s+(q\[\d+\](?:\s*,\s*q\[\d+\])*)\s*;$")
_QUBIT = re.compile(r"q\[(\d+)\]")


def to_qasm(circuit: Circuit) -> str:
    lines = [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        "// roles: " + " ".join(r.value for r in circuit.roles),
        f"qreg q[{circuit.num_qubits}];",
    ]
    for g in circuit.gates:
        name = _NAMES.get(g.kind)
        if name is None:
            raise CircuitError(f"{g} has no QASM form; expand it first")
        lines.append(f"{name} " + ",".join(f"q[{q}]" for q in g.qubits) + ";")
    return "\n".join(lines) + "\n"


def from_qasm(text: str) -> Circuit:
    num_qubits, roles, gates = None, None, []
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("// roles:"):
            roles = tuple(Role(r) for r in line[len("// roles:"):].split())
            continue
        if not line or line.startswith("//") or line.startswith(("OPENQASM", "include")):
            continue
        if line.startswith("qreg"):
            m = re.fullmatch(r"qreg\s+q\[(\d+)\];", line)
            if m is None:
                raise CircuitError(f"unsupported register line: {line!r}")
            num_qubits = int(m.group(1))
            continue
        m = _LINE.match(line)
        if m is None or m.group(1) not in _KINDS:
            raise CircuitError(f"unsupported QASM line: {line!r}")
        qubits = [int(q) for q in _QUBIT.findall(m.group(2))]
        gates.append(Gate(_KINDS[m.group(1)], tuple(qubits[:-1]), qubits[-1]))
    if num_qubits is None:
        raise CircuitError("no qreg declaration")
    return Circuit(num_qubits, roles or (), tuple(gates))
