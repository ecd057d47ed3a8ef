"""Reversible circuit representation and depth accounting.

A :class:`Circuit` is an immutable sequence of :class:`Gate` objects over a
dense qubit registry ``0..N-1``.  Each qubit carries a :class:`Role` that is
metadata only; gates are never checked against roles here.

Depth metrics use as-soon-as-possible scheduling over the fixed gate order::

    start = max(level[q] for q in gate.qubits)
    level[q] = start + weight(gate)   for every q in gate.qubits

so zero-weight gates still synchronize the wires they touch.
"""
from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class CircuitError(ValueError):
    """Raised for malformed gates or circuits."""


class Role(str, enum.Enum):
    CONTROL = "control"
    TARGET = "target"
    CLEAN_ANCILLA = "clean_ancilla"
    DIRTY_ANCILLA = "dirty_ancilla"
    # registry slot not named by the caller; treated like a dirty qubit
    IDLE = "idle"


class GateKind(str, enum.Enum):
    X = "X"
    CNOT = "CNOT"
    TOFFOLI = "Toffoli"
    GEN_TOFFOLI = "GenToffoli"
    H = "H"
    T = "T"
    TDG = "Tdg"


_REVERSIBLE = {GateKind.X, GateKind.CNOT, GateKind.TOFFOLI, GateKind.GEN_TOFFOLI}


@dataclass(frozen=True)
class Gate:
    """One gate: ``target ^= AND(controls)`` for the classical kinds.

    ``H``, ``T`` and ``Tdg`` only appear after Toffoli lowering.
    """

    kind: GateKind
    controls: tuple[int, ...]
    target: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", GateKind(self.kind))
        object.__setattr__(self, "controls", tuple(int(c) for c in self.controls))
        n = len(self.controls)
        expected = {
            GateKind.CNOT: n == 1,
            GateKind.TOFFOLI: n == 2,
            GateKind.GEN_TOFFOLI: n >= 3,
        }.get(self.kind, n == 0)
        if not expected:
            raise CircuitError(f"{self.kind.value} gate cannot have {n} controls")
        if self.target < 0 or any(c < 0 for c in self.controls):
            raise CircuitError("qubit indices must be non-negative")
        if len(set(self.qubits)) != len(self.qubits):
            raise CircuitError(f"duplicate qubit in gate {self}")

    @property
    def qubits(self) -> tuple[int, ...]:
        return self.controls + (self.target,)

    @property
    def is_reversible(self) -> bool:
        """True for the classical permutation gates (X/CNOT/Toffoli/GenToffoli)."""
        return self.kind in _REVERSIBLE

    def __str__(self) -> str:
        if not self.controls:
            return f"{self.kind.value}({self.target})"
        ctrl = ",".join(map(str, self.controls))
        return f"{self.kind.value}({ctrl}->{self.target})"


def x(target: int) -> Gate:
    return Gate(GateKind.X, (), target)


def cnot(control: int, target: int) -> Gate:
    return Gate(GateKind.CNOT, (control,), target)


def toffoli(c1: int, c2: int, target: int) -> Gate:
    return Gate(GateKind.TOFFOLI, (c1, c2), target)


def mcx(controls: Sequence[int], target: int) -> Gate:
    """Controlled-X with the gate kind picked from the number of controls."""
    kinds = {0: GateKind.X, 1: GateKind.CNOT, 2: GateKind.TOFFOLI}
    return Gate(kinds.get(len(controls), GateKind.GEN_TOFFOLI), tuple(controls), target)


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    roles: tuple[Role, ...] = ()
    gates: tuple[Gate, ...] = field(default=())

    def __post_init__(self) -> None:
        roles = tuple(Role(r) for r in self.roles) or (Role.IDLE,) * self.num_qubits
        if len(roles) != self.num_qubits:
            raise CircuitError(
                f"{len(roles)} roles given for a registry of {self.num_qubits} qubits"
            )
        object.__setattr__(self, "roles", roles)
        gates = tuple(self.gates)
        for g in gates:
            self._check(g)
        object.__setattr__(self, "gates", gates)

    def _check(self, gate: Gate) -> None:
        if not isinstance(gate, Gate):
            raise CircuitError(f"not a gate: {gate!r}")
        for q in gate.qubits:
            if q >= self.num_qubits:
                raise CircuitError(f"qubit {q} outside registry of {self.num_qubits}")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def append(self, gate: Gate) -> Circuit:
        self._check(gate)
        return Circuit(self.num_qubits, self.roles, self.gates + (gate,))

    def extend(self, gates: Iterable[Gate]) -> Circuit:
        return Circuit(self.num_qubits, self.roles, self.gates + tuple(gates))

    def with_gates(self, gates: Iterable[Gate]) -> Circuit:
        """Same registry, different gate list."""
        return Circuit(self.num_qubits, self.roles, tuple(gates))

    def qubits_with(self, role: Role) -> list[int]:
        return [q for q, r in enumerate(self.roles) if r is role]

    def to_dict(self) -> dict:
        return {
            "qubits": self.num_qubits,
            "roles": [r.value for r in self.roles],
            "gates": [
                {"kind": g.kind.value, "controls": list(g.controls), "target": g.target}
                for g in self.gates
            ],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> Circuit:
        gates = [Gate(GateKind(g["kind"]), tuple(g["controls"]), g["target"]) for g in data["gates"]]
        return cls(data["qubits"], tuple(Role(r) for r in data["roles"]), tuple(gates))

    @classmethod
    def from_json(cls, text: str) -> Circuit:
        return cls.from_dict(json.loads(text))


def registry(num_qubits: int, assignments: dict[Role, Iterable[int]]) -> tuple[Role, ...]:
    """Role tuple for ``num_qubits`` wires; unnamed wires become ``IDLE``."""
    roles = [Role.IDLE] * num_qubits
    for role, qubits in assignments.items():
        for q in qubits:
            roles[q] = role
    return tuple(roles)


def append(circuit: Circuit, gate: Gate) -> Circuit:
    return circuit.append(gate)


def inverse(circuit: Circuit) -> Circuit:
    """Reverse the gate order and invert each gate.

    The reversible kinds and ``H`` are self-inverse; ``T`` and ``Tdg`` swap.
    """
    swap = {GateKind.T: GateKind.TDG, GateKind.TDG: GateKind.T}
    gates = [
        Gate(swap[g.kind], g.controls, g.target) if g.kind in swap else g
        for g in reversed(circuit.gates)
    ]
    return circuit.with_gates(gates)


def _weighted_depth(circuit: Circuit, weight) -> int:
    level = [0] * circuit.num_qubits
    depth = 0
    for g in circuit.gates:
        qs = g.qubits
        end = max(level[q] for q in qs) + weight(g)
        for q in qs:
            level[q] = end
        depth = max(depth, end)
    return depth


def toffoli_depth(circuit: Circuit) -> int:
    """Critical path counting Toffoli gates as 1 and X/CNOT as 0."""
    for g in circuit.gates:
        if g.kind is GateKind.GEN_TOFFOLI:
            raise CircuitError("toffoli_depth needs expanded circuits; found " + str(g))
    return _weighted_depth(circuit, lambda g: 1 if g.kind is GateKind.TOFFOLI else 0)


def two_qubit_depth(circuit: Circuit) -> int:
    """Critical path counting 2-qubit gates as 1 and 1-qubit gates as 0."""
    for g in circuit.gates:
        if len(g.qubits) > 2:
            raise CircuitError("two_qubit_depth needs a lowered circuit; found " + str(g))
    return _weighted_depth(circuit, lambda g: 1 if len(g.qubits) == 2 else 0)


def gate_counts(circuit: Circuit) -> dict[str, int]:
    counts = Counter(g.kind.value for g in circuit.gates)
    return dict(sorted(counts.items()))
