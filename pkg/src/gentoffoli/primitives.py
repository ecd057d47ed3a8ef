"""Component circuits every decomposition is assembled from.

* :func:`dirty_ladder`: ``C^nX`` with ``n-2`` dirty ancilla, ``4n-8`` Toffolis.
* :func:`log_depth_and`: ``C^nX`` with ``n-2`` clean ancilla as a balanced AND
  tree, Toffoli depth ``2*ceil(log2 n) - 1``.
* :func:`lower_toffoli`: rewrite Toffolis into CNOT + ``{H, T, Tdg}``.

The ``*_gates`` helpers return bare gate lists so the decomposers can splice
them into larger registries; the public functions wrap them as circuits.
"""
from __future__ import annotations

from typing import Sequence

from .circuit import Circuit, CircuitError, Gate, GateKind, Role, cnot, registry, toffoli


def ceil_log2(n: int) -> int:
    return (n - 1).bit_length() if n > 1 else 0


def _distinct(*groups: Sequence[int]) -> None:
    flat = [q for g in groups for q in g]
    if len(set(flat)) != len(flat):
        raise CircuitError("controls, ancilla and target must be distinct qubits")


def _wrap(gates: list[Gate], controls, ancilla, target, ancilla_role: Role) -> Circuit:
    qubits = [*controls, *ancilla, target]
    roles = registry(
        max(qubits) + 1,
        {Role.CONTROL: controls, ancilla_role: ancilla, Role.TARGET: [target]},
    )
    return Circuit(len(roles), roles, tuple(gates))


def dirty_ladder_gates(controls: Sequence[int], ancilla: Sequence[int], target: int) -> list[Gate]:
    n = len(controls)
    if n < 3:
        raise CircuitError(f"dirty ladder needs at least 3 controls, got {n}")
    if len(ancilla) != n - 2:
        raise CircuitError(f"dirty ladder on {n} controls needs {n - 2} ancilla, got {len(ancilla)}")
    _distinct(controls, ancilla, [target])
    c, a = controls, ancilla

    # rung i (1-based, i = n-3 .. 1): Toffoli(A_i, C_{i+2} -> A_{i+1})
    descend = [toffoli(a[i - 1], c[i + 1], a[i]) for i in range(n - 3, 0, -1)]
    ascend = descend[::-1]
    top = toffoli(a[n - 3], c[n - 1], target)
    bottom = toffoli(c[0], c[1], a[0])
    inner = [*descend, bottom, *ascend]
    return [top, *inner, top, *inner]


def dirty_ladder(controls: Sequence[int], ancilla: Sequence[int], target: int) -> Circuit:
    """Flip ``target`` iff all controls are 1, restoring dirty ``ancilla``.

    Works for every initial ancilla value (bit-toggling: the ladder runs twice).
    Emits exactly ``4n - 8`` Toffolis, all on the critical path.
    """
    gates = dirty_ladder_gates(controls, ancilla, target)
    return _wrap(gates, controls, ancilla, target, Role.DIRTY_ANCILLA)


def log_depth_and_gates(controls: Sequence[int], ancilla: Sequence[int], target: int) -> list[Gate]:
    n = len(controls)
    if n < 2:
        raise CircuitError(f"AND tree needs at least 2 controls, got {n}")
    if len(ancilla) != n - 2:
        raise CircuitError(f"AND tree on {n} controls needs {n - 2} ancilla, got {len(ancilla)}")
    _distinct(controls, ancilla, [target])

    free = list(ancilla)
    level = list(controls)
    compute: list[Gate] = []
    while len(level) > 2:
        nxt = []
        for i in range(0, len(level) - 1, 2):
            out = free.pop(0)
            compute.append(toffoli(level[i], level[i + 1], out))
            nxt.append(out)
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    root = toffoli(level[0], level[1], target)
    return [*compute, root, *reversed(compute)]


def log_depth_and(controls: Sequence[int], ancilla: Sequence[int], target: int) -> Circuit:
    """Balanced binary AND tree onto ``target`` using clean ``ancilla``.

    Pairs are formed left to right on each level and an odd element passes
    through unchanged.  Internal nodes are uncomputed after the root, so the
    ancilla return to 0.
    """
    gates = log_depth_and_gates(controls, ancilla, target)
    return _wrap(gates, controls, ancilla, target, Role.CLEAN_ANCILLA)


def toffoli_network(a: int, b: int, c: int) -> list[Gate]:
    """6-CNOT, 7-T network equal to Toffoli(a, b -> c)."""

    def one(kind: GateKind, q: int) -> Gate:
        return Gate(kind, (), q)

    H, T, TDG = GateKind.H, GateKind.T, GateKind.TDG
    return [
        one(H, c),
        cnot(b, c), one(TDG, c),
        cnot(a, c), one(T, c),
        cnot(b, c), one(TDG, c),
        cnot(a, c), one(T, b), one(T, c),
        one(H, c),
        cnot(a, b), one(T, a), one(TDG, b),
        cnot(a, b),
    ]


def lower_toffoli(circuit: Circuit) -> Circuit:
    """Replace every Toffoli in place by :func:`toffoli_network`."""
    out: list[Gate] = []
    for g in circuit.gates:
        if g.kind is GateKind.GEN_TOFFOLI:
            raise CircuitError("expand generalized Toffolis before lowering")
        if g.kind is GateKind.TOFFOLI:
            out.extend(toffoli_network(g.controls[0], g.controls[1], g.target))
        else:
            out.append(g)
    return circuit.with_gates(out)
