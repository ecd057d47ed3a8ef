"""Generalized Toffoli with ``1 <= m <= n-2`` dirty ancilla.

Controls are split into ``m+1`` groups chained through the ancilla::

    G_1     = (C.., C.. -> A_1)
    G_i     = (A_{i-1}, C.. -> A_i)        1 < i <= m
    G_{m+1} = (A_m, C.. -> T)

and one generalized Toffoli per group is scheduled ``up, down, up, down``
where *up* is ``G_{m+1} .. G_1`` and *down* is ``G_2 .. G_m``.  Every group
with ``k >= 3`` controls is then expanded into a dirty ladder that borrows
``k-2`` qubits from outside the group.

With ``m = n-2`` every group is a Toffoli and the result is exactly
:func:`~gentoffoli.primitives.dirty_ladder`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .circuit import Circuit, CircuitError, Gate, GateKind, Role, mcx, registry
from .clean_dp import UnsupportedInstance, ladder_depth
from .primitives import dirty_ladder_gates


@dataclass(frozen=True)
class Group:
    """Controls followed by the group's target (last member)."""

    members: tuple[int, ...]

    @property
    def controls(self) -> tuple[int, ...]:
        return self.members[:-1]

    @property
    def target(self) -> int:
        return self.members[-1]

    @property
    def size(self) -> int:
        return len(self.members) - 1

    def gate(self) -> Gate:
        return mcx(self.controls, self.target)


def group_cap(n: int, m: int) -> int:
    """Largest control count a group may take.

    The preferred cap keeps ``2k - 2 < n``.  For small ``m`` that cap cannot
    hold all ``n`` controls (``m = 1`` with ``n`` even), and the cap widens to
    what borrowing actually needs: ``k - 2`` qubits outside a ``k``-control
    group of an ``n + m + 1`` qubit register, i.e. ``2k <= n + m + 2``.
    """
    cap = (n + 1) // 2
    if cap + m * (cap - 1) >= n:
        return cap
    return (n + m + 2) // 2


def build_groups(controls: Sequence[int], ancilla: Sequence[int], target: int,
                 extras: Sequence[int] | None = None) -> list[Group]:
    """Partition the controls into ``m+1`` chained groups.

    Every group starts with two controls (counting its incoming ancilla).
    Leftover controls go to ``G_1``, then ``G_{m+1}``, then ``G_2 .. G_m``,
    each filled up to :func:`group_cap`.  ``extras`` overrides how many
    leftover controls each group receives, e.g. ``[0, 0, 1, 1]``.
    """
    n, m = len(controls), len(ancilla)
    if n < 3:
        raise CircuitError(f"grouping needs at least 3 controls, got {n}")
    if not 1 <= m <= n - 2:
        raise CircuitError(f"grouping needs 1 <= m <= n-2 ancilla, got m={m}, n={n}")

    fresh = [2] + [1] * m
    leftover = n - sum(fresh)
    if extras is None:
        cap = group_cap(n, m)
        extras = [0] * (m + 1)
        for i in [0, m, *range(1, m)]:
            size = fresh[i] + (i > 0)
            take = min(leftover, cap - size)
            extras[i] += take
            leftover -= take
        assert leftover == 0, "group cap leaves controls unassigned"
    else:
        extras = list(extras)
        if len(extras) != m + 1 or min(extras) < 0 or sum(extras) != leftover:
            raise CircuitError(f"extras must be {m + 1} non-negative counts summing to {leftover}")

    groups, pos = [], 0
    for i in range(m + 1):
        count = fresh[i] + extras[i]
        head = (ancilla[i - 1],) if i > 0 else ()
        tail = ancilla[i] if i < m else target
        groups.append(Group((*head, *controls[pos: pos + count], tail)))
        pos += count
    return groups


def schedule(groups: Sequence[Group]) -> list[Group]:
    """Groups in ``up, down, up, down`` order."""
    up = list(reversed(groups))
    down = list(groups[1:-1])
    return up + down + up + down


def schedule_bound(groups: Sequence[Group]) -> int:
    """Toffoli depth of the schedule if no two group gates overlap."""
    return sum(ladder_depth(g.size) for g in schedule(groups))


def group_depth(circuit: Circuit) -> int:
    """Toffoli depth with each unexpanded ``C^kX`` weighted as its ladder, ``4k - 8``.

    This is the depth of the schedule read at the level of group gates;
    expansion can only lower it, when a ladder's first rungs slip past the
    previous group.
    """
    level = [0] * circuit.num_qubits
    depth = 0
    for g in circuit.gates:
        k = len(g.controls)
        weight = ladder_depth(k) if k >= 2 else 0
        end = max(level[q] for q in g.qubits) + weight
        for q in g.qubits:
            level[q] = end
        depth = max(depth, end)
    return depth


def _registry(controls, ancilla, target) -> tuple[int, tuple[Role, ...]]:
    qubits = [*controls, *ancilla, target]
    if len(set(qubits)) != len(qubits):
        raise CircuitError("controls, ancilla and target must be distinct qubits")
    roles = registry(
        max(qubits) + 1,
        {Role.CONTROL: controls, Role.DIRTY_ANCILLA: ancilla, Role.TARGET: [target]},
    )
    return len(roles), roles


def dirty_schedule(controls: Sequence[int], ancilla: Sequence[int], target: int,
                   extras: Sequence[int] | None = None) -> Circuit:
    """The unexpanded up/down/up/down circuit of generalized Toffolis."""
    n = len(controls)
    if n >= 3 and not ancilla:
        raise UnsupportedInstance(f"no dirty decomposition of C^{n}X without ancilla")
    nq, roles = _registry(controls, ancilla, target)
    if n < 3:
        return Circuit(nq, roles, (mcx(controls, target),))
    used = list(ancilla[: n - 2])
    groups = build_groups(controls, used, target, extras)
    return Circuit(nq, roles, tuple(g.gate() for g in schedule(groups)))


def expand_generalized(circuit: Circuit) -> Circuit:
    """Expand every GenToffoli into a dirty ladder.

    A ``k``-control gate borrows the ``k-2`` lowest-indexed qubits it does
    not touch; they may hold anything since the ladder restores them.
    """
    out: list[Gate] = []
    for g in circuit.gates:
        if g.kind is not GateKind.GEN_TOFFOLI:
            out.append(g)
            continue
        k = len(g.controls)
        busy = set(g.qubits)
        borrow = [q for q in range(circuit.num_qubits) if q not in busy][: k - 2]
        if len(borrow) < k - 2:
            raise CircuitError(f"not enough idle qubits to expand {g}")
        out.extend(dirty_ladder_gates(g.controls, borrow, g.target))
    return circuit.with_gates(out)


def decompose_dirty(controls: Sequence[int], ancilla: Sequence[int], target: int,
                    extras: Sequence[int] | None = None) -> Circuit:
    """``C^nX`` on ``target`` restoring dirty ``ancilla`` for any initial value.

    At most ``n-2`` ancilla are used.  ``n < 3`` returns a single X, CNOT
    or Toffoli; ``n >= 3`` with no ancilla raises
    :class:`~gentoffoli.clean_dp.UnsupportedInstance`.
    """
    return expand_generalized(dirty_schedule(controls, ancilla, target, extras))

