"""Generalized Toffoli with clean ancilla by dynamic programming.

The DP state is ``(n, m, d)``: ``n`` controls still to be ANDed, ``m`` free
clean ancilla and ``d`` idle qubits that may be borrowed as dirty ancilla
(controls already folded into an earlier layer sit idle until that layer is
uncomputed).  Each state takes the cheapest of

* a base case: CNOT (``n <= 1``), Toffoli (``n == 2``), AND tree
  (``m >= n-2``), dirty ladder (``m == 0`` and ``d >= n-2``);
* a *scheme 1* layer of parallel AND trees writing to fresh ancilla;
* a *scheme 2* layer of parallel dirty ladders writing to fresh ancilla;
* discarding one clean ancilla into the idle pool, which keeps the bound
  monotone in ``m``.

A layer costs twice its own depth, since it is uncomputed after the
residual problem has flipped the target.  The bound is an upper bound on
the Toffoli depth of the emitted circuit, not the depth itself.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .circuit import Circuit, Gate, Role, cnot, registry, toffoli, x
from .primitives import ceil_log2, dirty_ladder_gates, log_depth_and_gates


class UnsupportedInstance(ValueError):
    """No construction covers this instance (in-place ``C^nX`` for ``n >= 3``)."""


@dataclass(frozen=True)
class DpState:
    n: int
    m: int
    d: int = 0

    def __post_init__(self) -> None:
        if min(self.n, self.m, self.d) < 0:
            raise ValueError(f"negative DP state {self}")


@dataclass(frozen=True)
class Base:
    kind: str  # "cnot" | "toffoli" | "log_depth" | "dirty_ladder"

    def __str__(self) -> str:
        return self.kind


@dataclass(frozen=True)
class Scheme1:
    k: int
    p: int
    c: int
    sizes: tuple[int, ...]

    def __str__(self) -> str:
        return f"scheme1 k={self.k} p={self.p} c={self.c} sizes={'+'.join(map(str, self.sizes))}"


@dataclass(frozen=True)
class Scheme2:
    p: int
    k: int

    def __str__(self) -> str:
        return f"scheme2 p={self.p} k={self.k}"


@dataclass(frozen=True)
class Discard:
    def __str__(self) -> str:
        return "discard"


@dataclass(frozen=True)
class Infeasible:
    def __str__(self) -> str:
        return "infeasible"


Choice = Union[Base, Scheme1, Scheme2, Discard, Infeasible]


@dataclass(frozen=True)
class DpEntry:
    bound: float  # int when feasible, math.inf otherwise
    choice: Choice

    @property
    def feasible(self) -> bool:
        return not isinstance(self.choice, Infeasible)


INFEASIBLE = DpEntry(math.inf, Infeasible())

# tie-break rank: base cases, then scheme 1, scheme 2, discard
_RANK = {Base: 0, Scheme1: 1, Scheme2: 2, Discard: 3}


def and_tree_depth(k: int) -> int:
    return 2 * ceil_log2(k) - 1


def ladder_depth(k: int) -> int:
    """Toffoli depth of a ``k``-control dirty ladder; a 2-control group is one Toffoli."""
    return 1 if k == 2 else 4 * k - 8


def greedy_sizes(n: int, m: int, k: int) -> list[int]:
    """Scheme-1 split: largest subcircuits first, each size ``j`` taking ``j`` controls and ``j-1`` ancilla."""
    sizes = []
    controls, ancilla = n, m
    for j in range(k, 1, -1):
        while controls >= j and ancilla >= j - 1:
            sizes.append(j)
            controls -= j
            ancilla -= j - 1
    return sizes


def scheme2_k(n: int, p: int) -> int | None:
    """Group size for ``p`` parallel dirty ladders, or None if no integer fits.

    ``k`` must satisfy ``(n+p-2)/(2p) <= k <= (n+2p)/(2p)``: the unassigned
    controls can serve as borrows for the groups, and the group outputs plus
    idle controls can serve as borrows for the residual ladder.  Among valid
    ``k`` the one minimizing ``(2-p)*k`` wins (smaller ``k`` on ties).
    """
    lo = max(2, -(-(n + p - 2) // (2 * p)))
    hi = min((n + 2 * p) // (2 * p), n // p)
    if lo > hi:
        return None
    return hi if p > 2 else lo


class CleanDecomposer:
    """Memoized bound table plus circuit reconstruction.

    One instance owns one memo table and is not meant to be shared between
    threads; make one per worker.
    """

    def __init__(self) -> None:
        self._memo: dict[DpState, DpEntry] = {}

    def depth_bound(self, state: DpState | tuple[int, int, int]) -> DpEntry:
        if not isinstance(state, DpState):
            state = DpState(*state)
        entry = self._memo.get(state)
        if entry is None:
            entry = self._solve(state)
            self._memo[state] = entry
        return entry

    def _solve(self, s: DpState) -> DpEntry:
        n, m, d = s.n, s.m, s.d
        if n <= 1:
            return DpEntry(0, Base("cnot"))
        if n == 2:
            return DpEntry(1, Base("toffoli"))
        options: list[tuple[float, int, int, Choice]] = []
        if m >= n - 2:
            options.append((and_tree_depth(n), 0, 0, Base("log_depth")))
        if m == 0 and d >= n - 2:
            options.append((4 * n - 8, 0, 0, Base("dirty_ladder")))
        if m >= 1:
            for cost, ch in self.scheme1_candidates(s):
                options.append((cost, 1, ch.k, ch))
            for cost, ch in self.scheme2_candidates(s):
                options.append((cost, 2, ch.k, ch))
            rest = self.depth_bound(DpState(n, m - 1, d + 1))
            if rest.feasible:
                options.append((rest.bound, 3, 0, Discard()))
        if not options:
            return INFEASIBLE
        cost, _, _, choice = min(options, key=lambda o: o[:3])
        return DpEntry(cost, choice)

    def scheme1_candidates(self, s: DpState) -> list[tuple[int, Scheme1]]:
        n, m, d = s.n, s.m, s.d
        if m < 1 or n < 3:
            return []
        out = []
        for k in range(2, m + 2):
            sizes = greedy_sizes(n, m, k)
            if not sizes:
                continue
            p, c = len(sizes), sum(sizes)
            rest = self.depth_bound(DpState(n - c + p, m - p, d + c))
            if rest.feasible:
                # the largest subcircuit is the first one; it may be smaller than k
                out.append((2 * and_tree_depth(sizes[0]) + rest.bound, Scheme1(k, p, c, tuple(sizes))))
        return out

    def scheme2_candidates(self, s: DpState) -> list[tuple[int, Scheme2]]:
        n, m, d = s.n, s.m, s.d
        if m < 1 or n < 3:
            return []
        out = []
        for p in range(m, 0, -1):
            k = scheme2_k(n, p)
            if k is None:
                continue
            rest = self.depth_bound(DpState(n - p * k + p, m - p, d + p * k))
            if rest.feasible:
                out.append((2 * ladder_depth(k) + rest.bound, Scheme2(p, k)))
        return out

    def table(self) -> list[tuple[DpState, DpEntry]]:
        return sorted(self._memo.items(), key=lambda kv: (kv[0].n, kv[0].m, kv[0].d))

    def plan(self, controls: Sequence[int], ancilla: Sequence[int], target: int,
             idle: Sequence[int] = ()) -> Plan:
        entry = self.depth_bound(DpState(len(controls), len(ancilla), len(idle)))
        if not entry.feasible:
            raise UnsupportedInstance(
                f"no clean decomposition for {len(controls)} controls with "
                f"{len(ancilla)} clean ancilla and {len(idle)} idle qubits"
            )
        return self._plan(list(controls), sorted(ancilla), sorted(idle), target)

    def _plan(self, controls: list[int], free: list[int], idle: list[int], target: int) -> Plan:
        n = len(controls)
        state = DpState(n, len(free), len(idle))
        choice = self.depth_bound(state).choice

        if isinstance(choice, Base):
            if choice.kind == "cnot":
                kind = "x" if n == 0 else "cnot"
                sub = Subcircuit(kind, tuple(controls), (), target)
            elif choice.kind == "toffoli":
                sub = Subcircuit("toffoli", tuple(controls), (), target)
            elif choice.kind == "log_depth":
                sub = Subcircuit("log_depth", tuple(controls), tuple(free[: n - 2]), target)
            else:
                sub = Subcircuit("dirty_ladder", tuple(controls), tuple(idle[: n - 2]), target)
            return Plan(state, choice, (sub,), None)

        if isinstance(choice, Discard):
            residual = self._plan(controls, free[:-1], sorted(idle + free[-1:]), target)
            return Plan(state, choice, (), residual)

        if isinstance(choice, Scheme1):
            subs, outputs, spent = [], [], []
            pos = apos = 0
            for j in choice.sizes:
                group = controls[pos: pos + j]
                anc = free[apos: apos + j - 1]
                pos, apos = pos + j, apos + j - 1
                out, internal = anc[0], anc[1:]
                kind = "toffoli" if j == 2 else "log_depth"
                subs.append(Subcircuit(kind, tuple(group), tuple(internal), out))
                outputs.append(out)
                spent.append(out)
            remaining_free = sorted(set(free) - set(spent))
            residual = self._plan(
                controls[pos:] + outputs, remaining_free, sorted(idle + controls[:pos]), target
            )
            return Plan(state, choice, tuple(subs), residual)

        if isinstance(choice, Scheme2):
            p, k = choice.p, choice.k
            outputs = free[:p]
            unassigned = controls[p * k:]
            pool = sorted(unassigned) + idle + free[p:]
            subs = []
            for i in range(p):
                group = controls[i * k: (i + 1) * k]
                if k == 2:
                    subs.append(Subcircuit("toffoli", tuple(group), (), outputs[i]))
                    continue
                borrow, pool = pool[: k - 2], pool[k - 2:]
                assert len(borrow) == k - 2, "scheme-2 interval guarantees enough borrows"
                subs.append(Subcircuit("dirty_ladder", tuple(group), tuple(borrow), outputs[i]))
            residual = self._plan(
                unassigned + outputs, free[p:], sorted(idle + controls[: p * k]), target
            )
            return Plan(state, choice, tuple(subs), residual)

        raise UnsupportedInstance(f"infeasible DP state {state}")

    def decompose(self, controls: Sequence[int], ancilla: Sequence[int], target: int) -> Circuit:
        plan = self.plan(controls, ancilla, target)
        qubits = [*controls, *ancilla, target]
        roles = registry(
            max(qubits) + 1,
            {Role.CONTROL: controls, Role.CLEAN_ANCILLA: ancilla, Role.TARGET: [target]},
        )
        return Circuit(len(roles), roles, tuple(plan.gates()))


@dataclass(frozen=True)
class Subcircuit:
    construction: str  # "x" | "cnot" | "toffoli" | "log_depth" | "dirty_ladder"
    controls: tuple[int, ...]
    ancilla: tuple[int, ...]
    target: int

    def gates(self) -> list[Gate]:
        if self.construction == "x":
            return [x(self.target)]
        if self.construction == "cnot":
            return [cnot(self.controls[0], self.target)]
        if self.construction == "toffoli":
            return [toffoli(self.controls[0], self.controls[1], self.target)]
        if self.construction == "log_depth":
            return log_depth_and_gates(self.controls, self.ancilla, self.target)
        return dirty_ladder_gates(self.controls, self.ancilla, self.target)


@dataclass(frozen=True)
class Plan:
    """One layer of the decomposition and the plan for what remains.

    The subcircuits of a layer act on disjoint qubits.  A layer with a
    residual is emitted as ``layer, residual, reversed(layer)``.
    """

    state: DpState
    choice: Choice
    subcircuits: tuple[Subcircuit, ...]
    residual: Plan | None

    def layers(self) -> Iterator[Plan]:
        node: Plan | None = self
        while node is not None:
            yield node
            node = node.residual

    def signature(self) -> list[tuple[int, int, str, tuple[int, ...]]]:
        """``(n, m, construction, control counts)`` per non-empty layer."""
        rows = []
        for node in self.layers():
            if node.subcircuits:
                kinds = sorted({s.construction for s in node.subcircuits})
                sizes = tuple(len(s.controls) for s in node.subcircuits)
                rows.append((node.state.n, node.state.m, "/".join(kinds), sizes))
        return rows

    def gates(self) -> list[Gate]:
        layer = [g for sub in self.subcircuits for g in sub.gates()]
        if self.residual is None:
            return layer
        return layer + self.residual.gates() + layer[::-1]


def depth_bound(state: DpState | tuple[int, int, int]) -> DpEntry:
    return CleanDecomposer().depth_bound(state)


def scheme1_candidates(state: DpState) -> list[tuple[int, Scheme1]]:
    return CleanDecomposer().scheme1_candidates(state)


def scheme2_candidates(state: DpState) -> list[tuple[int, Scheme2]]:
    return CleanDecomposer().scheme2_candidates(state)


def decompose_clean(controls: Sequence[int], ancilla: Sequence[int], target: int) -> Circuit:
    """``C^nX`` on ``target`` using clean ``ancilla``; all ancilla end at 0.

    Raises :class:`UnsupportedInstance` for ``n >= 3`` with no ancilla.
    """
    return CleanDecomposer().decompose(controls, ancilla, target)
