"""Single-control, many-target X (fanout) with clean or dirty ancilla.

Ancilla act as extra copies of the control.  The targets are dealt
round-robin into ``m_used + 1`` blocks; block 0 is driven by the control
itself and block ``j`` by ancilla ``a_j``.

Clean ancilla are loaded by a CNOT chain from the control and unloaded by
the mirrored chain.  A dirty ancilla holds an unknown ``v``, so its block is
hit twice: once with ``v ^ control`` and once with ``v``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .circuit import Circuit, CircuitError, Gate, Role, cnot, registry

KINDS = ("clean", "dirty")


def fanout_bound(n: int, m_used: int, kind: str) -> int:
    """Depth bound ``2m + ceil(n/(m+1))`` (clean) or ``2m + 2*ceil(n/(m+1))`` (dirty)."""
    per_block = -(-n // (m_used + 1))
    if kind == "clean":
        return 2 * m_used + per_block
    if kind == "dirty":
        return 2 * m_used + 2 * per_block
    raise ValueError(f"unknown ancilla kind {kind!r}")


def optimal_ancilla_count(n: int, m: int, kind: str) -> int:
    """How many of the ``m`` available ancilla are worth using for ``n`` targets.

    The real-valued optimum is ``sqrt(n/2) - 1`` (clean) or ``sqrt(n) - 1``
    (dirty); its floor and ceiling, clipped to ``[0, m]``, are compared and
    the smaller bound wins.  If that bound is still worse than the plain
    chain of ``n`` CNOTs, no ancilla are used.
    """
    if n < 1 or m < 0:
        raise ValueError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    if kind not in KINDS:
        raise ValueError(f"unknown ancilla kind {kind!r}")
    opt = math.sqrt(n / 2) - 1 if kind == "clean" else math.sqrt(n) - 1
    candidates = sorted({min(max(c, 0), m) for c in (math.floor(opt), math.ceil(opt))})
    best = min(candidates, key=lambda c: (fanout_bound(n, c, kind), c))
    if best and fanout_bound(n, best, kind) > n:
        return 0
    return best


@dataclass(frozen=True)
class FanoutSpec:
    control: int
    targets: tuple[int, ...]
    ancilla: tuple[int, ...] = ()
    ancilla_kind: str = "clean"
    m_used: int | None = field(default=None)

    def __post_init__(self) -> None:
        object.__setattr__(self, "targets", tuple(self.targets))
        object.__setattr__(self, "ancilla", tuple(self.ancilla))
        if self.ancilla_kind not in KINDS:
            raise CircuitError(f"unknown ancilla kind {self.ancilla_kind!r}")
        if not self.targets:
            raise CircuitError("fanout needs at least one target")
        qubits = [self.control, *self.targets, *self.ancilla]
        if len(set(qubits)) != len(qubits):
            raise CircuitError("control, targets and ancilla overlap")
        if self.m_used is None:
            used = optimal_ancilla_count(len(self.targets), len(self.ancilla), self.ancilla_kind)
            object.__setattr__(self, "m_used", used)
        elif not 0 <= self.m_used <= len(self.ancilla):
            raise CircuitError(f"m_used={self.m_used} outside [0, {len(self.ancilla)}]")

    @property
    def num_qubits(self) -> int:
        return max(self.control, *self.targets, *self.ancilla) + 1

    def roles(self) -> tuple[Role, ...]:
        anc = Role.CLEAN_ANCILLA if self.ancilla_kind == "clean" else Role.DIRTY_ANCILLA
        return registry(
            self.num_qubits,
            {Role.CONTROL: [self.control], Role.TARGET: self.targets, anc: self.ancilla},
        )

    def bound(self) -> int:
        return fanout_bound(len(self.targets), self.m_used, self.ancilla_kind)

    def blocks(self) -> list[tuple[int, ...]]:
        """Round-robin target blocks; block 0 belongs to the control."""
        k = self.m_used + 1
        return [self.targets[i::k] for i in range(k)]


def _circuit(spec: FanoutSpec, gates: list[Gate]) -> Circuit:
    return Circuit(spec.num_qubits, spec.roles(), tuple(gates))


def decompose_multi_clean(spec: FanoutSpec) -> Circuit:
    if spec.ancilla_kind != "clean":
        raise CircuitError("decompose_multi_clean needs clean ancilla")
    used = spec.ancilla[: spec.m_used]
    own, *rest = spec.blocks()
    gates: list[Gate] = []
    for a, block in zip(used, rest):
        gates.append(cnot(spec.control, a))
        gates.extend(cnot(a, t) for t in block)
    gates.extend(cnot(spec.control, t) for t in own)
    gates.extend(cnot(spec.control, a) for a in reversed(used))
    return _circuit(spec, gates)


def decompose_multi_dirty(spec: FanoutSpec) -> Circuit:
    if spec.ancilla_kind != "dirty":
        raise CircuitError("decompose_multi_dirty needs dirty ancilla")
    used = spec.ancilla[: spec.m_used]
    own, *rest = spec.blocks()
    gates: list[Gate] = []
    for a, block in zip(used, rest):
        gates.append(cnot(spec.control, a))
        gates.extend(cnot(a, t) for t in block)
    # the control would otherwise idle while the first-pass blocks run
    gates.extend(cnot(spec.control, t) for t in own)
    for a, block in zip(used, rest):
        gates.append(cnot(spec.control, a))
        gates.extend(cnot(a, t) for t in block)
    return _circuit(spec, gates)


def decompose_multi(spec: FanoutSpec) -> Circuit:
    if spec.ancilla_kind == "clean":
        return decompose_multi_clean(spec)
    return decompose_multi_dirty(spec)


def fanout_spec(n: int, m: int, kind: str, m_used: int | None = None) -> FanoutSpec:
    """Standard layout: control 0, ancilla ``1..m``, targets ``m+1..m+n``."""
    return FanoutSpec(0, tuple(range(m + 1, m + n + 1)), tuple(range(1, m + 1)), kind, m_used)

