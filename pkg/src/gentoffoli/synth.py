"""One-call builders on the standard qubit layout.

Generalized Toffoli: controls ``0..n-1``, ancilla ``n..n+m-1``, target
``n+m``.  Fanout: control ``0``, ancilla ``1..m``, targets after that.
"""
from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit
from .clean_dp import CleanDecomposer, DpState
from .dirty import build_groups, decompose_dirty, schedule_bound
from .multi_target import FanoutSpec, decompose_multi, fanout_spec


@dataclass(frozen=True)
class Decomposition:
    circuit: Circuit
    bound: int  # Toffoli-depth bound for C^nX, CNOT-depth bound for fanout
    spec: FanoutSpec | None = None


def cnx_layout(n: int, m: int) -> tuple[list[int], list[int], int]:
    return list(range(n)), list(range(n, n + m)), n + m


def cnx(n: int, m: int, kind: str, decomposer: CleanDecomposer | None = None) -> Decomposition:
    """Decompose ``C^nX`` with ``m`` ancilla of ``kind`` ("clean" or "dirty")."""
    controls, ancilla, target = cnx_layout(n, m)
    if kind == "clean":
        dp = decomposer or CleanDecomposer()
        circuit = dp.decompose(controls, ancilla, target)
        return Decomposition(circuit, int(dp.depth_bound(DpState(n, m, 0)).bound))
    if kind == "dirty":
        circuit = decompose_dirty(controls, ancilla, target)
        if n < 3:
            bound = 1 if n == 2 else 0
        else:
            bound = schedule_bound(build_groups(controls, ancilla[: n - 2], target))
        return Decomposition(circuit, bound)
    raise ValueError(f"unknown ancilla kind {kind!r}")


def fanout(n: int, m: int, kind: str) -> Decomposition:
    """Decompose a one-control, ``n``-target X with ``m`` ancilla of ``kind``."""
    spec = fanout_spec(n, m, kind)
    return Decomposition(decompose_multi(spec), spec.bound(), spec)
