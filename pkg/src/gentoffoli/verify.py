"""Exhaustive oracles for decomposed circuits.

Basis states are packed integers, bit ``q`` holding qubit ``q``.  Sweeps run
every gate over a whole numpy vector of states at once, so checking all
``2**17`` inputs of a circuit costs one AND/XOR pass per gate.

Lowered circuits (with ``H``/``T``/``Tdg``) are compared as dense unitaries
instead, which caps them at :data:`MAX_UNITARY_QUBITS`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .circuit import Circuit, CircuitError, Gate, GateKind, Role

MAX_EXHAUSTIVE_QUBITS = 22
MAX_UNITARY_QUBITS = 11


def bits_to_int(bits: Sequence[int]) -> int:
    return sum((int(b) & 1) << i for i, b in enumerate(bits))


def int_to_bits(value: int, width: int) -> tuple[int, ...]:
    return tuple((value >> i) & 1 for i in range(width))


def _controls_mask(gate: Gate) -> int:
    mask = 0
    for c in gate.controls:
        mask |= 1 << c
    return mask


def _require_reversible(circuit: Circuit) -> None:
    for g in circuit.gates:
        if not g.is_reversible:
            raise CircuitError(f"{g} is not a classical reversible gate")


def simulate(circuit: Circuit, state: int | Sequence[int]):
    """Run ``circuit`` on one basis state.

    ``state`` is either a packed int or a bit sequence of length
    ``circuit.num_qubits``; the result has the same form.
    """
    _require_reversible(circuit)
    as_bits = not isinstance(state, (int, np.integer))
    if as_bits:
        if len(state) != circuit.num_qubits:
            raise CircuitError(f"state has {len(state)} bits, circuit has {circuit.num_qubits} qubits")
        value = bits_to_int(state)
    else:
        value = int(state)
        if not 0 <= value < 1 << circuit.num_qubits:
            raise CircuitError(f"state {value} does not fit {circuit.num_qubits} qubits")
    for g in circuit.gates:
        mask = _controls_mask(g)
        if value & mask == mask:
            value ^= 1 << g.target
    return int_to_bits(value, circuit.num_qubits) if as_bits else value


def simulate_all(circuit: Circuit, states: np.ndarray) -> np.ndarray:
    """Vectorised :func:`simulate` over an array of packed states."""
    _require_reversible(circuit)
    out = np.array(states, dtype=np.int64, copy=True)
    for g in circuit.gates:
        mask = _controls_mask(g)
        hit = (out & mask) == mask
        out ^= hit.astype(np.int64) << g.target
    return out


def enumerate_states(num_qubits: int, free: Sequence[int], fixed: int = 0) -> np.ndarray:
    """All states with the ``free`` qubits swept and the others taken from ``fixed``."""
    if len(free) > MAX_EXHAUSTIVE_QUBITS:
        raise CircuitError(f"{len(free)} free qubits is too many for an exhaustive sweep")
    idx = np.arange(1 << len(free), dtype=np.int64)
    states = np.full(idx.shape, fixed, dtype=np.int64)
    for i, q in enumerate(free):
        states |= ((idx >> i) & 1) << q
    return states


@dataclass
class VerificationReport:
    ok: bool
    states_checked: int
    counterexample: dict | None = None
    checks: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "states_checked": self.states_checked,
            "counterexample": self.counterexample,
            **self.checks,
        }


def _bitstring(value: int, width: int) -> str:
    # qubit 0 first
    return "".join(str(b) for b in int_to_bits(value, width))


def _compare(circuit: Circuit, inputs: np.ndarray, expected: np.ndarray) -> VerificationReport:
    got = simulate_all(circuit, inputs)
    bad = np.nonzero(got != expected)[0]
    if bad.size == 0:
        return VerificationReport(True, int(inputs.size))
    i = int(bad[0])
    q = circuit.num_qubits
    diff = int(got[i] ^ expected[i])
    return VerificationReport(
        False,
        int(inputs.size),
        {
            "input": _bitstring(int(inputs[i]), q),
            "expected": _bitstring(int(expected[i]), q),
            "got": _bitstring(int(got[i]), q),
            "wrong_qubits": [b for b in range(q) if diff >> b & 1],
        },
    )


def _free_qubits(roles: Sequence[Role]) -> list[int]:
    return [q for q, r in enumerate(roles) if r is not Role.CLEAN_ANCILLA]


def verify_cnx(circuit: Circuit, roles: Sequence[Role] | None = None) -> VerificationReport:
    """Check that ``circuit`` is a generalized Toffoli under ``roles``.

    Clean ancilla start at 0; every other qubit is swept.  The single target
    must flip iff all controls are 1, and every other qubit must come back
    unchanged.
    """
    roles = tuple(roles) if roles is not None else circuit.roles
    if len(roles) != circuit.num_qubits:
        raise CircuitError("roles do not match the circuit registry")
    targets = [q for q, r in enumerate(roles) if r is Role.TARGET]
    if len(targets) != 1:
        raise CircuitError(f"expected exactly one target, found {len(targets)}")
    target = targets[0]
    ctrl_mask = sum(1 << q for q, r in enumerate(roles) if r is Role.CONTROL)

    inputs = enumerate_states(circuit.num_qubits, _free_qubits(roles))
    fire = ((inputs & ctrl_mask) == ctrl_mask).astype(np.int64)
    return _compare(circuit, inputs, inputs ^ (fire << target))


def verify_multi_target(circuit: Circuit, spec=None) -> VerificationReport:
    """Check the single-control fanout contract.

    ``spec`` is a :class:`~gentoffoli.multi_target.FanoutSpec`; without it the
    circuit's own roles are used.  Dirty ancilla are swept over every value.
    """
    if spec is not None:
        roles = spec.roles()
    else:
        roles = circuit.roles
    if len(roles) != circuit.num_qubits:
        raise CircuitError("roles do not match the circuit registry")
    controls = [q for q, r in enumerate(roles) if r is Role.CONTROL]
    if len(controls) != 1:
        raise CircuitError(f"fanout needs exactly one control, found {len(controls)}")
    control = controls[0]
    tmask = sum(1 << q for q, r in enumerate(roles) if r is Role.TARGET)

    inputs = enumerate_states(circuit.num_qubits, _free_qubits(roles))
    fire = (inputs >> control) & 1
    return _compare(circuit, inputs, inputs ^ (fire * tmask))


_SQRT_HALF = 1 / np.sqrt(2)
_PHASE = {GateKind.T: np.exp(1j * np.pi / 4), GateKind.TDG: np.exp(-1j * np.pi / 4)}


def unitary(circuit: Circuit) -> np.ndarray:
    """Dense ``2**q x 2**q`` unitary; row/column index bit ``q`` is qubit ``q``."""
    nq = circuit.num_qubits
    if nq > MAX_UNITARY_QUBITS:
        raise CircuitError(f"{nq} qubits is too many for a dense unitary")
    dim = 1 << nq
    u = np.eye(dim, dtype=complex)
    # one axis per row bit, most significant first, then the column axis
    t = u.reshape((2,) * nq + (dim,))

    def axis(q: int) -> int:
        return nq - 1 - q

    def where(fixed: dict[int, int]):
        idx = [slice(None)] * (nq + 1)
        for q, b in fixed.items():
            idx[axis(q)] = b
        return tuple(idx)

    for g in circuit.gates:
        on = {c: 1 for c in g.controls}
        if g.is_reversible:
            lo, hi = where({**on, g.target: 0}), where({**on, g.target: 1})
            tmp = t[lo].copy()
            t[lo] = t[hi]
            t[hi] = tmp
        elif g.kind in _PHASE:
            t[where({g.target: 1})] *= _PHASE[g.kind]
        elif g.kind is GateKind.H:
            lo, hi = where({g.target: 0}), where({g.target: 1})
            a, b = t[lo].copy(), t[hi].copy()
            t[lo] = (a + b) * _SQRT_HALF
            t[hi] = (a - b) * _SQRT_HALF
        else:
            raise CircuitError(f"no matrix for {g}")
    return u


def unitary_equal(circuit_a: Circuit, circuit_b: Circuit, tol: float = 1e-9) -> bool:
    """Dense comparison up to a global phase.

    The phase is fixed from the largest-magnitude entry of ``circuit_a``.
    """
    if circuit_a.num_qubits != circuit_b.num_qubits:
        raise CircuitError("circuits act on different numbers of qubits")
    ua, ub = unitary(circuit_a), unitary(circuit_b)
    k = np.unravel_index(np.argmax(np.abs(ua)), ua.shape)
    if abs(ub[k]) < tol:
        return False
    phase = ub[k] / ua[k]
    phase /= abs(phase)
    return float(np.max(np.abs(ua * phase - ub))) <= tol
