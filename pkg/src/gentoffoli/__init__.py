"""Generalized Toffoli and fanout decompositions for any number of clean or dirty ancilla."""
from .circuit import (
    Circuit,
    CircuitError,
    Gate,
    GateKind,
    Role,
    cnot,
    gate_counts,
    inverse,
    mcx,
    toffoli,
    toffoli_depth,
    two_qubit_depth,
    x,
)
from .clean_dp import CleanDecomposer, DpEntry, DpState, UnsupportedInstance, decompose_clean, depth_bound
from .dirty import build_groups, decompose_dirty
from .multi_target import FanoutSpec, decompose_multi_clean, decompose_multi_dirty, optimal_ancilla_count
from .primitives import dirty_ladder, log_depth_and, lower_toffoli
from .synth import cnx, fanout
from .verify import simulate, unitary_equal, verify_cnx, verify_multi_target

__version__ = "0.1.0"
