"""
One control, many targets
=========================

Copying the control onto a few helpers lets the targets be hit in
parallel blocks.  Dirty helpers need each block applied twice.
"""
from gentoffoli.multi_target import decompose_multi, fanout_bound, fanout_spec, optimal_ancilla_count
from gentoffoli import two_qubit_depth
from gentoffoli.verify import verify_multi_target

for kind in ("clean", "dirty"):
    n = 12
    print(kind, [fanout_bound(n, m, kind) for m in range(6)], "best m:", optimal_ancilla_count(n, 3, kind))
    spec = fanout_spec(n, 3, kind)
    c = decompose_multi(spec)
    print("  measured depth", two_qubit_depth(c), "bound", spec.bound(), "ok", verify_multi_target(c, spec).ok)
