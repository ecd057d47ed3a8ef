"""
Borrowed qubits and control groups
==================================

With only dirty ancilla, controls are split into chained groups and the
group gates are swept up, down, up, down.  Where the leftover controls go
changes the depth.
"""
from gentoffoli.dirty import build_groups, dirty_schedule, expand_generalized, group_depth
from gentoffoli import toffoli_depth
from gentoffoli.verify import verify_cnx

controls, ancilla, target = list(range(7)), [7, 8, 9], 10

for extras, label in [(None, "default fill"), ([0, 0, 1, 1], "middle-heavy")]:
    groups = build_groups(controls, ancilla, target, extras=extras)
    sched = dirty_schedule(controls, ancilla, target, extras=extras)
    full = expand_generalized(sched)
    print(label)
    print("  groups:", [g.members for g in groups])
    print("  depth at group level:", group_depth(sched))
    print("  depth after expansion:", toffoli_depth(full), "correct:", verify_cnx(full).ok)
