"""
Planning with clean ancilla
===========================

The planner memoizes the best depth for every (controls, clean ancilla,
idle qubits) state and then rebuilds the winning tree of subcircuits.
"""
from gentoffoli import CleanDecomposer, toffoli_depth
from gentoffoli.verify import verify_cnx

dp = CleanDecomposer()

# 20 controls, 6 clean ancilla
plan = dp.plan(list(range(20)), list(range(20, 26)), 26)
for n, m, kind, sizes in plan.signature():
    print(f"{n:3d} controls {m} ancilla -> {kind:<12} sizes {sizes}")

print("bound:", dp.depth_bound((20, 6, 0)).bound)
circuit = dp.decompose(list(range(20)), list(range(20, 26)), 26)
print("measured:", toffoli_depth(circuit))

# more ancilla never hurts
row = [int(dp.depth_bound((16, m, 0)).bound) for m in range(1, 15)]
print("16 controls, m = 1..14:", row)

small = dp.decompose(list(range(7)), [7, 8], 9)
print("7 controls, 2 ancilla correct:", verify_cnx(small).ok)
