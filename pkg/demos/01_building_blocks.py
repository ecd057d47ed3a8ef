"""
The two building blocks
=======================

A ladder that borrows dirty qubits, and a balanced AND tree that needs
clean ones.  Everything else in the package is assembled from these.
"""
from gentoffoli import dirty_ladder, log_depth_and, lower_toffoli, toffoli_depth, two_qubit_depth
from gentoffoli.verify import simulate, verify_cnx

# four controls (0..3), two helper qubits (4, 5), target 6
ladder = dirty_ladder([0, 1, 2, 3], [4, 5], 6)
for g in ladder.gates:
    print(g)
print("toffoli depth:", toffoli_depth(ladder))

# the helpers may hold anything; they come back unchanged
print(simulate(ladder, (1, 1, 1, 1, 1, 0, 0)))

tree = log_depth_and([0, 1, 2, 3], [4, 5], 6)
print("tree depth:", toffoli_depth(tree), "report:", verify_cnx(tree).to_dict()["ok"])

# after lowering, each Toffoli becomes 6 CNOTs and 9 one-qubit gates
low = lower_toffoli(tree)
print("gates after lowering:", len(low), "two-qubit depth:", two_qubit_depth(low))
