"""
Depth against ancilla count
===========================

Thirty controls, ancilla from none to 28, for both ancilla kinds.  The
same table is written by ``gentoffoli sweep``.
"""
from gentoffoli.cli import sweep_rows

clean = sweep_rows(30, "clean")
dirty = sweep_rows(30, "dirty")
print(" m  clean(bound/measured)  dirty(bound/measured)")
for (m, cb, cd), (_, db, dd) in zip(clean, dirty):
    print(f"{m:2d}  {cb!s:>6}/{cd!s:<6}          {db!s:>6}/{dd!s:<6}")
# the m = 0 row is blank: no construction here works without a helper qubit

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    for rows, label in [(clean, "clean"), (dirty, "dirty")]:
        pts = [(m, d) for m, _, d in rows if d != ""]
        plt.plot(*zip(*pts), marker="o", label=label)
    plt.xlabel("ancilla")
    plt.ylabel("Toffoli depth")
    plt.legend()
    plt.savefig("depth_sweep.png", dpi=120)
    print("wrote depth_sweep.png")
