"""The solving strategy, end to end.
====================================

Fix an outer solution W, pick a middle factor X solving [W,X,X]=0, then
exploit linearity: [X,X,Z]=0 is a 64x16 linear system in the entries of
Z, solved exactly by nullspace computation.  The cubic [Z,Z,Z]=0 is then
emitted as a polynomial system over the nullspace coordinates rather
than solved blindly.
"""

from ybx import catalog, solver
from ybx.scalar import scalar_str
from ybx.tensor import matrix_to_text

# Step 1: the middle equation. Emitting [W,X,X] for the block-triangular
# pattern shows it vanishes identically: X1 works for any q, s.
W = catalog.instantiate("W", {"t": "q"})
pattern = [["a", 0, 0, 0], ["c", "a", 0, 0], [0, 0, "b", 0], [0, 0, "d", "b"]]
out = solver.emit_x_system(W, pattern, ["a", "b", "c", "d"])
print("block pattern: middle equation vanishes identically:",
      out.identically_zero)

# The corner pattern instead forces a sign condition on s (try s=3: some
# equation survives; s=1 or s=-1 clears everything).
corner = [["q", 0, 0, "c"], [0, "s^-1", 0, 0], [0, "a", "b", 0],
          [0, 0, 0, "b/s*q"]]
out = solver.emit_x_system(W, corner, ["a", "b", "c"])
print("corner pattern emits %d equations; e.g. %s = 0"
      % (len(out.equations), scalar_str(out.equations[0])))

# Step 2: the Z equation is linear. Diagonal middles show the three
# regimes: a one-leg middle frees all 16 entries, the signed branch
# leaves the eight-vertex pattern, generic diagonals the six-vertex one.
for assign, label in ((dict(a=2, b=2, c=3, d=3), "diag(a,a,c,c)"),
                      (dict(a=2, b=2, c=3, d=-3), "diag(a,a,c,-c)"),
                      (dict(a=1, b=2, c=3, d=5), "generic diagonal")):
    space = solver.solve_z_linear(catalog.instantiate("X3", assign))
    print("%-16s -> nullspace dimension %2d (rank %d)"
          % (label, space.dim, space.rank))

# Step 3: emit the cubic over the six-vertex space and test partners.
X = catalog.instantiate("X3", {"a": 1, "b": 2, "c": 3, "d": 5})
space = solver.solve_z_linear(X)
cubic = solver.filter_ybe(space)
print("cubic system over the six-vertex space: %d equations in %s"
      % (len(cubic.equations), " ".join(cubic.unknowns)))
for zname in ("Z30", "Z31", "Z32"):
    Z = catalog.instantiate(zname, catalog.witness(zname))
    print("  %s lies in the nullspace: %s" % (zname, space.contains(Z)))

print()
print("one nullspace basis member:")
print(matrix_to_text(space.basis[1]))
