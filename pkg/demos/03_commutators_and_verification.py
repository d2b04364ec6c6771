"""Yang-Baxter commutators and system verification.
===================================================

The commutator [R,S,T] = R12 S13 T23 - T23 S13 R12 lives on a threefold
tensor space; a system is a named list of such commutators required to
vanish.  Residuals are computed exactly, so "zero" means identically
zero.
"""

from ybx import catalog, systems
from ybx.tensor import flip_matrix, random_matrix, ybc_const

P = flip_matrix(2)

# The flip solves the constant equation; so does the deformed flip W for
# both diagonal branches, with q and s fully symbolic.
print("[P,P,P] = 0:", ybc_const(P, P, P).is_zero())
for branch in ("q", "-q^-1"):
    W = catalog.instantiate("W", {"t": branch})
    print("[W,W,W] = 0 symbolically at t=%s:" % branch,
          ybc_const(W, W, W).is_zero())

# The quantum-double system [W,W,W]=[W,X,X]=[X,X,Z]=[Z,Z,Z]=0.
# Guessed solution: outer flips make any middle matrix work.
ok, report = systems.verify("QDOUBLE",
                            {"W": P, "X": random_matrix(4, 7), "Z": P})
print("flip sandwich with a random middle verifies:", ok)

# A classified triple, verified fully symbolically in all its parameters.
W = catalog.instantiate("W", {"t": "q"})
X1 = catalog.instantiate("X1")
Z10 = catalog.instantiate("Z10")
ok, report = systems.verify("QDOUBLE", {"W": W, "X": X1, "Z": Z10})
print("(W, X1, Z10) verifies symbolically in q,s,a,b,c,d,x,y,z:", ok)

# Failing assignments produce a residual report with exact witnesses.
ok, report = systems.verify("QDOUBLE", {"W": P, "X": random_matrix(4, 7),
                                        "Z": catalog.instantiate("W", {"q": 2, "s": 3, "t": 2})})
print()
print(report.to_text())

# The eight-equation reflection system, and its braided-group cousin.
R = catalog.instantiate("W", {"q": 2, "s": 3, "t": 2})
ok, _ = systems.verify("QBG", {"Q": P * R.inverse() * P, "R": R})
print("braided-group pair (PR^-1P, R) verifies:", ok)
