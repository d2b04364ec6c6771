"""The symmetry group of the double system.
===========================================

Solutions map to solutions under continuous conjugations (SL(2) pairs
with nonzero scales) and four families of discrete moves: transpose-all,
sharp on the outer pair, inverse on the middle, and the outer swap.
This demo applies random group elements and re-verifies every image.
"""

import random

from ybx import catalog, solver, systems
from ybx.tensor import flip_matrix

P = flip_matrix(2)
triple = (catalog.instantiate("W", {"q": 2, "s": 3, "t": 2}),
          catalog.instantiate("X1", {"a": 1, "b": 2, "c": 1, "d": 1}),
          catalog.instantiate("Z10", {"x": 1, "y": 2, "z": 3}))
ok, _ = systems.verify("QDOUBLE", dict(zip("WXZ", triple)))
print("start triple verifies:", ok)

# A discrete word: swap the outer pair (conjugating the middle by the
# flip), then transpose everything.
spec = solver.TransformSpec(word=solver.parse_word("dsym3:++,t"))
image = solver.apply_transform(triple, spec)
ok, _ = systems.verify("QDOUBLE", dict(zip("WXZ", image)))
print("dsym3:++,t image verifies:", ok)

# Random elements: SL(2) conjugations, scales, words of length <= 4.
rng = random.Random(123)
verified = 0
for _ in range(25):
    spec = solver.random_transform_spec(rng)
    try:
        image = solver.apply_transform(triple, spec)
    except Exception as exc:     # a word may demand a missing inverse
        print("  skipped (%s)" % exc)
        continue
    ok, _ = systems.verify("QDOUBLE", dict(zip("WXZ", image)))
    assert ok
    verified += 1
print("verified %d random orbit images" % verified)

# Words demanding an inverse of a singular middle fail loudly.
from ybx.errors import NotInvertible
from ybx.tensor import SquareMatrix
singular = SquareMatrix([[1 if (i, j) == (0, 0) else 0 for j in range(4)]
                         for i in range(4)])
try:
    solver.apply_transform((P, singular, P),
                           solver.TransformSpec(word=solver.parse_word("dsym2:+-")))
except NotInvertible as exc:
    print("singular middle:", exc)

# The braided-group bridge: a verified pair (Q, R) yields a verified
# double triple.
R = catalog.instantiate("W", {"q": 2, "s": 3, "t": 2})
W, X, Z = solver.qbg_to_qdouble(P * R.inverse() * P, R)
ok, _ = systems.verify("QDOUBLE", {"W": W, "X": X, "Z": Z})
print("bridge output verifies:", ok)
