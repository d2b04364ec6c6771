"""A tour of the bundled solution catalog.
==========================================

Thirty named 4x4 matrices with their admissibility constraints: the
deformed flip W with its two diagonal branches, the middle factors
X1..X6, the partner families Z10..Z54, the exceptional constant
solutions, and the colour-dependent block for the spectral reflection
system.
"""

import random

from ybx import catalog
from ybx.scalar import scalar_str
from ybx.tensor import matrix_to_text, ybc_const

# Everything at a glance.
for item in catalog.list_catalog():
    tag = " (YBE)" if item["ybe"] else ""
    print("%-6s params=%-12s%s" % (item["name"], ",".join(item["params"]) or "-", tag))

# Symbolic instantiation leaves parameters as variables.
print()
print("W, fully symbolic:")
print(matrix_to_text(catalog.instantiate("W"), var_names=["q", "s", "t"]))

# Numeric instantiation enforces the constraints exactly.
W = catalog.instantiate("W", {"q": 2, "s": 3, "t": "q"})   # t resolves to 2
print("W at q=2, s=3, t=q has diagonal",
      [scalar_str(W.rows[k][k]) for k in range(4)])

try:
    catalog.instantiate("W", {"q": 1, "s": 1, "t": 1})
except Exception as exc:
    print("inadmissible point rejected:", exc)

# Entries tagged as Yang-Baxter solutions really are: sample and check.
rng = random.Random(0)
for name in ("W", "Z8V", "Z52", "Rex2"):
    point = catalog.sample_assignment(name, rng)
    R = catalog.instantiate(name, point)
    print(name, "solves the constant equation at a random admissible point:",
          ybc_const(R, R, R).is_zero())
