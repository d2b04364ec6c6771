"""The solution strategy made executable: exact nullspace solving of the
Z-linear equation, residual-system emission for the X-quadratic equation,
the symmetry-orbit engine, and the braided-group-to-double constructor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import isqrt

from . import exprparse
from .errors import (InputNotQbgSolution, NotInvertible, SymbolicInput, YbxError)
from .scalar import (ZERO, ONE, GaussianRational, Polynomial, as_scalar,
                     invert, is_zero, scalar_str, var_id)
from .tensor import SquareMatrix, conjugate, embed, transform, ybc_const
from .systems import SYSTEMS, verify


# ---------------------------------------------------------------------------
# exact linear algebra over the scalar field

def rref(rows, ncols):
    """In-place reduced row echelon form; returns the pivot column list.
    Entries may be any scalars from the tower (exact field arithmetic)."""
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for rr in range(r, len(rows)):
            if not rows[rr][c].is_zero():
                piv = rr
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pinv = invert(rows[r][c])
        rows[r] = [x * pinv for x in rows[r]]
        for rr in range(len(rows)):
            if rr != r and not rows[rr][c].is_zero():
                f = rows[rr][c]
                rows[rr] = [x - f * y for x, y in zip(rows[rr], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def nullspace(rows, ncols):
    """Echelon-normalized nullspace basis of the column space relation
    rows * x = 0; returns (basis vectors, rank)."""
    work = [row[:] for row in rows]
    pivots = rref(work, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for ri, pc in enumerate(pivots):
            x = work[ri][f]
            if not x.is_zero():
                v[pc] = -x
        basis.append(v)
    return basis, len(pivots)


@dataclass
class SolutionSpace:
    """Basis of a linear space of n x n matrices."""

    member_dim: int
    basis: list            # list of SquareMatrix
    rank: int              # rank of the defining linear system

    @property
    def dim(self):
        return len(self.basis)

    def vectors(self):
        return [[m.rows[i][j] for i in range(self.member_dim)
                 for j in range(self.member_dim)] for m in self.basis]

    def contains(self, M: SquareMatrix) -> bool:
        """Exact membership test by extending the basis and re-ranking."""
        if M.dim != self.member_dim:
            return False
        vecs = self.vectors()
        target = [M.rows[i][j] for i in range(M.dim) for j in range(M.dim)]
        work = [v[:] for v in vecs]
        pivots = rref(work, len(target))
        # reduce the target against the echelon basis
        t = target[:]
        for ri, pc in enumerate(pivots):
            f = t[pc]
            if not f.is_zero():
                t = [x - f * y for x, y in zip(t, work[ri])]
        return all(x.is_zero() for x in t)

    def combination(self, coefficients):
        acc = SquareMatrix.zeros(self.member_dim)
        for c, m in zip(coefficients, self.basis):
            acc = acc + m.scale(c)
        return acc


def solve_z_linear(X: SquareMatrix) -> SolutionSpace:
    """Full nullspace of Z -> X12 X13 Z23 - Z23 X13 X12 (exact).

    X must be numeric; substitute symbolic parameters first (SymbolicInput
    otherwise).  The basis is echelon-normalized with deterministic pivot
    order, and rank + dim = (dim of X)^2 by construction.
    """
    if not X.is_numeric():
        raise SymbolicInput(
            "solve_z_linear needs numeric entries; substitute parameters first")
    n2 = X.dim
    N = isqrt(n2)
    if N * N != n2:
        raise SymbolicInput("matrix dim %d is not a perfect square" % n2)
    M1 = embed(X, (1, 2), N) * embed(X, (1, 3), N)
    M2 = embed(X, (1, 3), N) * embed(X, (1, 2), N)
    size = N ** 3
    cols = []
    for k in range(n2):
        for l in range(n2):
            E = embed(SquareMatrix.unit(n2, k, l), (2, 3), N)
            C = M1 * E - E * M2
            cols.append([C.rows[i][j] for i in range(size) for j in range(size)])
    rows = [[cols[u][e] for u in range(n2 * n2)] for e in range(size * size)]
    vecs, rank = nullspace(rows, n2 * n2)
    basis = []
    for v in vecs:
        basis.append(SquareMatrix([[v[i * n2 + j] for j in range(n2)]
                                   for i in range(n2)]))
    return SolutionSpace(n2, basis, rank)


# ---------------------------------------------------------------------------
# emitted polynomial systems

@dataclass
class PolySystem:
    """Polynomial equations (each required zero) in declared unknowns."""

    unknowns: list
    equations: list        # nonzero scalars (Laurent polynomials)

    @property
    def identically_zero(self):
        return not self.equations

    def residuals_at(self, assignment):
        from .scalar import substitute
        return [substitute(eq, assignment) for eq in self.equations]

    def to_text(self):
        lines = ["unknowns: " + " ".join(self.unknowns)]
        for eq in self.equations:
            lines.append("%s = 0" % scalar_str(eq))
        return "\n".join(lines) + "\n"


def filter_ybe(space: SolutionSpace, prefix="c") -> PolySystem:
    """Write Z = sum c_i basis_i with fresh unknowns and emit the entries
    of the cubic commutator [Z,Z,Z] as polynomials in the c_i.  Does not
    solve the system."""
    names = ["%s%d" % (prefix, i + 1) for i in range(space.dim)]
    Z = SquareMatrix.zeros(space.member_dim)
    for name, m in zip(names, space.basis):
        Z = Z + m.scale(Polynomial.variable(name))
    res = ybc_const(Z, Z, Z)
    equations = [x for row in res.rows for x in row if not x.is_zero()]
    return PolySystem(names, equations)


def emit_x_system(W: SquareMatrix, pattern, unknowns) -> PolySystem:
    """Entries of [W, X, X] as quadratic polynomials in the pattern's
    unknowns (plus any symbolic parameters of W).

    ``pattern`` is a grid of expression strings (or ints); names listed in
    ``unknowns`` are the quadratic unknowns, all other identifiers are
    treated as parameters.
    """
    rows = [[exprparse.parse_scalar(str(cell)) for cell in row] for row in pattern]
    X = SquareMatrix(rows)
    res = ybc_const(W, X, X)
    equations = [x for row in res.rows for x in row if not x.is_zero()]
    return PolySystem(list(unknowns), equations)


# ---------------------------------------------------------------------------
# the symmetry group

DISCRETE_STEPS = ("t", "dsym1", "dsym2", "dsym3")


@dataclass
class TransformSpec:
    """Continuous part (T, S in SL(2), nonzero scales) plus a word of
    discrete steps.

    Steps: ("t",) transposes all three; ("dsym1", a, b) with a, b in
    {"id", "#"} applies them to the outer pair; ("dsym2", c, d) with c, d
    in {"+", "-"} applies them outside while inverting the middle;
    ("dsym3", c, d) swaps the outer pair, conjugating the middle by the
    flip.  Composition: continuous first, then the word left to right.
    """

    t_mat: SquareMatrix | None = None
    s_mat: SquareMatrix | None = None
    omega: object = None
    xi: object = None
    zeta: object = None
    word: tuple = ()

    def describe(self):
        parts = []
        if self.t_mat is not None or self.s_mat is not None or self.omega is not None:
            parts.append("continuous")
        parts.extend(word_to_text(self.word).split(",") if self.word else [])
        return ",".join(p for p in parts if p) or "identity"


def word_to_text(word):
    out = []
    for step in word:
        if step[0] == "t":
            out.append("t")
        elif step[0] == "dsym1":
            out.append("dsym1:%s%s" % tuple("#" if x == "#" else "i" for x in step[1:]))
        else:
            out.append("%s:%s%s" % step)
    return ",".join(out)


def parse_word(text: str):
    """Parse a word like "dsym3:++,t,dsym1:i#" into step tuples."""
    steps = []
    if not text:
        return tuple(steps)
    for part in text.split(","):
        part = part.strip()
        if part in ("t", "dsym"):
            steps.append(("t",))
            continue
        if ":" not in part:
            raise ValueError("bad transform step %r" % part)
        head, codes = part.split(":", 1)
        if head == "dsym1":
            if len(codes) != 2 or any(c not in "i#" for c in codes):
                raise ValueError("dsym1 needs two codes from {i,#}: %r" % part)
            steps.append(("dsym1", *("#" if c == "#" else "id" for c in codes)))
        elif head in ("dsym2", "dsym3"):
            if len(codes) != 2 or any(c not in "+-" for c in codes):
                raise ValueError("%s needs two codes from {+,-}: %r" % (head, part))
            steps.append((head, codes[0], codes[1]))
        else:
            raise ValueError("unknown transform step %r" % part)
    return tuple(steps)


def _step_apply(triple, step):
    W, X, Z = triple
    kind = step[0]
    try:
        if kind == "t":
            return (W.transpose(), X.transpose(), Z.transpose())
        if kind == "dsym1":
            a, b = step[1], step[2]
            return (transform(W, a) if a != "id" else W, X,
                    transform(Z, b) if b != "id" else Z)
        if kind == "dsym2":
            c, d = step[1], step[2]
            return (transform(W, c), transform(X, "-"), transform(Z, d))
        if kind == "dsym3":
            c, d = step[1], step[2]
            return (transform(Z, c), transform(X, "+"), transform(W, d))
    except NotInvertible as exc:
        raise NotInvertible("step %s: %s" % (step[0], exc)) from None
    raise ValueError("unknown step %r" % (step,))


def apply_transform(triple, spec: TransformSpec):
    """Image of a (W, X, Z) triple under a symmetry transformation."""
    W, X, Z = triple
    if spec.t_mat is not None or spec.s_mat is not None or any(
            v is not None for v in (spec.omega, spec.xi, spec.zeta)):
        N = isqrt(W.dim)
        T = spec.t_mat if spec.t_mat is not None else SquareMatrix.identity(N)
        S = spec.s_mat if spec.s_mat is not None else SquareMatrix.identity(N)
        omega = as_scalar(spec.omega) if spec.omega is not None else ONE
        xi = as_scalar(spec.xi) if spec.xi is not None else ONE
        zeta = as_scalar(spec.zeta) if spec.zeta is not None else ONE
        try:
            W = conjugate(W, T, T, omega)
            X = conjugate(X, T, S, xi)
            Z = conjugate(Z, S, S, zeta)
        except NotInvertible as exc:
            raise NotInvertible("continuous part: %s" % exc) from None
    triple = (W, X, Z)
    for step in spec.word:
        triple = _step_apply(triple, step)
    return triple


def random_sl2(rng: random.Random, shears=3) -> SquareMatrix:
    """Random integer SL(2) matrix as a product of elementary shears."""
    M = SquareMatrix.identity(2)
    for k in range(shears):
        a = rng.randint(-3, 3)
        if rng.random() < 0.5:
            E = SquareMatrix([[1, a], [0, 1]])
        else:
            E = SquareMatrix([[1, 0], [a, 1]])
        M = M * E
    return M


def random_transform_spec(rng: random.Random, max_word=4) -> TransformSpec:
    """Random symmetry element: SL(2) pair, nonzero rational scales, and a
    discrete word of length <= max_word."""
    from fractions import Fraction
    def scale():
        num = rng.choice([n for n in range(-4, 5) if n])
        den = rng.choice([1, 1, 2, 3])
        return GaussianRational(Fraction(num, den))
    word = []
    for _ in range(rng.randint(0, max_word)):
        kind = rng.choice(DISCRETE_STEPS)
        if kind == "t":
            word.append(("t",))
        elif kind == "dsym1":
            word.append(("dsym1", rng.choice(["id", "#"]), rng.choice(["id", "#"])))
        else:
            word.append((kind, rng.choice("+-"), rng.choice("+-")))
    return TransformSpec(t_mat=random_sl2(rng), s_mat=random_sl2(rng),
                         omega=scale(), xi=scale(), zeta=scale(),
                         word=tuple(word))


# ---------------------------------------------------------------------------
# braided-group pairs -> double triples

def qbg_admissible(R: SquareMatrix):
    """(invertible, second inversion exists) for a braided-group candidate.

    The second inversion is read as invertibility of the partial transpose
    on the first tensor factor; this is an interpretation (the requirement
    names the object without defining it) and is checked by a determinant
    test only.
    """
    from .tensor import partial_transpose
    first = not is_zero(R.det())
    second = not is_zero(partial_transpose(R, 1).det())
    return first, second


def qbg_to_qdouble(Q: SquareMatrix, R: SquareMatrix):
    """Turn a braided-group pair (Q, R) into a verified double triple.

    The returned triple is (W, X, Z) = (Q, R, R Q^+ R^#); the middle
    conjugation by the flip is required for the construction to close
    (the flip-free composition fails, e.g. at Q = R = the q,s-deformed
    flip with q=2, s=3).  The precondition and the result are both
    verified, not assumed.
    """
    ok, rep = verify(SYSTEMS["QBG"], {"Q": Q, "R": R})
    if not ok:
        bad = [e.label for e in rep.equations if not e.zero]
        raise InputNotQbgSolution("pair fails %s" % ", ".join(bad))
    try:
        Z = R * transform(Q, "+") * transform(R, "#")
    except NotInvertible:
        raise NotInvertible("R must be invertible for the construction") from None
    ok, rep = verify(SYSTEMS["QDOUBLE"], {"W": Q, "X": R, "Z": Z})
    if not ok:
        raise YbxError("constructed triple unexpectedly fails the double system")
    return Q, R, Z
