"""Square matrices over the exact scalar tower, tensor-leg embeddings,
Yang-Baxter commutators and the discrete matrix transforms.

Index convention (fixed globally): the basis index of the N^3 space is
i1*N^2 + i2*N + i3 with leg 1 most significant; matrices are row-major.
"""

from __future__ import annotations

from math import isqrt

from . import exprparse
from .errors import (DimensionMismatch, NotInvertible,
                     UnsupportedTransform, ZeroScale)
from .scalar import (ZERO, ONE, GaussianRational, Polynomial,
                     as_scalar, is_zero, scalar_str, var_id, var_name)


class SquareMatrix:
    """Immutable-by-convention n x n matrix of exact scalars."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows):
        n = len(rows)
        lifted = []
        for row in rows:
            if len(row) != n:
                raise DimensionMismatch("matrix is not square")
            lifted.append([as_scalar(x) for x in row])
        self.dim = n
        self.rows = lifted

    @staticmethod
    def identity(n):
        return SquareMatrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(n):
        return SquareMatrix([[ZERO] * n for _ in range(n)])

    @staticmethod
    def unit(n, i, j):
        rows = [[ZERO] * n for _ in range(n)]
        rows[i][j] = ONE
        return SquareMatrix(rows)

    def entry(self, i, j):
        return self.rows[i][j]

    def __add__(self, other):
        self._same_dim(other)
        return SquareMatrix([[a + b for a, b in zip(ra, rb)]
                             for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._same_dim(other)
        return SquareMatrix([[a - b for a, b in zip(ra, rb)]
                             for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return SquareMatrix([[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._same_dim(other)
        n = self.dim
        out = [[ZERO] * n for _ in range(n)]
        brows = other.rows
        for i in range(n):
            arow = self.rows[i]
            orow = out[i]
            for k in range(n):
                a = arow[k]
                if a.is_zero():
                    continue
                brow = brows[k]
                for j in range(n):
                    b = brow[j]
                    if not b.is_zero():
                        orow[j] = orow[j] + a * b
        m = SquareMatrix.__new__(SquareMatrix)
        m.dim = n
        m.rows = out
        return m

    def scale(self, s):
        s = as_scalar(s)
        return SquareMatrix([[s * a for a in row] for row in self.rows])

    def transpose(self):
        n = self.dim
        return SquareMatrix([[self.rows[j][i] for j in range(n)] for i in range(n)])

    def is_zero(self):
        return all(a.is_zero() for row in self.rows for a in row)

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix) or self.dim != other.dim:
            return NotImplemented if not isinstance(other, SquareMatrix) else False
        return all(a == b for ra, rb in zip(self.rows, other.rows)
                   for a, b in zip(ra, rb))

    __hash__ = None

    def _same_dim(self, other):
        if self.dim != other.dim:
            raise DimensionMismatch("dims %d and %d differ" % (self.dim, other.dim))

    def map(self, fn):
        return SquareMatrix([[fn(a) for a in row] for row in self.rows])

    def substitute(self, assignment):
        from .scalar import substitute
        return self.map(lambda a: substitute(a, assignment))

    def variables(self):
        out = set()
        for row in self.rows:
            for a in row:
                out |= a.variables()
        return out

    def is_numeric(self):
        return all(isinstance(a, GaussianRational) or
                   (isinstance(a, Polynomial) and a.is_constant())
                   for row in self.rows for a in row)

    def det(self):
        """Exact determinant (cofactor expansion for n <= 4, elimination
        over the fraction field beyond)."""
        if self.dim <= 4:
            return _det_cofactor(self.rows)
        return _det_eliminate([row[:] for row in self.rows])

    def inverse(self):
        """Exact inverse; adjugate/determinant for n <= 4, elimination
        beyond.  Raises NotInvertible when the determinant is zero."""
        n = self.dim
        d = self.det()
        if is_zero(d):
            raise NotInvertible("determinant is zero")
        if n == 1:
            return SquareMatrix([[1 / d]])
        if n <= 4:
            dinv = 1 / d
            rows = [[_cofactor(self.rows, j, i) * dinv for j in range(n)]
                    for i in range(n)]
            return SquareMatrix(rows)
        return _invert_eliminate(self)

    def __str__(self):
        return matrix_to_text(self)

    def __repr__(self):
        return "SquareMatrix(dim=%d)" % self.dim


def _det_cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = ZERO
    sign = 1
    for j in range(n):
        a = rows[0][j]
        if not a.is_zero():
            minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
            term = a * _det_cofactor(minor)
            acc = acc + term if sign > 0 else acc - term
        sign = -sign
    return acc


def _cofactor(rows, i, j):
    n = len(rows)
    minor = [[rows[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
    d = _det_cofactor(minor)
    return d if (i + j) % 2 == 0 else -d


def _det_eliminate(rows):
    n = len(rows)
    det = ONE
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not rows[r][col].is_zero():
                piv = r
                break
        if piv is None:
            return ZERO
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        p = rows[col][col]
        det = det * p
        pinv = 1 / p
        for r in range(col + 1, n):
            f = rows[r][col]
            if f.is_zero():
                continue
            f = f * pinv
            for c in range(col, n):
                rows[r][c] = rows[r][c] - f * rows[col][c]
    return det


def _invert_eliminate(mat):
    n = mat.dim
    aug = [row[:] + [ONE if i == j else ZERO for j in range(n)]
           for i, row in enumerate(mat.rows)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not aug[r][col].is_zero():
                piv = r
                break
        if piv is None:
            raise NotInvertible("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pinv = 1 / aug[col][col]
        aug[col] = [x * pinv for x in aug[col]]
        for r in range(n):
            if r == col:
                continue
            f = aug[r][col]
            if f.is_zero():
                continue
            aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return SquareMatrix([row[n:] for row in aug])


# ---------------------------------------------------------------------------
# tensor structure

def kron(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    """Kronecker product, row index i1*dim(b) + i2."""
    na, nb = a.dim, b.dim
    n = na * nb
    out = [[ZERO] * n for _ in range(n)]
    for i1 in range(na):
        for j1 in range(na):
            x = a.rows[i1][j1]
            if x.is_zero():
                continue
            for i2 in range(nb):
                for j2 in range(nb):
                    y = b.rows[i2][j2]
                    if not y.is_zero():
                        out[i1 * nb + i2][j1 * nb + j2] = x * y
    return SquareMatrix(out)


def flip_matrix(N: int) -> SquareMatrix:
    """The permutation matrix P of dim N^2: P|i,j> = |j,i>."""
    n = N * N
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(N):
        for j in range(N):
            rows[i * N + j][j * N + i] = ONE
    return SquareMatrix(rows)


def embed(M: SquareMatrix, legs, localdim: int) -> SquareMatrix:
    """Place M (dim N^2) on two legs of the N (x) N (x) N space, identity
    on the third leg."""
    N = localdim
    if M.dim != N * N:
        raise DimensionMismatch("embed needs dim %d, got %d" % (N * N, M.dim))
    a, b = legs
    if a == b or not {a, b} <= {1, 2, 3}:
        raise DimensionMismatch("legs must be two distinct values in {1,2,3}")
    c = ({1, 2, 3} - {a, b}).pop()
    strides = {1: N * N, 2: N, 3: 1}
    sa, sb, sc = strides[a], strides[b], strides[c]
    size = N ** 3
    out = [[ZERO] * size for _ in range(size)]
    for ra in range(N):
        for rb in range(N):
            mrow = M.rows[ra * N + rb]
            for ca in range(N):
                for cb in range(N):
                    x = mrow[ca * N + cb]
                    if x.is_zero():
                        continue
                    base_r = ra * sa + rb * sb
                    base_c = ca * sa + cb * sb
                    for t in range(N):
                        out[base_r + t * sc][base_c + t * sc] = x
    m = SquareMatrix.__new__(SquareMatrix)
    m.dim = size
    m.rows = out
    return m


def _local_dim(mat: SquareMatrix) -> int:
    N = isqrt(mat.dim)
    if N * N != mat.dim:
        raise DimensionMismatch("dim %d is not a perfect square" % mat.dim)
    return N


def ybc_const(R: SquareMatrix, S: SquareMatrix, T: SquareMatrix) -> SquareMatrix:
    """Constant Yang-Baxter commutator R12 S13 T23 - T23 S13 R12."""
    if not (R.dim == S.dim == T.dim):
        raise DimensionMismatch("commutator needs equal dims")
    N = _local_dim(R)
    R12 = embed(R, (1, 2), N)
    S13 = embed(S, (1, 3), N)
    T23 = embed(T, (2, 3), N)
    return R12 * S13 * T23 - T23 * S13 * R12


# ---------------------------------------------------------------------------
# colour-dependent matrices

class ColourMatrix:
    """A matrix-valued function of an ordered colour pair (u, v): a base
    SquareMatrix whose entries may involve the two colour variables."""

    __slots__ = ("base", "colour_vars")

    def __init__(self, base: SquareMatrix, colour_vars=("u", "v")):
        u, v = colour_vars
        self.base = base
        self.colour_vars = (var_id(u) if isinstance(u, str) else u,
                            var_id(v) if isinstance(v, str) else v)

    @property
    def dim(self):
        return self.base.dim

    @staticmethod
    def constant(M: SquareMatrix, colour_vars=("u", "v")):
        """Lift a constant matrix to a colour-independent ColourMatrix."""
        return ColourMatrix(M, colour_vars)

    def at(self, u_val, v_val) -> SquareMatrix:
        """Base matrix with the colour pair substituted (simultaneously)."""
        u, v = self.colour_vars
        return self.base.substitute({u: u_val, v: v_val})

    def at_vars(self, uname, vname) -> SquareMatrix:
        u, v = self.colour_vars
        return self.base.substitute({u: Polynomial.variable(uname),
                                     v: Polynomial.variable(vname)})

    def swap_conjugate(self) -> "ColourMatrix":
        """The colour-swap conjugate: (u,v) -> P . self(v,u) . P."""
        u, v = self.colour_vars
        swapped = self.base.substitute({u: Polynomial.from_vid(v),
                                        v: Polynomial.from_vid(u)})
        N = _local_dim(self.base)
        P = flip_matrix(N)
        return ColourMatrix(P * swapped * P, self.colour_vars)

    def map_base(self, fn) -> "ColourMatrix":
        return ColourMatrix(fn(self.base), self.colour_vars)

    def __eq__(self, other):
        return (isinstance(other, ColourMatrix)
                and self.colour_vars == other.colour_vars
                and self.base == other.base)

    __hash__ = None

    def __repr__(self):
        u, v = self.colour_vars
        return "ColourMatrix(dim=%d, colours=(%s,%s))" % (
            self.base.dim, var_name(u), var_name(v))


def ybc_colour(R: ColourMatrix, S: ColourMatrix, T: ColourMatrix,
               colour_names=("u1", "u2", "u3")) -> SquareMatrix:
    """Colour-dependent Yang-Baxter commutator: substitutes the colour
    pairs (u1,u2), (u1,u3), (u2,u3) into R, S, T and forms
    R12 S13 T23 - T23 S13 R12 exactly."""
    if not (R.dim == S.dim == T.dim):
        raise DimensionMismatch("commutator needs equal dims")
    n1, n2, n3 = colour_names
    A = R.at_vars(n1, n2)
    B = S.at_vars(n1, n3)
    C = T.at_vars(n2, n3)
    N = _local_dim(A)
    A12 = embed(A, (1, 2), N)
    B13 = embed(B, (1, 3), N)
    C23 = embed(C, (2, 3), N)
    return A12 * B13 * C23 - C23 * B13 * A12


# ---------------------------------------------------------------------------
# transforms

TRANSFORM_TAGS = ("id", "t", "+", "-", "#", "dd")


def transform(M, op: str):
    """Apply a discrete transform tag.

    On a SquareMatrix: ``t`` transpose, ``+`` conjugation by the flip P,
    ``-`` inverse, ``#`` inverse-of-flip-conjugate, ``id`` nothing.  The
    colour-swap tag ``dd`` is only defined on a ColourMatrix.
    """
    if isinstance(M, ColourMatrix):
        if op == "dd":
            return M.swap_conjugate()
        if op == "id":
            return M
        if op in ("t", "+", "-", "#"):
            return M.map_base(lambda base: transform(base, op))
        raise UnsupportedTransform("unknown transform %r" % op)
    if op == "id":
        return M
    if op == "t":
        return M.transpose()
    if op == "+":
        N = _local_dim(M)
        P = flip_matrix(N)
        return P * M * P
    if op == "-":
        return M.inverse()
    if op == "#":
        return transform(transform(M, "+"), "-")
    if op == "dd":
        raise UnsupportedTransform(
            "colour-swap transform is undefined for constant matrices")
    raise UnsupportedTransform("unknown transform %r" % op)


def conjugate(M: SquareMatrix, left: SquareMatrix, right: SquareMatrix,
              scale=1) -> SquareMatrix:
    """scale * (left (x) right) M (left (x) right)^-1."""
    scale = as_scalar(scale)
    if scale.is_zero():
        raise ZeroScale("conjugation scale must be nonzero")
    if left.dim * right.dim != M.dim:
        raise DimensionMismatch("left (x) right must match the matrix dim")
    U = kron(left, right)
    Uinv = kron(left.inverse(), right.inverse())
    return (U * M * Uinv).scale(scale)


def partial_transpose(M: SquareMatrix, leg: int) -> SquareMatrix:
    """Transpose on one tensor factor of an N^2-dim matrix (leg 1 or 2)."""
    N = _local_dim(M)
    out = [[ZERO] * M.dim for _ in range(M.dim)]
    for i1 in range(N):
        for i2 in range(N):
            for j1 in range(N):
                for j2 in range(N):
                    x = M.rows[i1 * N + i2][j1 * N + j2]
                    if x.is_zero():
                        continue
                    if leg == 1:
                        out[j1 * N + i2][i1 * N + j2] = x
                    elif leg == 2:
                        out[i1 * N + j2][j1 * N + i2] = x
                    else:
                        raise DimensionMismatch("leg must be 1 or 2")
    return SquareMatrix(out)


# ---------------------------------------------------------------------------
# reproducible random matrices

_M64 = (1 << 64) - 1


def _splitmix64(state: int):
    """One step of the splitmix64 generator; returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _M64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    z = z ^ (z >> 31)
    return state, z


def random_matrix(dim: int, seed: int, span: int = 3) -> SquareMatrix:
    """Seeded matrix with integer entries in [-span, span].

    Entries are produced row-major from the splitmix64 stream seeded with
    ``seed``; each 64-bit output is reduced mod (2*span+1) and shifted.
    Identical across platforms and runs.
    """
    state = seed & _M64
    width = 2 * span + 1
    rows = []
    for _ in range(dim):
        row = []
        for _ in range(dim):
            state, z = _splitmix64(state)
            row.append(GaussianRational(z % width - span))
        rows.append(row)
    return SquareMatrix(rows)


# ---------------------------------------------------------------------------
# matrix files
#
# Normative format: line 1 `dim <n>`; optional line `vars <id> <id> ...`;
# then n lines of n comma-separated entry expressions in the exprparse
# grammar.  Blank lines and `#` comments are ignored.

def matrix_to_text(M: SquareMatrix, var_names=None) -> str:
    lines = ["dim %d" % M.dim]
    if var_names is None:
        vids = sorted(M.variables())
        var_names = [var_name(v) for v in vids]
    if var_names:
        lines.append("vars " + " ".join(var_names))
    for row in M.rows:
        lines.append(", ".join(scalar_str(x) for x in row))
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str):
    """Parse the matrix file format; returns (SquareMatrix, var_names)."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or not lines[0].startswith("dim "):
        raise ValueError("matrix file must start with a 'dim <n>' line")
    try:
        n = int(lines[0][4:].strip())
    except ValueError:
        raise ValueError("bad dimension in %r" % lines[0])
    if n <= 0:
        raise ValueError("dimension must be positive")
    k = 1
    names = []
    if k < len(lines) and lines[k].startswith("vars"):
        names = lines[k][4:].split()
        for name in names:
            var_id(name)
        k += 1
    rows = []
    for line in lines[k:]:
        cells = [c.strip() for c in line.split(",")]
        if len(cells) != n:
            raise ValueError("expected %d entries per row, got %d" % (n, len(cells)))
        rows.append([exprparse.parse_scalar(c) for c in cells])
    if len(rows) != n:
        raise ValueError("expected %d rows, got %d" % (n, len(rows)))
    return SquareMatrix(rows), names
