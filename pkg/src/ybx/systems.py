"""Declarative Yang-Baxter systems and exact residual verification.

A system is data: a list of equations, each a commutator kind (const,
colour, family) and a triple of (role, transform-tag) pairs meaning
[f(role_a), g(role_b), h(role_c)] = 0.  New systems are declarable
without new code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

from .errors import (DimensionMismatch, MissingRole, NotInvertible,
                     UnknownName, UnsupportedTransform)
from .scalar import scalar_str
from .tensor import ColourMatrix, SquareMatrix, transform, ybc_colour, ybc_const

WITNESS_CAP = 32


@dataclass(frozen=True)
class Equation:
    kind: str                  # const | colour | family
    triple: tuple              # ((role, tag), (role, tag), (role, tag))

    @property
    def label(self):
        def part(role, tag):
            return role if tag == "id" else "%s^%s" % (role, tag)
        inner = ",".join(part(r, t) for r, t in self.triple)
        if self.kind == "const":
            return "[%s]" % inner
        if self.kind == "colour":
            return "[[%s]]" % inner
        return "{[%s]}" % inner


@dataclass(frozen=True)
class SystemDef:
    name: str
    roles: tuple
    equations: tuple

    def __post_init__(self):
        for eq in self.equations:
            for role, tag in eq.triple:
                if role not in self.roles:
                    raise UnknownName("equation references undeclared role %r" % role)
                if tag == "dd" and eq.kind == "const":
                    raise UnsupportedTransform(
                        "colour-swap tag in a constant equation")


def _eqs(kind, *triples):
    out = []
    for tr in triples:
        out.append(Equation(kind, tuple(
            (item, "id") if isinstance(item, str) else tuple(item) for item in tr)))
    return tuple(out)


SYSTEMS = {
    "YBE": SystemDef("YBE", ("R",), _eqs("const", ("R", "R", "R"))),
    "QBG": SystemDef("QBG", ("Q", "R"), _eqs(
        "const", ("Q", "Q", "Q"), ("R", "R", "R"), ("Q", "R", "R"), ("R", "R", "Q"))),
    "QDOUBLE": SystemDef("QDOUBLE", ("W", "X", "Z"), _eqs(
        "const", ("W", "W", "W"), ("W", "X", "X"), ("X", "X", "Z"), ("Z", "Z", "Z"))),
    "REFLECTION": SystemDef("REFLECTION", ("A", "B", "C", "D"), _eqs(
        "const",
        ("A", "A", "A"), ("D", "D", "D"),
        ("A", "C", "C"), ("D", "B", "B"),
        ("A", ("B", "+"), ("B", "+")), ("D", ("C", "+"), ("C", "+")),
        ("A", "C", ("B", "+")), ("D", "B", ("C", "+")))),
    "SPECTRAL_REFLECTION": SystemDef("SPECTRAL_REFLECTION", ("A", "B", "C", "D"), _eqs(
        "colour",
        ("A", "A", "A"), ("D", "D", "D"),
        ("A", "C", "C"), ("D", "B", "B"),
        ("A", ("B", "dd"), ("B", "dd")), ("D", ("C", "dd"), ("C", "dd")),
        ("A", "C", ("B", "dd")), ("D", "B", ("C", "dd")))),
    "BRAIDED_FAMILY": SystemDef("BRAIDED_FAMILY", ("W", "X", "Y", "Z"), _eqs(
        "family",
        ("Z", "Z", "Z"), ("W", "W", "W"),
        ("Z", "X", "X"), ("X", "X", "W"),
        ("Z", ("Y", "dd"), ("Y", "dd")), (("Y", "dd"), ("Y", "dd"), "W"),
        ("Z", "X", ("Y", "dd")), (("Y", "dd"), "X", "W"))),
}


def system(name: str) -> SystemDef:
    try:
        return SYSTEMS[name.upper()]
    except KeyError:
        raise UnknownName("no system named %r" % name) from None


class MatrixFamily:
    """An N x N grid of colour-dependent matrices; entry (J, K) plays the
    role of the (J, K) member in family commutators."""

    def __init__(self, grid):
        self.N = len(grid)
        for row in grid:
            if len(row) != self.N:
                raise DimensionMismatch("family grid must be square")
        dims = {cm.dim for row in grid for cm in row}
        if len(dims) != 1:
            raise DimensionMismatch("family members must share one dimension")
        self.grid = [list(row) for row in grid]

    @property
    def dim(self):
        return self.grid[0][0].dim

    @staticmethod
    def constant(members):
        """Lift a grid of constant SquareMatrix members to a family."""
        return MatrixFamily([[ColourMatrix.constant(m) for m in row] for row in members])

    def member(self, J, K) -> ColourMatrix:
        return self.grid[J][K]

    def swap_conjugate(self) -> "MatrixFamily":
        """Family-level colour swap: member (J, K) becomes the colour-swap
        conjugate of member (K, J)."""
        return MatrixFamily([[self.grid[K][J].swap_conjugate()
                              for K in range(self.N)] for J in range(self.N)])


def _apply_tag(value, tag, role):
    if tag == "id":
        return value
    if isinstance(value, MatrixFamily):
        if tag == "dd":
            return value.swap_conjugate()
        raise UnsupportedTransform("tag %r is not defined on families" % tag)
    try:
        return transform(value, tag)
    except NotInvertible:
        raise NotInvertible("role %s: transform %s needs an inverse that does not exist"
                            % (role, tag)) from None


@dataclass
class EquationResidual:
    label: str
    zero: bool
    nonzero_count: int
    witnesses: list

    def to_dict(self):
        return {"label": self.label, "zero": self.zero,
                "nonzero_count": self.nonzero_count, "witnesses": self.witnesses}


@dataclass
class ResidualReport:
    system: str
    assignment: dict
    equations: list = field(default_factory=list)
    all_zero: bool = True

    def to_dict(self):
        return {"system": self.system, "assignment": dict(self.assignment),
                "all_zero": self.all_zero,
                "equations": [e.to_dict() for e in self.equations]}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self):
        return render_report_text(self.to_dict())


def render_report_text(data: dict) -> str:
    """Deterministic human-readable rendering of a report dict."""
    lines = ["system %s" % data["system"]]
    for role, desc in data["assignment"].items():
        lines.append("  %s = %s" % (role, desc))
    for eq in data["equations"]:
        if eq["zero"]:
            lines.append("equation %s: ZERO" % eq["label"])
        else:
            lines.append("equation %s: NONZERO (%d entries)"
                         % (eq["label"], eq["nonzero_count"]))
            for w in eq["witnesses"]:
                where = "(%s|%s)" % (",".join(map(str, w["row"])),
                                     ",".join(map(str, w["col"])))
                if "family" in w:
                    where += " J=(%s)" % ",".join(map(str, w["family"]))
                lines.append("    %s = %s" % (where, w["value"]))
    lines.append("result: %s" % ("PASS" if data["all_zero"] else "FAIL"))
    return "\n".join(lines) + "\n"


def _split_index(flat, N):
    return [flat // (N * N), (flat // N) % N, flat % N]


def _collect(label, residual: SquareMatrix, N, cap, family_index=None):
    nonzero = 0
    witnesses = []
    for i, row in enumerate(residual.rows):
        for j, x in enumerate(row):
            if x.is_zero():
                continue
            nonzero += 1
            if len(witnesses) < cap:
                w = {"row": _split_index(i, N), "col": _split_index(j, N),
                     "value": scalar_str(x)}
                if family_index is not None:
                    w["family"] = list(family_index)
                witnesses.append(w)
    return nonzero, witnesses


def residual(sysdef, assignment, witness_cap=WITNESS_CAP,
             provenance=None) -> ResidualReport:
    """Exact evaluation of every equation of a system.

    ``assignment`` maps role names to SquareMatrix (const), ColourMatrix
    (colour) or MatrixFamily (family) values.  ``provenance`` optionally
    supplies human-readable origins per role (catalog name + parameters,
    file path, ...) for the report; matrices are described literally
    otherwise.
    """
    if isinstance(sysdef, str):
        sysdef = system(sysdef)
    for role in sysdef.roles:
        if role not in assignment:
            raise MissingRole("role %r not assigned" % role)
    dims = {m.dim for m in assignment.values()}
    if len(dims) != 1:
        raise DimensionMismatch("assigned matrices have mixed dimensions %s" % dims)
    report = ResidualReport(sysdef.name,
                            {r: (provenance or {}).get(r) or
                                describe_matrix(assignment[r])
                             for r in sysdef.roles})
    cache = {}

    def tagged(role, tag):
        key = (role, tag)
        if key not in cache:
            cache[key] = _apply_tag(assignment[role], tag, role)
        return cache[key]

    from math import isqrt
    for eq in sysdef.equations:
        (ra, ta), (rb, tb), (rc, tc) = eq.triple
        if eq.kind == "const":
            A = tagged(ra, ta)
            N = isqrt(A.dim)
            res = ybc_const(A, tagged(rb, tb), tagged(rc, tc))
            count, wit = _collect(eq.label, res, N, witness_cap)
        elif eq.kind == "colour":
            A = tagged(ra, ta)
            N = isqrt(A.dim)
            res = ybc_colour(A, tagged(rb, tb), tagged(rc, tc))
            count, wit = _collect(eq.label, res, N, witness_cap)
        elif eq.kind == "family":
            A, B, C = tagged(ra, ta), tagged(rb, tb), tagged(rc, tc)
            N = isqrt(A.dim)
            count, wit = 0, []
            for J1, J2, J3 in product(range(A.N), repeat=3):
                res = ybc_colour(A.member(J1, J2), B.member(J1, J3), C.member(J2, J3))
                c, w = _collect(eq.label, res, N, witness_cap - len(wit),
                                family_index=(J1, J2, J3))
                count += c
                wit.extend(w)
        else:
            raise UnknownName("unknown equation kind %r" % eq.kind)
        eqres = EquationResidual(eq.label, count == 0, count, wit)
        report.equations.append(eqres)
        if count:
            report.all_zero = False
    return report


def verify(sysdef, assignment, witness_cap=WITNESS_CAP, provenance=None):
    """(all residuals exactly zero?, full report)."""
    rep = residual(sysdef, assignment, witness_cap, provenance=provenance)
    return rep.all_zero, rep


def residual_spectral(assignment, witness_cap=WITNESS_CAP) -> ResidualReport:
    """Residuals of the colour-dependent reflection system over (u1,u2,u3)."""
    return residual(SYSTEMS["SPECTRAL_REFLECTION"], assignment, witness_cap)


def investigate_d_candidates() -> dict:
    """Residual study of the garbled D display of the colour-dependent
    reflection block.

    The sourced display of D lost the operator between its two corner
    factors.  Both plausible insertions (a sum of the two rank-one terms,
    and their product) are evaluated here against all four D-equations of
    the block; neither closes the system.  The admissible form is pinned
    down exactly: the B-equations force D to commute with
    u*(1 (x) raise) + v*(raise (x) 1), which fixes the off-diagonal ratio
    and adds middle-diagonal corrections, and the cubic equation then
    selects the colour-weighted flip (cataloged as Dspec).  The returned
    dict records per-candidate equation flags and the resolution.
    """
    from . import catalog as _catalog
    from . import exprparse as _exprparse

    def cm(rows):
        return ColourMatrix(SquareMatrix(
            [[_exprparse.parse_scalar(str(c)) for c in row] for row in rows]))

    A = _catalog.instantiate("Aspec")
    B = _catalog.instantiate("Bspec")
    C = _catalog.instantiate("Cspec")
    candidates = {
        "sum-insertion": cm([["u - v", 0, 0, 0], [0, "u - v", "1 - v/u", 0],
                             [0, "1 - u/v", "u - v", 0], [0, 0, 0, "u - v"]]),
        "product-insertion": cm([["u - v", 0, 0, 0], [0, "u - v", 0, 0],
                                 [0, 0, "u - v + (1 - u/v)*(1 - v/u)", 0],
                                 [0, 0, 0, "u - v"]]),
    }
    out = {"candidates": [], "resolution": None}

    def d_flags(D):
        rep = residual(SYSTEMS["SPECTRAL_REFLECTION"],
                       {"A": A, "B": B, "C": C, "D": D})
        return {e.label: e.zero for e in rep.equations}

    for name, D in candidates.items():
        flags = d_flags(D)
        out["candidates"].append({
            "name": name,
            "entries": [[scalar_str(x) for x in row] for row in D.base.rows],
            "equation_flags": flags,
            "all_zero": all(flags.values()),
        })
    D = _catalog.instantiate("Dspec")
    flags = d_flags(D)
    out["resolution"] = {
        "name": "colour-weighted flip (catalog entry Dspec)",
        "entries": [[scalar_str(x) for x in row] for row in D.base.rows],
        "equation_flags": flags,
        "all_zero": all(flags.values()),
    }
    return out


def describe_matrix(m) -> str:
    if isinstance(m, MatrixFamily):
        return "family[%dx%d of dim %d]" % (m.N, m.N, m.dim)
    if isinstance(m, ColourMatrix):
        return "colour matrix dim %d" % m.dim
    if isinstance(m, SquareMatrix):
        if m.dim <= 4:
            return "[" + "; ".join(", ".join(scalar_str(x) for x in row)
                                   for row in m.rows) + "]"
        return "matrix dim %d" % m.dim
    return repr(m)
