import random

import pytest

from oracles import bareiss_rank
from ybx import catalog, solver, systems
from ybx.errors import InputNotQbgSolution, NotInvertible, SymbolicInput
from ybx.scalar import GaussianRational, substitute
from ybx.tensor import SquareMatrix, embed, flip_matrix, random_matrix, ybc_const

P = flip_matrix(2)
I = GaussianRational(0, 1)


def _system_rows(X):
    """The 64x16 linear system of [X,X,Z]=0, for the rank oracle."""
    N = 2
    M1 = embed(X, (1, 2), N) * embed(X, (1, 3), N)
    M2 = embed(X, (1, 3), N) * embed(X, (1, 2), N)
    cols = []
    for k in range(4):
        for l in range(4):
            E = embed(SquareMatrix.unit(4, k, l), (2, 3), N)
            C = M1 * E - E * M2
            cols.append([C.rows[i][j] for i in range(8) for j in range(8)])
    return [[cols[u][e] for u in range(16)] for e in range(64)]


def _to_gauss(rows):
    out = []
    for row in rows:
        out.append([x if isinstance(x, GaussianRational) else x.constant_value()
                    for x in row])
    return out


# ---------------------------------------------------------------------------
# nullspace dimensions, pinned and oracle-checked

@pytest.mark.parametrize("assign,expected", [
    ({"a": 2, "b": 2, "c": 3, "d": 3}, 16),     # acts on one leg only
    ({"a": 2, "b": 2, "c": 3, "d": -3}, 8),     # eight-vertex pattern
    ({"a": 1, "b": 2, "c": 3, "d": 5}, 6),      # generic diagonal: six-vertex
])
def test_diagonal_nullspace_dimensions(assign, expected):
    X = catalog.instantiate("X3", assign)
    space = solver.solve_z_linear(X)
    assert space.dim == expected
    assert space.rank + space.dim == 16
    assert bareiss_rank(_to_gauss(_system_rows(X))) == space.rank
    for member in space.basis:
        assert ybc_const(X, X, member).is_zero()


def test_nullspace_of_flip_is_its_own_span():
    # P12 P13 and P13 P12 are the two distinct 3-cycles, so the map does
    # not vanish identically; the exact nullspace is the span of the flip.
    space = solver.solve_z_linear(P)
    assert space.dim == 1 and space.rank == 15
    assert bareiss_rank(_to_gauss(_system_rows(P))) == 15
    assert space.contains(P)


def test_completeness_on_random_numeric_inputs():
    for seed in (3, 17, 99):
        X = random_matrix(4, seed)
        space = solver.solve_z_linear(X)
        assert space.rank + space.dim == 16
        assert bareiss_rank(_to_gauss(_system_rows(X))) == space.rank
        for member in space.basis:
            assert ybc_const(X, X, member).is_zero()


def test_symbolic_input_rejected():
    with pytest.raises(SymbolicInput):
        solver.solve_z_linear(catalog.instantiate("X3"))


def test_membership_of_catalog_partners():
    X1 = catalog.instantiate("X1", catalog.witness("X1"))
    space = solver.solve_z_linear(X1)
    for zname in ("Z10", "Z11"):
        Z = catalog.instantiate(zname, catalog.witness(zname))
        assert space.contains(Z), zname
    assert space.contains(P)
    assert not space.contains(random_matrix(4, 1234))


def test_generic_sampling_dimension_agreement():
    rng = random.Random(21)
    dims = set()
    for _ in range(3):
        point = catalog.sample_assignment("X1", rng)
        space = solver.solve_z_linear(catalog.instantiate("X1", point))
        dims.add(space.dim)
    assert len(dims) == 1


# ---------------------------------------------------------------------------
# emitted polynomial systems

def test_filter_ybe_flip_span_is_trivially_zero():
    space = solver.SolutionSpace(4, [P], 15)
    ps_out = solver.filter_ybe(space)
    assert ps_out.identically_zero
    assert ps_out.to_text().startswith("unknowns: c1")


def test_filter_ybe_six_vertex_space():
    X = catalog.instantiate("X3", catalog.witness("X3"))
    space = solver.solve_z_linear(X)
    assert space.dim == 6
    sysout = solver.filter_ybe(space)
    assert not sysout.identically_zero
    # catalog partners satisfy the emitted cubic system
    for zname, point in (("Z30", catalog.witness("Z30")),
                         ("Z31", catalog.witness("Z31")),
                         ("Z32", catalog.witness("Z32"))):
        Z = catalog.instantiate(zname, point)
        assert space.contains(Z)
        # solve the (triangular) coordinates of Z in the echelon basis
        coords = _coordinates(space, Z)
        assignment = {name: c for name, c in zip(sysout.unknowns, coords)}
        assert all(r.is_zero() if hasattr(r, "is_zero") else r == 0
                   for r in sysout.residuals_at(assignment))


def _coordinates(space, M):
    """Coordinates of M in the echelon-normalized basis (exact solve)."""
    vecs = space.vectors()
    target = [M.rows[i][j] for i in range(M.dim) for j in range(M.dim)]
    rows = [list(col) for col in zip(*vecs)]          # 16 x dim
    aug = [row + [t] for row, t in zip(rows, target)]
    pivots = solver.rref(aug, space.dim)
    coords = [GaussianRational(0)] * space.dim
    for r, c in enumerate(pivots):
        coords[c] = aug[r][space.dim]
    return coords


def test_filter_ybe_flags_non_solutions():
    space = solver.SolutionSpace(4, [random_matrix(4, 5), random_matrix(4, 6)], 14)
    sysout = solver.filter_ybe(space)
    assert not sysout.identically_zero
    vals = sysout.residuals_at({"c1": 1, "c2": 2})
    assert any(not v.is_zero() for v in vals)


def test_emit_x_system_block_pattern_vanishes():
    W = catalog.instantiate("W", {"t": "q"})
    pattern = [["a", 0, 0, 0], ["c", "a", 0, 0], [0, 0, "b", 0], [0, 0, "d", "b"]]
    out = solver.emit_x_system(W, pattern, ["a", "b", "c", "d"])
    assert out.identically_zero


def test_emit_x_system_corner_pattern_forces_sign_condition():
    pattern = [["q", 0, 0, "c"], [0, "s^-1", 0, 0], [0, "a", "b", 0],
               [0, 0, 0, "b/s*q"]]
    W = catalog.instantiate("W", {"t": "q"})
    out = solver.emit_x_system(W, pattern, ["a", "b", "c"])
    assert not out.identically_zero
    # s = 3 leaves nonzero equations; s = 1 and s = -1 clear them all
    bad = [substitute(eq, {"s": 3, "q": 2, "a": 1, "b": 2, "c": 3})
           for eq in out.equations]
    assert any(not v.is_zero() for v in bad)
    for s in (1, -1):
        good = [substitute(eq, {"s": s}) for eq in out.equations]
        assert all(v.is_zero() for v in good)


def test_emit_x_system_flip_outer_is_free():
    pattern = [[f"x{i}{j}" for j in range(4)] for i in range(4)]
    unknowns = [f"x{i}{j}" for i in range(4) for j in range(4)]
    out = solver.emit_x_system(P, pattern, unknowns)
    assert out.identically_zero


def test_polysystem_serialization():
    space = solver.solve_z_linear(catalog.instantiate("X3", catalog.witness("X3")))
    text = solver.filter_ybe(space).to_text()
    lines = text.splitlines()
    assert lines[0] == "unknowns: c1 c2 c3 c4 c5 c6"
    assert all(line.endswith(" = 0") for line in lines[1:])


# ---------------------------------------------------------------------------
# symmetry transforms

def _verified_triple():
    W = catalog.instantiate("W", {"q": 2, "s": 3, "t": 2})
    X = catalog.instantiate("X1", catalog.witness("X1"))
    Z = catalog.instantiate("Z10", catalog.witness("Z10"))
    return (W, X, Z)


def test_identity_spec_is_identity():
    triple = _verified_triple()
    out = solver.apply_transform(triple, solver.TransformSpec())
    assert all(a == b for a, b in zip(out, triple))


def test_outer_swap_step():
    W, X, Z = _verified_triple()
    out = solver.apply_transform((W, X, Z), solver.TransformSpec(
        word=solver.parse_word("dsym3:++")))
    from ybx.tensor import transform
    assert out[0] == transform(Z, "+")
    assert out[1] == transform(X, "+")
    assert out[2] == transform(W, "+")
    ok, _ = systems.verify("QDOUBLE", dict(zip("WXZ", out)))
    assert ok


def test_middle_inverse_step():
    X1 = catalog.instantiate("X1", {"a": 1, "b": 2, "c": 1, "d": 1})
    out = solver.apply_transform((P, X1, P), solver.TransformSpec(
        word=solver.parse_word("dsym2:+-")))
    assert out[1] == X1.inverse()
    ok, _ = systems.verify("QDOUBLE", dict(zip("WXZ", out)))
    assert ok


def test_discrete_words_are_involutive():
    triple = _verified_triple()
    for word in ("t", "dsym1:##", "dsym2:++", "dsym2:--"):
        spec = solver.TransformSpec(word=solver.parse_word(word) * 2)
        out = solver.apply_transform(triple, spec)
        assert all(a == b for a, b in zip(out, triple)), word


def test_word_parsing_and_errors():
    assert solver.parse_word("") == ()
    assert solver.parse_word("t,dsym1:i#,dsym3:+-") == (
        ("t",), ("dsym1", "id", "#"), ("dsym3", "+", "-"))
    for bad in ("dsym1:xx", "dsym2:ii", "dsym9:++", "zzz"):
        with pytest.raises(ValueError):
            solver.parse_word(bad)


def test_not_invertible_names_the_step():
    singular = SquareMatrix([[1 if (i, j) == (0, 0) else 0 for j in range(4)]
                             for i in range(4)])
    with pytest.raises(NotInvertible) as err:
        solver.apply_transform((P, singular, P), solver.TransformSpec(
            word=solver.parse_word("dsym2:+-")))
    assert "dsym2" in str(err.value)


def test_random_specs_preserve_solutions():
    rng = random.Random(2025)
    triple = _verified_triple()
    for _ in range(20):
        spec = solver.random_transform_spec(rng)
        try:
            out = solver.apply_transform(triple, spec)
        except NotInvertible:
            continue
        ok, _ = systems.verify("QDOUBLE", dict(zip("WXZ", out)))
        assert ok, spec.describe()


def test_random_sl2_has_unit_determinant():
    rng = random.Random(8)
    for _ in range(20):
        T = solver.random_sl2(rng)
        assert T.det() == 1


# ---------------------------------------------------------------------------
# braided-group bridge

def test_bridge_on_flip_pair():
    W, X, Z = solver.qbg_to_qdouble(P, P)
    assert W == P and X == P and Z == P


def test_bridge_on_deformed_flip():
    R = catalog.instantiate("W", {"q": 2, "s": 3, "t": 2})
    W, X, Z = solver.qbg_to_qdouble(R, R)
    ok, _ = systems.verify("QDOUBLE", {"W": W, "X": X, "Z": Z})
    assert ok
    W, X, Z = solver.qbg_to_qdouble(P * R.inverse() * P, R)
    ok, _ = systems.verify("QDOUBLE", {"W": W, "X": X, "Z": Z})
    assert ok


def test_bridge_rejects_non_solutions():
    with pytest.raises(InputNotQbgSolution):
        solver.qbg_to_qdouble(random_matrix(4, 41), random_matrix(4, 42))


def test_qbg_admissibility_checks():
    R = catalog.instantiate("W", {"q": 2, "s": 3, "t": 2})
    assert solver.qbg_admissible(R) == (True, True)
    # the exceptional corner solution has a singular partial transpose
    corner = catalog.instantiate("Rex1")
    first, second = solver.qbg_admissible(corner)
    assert first is True
    singular = SquareMatrix([[1 if (i, j) == (0, 0) else 0 for j in range(4)]
                             for i in range(4)])
    assert solver.qbg_admissible(singular)[0] is False
