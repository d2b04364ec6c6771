"""Exact scalar tower: Gaussian rationals, sparse multivariate Laurent
polynomials over them, and rational functions as quotient pairs.

Every value is immutable after construction and all arithmetic is exact;
there is no floating point anywhere in this package.  The three levels
coerce upward automatically (GaussianRational -> Polynomial ->
RationalFunction), so mixed-level expressions just work.

Equality of rational functions is decided by cross-multiplication; there
is no mandatory gcd normalisation (multivariate gcd would be costly and
is unnecessary for exact zero testing).  An integer content reduction
keeps coefficient sizes bounded.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd

from .errors import DenominatorVanishes, DivisionByZero


# ---------------------------------------------------------------------------
# variable registry

class _VarRegistry:
    """Append-only name <-> id table; registration order is the global
    variable order used for monomial comparison and printing."""

    def __init__(self):
        self._lock = threading.Lock()
        self._ids = {}
        self._names = []

    def id_of(self, name):
        vid = self._ids.get(name)
        if vid is None:
            with self._lock:
                vid = self._ids.get(name)
                if vid is None:
                    vid = len(self._names)
                    self._names.append(name)
                    self._ids[name] = vid
        return vid

    def name_of(self, vid):
        return self._names[vid]


_registry = _VarRegistry()


def var_id(name: str) -> int:
    """Id of the variable ``name``, registering it on first use."""
    return _registry.id_of(name)


def var_name(vid: int) -> str:
    return _registry.name_of(vid)


# ---------------------------------------------------------------------------
# monomials

class Monomial:
    """A Laurent monomial: map variable-id -> nonzero integer exponent,
    stored as a tuple of (vid, exp) pairs sorted by vid."""

    __slots__ = ("exps",)

    def __init__(self, exps=()):
        self.exps = tuple(exps)

    @staticmethod
    def unit():
        return _UNIT_MONOMIAL

    @staticmethod
    def of(vid, exp=1):
        if exp == 0:
            return _UNIT_MONOMIAL
        return Monomial(((vid, exp),))

    def is_unit(self):
        return not self.exps

    def mul(self, other):
        if not self.exps:
            return other
        if not other.exps:
            return self
        merged = []
        a, b = self.exps, other.exps
        i = j = 0
        while i < len(a) and j < len(b):
            va, ea = a[i]
            vb, eb = b[j]
            if va < vb:
                merged.append((va, ea))
                i += 1
            elif vb < va:
                merged.append((vb, eb))
                j += 1
            else:
                e = ea + eb
                if e:
                    merged.append((va, e))
                i += 1
                j += 1
        merged.extend(a[i:])
        merged.extend(b[j:])
        return Monomial(merged)

    def pow(self, n):
        if n == 0 or not self.exps:
            return _UNIT_MONOMIAL
        return Monomial(tuple((v, e * n) for v, e in self.exps))

    def inverse(self):
        return self.pow(-1)

    def variables(self):
        return {v for v, _ in self.exps}

    def _cmp(self, other):
        # lexicographic on exponent vectors in registration order
        da, db = dict(self.exps), dict(other.exps)
        for v in sorted(set(da) | set(db)):
            ea, eb = da.get(v, 0), db.get(v, 0)
            if ea != eb:
                return 1 if ea > eb else -1
        return 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return "Monomial(%r)" % (self.exps,)


_UNIT_MONOMIAL = Monomial()


# ---------------------------------------------------------------------------
# the tower

class Scalar:
    """Common arithmetic shell; concrete levels implement _add/_mul/..."""

    __slots__ = ()
    _LEVEL = -1

    def __add__(self, other):
        pair = _coerce(self, other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a._add(b)

    __radd__ = __add__

    def __sub__(self, other):
        pair = _coerce(self, other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a._add(b._neg())

    def __rsub__(self, other):
        pair = _coerce(self, other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b._add(a._neg())

    def __mul__(self, other):
        pair = _coerce(self, other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a._mul(b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        pair = _coerce(self, other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a._div(b)

    def __rtruediv__(self, other):
        pair = _coerce(self, other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b._div(a)

    def __neg__(self):
        return self._neg()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return power(self, n)

    def __eq__(self, other):
        pair = _coerce(self, other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a._eq(b)

    def __str__(self):
        return scalar_str(self)

    def __repr__(self):
        return "<%s %s>" % (type(self).__name__, scalar_str(self))


class GaussianRational(Scalar):
    """a + b*i with exact rational a, b."""

    __slots__ = ("re", "im")
    _LEVEL = 0

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    def is_zero(self):
        return not self.re and not self.im

    def is_one(self):
        return self.re == 1 and not self.im

    def _add(self, o):
        return GaussianRational(self.re + o.re, self.im + o.im)

    def _neg(self):
        return GaussianRational(-self.re, -self.im)

    def _mul(self, o):
        if not self.im and not o.im:
            return GaussianRational(self.re * o.re)
        a, b, c, d = self.re, self.im, o.re, o.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    def _div(self, o):
        return self._mul(o.inv())

    def inv(self):
        n = self.re * self.re + self.im * self.im
        if not n:
            raise DivisionByZero("inversion of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def _eq(self, o):
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def as_poly(self):
        if self.is_zero():
            return Polynomial({})
        return Polynomial({_UNIT_MONOMIAL: self})

    def variables(self):
        return set()

    def substitute(self, mapping):
        return self


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
IUNIT = GaussianRational(0, 1)


class Polynomial(Scalar):
    """Sparse Laurent polynomial: map Monomial -> nonzero GaussianRational."""

    __slots__ = ("terms",)
    _LEVEL = 1

    def __init__(self, terms):
        self.terms = terms

    @staticmethod
    def const(c):
        return as_gaussian(c).as_poly()

    @staticmethod
    def variable(name, exp=1):
        return Polynomial({Monomial.of(var_id(name), exp): ONE})

    @staticmethod
    def from_vid(vid, exp=1):
        return Polynomial({Monomial.of(vid, exp): ONE})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and _UNIT_MONOMIAL in self.terms)

    def constant_value(self):
        """The GaussianRational value of a constant polynomial."""
        if not self.terms:
            return ZERO
        return self.terms[_UNIT_MONOMIAL]

    def _add(self, o):
        big, small = (self.terms, o.terms) if len(self.terms) >= len(o.terms) else (o.terms, self.terms)
        out = dict(big)
        for m, c in small.items():
            cur = out.get(m)
            if cur is None:
                out[m] = c
            else:
                s = cur._add(c)
                if s.is_zero():
                    del out[m]
                else:
                    out[m] = s
        return Polynomial(out)

    def _neg(self):
        return Polynomial({m: c._neg() for m, c in self.terms.items()})

    def _mul(self, o):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = m1.mul(m2)
                c = c1._mul(c2)
                cur = out.get(m)
                if cur is None:
                    out[m] = c
                else:
                    s = cur._add(c)
                    if s.is_zero():
                        del out[m]
                    else:
                        out[m] = s
        return Polynomial(out)

    def scale(self, c):
        c = as_gaussian(c)
        if c.is_zero():
            return Polynomial({})
        return Polynomial({m: k._mul(c) for m, k in self.terms.items()})

    def _div(self, o):
        if o.is_zero():
            raise DivisionByZero("division by zero polynomial")
        if o.is_constant():
            return self.scale(o.constant_value().inv())
        if len(o.terms) == 1:
            # exact Laurent division by a single term
            (m, c), = o.terms.items()
            inv = Polynomial({m.inverse(): c.inv()})
            return self._mul(inv)
        return RationalFunction(self, o)

    def inv(self):
        if self.is_zero():
            raise DivisionByZero("inversion of zero polynomial")
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            return Polynomial({m.inverse(): c.inv()})
        return RationalFunction(Polynomial({_UNIT_MONOMIAL: ONE}), self)

    def _eq(self, o):
        return self.terms == o.terms

    def variables(self):
        out = set()
        for m in self.terms:
            out |= m.variables()
        return out

    def substitute(self, mapping):
        out = ZERO
        for m, coeff in self.terms.items():
            factor = coeff
            for vid, exp in m.exps:
                val = mapping.get(vid)
                if val is None:
                    factor = factor * Polynomial.from_vid(vid, exp)
                else:
                    factor = factor * power(val, exp)
            out = out + factor
        return lowest(out)

    def as_rf(self):
        return RationalFunction(self, _ONE_POLY, reduce=False)

    __hash__ = None


_ONE_POLY = Polynomial({_UNIT_MONOMIAL: ONE})


class RationalFunction(Scalar):
    """Quotient num/den of Laurent polynomials, den not identically zero.

    Equality is cross-multiplication; the representation is not canonical.
    """

    __slots__ = ("num", "den")
    _LEVEL = 2

    def __init__(self, num, den, reduce=True):
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if reduce:
            c = _content(den)
            if c != 1 and c != 0:
                inv = GaussianRational(1 / c)
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den

    def is_zero(self):
        return self.num.is_zero()

    def _add(self, o):
        return RationalFunction(
            self.num._mul(o.den)._add(o.num._mul(self.den)),
            self.den._mul(o.den),
        )

    def _neg(self):
        return RationalFunction(self.num._neg(), self.den, reduce=False)

    def _mul(self, o):
        return RationalFunction(self.num._mul(o.num), self.den._mul(o.den))

    def _div(self, o):
        return self._mul(o.inv())

    def inv(self):
        if self.num.is_zero():
            raise DivisionByZero("inversion of zero")
        return RationalFunction(self.den, self.num)

    def _eq(self, o):
        return self.num._mul(o.den)._eq(o.num._mul(self.den))

    def variables(self):
        return self.num.variables() | self.den.variables()

    def substitute(self, mapping):
        den = lowest(self.den.substitute(mapping))
        if is_zero(den):
            raise DenominatorVanishes(
                "denominator %s vanishes under substitution" % scalar_str(self.den))
        num = self.num.substitute(mapping)
        return lowest(num / den)

    __hash__ = None


def _content(p):
    """Positive rational content (gcd of coefficient components) of p."""
    nums = 0
    dens = 1
    for c in p.terms.values():
        for f in (c.re, c.im):
            if f:
                nums = gcd(nums, abs(f.numerator))
                dens = dens * f.denominator // gcd(dens, f.denominator)
    if not nums:
        return Fraction(0)
    return Fraction(nums, dens)


# ---------------------------------------------------------------------------
# coercion and generic helpers

def as_gaussian(x):
    if type(x) is GaussianRational:
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    raise TypeError("cannot interpret %r as a Gaussian rational" % (x,))


def as_scalar(x):
    """Lift ints and Fractions into the tower; pass scalars through."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    raise TypeError("cannot interpret %r as a scalar" % (x,))


def _lift(x, level):
    while x._LEVEL < level:
        if x._LEVEL == 0:
            x = x.as_poly()
        else:
            x = x.as_rf()
    return x


def _coerce(a, b):
    if not isinstance(b, Scalar):
        if isinstance(b, (int, Fraction)):
            b = GaussianRational(b)
        else:
            return None
    if not isinstance(a, Scalar):
        if isinstance(a, (int, Fraction)):
            a = GaussianRational(a)
        else:
            return None
    level = a._LEVEL if a._LEVEL >= b._LEVEL else b._LEVEL
    return _lift(a, level), _lift(b, level)


def is_zero(x):
    return x.is_zero() if isinstance(x, Scalar) else as_scalar(x).is_zero()


def power(x, n: int):
    """x**n for integer n (negative allowed when x is invertible)."""
    x = as_scalar(x)
    if n == 0:
        return ONE
    if n < 0:
        x = invert(x)
        n = -n
    out = None
    base = x
    while n:
        if n & 1:
            out = base if out is None else out * base
        n >>= 1
        if n:
            base = base * base
    return out


def invert(x):
    """Exact multiplicative inverse; raises DivisionByZero on zero input."""
    x = as_scalar(x)
    return x.inv()


def lowest(x):
    """Push a scalar down to the lowest tower level that represents it."""
    if isinstance(x, RationalFunction):
        if x.den.is_constant():
            x = x.num.scale(x.den.constant_value().inv())
        elif len(x.den.terms) == 1:
            x = x.num._div(x.den)
        else:
            return x
    if isinstance(x, Polynomial) and x.is_constant():
        return x.constant_value()
    return x


def substitute(x, assignment):
    """Exact image of ``x`` under variable -> scalar substitution.

    ``assignment`` maps variable names (or ids) to scalars / ints /
    Fractions; unassigned variables stay symbolic.  Substitution is
    simultaneous.  Raises DivisionByZero when a negative power receives
    zero, DenominatorVanishes when a denominator collapses.
    """
    x = as_scalar(x)
    mapping = {}
    for key, val in assignment.items():
        vid = var_id(key) if isinstance(key, str) else key
        mapping[vid] = as_scalar(val)
    return x.substitute(mapping)


def variables(x):
    return as_scalar(x).variables()


# ---------------------------------------------------------------------------
# canonical printing (round-trips through the exprparse grammar)

def _frac_str(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def gaussian_str(g: GaussianRational) -> str:
    re, im = g.re, g.im
    if not im:
        return _frac_str(re)
    if not re:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return _frac_str(im) + "*i"
    s = _frac_str(re)
    if im > 0:
        s += "+" + ("i" if im == 1 else _frac_str(im) + "*i")
    else:
        s += "-" + ("i" if im == -1 else _frac_str(-im) + "*i")
    return "(" + s + ")"


def _monomial_str(m: Monomial) -> str:
    parts = []
    for vid, exp in m.exps:
        name = var_name(vid)
        parts.append(name if exp == 1 else "%s^%d" % (name, exp))
    return "*".join(parts)


def _term_str(m: Monomial, c: GaussianRational) -> str:
    if m.is_unit():
        return gaussian_str(c)
    ms = _monomial_str(m)
    if c.is_one():
        return ms
    if c.re == -1 and not c.im:
        return "-" + ms
    return gaussian_str(c) + "*" + ms


def poly_str(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    monos = sorted(p.terms, reverse=True)
    out = _term_str(monos[0], p.terms[monos[0]])
    for m in monos[1:]:
        t = _term_str(m, p.terms[m])
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


def _is_atomic_factor(p: Polynomial) -> bool:
    """True when poly prints as a bare atom (or atom^n) safe after '/'."""
    if len(p.terms) != 1:
        return False
    (m, c), = p.terms.items()
    if m.is_unit():
        return not c.im and c.re.denominator == 1 and c.re > 0
    return c.is_one() and len(m.exps) == 1


def rf_str(r: RationalFunction) -> str:
    if r.den._eq(_ONE_POLY):
        return poly_str(r.num)
    ns = poly_str(r.num)
    if len(r.num.terms) > 1:
        ns = "(" + ns + ")"
    ds = poly_str(r.den)
    if not _is_atomic_factor(r.den):
        ds = "(" + ds + ")"
    return ns + "/" + ds


def scalar_str(x) -> str:
    """Canonical text for any scalar: terms in monomial order, exact
    coefficients, `^` exponents.  Parses back to an equal value."""
    x = as_scalar(x)
    if isinstance(x, GaussianRational):
        return gaussian_str(x)
    if isinstance(x, Polynomial):
        return poly_str(x)
    return rf_str(x)
