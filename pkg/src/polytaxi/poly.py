"""Dense univariate polynomials over QQ or a :class:`NumberField`.

Coefficients are stored ascending; the zero polynomial has no coefficients
and degree ``NEG_INF``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exact_fields import QQ, NFElement, RationalField

__all__ = [
    "NEG_INF",
    "Polynomial",
    "poly_arith",
    "poly_gcd",
    "multigcd",
    "derivative",
    "radical_poly",
    "rstar",
    "rstar_of_product",
    "monic",
    "is_constant",
]

NEG_INF = -math.inf
"""Degree of the zero polynomial."""


class Polynomial:
    """Immutable dense polynomial with coefficients in ``field``."""

    __slots__ = ("coeffs", "field", "_hash")

    def __init__(self, coeffs=(), field=None):
        coeffs = list(coeffs)
        if field is None:
            field = next((c.field for c in coeffs if isinstance(c, NFElement)), QQ)
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field
        self._hash = None

    @classmethod
    def _raw(cls, coeffs, field):
        # caller guarantees coerced, trimmed coefficients
        self = object.__new__(cls)
        self.coeffs = coeffs
        self.field = field
        self._hash = None
        return self

    @classmethod
    def x(cls, field=QQ):
        return cls._raw((field.zero, field.one), field)

    @classmethod
    def const(cls, c, field=QQ):
        return cls([c], field)

    @classmethod
    def monomial(cls, c, e, field=QQ):
        return cls([0] * e + [c], field)

    # -- basic queries ---------------------------------------------------
    @property
    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __repr__(self):
        from .expr import format_poly

        return f"Polynomial({format_poly(self)!r})"

    def __str__(self):
        from .expr import format_poly

        return format_poly(self)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, NFElement)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.coeffs))
        return self._hash

    def _check(self, other):
        if self.field != other.field:
            raise TypeError(f"coefficient field mismatch: {self.field!r} vs {other.field!r}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, NFElement)):
            return Polynomial([other], self.field)
        return None

    def __call__(self, x):
        acc = self.field.zero if not isinstance(x, Polynomial) else Polynomial((), self.field)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- ring operations -------------------------------------------------
    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self.coeffs), self.field)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        while out and not out[-1]:
            out.pop()
        return Polynomial._raw(tuple(out), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, NFElement)):
            c = self.field(other)
            if not c:
                return Polynomial._raw((), self.field)
            return Polynomial._raw(tuple(x * c for x in self.coeffs), self.field)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Polynomial._raw((), self.field)
        if isinstance(self.field, RationalField):
            return _mul_qq(self, o)
        return _mul_generic(self, o)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = Polynomial._raw((self.field.one,), self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return _divrem(self, o)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Quotient of an exact division; raises ArithmeticError otherwise."""
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def divides(self, other):
        """True when self | other."""
        if not self:
            return not other
        return not (other % self)

    def scale(self, c):
        return self * c

    def is_rational(self):
        """All coefficients lie in QQ (always true over QQ)."""
        if isinstance(self.field, RationalField):
            return True
        return all(c.is_rational() for c in self.coeffs)


def _mul_qq(a, b):
    # integer convolution over a common denominator
    da = math.lcm(*(c.denominator for c in a.coeffs))
    db = math.lcm(*(c.denominator for c in b.coeffs))
    A = [c.numerator * (da // c.denominator) for c in a.coeffs]
    B = [c.numerator * (db // c.denominator) for c in b.coeffs]
    out = [0] * (len(A) + len(B) - 1)
    for i, x in enumerate(A):
        if x:
            for j, y in enumerate(B):
                out[i + j] += x * y
    den = da * db
    if den == 1:
        return Polynomial._raw(tuple(Fraction(c) for c in out), QQ)
    return Polynomial._raw(tuple(Fraction(c, den) for c in out), QQ)


def _mul_generic(a, b):
    zero = a.field.zero
    out = [zero] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                if y:
                    out[i + j] = out[i + j] + x * y
    while out and not out[-1]:
        out.pop()
    return Polynomial._raw(tuple(out), a.field)


def _divrem(a, b):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(a.coeffs) < len(b.coeffs):
        return Polynomial._raw((), a.field), a
    rem = list(a.coeffs)
    bc = b.coeffs
    inv_lc = a.field.one / bc[-1]
    nb = len(bc)
    q = [a.field.zero] * (len(rem) - nb + 1)
    for shift in range(len(rem) - nb, -1, -1):
        c = rem[shift + nb - 1]
        if not c:
            continue
        f = c * inv_lc
        q[shift] = f
        for i in range(nb - 1):
            if bc[i]:
                rem[shift + i] = rem[shift + i] - f * bc[i]
        rem[shift + nb - 1] = a.field.zero
    rem = rem[: nb - 1]
    while rem and not rem[-1]:
        rem.pop()
    while q and not q[-1]:
        q.pop()
    return Polynomial._raw(tuple(q), a.field), Polynomial._raw(tuple(rem), a.field)


def poly_arith(a, b, op):
    """Dispatch ``op`` in {'add', 'sub', 'mul', 'divrem'}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "divrem":
        return divmod(a, b)
    raise ValueError(f"unknown operation {op!r}")


def monic(p):
    if not p:
        return p
    if p.lc == 1:
        return p
    return p * (p.field.one / p.lc)


def is_constant(p):
    return len(p.coeffs) <= 1


# -- gcd --------------------------------------------------------------------

def _int_content_primitive(p):
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [c.numerator * (den // c.denominator) for c in p.coeffs]
    g = math.gcd(*ints)
    return [x // g for x in ints]


def _int_prem(a, b):
    # pseudo-remainder of integer lists: lc(b)^(da-db+1) * a mod b
    r = list(a)
    lb = b[-1]
    nb = len(b)
    while len(r) >= nb:
        c = r[-1]
        shift = len(r) - nb
        r = [x * lb for x in r]
        for i in range(nb):
            r[shift + i] -= c * b[i]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def _gcd_qq(a, b):
    A = _int_content_primitive(a)
    B = _int_content_primitive(b)
    if len(A) < len(B):
        A, B = B, A
    while B:
        R = _int_prem(A, B)
        if R:
            g = math.gcd(*R)
            R = [x // g for x in R]
        A, B = B, R
    return monic(Polynomial(A, QQ))


def poly_gcd(a, b):
    """Monic gcd; gcd(a, 0) = monic(a)."""
    if not a and not b:
        raise ValueError("gcd of two zero polynomials is undefined")
    a._check(b)
    if not b:
        return monic(a)
    if not a:
        return monic(b)
    if len(a.coeffs) == 1 or len(b.coeffs) == 1:
        return Polynomial._raw((a.field.one,), a.field)
    if isinstance(a.field, RationalField):
        return _gcd_qq(a, b)
    if a.is_rational() and b.is_rational():
        g = _gcd_qq(_to_qq(a), _to_qq(b))
        return Polynomial(g.coeffs, a.field)
    x, y = a, b
    while y:
        x, y = y, x % y
        y = monic(y) if y else y
    return monic(x)


def _to_qq(p):
    return Polynomial._raw(tuple(Fraction(c.nums[0], c.den) for c in p.coeffs), QQ)


def multigcd(polys):
    """Fold :func:`poly_gcd` over a list; zero entries are skipped."""
    polys = list(polys)
    nz = [p for p in polys if p]
    if not nz:
        raise ValueError("gcd of zero polynomials is undefined")
    g = monic(nz[0])
    for p in nz[1:]:
        if g.deg == 0:
            break
        g = poly_gcd(g, p)
    return g


# -- calculus and radicals ---------------------------------------------------

def derivative(p, n=1):
    """n-th formal derivative."""
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    if n == 0:
        return p
    cs = p.coeffs
    if len(cs) <= n:
        return Polynomial._raw((), p.field)
    return Polynomial._raw(tuple(cs[j] * math.perm(j, n) for j in range(n, len(cs))), p.field)


def radical_poly(p):
    """Monic squarefree part p / gcd(p, p'); rad of a nonzero constant is 1."""
    if not p:
        raise ValueError("radical of the zero polynomial is undefined")
    if p.deg == 0:
        return Polynomial._raw((p.field.one,), p.field)
    g = poly_gcd(p, derivative(p))
    return monic(p.exact_div(g))


def rstar(p):
    """Degree of the radical."""
    return radical_poly(p).deg


def rstar_of_product(factors):
    """r*(f_1 ... f_k) without expanding the full product.

    rad(f g) = rad(rad f * rad g), so each factor is reduced first.
    """
    factors = list(factors)
    if any(not f for f in factors):
        raise ValueError("radical of the zero polynomial is undefined")
    acc = None
    for f in factors:
        r = radical_poly(f)
        if r.deg == 0:
            continue
        if acc is None:
            acc = r
        else:
            # rad(acc * r) = acc * r / gcd(acc, r)
            acc = acc * r.exact_div(poly_gcd(acc, r))
    return 0 if acc is None else acc.deg


def as_field(p, field):
    """Re-embed a QQ polynomial into ``field``."""
    if p.field == field:
        return p
    if not isinstance(p.field, RationalField):
        raise TypeError("only QQ polynomials can be re-embedded")
    return Polynomial(p.coeffs, field)


def from_ints(coeffs, field=QQ):
    return Polynomial(coeffs, field)
