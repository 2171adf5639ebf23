"""Exact scalars: rationals, simple number fields Q[y]/(m(y)), integer factoring.

Rationals are plain :class:`fractions.Fraction` values (always reduced, with a
positive denominator).  Number field elements are stored as an integer
numerator vector over one common positive denominator, in the power basis
``1, a, ..., a^(d-1)`` of the generator ``a``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

__all__ = [
    "QQ",
    "RationalField",
    "NumberField",
    "NFElement",
    "Factorization",
    "ReducibleModulusError",
    "nf_make",
    "nf_inv",
    "factorize",
    "int_radical",
    "is_probable_prime",
]


class ReducibleModulusError(ZeroDivisionError):
    """Raised when an inversion hits a zero divisor of Q[y]/(m(y))."""

    def __init__(self, factor):
        self.factor = list(factor)
        super().__init__(f"reducible modulus: discovered factor {self.factor} (ascending)")


class RationalField:
    """The field Q; scalars are Fractions."""

    name = "QQ"
    degree = 1

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        if isinstance(x, NFElement):
            raise TypeError("cannot coerce a number field element into QQ")
        raise TypeError(f"cannot coerce {type(x).__name__} into QQ")

    def to_json(self):
        return None


QQ = RationalField()


# -- small dense helpers on Fraction lists (ascending coefficients) ---------

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _qdivmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lc = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lc
        q[shift] = f
        for i, bi in enumerate(b):
            a[i + shift] -= f * bi
        a.pop()
        _trim(a)
    return _trim(q), a


def _qmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _qsub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim([Fraction(x) for x in out])


def _qgcd(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _qdivmod(a, b)[1]
    if a:
        lc = a[-1]
        a = [x / lc for x in a]
    return a


class NumberField:
    """Q[y]/(m(y)) for a monic squarefree integer polynomial m.

    Irreducibility is not checked; a zero divisor shows up when an
    inversion fails, see :class:`ReducibleModulusError`.
    """

    def __init__(self, min_poly, name=None):
        mp = [int(c) for c in min_poly]
        while mp and mp[-1] == 0:
            mp.pop()
        if len(mp) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        if mp[-1] != 1:
            raise ValueError(f"minimal polynomial must be monic, leading coefficient is {mp[-1]}")
        fm = [Fraction(c) for c in mp]
        dm = _trim([Fraction(i * c) for i, c in enumerate(mp)][1:])
        g = _qgcd(fm, dm)
        if len(g) > 1:
            raise ValueError(f"minimal polynomial is not squarefree: shares factor {g} with its derivative")
        self.min_poly = tuple(mp)
        self.degree = len(mp) - 1
        self.name = name or f"Q[y]/({_format_int_poly(mp, 'y')})"

    def __repr__(self):
        return f"NumberField({list(self.min_poly)})"

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.min_poly == self.min_poly

    def __hash__(self):
        return hash(("NF", self.min_poly))

    @cached_property
    def zero(self):
        return NFElement._raw(self, (0,) * self.degree, 1)

    @cached_property
    def one(self):
        return NFElement._raw(self, (1,) + (0,) * (self.degree - 1), 1)

    @cached_property
    def gen(self):
        """The class of y, i.e. the generator a."""
        if self.degree == 1:
            return self(-self.min_poly[0])
        return NFElement._raw(self, (0, 1) + (0,) * (self.degree - 2), 1)

    def __call__(self, x):
        if isinstance(x, NFElement):
            if x.field != self:
                raise TypeError("element belongs to a different number field")
            return x
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, (int, Fraction)):
            x = Fraction(x)
            return NFElement._raw(self, (x.numerator,) + (0,) * (self.degree - 1), x.denominator)
        if isinstance(x, (list, tuple)):
            return self.from_coords(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self.name}")

    def from_coords(self, coords):
        coords = [Fraction(c) for c in coords]
        if len(coords) > self.degree:
            # reduce a longer vector modulo m
            return self._reduce_fractions(coords)
        coords += [Fraction(0)] * (self.degree - len(coords))
        den = math.lcm(*(c.denominator for c in coords))
        nums = tuple(int(c * den) for c in coords)
        return NFElement._make(self, nums, den)

    def _reduce_fractions(self, coords):
        den = math.lcm(*(Fraction(c).denominator for c in coords))
        nums = [int(Fraction(c) * den) for c in coords]
        return NFElement._make(self, tuple(self._reduce_ints(nums)), den)

    def _reduce_ints(self, nums):
        d = self.degree
        mp = self.min_poly
        nums = list(nums)
        for top in range(len(nums) - 1, d - 1, -1):
            c = nums[top]
            if c:
                base = top - d
                for i in range(d):
                    if mp[i]:
                        nums[base + i] -= c * mp[i]
            nums[top] = 0
        nums = nums[:d]
        nums += [0] * (d - len(nums))
        return nums

    def to_json(self):
        return list(self.min_poly)


def _format_int_poly(c, var):
    terms = []
    for i in range(len(c) - 1, -1, -1):
        if c[i]:
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            coef = str(c[i])
            terms.append(coef if not mono else (mono if c[i] == 1 else f"{coef}*{mono}"))
    return " + ".join(terms) if terms else "0"


class NFElement:
    """Element of a :class:`NumberField`; immutable."""

    __slots__ = ("field", "nums", "den", "_hash")

    @classmethod
    def _raw(cls, field, nums, den):
        self = object.__new__(cls)
        self.field = field
        self.nums = nums
        self.den = den
        self._hash = None
        return self

    @classmethod
    def _make(cls, field, nums, den):
        if den < 0:
            nums = tuple(-n for n in nums)
            den = -den
        g = math.gcd(den, *nums)
        if g != 1:
            nums = tuple(n // g for n in nums)
            den //= g
        return cls._raw(field, tuple(nums), den)

    @property
    def coords(self):
        return [Fraction(n, self.den) for n in self.nums]

    def __repr__(self):
        return f"NFElement({[str(c) for c in self.coords]})"

    def __bool__(self):
        return any(self.nums)

    def is_rational(self):
        return not any(self.nums[1:])

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise TypeError("number field mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.nums == o.nums and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.nums[0], self.den))
            else:
                self._hash = hash((self.nums, self.den))
        return self._hash

    def __neg__(self):
        return NFElement._raw(self.field, tuple(-n for n in self.nums), self.den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return NFElement._make(self.field, tuple(a + b for a, b in zip(self.nums, o.nums)), self.den)
        da, db = self.den, o.den
        return NFElement._make(self.field, tuple(a * db + b * da for a, b in zip(self.nums, o.nums)), da * db)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return NFElement._make(self.field, tuple(n * other for n in self.nums), self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.nums, o.nums
        d = self.field.degree
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return NFElement._make(self.field, tuple(self.field._reduce_ints(prod)), self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * nf_inv(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * nf_inv(self)

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return nf_inv(self) ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result


def nf_make(min_poly, name=None):
    """Build Q[y]/(min_poly) from an ascending integer coefficient list."""
    return NumberField(min_poly, name=name)


def nf_inv(e):
    """Inverse of a nonzero element by extended Euclid against the modulus."""
    if not e:
        raise ZeroDivisionError("inverse of zero in a number field")
    field = e.field
    m = [Fraction(c) for c in field.min_poly]
    a = _trim(e.coords)
    # invariant: s_i * a == r_i (mod m)
    r0, r1 = m, a
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _qdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qsub(s0, _qmul(q, s1))
        if not r1:
            # r0 is a nontrivial common factor of a and m
            g = [c / r0[-1] for c in r0]
            den = math.lcm(*(c.denominator for c in g))
            raise ReducibleModulusError([int(c * den) for c in g])
    c = r1[0]
    inv = [x / c for x in s1]
    return field.from_coords(inv)


# -- integers ---------------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization as increasing (prime, exponent) pairs."""

    prime_powers: tuple

    def value(self):
        out = 1
        for p, e in self.prime_powers:
            out *= p**e
        return out

    @property
    def primes(self):
        return [p for p, _ in self.prime_powers]


_TRIAL_LIMIT = 10**6
_FACTOR_CAP = 2**128
_SMALL_PRIMES = None


def _small_primes():
    global _SMALL_PRIMES
    if _SMALL_PRIMES is None:
        sieve = bytearray([1]) * (_TRIAL_LIMIT + 1)
        sieve[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(_TRIAL_LIMIT) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(range(i * i, _TRIAL_LIMIT + 1, i)))
        _SMALL_PRIMES = [i for i, v in enumerate(sieve) if v]
    return _SMALL_PRIMES


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


def is_probable_prime(n):
    """Miller-Rabin with the first 20 prime bases.

    Deterministic below 3.3e24; beyond that no counterexample is known for
    this base set.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n, rng):
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n, seed=0x5EED):
    """Prime factorization of ``1 <= n <= 2**128``.

    Trial division by primes below 10**6, then Brent's variant of Pollard rho
    with a seeded generator so the run is reproducible.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n!r}")
    if n > _FACTOR_CAP:
        raise ValueError("factorize input exceeds the 2**128 cap")
    counts = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            counts[p] = e
    if n > 1:
        rng = random.Random(seed)
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if m <= _TRIAL_LIMIT**2 or is_probable_prime(m):
                # below 10**12 the trial loop already removed every factor <= 10**6
                counts[m] = counts.get(m, 0) + 1
                continue
            d = _brent(m, rng)
            stack.extend((d, m // d))
    return Factorization(tuple(sorted(counts.items())))


def int_radical(n):
    """Product of the distinct primes dividing ``n``; rad(1) = 1."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"int_radical needs a positive integer, got {n!r}")
    out = 1
    for p in factorize(n).primes:
        out *= p
    return out
