"""Explicit identity families and the integer-side constructions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from functools import reduce

from .bounds import exponent_bound
from .exact_fields import QQ, factorize, nf_make
from .mason import HypothesisError, InconsistencyError
from .poly import Polynomial, multigcd
from .serialize import SCHEMA_VERSION, to_jsonable

__all__ = [
    "IdentityRecord",
    "AbcTriple",
    "CrtResult",
    "Q_ALPHA_MIN_POLY",
    "lehmer_family",
    "lehmer_instance",
    "euler_quartic",
    "quartic_field_example",
    "crt_exponents",
    "crt_construct",
    "abc_family",
    "elkies_scan",
    "linear_power_family",
]

# minimal polynomial of 2^(1/4) + i over Q
Q_ALPHA_MIN_POLY = (1, 0, 28, 0, 2, 0, 4, 0, 1)


@dataclass
class IdentityRecord:
    """sum_i weights[i] * polys[i] ** exponents[i] == 0."""

    exponents: list
    polys: list
    weights: list
    provenance: str
    defect: Polynomial = None
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.defect is None:
            self.defect = self.compute_defect()

    @property
    def field(self):
        return self.polys[0].field

    def compute_defect(self):
        terms = [p**e * w for p, e, w in zip(self.polys, self.exponents, self.weights)]
        return sum(terms[1:], terms[0])

    def holds(self):
        return not self.compute_defect()

    def to_dict(self):
        f = self.field
        return to_jsonable({
            "schema_version": SCHEMA_VERSION,
            "kind": "identity",
            "provenance": self.provenance,
            "field": None if f == QQ else list(f.min_poly),
            "exponents": list(self.exponents),
            "weights": [f(w) for w in self.weights],
            "polys": list(self.polys),
            "defect": self.defect,
            "extras": self.extras,
        })


def _P(coeffs, fld=QQ):
    return Polynomial(coeffs, fld)


def lehmer_family(sign):
    """x^3 + y^3 = z^3 + sign as polynomials in t.

    sign=+1: x = 9t^4, y = 1 + 9t^3, z = 9t^4 + 3t;
    sign=-1: x = 9t^4 - 3t, y = 9t^3 - 1, z = 9t^4.
    """
    if sign == 1:
        x, y, z = _P([0, 0, 0, 0, 9]), _P([1, 0, 0, 9]), _P([0, 3, 0, 0, 9])
        prov = "lehmer+"
    elif sign == -1:
        x, y, z = _P([0, -3, 0, 0, 9]), _P([-1, 0, 0, 9]), _P([0, 0, 0, 0, 9])
        prov = "lehmer-"
    else:
        raise ValueError("sign must be +1 or -1")
    one = _P([1])
    return IdentityRecord([3, 3, 3, 3], [x, y, z, one], [1, 1, -1, -sign], prov)


def lehmer_instance(sign, t):
    """Integer triple (x, y, z) of the family at parameter ``t``."""
    rec = lehmer_family(sign)
    return tuple(int(p(t)) for p in rec.polys[:3])


def euler_quartic():
    """p^4 + q^4 = r^4 + s^4 with degrees (7, 6, 7, 6)."""
    p = _P([0, 1, 3, -2, 0, 1, 0, 1])
    q = _P([1, 0, 1, 0, -2, -3, 1])
    r = _P([0, 1, -3, -2, 0, 1, 0, 1])
    s = _P([1, 0, 1, 0, -2, 3, 1])
    return IdentityRecord([4] * 4, [p, q, r, s], [1, 1, -1, -1], "euler")


def quartic_field_example():
    """p^4 + q^4 = r^4 + s^4 over Q(a), a = 2^(1/4) + i.

    i, 2^(1/4), 8^(1/4), sqrt(2)/2 and the eighth root of unity e are all
    written in the power basis of a; q = e * 8^(1/4) x^3, s = 8^(1/4) x.
    """
    F = nf_make(Q_ALPHA_MIN_POLY, name="Q(2^(1/4)+i)")
    a = F.gen
    i = (a**4 - 6 * a**2 - 1) / (4 * a**3 - 4 * a)
    root2_4 = a - i
    root8_4 = root2_4**3
    half_sqrt2 = root2_4**2 / 2
    eps = half_sqrt2 + half_sqrt2 * i
    p = Polynomial([1, 0, 0, 0, 1], F)
    q = Polynomial([0, 0, 0, eps * root8_4], F)
    r = Polynomial([-1, 0, 0, 0, 1], F)
    s = Polynomial([0, root8_4], F)
    rec = IdentityRecord([4] * 4, [p, q, r, s], [1, 1, -1, -1], "example41")
    rec.extras = {"i": i, "fourth_root_2": root2_4, "fourth_root_8": root8_4,
                  "half_sqrt2": half_sqrt2, "epsilon": eps}
    return rec


# ---------------------------------------------------------------------------
# Chinese-remainder construction
# ---------------------------------------------------------------------------

def crt_exponents(ks):
    """Least alpha_i >= 0 with prod_{j != i} k_j | alpha_i and k_i | alpha_i + 1."""
    out = []
    for i, k in enumerate(ks):
        M = math.prod(ks[:i] + ks[i + 1:])
        if k == 1:
            out.append(0)
            continue
        x = (-pow(M, -1, k)) % k
        out.append(M * x)
    return out


@dataclass
class CrtResult:
    fs: list
    ks: list
    alphas: list
    exponent_matrix: list
    record: IdentityRecord | None
    common_degree: int
    gcd_degree: int
    min_k: int
    bound: object
    exponent_bound_fails: bool
    expanded: bool

    @property
    def gcd_nontrivial(self):
        return self.gcd_degree > 0

    def to_dict(self):
        return to_jsonable({
            "schema_version": SCHEMA_VERSION,
            "kind": "crt",
            "fs": self.fs,
            "ks": self.ks,
            "alphas": self.alphas,
            "exponent_matrix": self.exponent_matrix,
            "identity": self.record.to_dict() if self.record else None,
            "common_factor_degree": self.common_degree,
            "gcd_degree": self.gcd_degree,
            "gcd_nontrivial": self.gcd_nontrivial,
            "min_k": self.min_k,
            "bound": {"num": self.bound.numerator, "den": self.bound.denominator},
            "exponent_bound_fails": self.exponent_bound_fails,
            "expanded": self.expanded,
        })


def crt_construct(fs, ks, expand_limit=4096):
    """Turn ``f_1 + ... + f_m = 0`` into ``sum p_i^{k_i} = 0`` with a shared factor.

    p_i^{k_i} = f_i^{alpha_i + 1} prod_{j != i} f_j^{alpha_j}; every exponent
    is divisible by k_i so p_i is a product of integer powers of the f_j.
    Polynomials are expanded only when their total degree stays below
    ``expand_limit``; otherwise the identity is checked in factored form,
    where it reduces to the exponent bookkeeping plus ``sum f_i = 0``.
    """
    fs, ks = list(fs), [int(k) for k in ks]
    m = len(fs)
    problems = []
    if m < 3 or len(ks) != m:
        problems.append("needs m >= 3 and matching fs/ks")
    if any(not f for f in fs):
        problems.append("zero summand")
    if fs and sum(fs[1:], fs[0]):
        problems.append("sum of f_i is not zero")
    if all(f.deg < 1 for f in fs):
        problems.append("all f_i constant")
    if any(k < 1 for k in ks):
        problems.append("exponents must be positive")
    for i in range(m):
        for j in range(i + 1, m):
            if math.gcd(ks[i], ks[j]) != 1:
                problems.append(f"not pairwise coprime: k[{i}]={ks[i]}, k[{j}]={ks[j]}")
    if problems:
        raise HypothesisError("; ".join(problems))

    alphas = crt_exponents(ks)
    E = [[alphas[j] + (1 if j == i else 0) for j in range(m)] for i in range(m)]
    for i in range(m):
        if any(e % ks[i] for e in E[i]):
            raise InconsistencyError("exponent row not divisible by k_i")
    degs = [max(f.deg, 0) for f in fs]
    total = max(sum(e * d for e, d in zip(row, degs)) for row in E)
    # gcd of the power terms is divisible by prod f_j^alpha_j
    common_degree = sum(a * d for a, d in zip(alphas, degs))
    record = None
    if total <= expand_limit:
        one = Polynomial([1], fs[0].field)
        common = reduce(lambda acc, j: acc * fs[j] ** alphas[j], range(m), one)
        roots = []
        for i in range(m):
            root = one
            for j in range(m):
                root = root * fs[j] ** (E[i][j] // ks[i])
            if root ** ks[i] != common * fs[i]:
                raise InconsistencyError("root extraction failed")
            roots.append(root)
        record = IdentityRecord(ks, roots, [1] * m, "crt")
        if not record.holds():
            raise InconsistencyError("CRT identity does not vanish")
        g = multigcd([r**k for r, k in zip(roots, ks)])
        if not common.divides(g):
            raise InconsistencyError("common factor does not divide the gcd")
        gcd_degree = g.deg
        record.extras = {"alphas": alphas, "gcd_degree": gcd_degree}
    else:
        gcd_degree = common_degree
    if gcd_degree <= 0:
        raise InconsistencyError("CRT construction produced coprime power terms")
    bound = exponent_bound(m)
    min_k = min(ks)
    return CrtResult(fs, ks, alphas, E, record, common_degree, gcd_degree, min_k, bound,
                     min_k >= bound, record is not None)


# ---------------------------------------------------------------------------
# integers
# ---------------------------------------------------------------------------

@dataclass
class AbcTriple:
    alpha: int
    a: int
    b: int
    c: int
    rad_abc: int
    quality: str

    def as_row(self):
        return [self.alpha, self.a, self.b, self.c, self.rad_abc, self.quality]

    def quality_value(self):
        return Decimal(self.quality)


def _quality(c, rad):
    with localcontext() as ctx:
        ctx.prec = 50
        q = Decimal(c).ln() / Decimal(rad).ln()
        return str(q.quantize(Decimal(10) ** -12))


def abc_family(alpha):
    """(a, b, c) = ((2^u - 1)^2 (4u - 1), (3u - 1)^2, 4u^3) with u = 2^alpha."""
    if not isinstance(alpha, int) or not 1 <= alpha <= 64:
        raise ValueError("alpha must be an integer in [1, 64]")
    u = 2**alpha
    a = (u - 1) ** 2 * (4 * u - 1)
    b = (3 * u - 1) ** 2
    c = 4 * u**3
    if a + b != c:
        raise InconsistencyError(f"a + b != c at alpha={alpha}")
    primes = {2}
    for piece in (u - 1, 4 * u - 1, 3 * u - 1):
        if piece > 1:
            primes.update(factorize(piece).primes)
    rad = math.prod(primes)
    return AbcTriple(alpha, a, b, c, rad, _quality(c, rad))


def elkies_scan(limit, n_lo, n_hi, workers=1):
    """All A^n + B^n = C^n +- 1 with 2 <= A <= B <= limit, 2 <= C <= limit.

    Returns sorted tuples (A, B, C, n, sign) where sign '+' means
    A^n + B^n = C^n + 1 and '-' means A^n + B^n = C^n - 1.
    """
    if not isinstance(limit, int) or not 2 <= limit <= 10**6:
        raise ValueError("limit must be an integer in [2, 10**6]")
    if not 3 <= n_lo <= n_hi <= 64:
        raise ValueError("need 3 <= n_lo <= n_hi <= 64")
    ns = list(range(n_lo, n_hi + 1))
    if workers > 1 and len(ns) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_elkies_one, [limit] * len(ns), ns))
    else:
        parts = [_elkies_one(limit, n) for n in ns]
    return sorted(hit for part in parts for hit in part)


def _elkies_one(limit, n):
    powers = [x**n for x in range(limit + 1)]
    index = {powers[x]: x for x in range(2, limit + 1)}
    top = powers[limit] + 1
    hits = []
    for A in range(2, limit + 1):
        pa = powers[A]
        if 2 * pa > top:
            break
        for B in range(A, limit + 1):
            s = pa + powers[B]
            if s > top:
                break
            C = index.get(s - 1)
            if C is not None:
                hits.append((A, B, C, n, "+"))
            C = index.get(s + 1)
            if C is not None:
                hits.append((A, B, C, n, "-"))
    return hits


def linear_power_family(cs, fld=QQ):
    """sum_i w_i (x + c_i)^(m-2) = 0 for m distinct shifts c_i.

    The m powers span a space of dimension m - 1, so the weights are unique
    up to scale and every m - 1 of the powers are independent.
    """
    from .wronskian import nullspace

    cs = list(cs)
    m = len(cs)
    if m < 3 or len(set(cs)) != m:
        raise ValueError("need at least three distinct shifts")
    ps = [Polynomial([c, 1], fld) for c in cs]
    k = m - 2
    ns = nullspace([p**k for p in ps])
    if len(ns) != 1:
        raise InconsistencyError("expected a one-dimensional relation space")
    return IdentityRecord([k] * m, ps, ns[0], "linear-powers")
