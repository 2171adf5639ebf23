"""Certificate pipelines that replay the Wronskian degree arguments on instances.

Two pipelines are provided:

* :func:`two_term_certificate` for ``p^n + q^n = r^n + s^n``: differentiate
  the identity divided by ``s^n``, remove the common gcd ``d``, and run Mason
  on the three resulting summands.
* :func:`zero_sum_certificate` for ``sum w_i p_i^{k_i} = 0``: split a
  Wronskian along its first row, extract the power cofactors ``b_{i,n}``,
  bound the gcd ``w~`` by the telescoping gcd chain, and run Mason again.

Each step is recorded as an :class:`Inequality` with integer sides, so a
serialized certificate can be re-checked without any polynomial arithmetic.
Steps marked ``fatal`` follow from verified hypotheses; a fatal step that
fails raises :class:`InconsistencyError`.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations

from .mason import InconsistencyError, MasonReport, mason_check
from .poly import derivative, is_constant, multigcd, poly_gcd, rstar_of_product
from .serialize import SCHEMA_VERSION, to_jsonable
from .wronskian import cofactor_table, det, lin_indep, nullspace, wronskian_det

__all__ = [
    "Inequality",
    "TwoTermCertificate",
    "ZeroSumCertificate",
    "EqualExponentReport",
    "CoprimeSumsReport",
    "exponent_bound",
    "two_term_certificate",
    "zero_sum_certificate",
    "equal_exponent_check",
    "coprime_sums_check",
    "replay_chain",
]

MAX_SUPPORT_SEARCH = 10

_OPS = {
    "<=": lambda a, b: a <= b,
    "<": lambda a, b: a < b,
    ">=": lambda a, b: a >= b,
    "==": lambda a, b: a == b,
}


@dataclass
class Inequality:
    name: str
    lhs: int
    relation: str
    rhs: int
    holds: bool
    fatal: bool = True

    @classmethod
    def of(cls, name, lhs, relation, rhs, fatal=True):
        return cls(name, int(lhs), relation, int(rhs), _OPS[relation](lhs, rhs), fatal)

    def to_dict(self):
        return asdict(self)


def replay_chain(chain):
    """Re-evaluate serialized chain entries; returns the names that disagree."""
    bad = []
    for step in chain:
        step = step if isinstance(step, dict) else asdict(step)
        if _OPS[step["relation"]](step["lhs"], step["rhs"]) != step["holds"]:
            bad.append(step["name"])
    return bad


def exponent_bound(m):
    """(m^3 + 7m^2 - 49m + 68) / 3, the strict upper bound on min k_i."""
    return Fraction(m**3 + 7 * m**2 - 49 * m + 68, 3)


def _enforce(chain, what):
    for step in chain:
        if step.fatal and not step.holds:
            raise InconsistencyError(f"{what}: step '{step.name}' failed ({step.lhs} {step.relation} {step.rhs})")


def _same_field(polys):
    fields = {p.field for p in polys}
    if len(fields) > 1:
        raise TypeError("all polynomials must share one coefficient field")
    return fields.pop()


# ---------------------------------------------------------------------------
# p^n + q^n = r^n + s^n
# ---------------------------------------------------------------------------

@dataclass
class TwoTermCertificate:
    n: int
    hypotheses_ok: bool = False
    violations: list = field(default_factory=list)
    roles: dict = field(default_factory=dict)
    k: int | None = None
    identity_holds: bool | None = None
    branch: str | None = None
    constant_multiple: dict | None = None
    gcd_pqr_is_one: bool | None = None
    derivative_identity_holds: bool | None = None
    wronskians: list = field(default_factory=list)
    d: object = None
    deg_d: int | None = None
    gcd_degree_bound: int | None = None
    d_divides_wronskian_product: bool | None = None
    fgh: list = field(default_factory=list)
    mason: MasonReport | None = None
    chain: list = field(default_factory=list)
    consistent_with_n_lt_16: bool | None = None

    def to_dict(self):
        out = {"schema_version": SCHEMA_VERSION, "kind": "two_term"}
        out.update({k: getattr(self, k) for k in self.__dataclass_fields__})
        return to_jsonable(out)


def _multiset_equal(a, b):
    return (a[0] == b[0] and a[1] == b[1]) or (a[0] == b[1] and a[1] == b[0])


def two_term_certificate(p, q, r, s, n):
    """Replay the degree argument for ``p^n + q^n = r^n + s^n`` on one instance.

    The polynomial of largest degree is moved into the ``s`` slot (swapping
    within a side and across sides).  When one of p, q, r is a constant
    multiple of s the instance reduces to a weighted Fermat relation with
    three terms, which is recorded instead of the Wronskian branch.
    """
    polys = [p, q, r, s]
    _same_field(polys)
    cert = TwoTermCertificate(n=n)
    v = cert.violations
    if n < 2:
        v.append("n < 2")
    powers = [x**n for x in polys]
    lhs, rhs = powers[0] + powers[1], powers[2] + powers[3]
    cert.identity_holds = lhs == rhs
    if not cert.identity_holds:
        v.append("identity p^n + q^n = r^n + s^n fails")
    elif not lhs:
        v.append("both sides vanish")
    if _multiset_equal(powers[:2], powers[2:]):
        v.append("{p^n, q^n} = {r^n, s^n}")
    if max(x.deg for x in polys) < 1:
        v.append("all polynomials constant")
    if any(polys) and multigcd(polys).deg != 0:
        v.append("gcd(p, q, r, s) != 1")
    if v:
        return cert
    cert.hypotheses_ok = True

    names = ["p", "q", "r", "s"]
    k = max(x.deg for x in polys)
    top = next(i for i in (3, 2, 1, 0) if polys[i].deg == k)
    if top < 2:
        polys = polys[2:] + polys[:2]
        names = names[2:] + names[:2]
        top += 2
    if top == 2:
        polys[2], polys[3] = polys[3], polys[2]
        names[2], names[3] = names[3], names[2]
    p, q, r, s = polys
    cert.roles = dict(zip("pqrs", names))
    cert.k = k

    # constant multiples of s collapse to a three-term Fermat relation
    for idx, x in enumerate((p, q, r)):
        if x * s.lc == s * x.lc:
            c = x.lc / s.lc
            weight = c**n - 1 if idx < 2 else c**n + 1
            others = [y for j, y in enumerate((p, q, r)) if j != idx]
            if idx == 0:
                rel = s**n * weight + q**n - r**n
            elif idx == 1:
                rel = p**n + s**n * weight - r**n
            else:
                rel = p**n + q**n - s**n * weight
            coprime = multigcd([s] + others).deg == 0
            cert.branch = "constant_multiple"
            cert.constant_multiple = {
                "multiple_of_s": "pqr"[idx],
                "c": c,
                "weight": weight,
                "relation_holds": not rel,
                "coprime": coprime,
            }
            if rel or not weight or not coprime:
                raise InconsistencyError("constant-multiple reduction failed")
            if n >= 3:
                raise InconsistencyError("weighted Fermat relation with n >= 3 and coprime nonconstant terms")
            cert.consistent_with_n_lt_16 = True
            return cert

    cert.branch = "wronskian"
    ds = derivative(s)
    W = [derivative(x) * s - x * ds for x in (p, q, r)]
    cert.wronskians = W
    cert.gcd_pqr_is_one = multigcd([p, q, r]).deg == 0
    if not cert.gcd_pqr_is_one:
        raise InconsistencyError("gcd(p, q, r) != 1 although gcd(p, q, r, s) = 1")
    F = [x ** (n - 1) * w for x, w in zip((p, q, r), W)]
    cert.derivative_identity_holds = not (F[0] + F[1] - F[2])
    if not cert.derivative_identity_holds:
        raise InconsistencyError("differentiated identity fails although the identity holds")
    d = multigcd(F)
    f, g, h = (x.exact_div(d) for x in F)
    cert.d, cert.deg_d = d, d.deg
    cert.gcd_degree_bound = 6 * k - 3
    cert.d_divides_wronskian_product = d.divides(W[0] * W[1] * W[2])
    cert.fgh = [f, g, h]
    cert.mason = mason_check(f, g, h)

    maxdeg = max(x.deg for x in (f, g, h))
    rad_fgh = rstar_of_product([f, g, h])
    rad_all = rstar_of_product([p, q, r] + W)
    chain = [
        Inequality.of("deg d <= 6k-3", d.deg, "<=", 6 * k - 3),
        Inequality.of("d | product of Wronskians", int(cert.d_divides_wronskian_product), "==", 1),
        Inequality.of("max deg fgh >= (n-7)k+3", maxdeg, ">=", (n - 7) * k + 3),
        # the sharper +4 assumes every Wronskian has positive degree
        Inequality.of("max deg fgh >= (n-7)k+4", maxdeg, ">=", (n - 7) * k + 4, fatal=False),
    ]
    if cert.mason.hypotheses_ok:
        chain.append(Inequality.of("max deg fgh <= r*(fgh)-1", maxdeg, "<=", rad_fgh - 1))
        chain.append(Inequality.of("(n-7)k+3 <= 9k-4", (n - 7) * k + 3, "<=", 9 * k - 4))
    chain += [
        Inequality.of("r*(fgh) <= r*(pqr W_p W_q W_r)", rad_fgh, "<=", rad_all),
        Inequality.of("r*(pqr W_p W_q W_r) <= 9k-3", rad_all, "<=", 9 * k - 3),
        Inequality.of("n < 16", n, "<", 16),
    ]
    cert.chain = chain
    cert.consistent_with_n_lt_16 = n < 16
    _enforce(chain, "two-term certificate")
    return cert


# ---------------------------------------------------------------------------
# sum w_i p_i^{k_i} = 0
# ---------------------------------------------------------------------------

@dataclass
class ZeroSumCertificate:
    m: int
    hypotheses_ok: bool = False
    violations: list = field(default_factory=list)
    permutation: list = field(default_factory=list)
    weights: list = field(default_factory=list)
    K: int | None = None
    T: int | None = None
    t: list = field(default_factory=list)
    b_tables: list = field(default_factory=list)
    row_split_holds: bool | None = None
    split_dets_nonzero: bool | None = None
    power_factorization_holds: bool | None = None
    w_tilde: object = None
    lemw_bound: int | None = None
    p_chain: list = field(default_factory=list)
    p_chain_steps: list = field(default_factory=list)
    H: object = None
    fgh: list = field(default_factory=list)
    gcd_fgh: object = None
    mason: MasonReport | None = None
    final_bound: Fraction | None = None
    chain: list = field(default_factory=list)

    def to_dict(self):
        out = {"schema_version": SCHEMA_VERSION, "kind": "zero_sum"}
        for k in self.__dataclass_fields__:
            val = getattr(self, k)
            if k == "b_tables":
                val = [{"base": t.base, "exponent": t.exponent, "order": t.order, "weight": t.weight,
                        "entries": list(t.entries)} for t in val]
            out[k] = val
        if self.final_bound is not None:
            out["final_bound"] = {"num": self.final_bound.numerator, "den": self.final_bound.denominator}
        return to_jsonable(out)


def _hypotheses_zero_sum(ps, ks, ws):
    m = len(ps)
    v = []
    if m < 3:
        v.append("needs m >= 3 terms")
    if len(ks) != m or len(ws) != m:
        v.append("ps, ks and weights differ in length")
        return v, None
    if any(not isinstance(k, int) or k < 1 for k in ks):
        v.append("exponents must be positive integers")
        return v, None
    zeros = [i for i, p in enumerate(ps) if not p]
    if zeros:
        v.append(f"zero polynomial at indices {tuple(zeros)}")
    if any(not w for w in ws):
        v.append("zero weight")
    if v:
        return v, None
    a = [w * p**k for p, k, w in zip(ps, ks, ws)]
    if sum(a[1:], a[0]):
        v.append("sum of power terms is not zero")
    if multigcd(a).deg != 0:
        v.append("gcd of power terms != 1")
    for idx in combinations(range(m), m - 1):
        if not lin_indep([a[i] for i in idx]):
            omitted = (set(range(m)) - set(idx)).pop()
            v.append(f"power terms without index {omitted} are linearly dependent")
    low = [i for i, k in enumerate(ks) if k <= m - 3]
    if low:
        v.append(f"exponent k_i <= m-3 at indices {tuple(low)}")
    if all(is_constant(p) for p in ps):
        v.append("all polynomials constant")
    return v, a


def _cofactor_det(tables, rows, order):
    return det([[tables[i].entries[nn] for nn in range(order + 1)] for i in rows])


def zero_sum_certificate(ps, ks, weights=None):
    """Replay the Wronskian argument for ``sum_i w_i p_i^{k_i} = 0``.

    Weights default to 1.  The term of largest degree is moved to the
    front.  Every intermediate polynomial is kept on the certificate.
    """
    ps, ks = list(ps), list(ks)
    fld = _same_field(ps) if ps else None
    m = len(ps)
    ws = [fld(w) for w in weights] if weights is not None else [fld.one] * m
    cert = ZeroSumCertificate(m=m)
    v, a = _hypotheses_zero_sum(ps, ks, ws)
    cert.violations = v
    if v:
        return cert
    cert.hypotheses_ok = True

    top = max(range(m), key=lambda i: (ps[i].deg, -i))
    perm = list(range(m))
    perm[0], perm[top] = perm[top], perm[0]
    ps = [ps[i] for i in perm]
    ks = [ks[i] for i in perm]
    ws = [ws[i] for i in perm]
    a = [a[i] for i in perm]
    cert.permutation = perm
    cert.weights = ws

    t = [p.deg for p in ps]
    T, K = t[0], min(ks)
    cert.t, cert.T, cert.K = t, T, K
    order = m - 3
    tables = [cofactor_table(p, k, order, w) for p, k, w in zip(ps, ks, ws)]
    cert.b_tables = tables
    chain = []

    # Wronskian with first row a_1 + ... + a_m, split along that row
    tail = a[3:]
    W = [wronskian_det([a[i]] + tail) for i in range(3)]
    cert.split_dets_nonzero = all(W)
    cert.row_split_holds = not (W[0] + W[1] + W[2]) and not wronskian_det([sum(a[1:], a[0])] + tail)
    tail_power = ps[0].field.one
    for j in range(3, m):
        tail_power = ps[j] ** (ks[j] - m + 3) * tail_power
    B = [_cofactor_det(tables, [i] + list(range(3, m)), order) for i in range(3)]
    lead = [ps[i] ** (ks[i] - m + 3) for i in range(3)]
    cert.power_factorization_holds = all(W[i] == lead[i] * tail_power * B[i] for i in range(3))
    chain.append(Inequality.of("split Wronskians nonzero", int(cert.split_dets_nonzero), "==", 1))
    chain.append(Inequality.of("row split sums to zero", int(cert.row_split_holds), "==", 1))
    chain.append(Inequality.of("Wronskian = powers * cofactor det", int(cert.power_factorization_holds), "==", 1))

    # telescoping gcd chain P_t = gcd(p_1^{k_1-m+t}, ..., p_t^{k_t-m+t})
    P = {}
    for tt in range(m, 2, -1):
        P[tt] = multigcd([ps[i] ** (ks[i] - m + tt) for i in range(tt)])
    if m == 3:
        P[2] = multigcd([ps[i] ** (ks[i] - 1) for i in range(2)])
    cert.p_chain = [(tt, P[tt].deg) for tt in sorted(P, reverse=True)]
    chain.append(Inequality.of("deg P_m == 0", P[m].deg, "==", 0))
    chain.append(Inequality.of("deg P_{m-1} == 0", P[m - 1].deg, "==", 0))
    for tt in range(m - 1, 3, -1):
        step = _p_chain_step(ps, ks, ws, P, tt, m, T)
        cert.p_chain_steps.append(step["record"])
        chain.extend(step["chain"])

    w_tilde = multigcd(lead)
    cert.w_tilde = w_tilde
    cert.lemw_bound = ((m**3 - 11 * m**2 + 38 * m - 40) * T) // 3
    chain.append(Inequality.of("w~ == P_3", int(w_tilde == P[3]), "==", 1))
    chain.append(Inequality.of("deg w~ <= lemw bound", w_tilde.deg, "<=", cert.lemw_bound))

    f = [lead[i].exact_div(w_tilde) * B[i] for i in range(3)]
    cert.fgh = f
    chain.append(Inequality.of("f + g + h == 0", int(not (f[0] + f[1] + f[2])), "==", 1))
    H = B[0] * B[1] * B[2]
    cert.H = H
    dd = multigcd(f)
    cert.gcd_fgh = dd
    chain.append(Inequality.of("gcd(f,g,h) | H", int(dd.divides(H)), "==", 1))
    col_max = sum(max(order * ti - nn for ti in t) for nn in range(order + 1))
    h_cap = 3 * T * (m - 3) * (m - 2)
    chain.append(Inequality.of("deg H <= 3 sum_n max_i deg b_in", H.deg, "<=", 3 * col_max))
    chain.append(Inequality.of("3 sum_n max_i deg b_in <= 3T(m-3)(m-2)", 3 * col_max, "<=", h_cap))
    # strict form is false when m = 3 (both sides are 0)
    chain.append(Inequality.of("deg H < 3T(m-3)(m-2)", H.deg, "<", h_cap, fatal=False))

    f1 = [x.exact_div(dd) for x in f]
    maxdeg1 = max(x.deg for x in f1)
    lower = (K - m + 3) * T - w_tilde.deg - H.deg
    chain.append(Inequality.of("deg f1 >= (K-m+3)T - deg w~ - deg H", f1[0].deg, ">=", lower))
    cert.mason = mason_check(f1[0], f1[1], -f1[2])
    rad1 = rstar_of_product(f1)
    big = sum(t[:3]) + H.deg
    if cert.mason.hypotheses_ok:
        chain.append(Inequality.of("max deg f1g1h1 <= r*(f1g1h1)-1", maxdeg1, "<=", rad1 - 1))
    chain.append(Inequality.of("r*(f1g1h1) <= deg(p1p2p3H)", rad1, "<=", big))
    chain.append(Inequality.of("deg(p1p2p3H) <= 3T + deg H", big, "<=", 3 * T + H.deg))
    mid = 6 * m**2 - 29 * m + 36
    chain.append(Inequality.of("T*K < T(6m^2-29m+36) + deg w~", T * K, "<", T * mid + w_tilde.deg))
    top_num = m**3 + 7 * m**2 - 49 * m + 68
    chain.append(Inequality.of("3T(6m^2-29m+36) + 3 deg w~ <= T(m^3+7m^2-49m+68)",
                               3 * T * mid + 3 * w_tilde.deg, "<=", T * top_num))
    chain.append(Inequality.of("3K < m^3+7m^2-49m+68", 3 * K, "<", top_num))
    cert.final_bound = exponent_bound(m)
    cert.chain = chain
    _enforce(chain, "zero-sum certificate")
    return cert


def _p_chain_step(ps, ks, ws, P, tt, m, T):
    """Bound deg P_{t-1} through the Wronskian of a_t, a_{t+1}, ..., a_m."""
    order = m - tt
    rows = list(range(tt - 1, m))  # 0-based rows for a_t, a_{t+1}, ..., a_m
    tables = {i: cofactor_table(ps[i], ks[i], order, ws[i]) for i in rows}
    C = det([[tables[i].entries[nn] for nn in range(order + 1)] for i in rows])
    pt = ps[tt - 1] ** (ks[tt - 1] - m + tt)
    prev = P[tt - 1]
    d_cap = poly_gcd(prev, pt)
    r_cof = prev.exact_div(d_cap)
    s_cof = pt.exact_div(d_cap)
    col_max = sum(max(order * ps[i].deg - nn for i in rows) for nn in range(order + 1))
    step_cap = (m - tt) * (m - tt + 1) * T
    chain = [
        Inequality.of(f"[t={tt}] cofactor det nonzero", int(bool(C)), "==", 1),
        Inequality.of(f"[t={tt}] gcd(r_cof, s_cof) == 1", poly_gcd(r_cof, s_cof).deg, "==", 0),
        Inequality.of(f"[t={tt}] r_cof | det C", int(r_cof.divides(C)), "==", 1),
        Inequality.of(f"[t={tt}] d_cap | P_t", int(d_cap.divides(P[tt])), "==", 1),
        Inequality.of(f"[t={tt}] P_(t-1) | P_t det C", int(prev.divides(P[tt] * C)), "==", 1),
        Inequality.of(f"[t={tt}] deg det C <= sum_n max_i deg c_in", C.deg, "<=", col_max),
        Inequality.of(f"[t={tt}] sum_n max_i deg c_in <= (m-t)(m-t+1)T", col_max, "<=", step_cap),
        Inequality.of(f"[t={tt}] deg P_(t-1) <= deg P_t + (m-t)(m-t+1)T", prev.deg, "<=", P[tt].deg + step_cap),
    ]
    record = {
        "t": tt,
        "deg_P_t": P[tt].deg,
        "deg_P_t_minus_1": prev.deg,
        "deg_det_C": C.deg,
        "d_cap": d_cap,
        "r_cof": r_cof,
        "s_cof": s_cof,
    }
    return {"record": record, "chain": chain}


# ---------------------------------------------------------------------------
# sum p_i^k = 0 with pairwise non-proportional p_i
# ---------------------------------------------------------------------------

@dataclass
class EqualExponentReport:
    k: int
    m: int
    hypotheses_ok: bool = False
    violations: list = field(default_factory=list)
    support: list = field(default_factory=list)
    weights: list = field(default_factory=list)
    d: object = None
    reduced: list = field(default_factory=list)
    certificate: ZeroSumCertificate | None = None
    bound: Fraction | None = None
    satisfied: bool | None = None
    note: str = (
        "k-th roots of the weights are not taken; weights are carried on the power terms, "
        "which changes no degree, gcd or linear (in)dependence"
    )

    def to_dict(self):
        out = {"schema_version": SCHEMA_VERSION, "kind": "equal_exponent"}
        out.update({k: getattr(self, k) for k in self.__dataclass_fields__})
        if self.bound is not None:
            out["bound"] = {"num": self.bound.numerator, "den": self.bound.denominator}
        return to_jsonable(out)


def equal_exponent_check(ps, k):
    """Reduce ``sum p_i^k = 0`` to a shortest vanishing combination and certify it."""
    ps = list(ps)
    m = len(ps)
    rep = EqualExponentReport(k=k, m=m)
    v = rep.violations
    if m < 3:
        v.append("needs m >= 3 polynomials")
    if m > MAX_SUPPORT_SEARCH:
        v.append(f"m = {m} exceeds the subset-search cap {MAX_SUPPORT_SEARCH}")
    if k < 1:
        v.append("k must be positive")
    if any(not p for p in ps):
        v.append("zero polynomial")
    if v:
        return rep
    _same_field(ps)
    a = [p**k for p in ps]
    if sum(a[1:], a[0]):
        v.append("sum of k-th powers is not zero")
    for i, j in combinations(range(m), 2):
        if ps[i] * ps[j].lc == ps[j] * ps[i].lc:
            v.append(f"quotient constant: indices ({i},{j})")
    if v:
        return rep
    rep.hypotheses_ok = True

    support, lam = None, None
    for size in range(2, m + 1):
        for idx in combinations(range(m), size):
            ns = nullspace([a[i] for i in idx])
            if ns:
                support, lam = list(idx), ns[0]
                break
        if support:
            break
    if any(not x for x in lam):
        raise InconsistencyError("minimal vanishing combination has a zero weight")
    rep.support, rep.weights = support, lam
    sub = [ps[i] for i in support]
    d = multigcd(sub)
    reduced = [p.exact_div(d) for p in sub]
    rep.d, rep.reduced = d, reduced
    s = len(support)
    rep.bound = exponent_bound(m)
    if k > s - 3:
        cert = zero_sum_certificate(reduced, [k] * s, lam)
        if not cert.hypotheses_ok:
            raise InconsistencyError(f"reduced instance fails the hypotheses: {cert.violations}")
        rep.certificate = cert
    rep.satisfied = k < exponent_bound(s) <= rep.bound
    if not rep.satisfied:
        raise InconsistencyError("exponent bound violated under verified hypotheses")
    return rep


# ---------------------------------------------------------------------------
# sum f_i^n = sum g_i^n with 2k pairwise coprime polynomials
# ---------------------------------------------------------------------------

@dataclass
class CoprimeSumsReport:
    k: int
    n: int
    hypotheses_ok: bool = False
    violations: list = field(default_factory=list)
    threshold: int | None = None
    in_range: bool | None = None
    identity_holds: bool | None = None
    defect_degree: int | None = None

    def to_dict(self):
        return to_jsonable({"schema_version": SCHEMA_VERSION, "kind": "coprime_sums", **asdict(self)})


def coprime_sums_check(fs, gs, n):
    """Evaluate f_1^n + ... + f_k^n - g_1^n - ... - g_k^n for pairwise coprime inputs.

    Only the statement is checked: for n >= 4k(k-1) a vanishing defect is
    reported as a violation of the theorem.
    """
    fs, gs = list(fs), list(gs)
    k = len(fs)
    rep = CoprimeSumsReport(k=k, n=n)
    v = rep.violations
    if len(gs) != k:
        v.append("fs and gs differ in length")
    if k < 2:
        v.append("needs k >= 2")
    allp = fs + gs
    if any(not p for p in allp):
        v.append("zero polynomial")
    else:
        for i, j in combinations(range(len(allp)), 2):
            if poly_gcd(allp[i], allp[j]).deg != 0:
                v.append(f"not pairwise coprime: indices ({i},{j})")
    if allp and all(is_constant(p) for p in allp):
        v.append("all polynomials constant")
    if n < 1:
        v.append("n must be positive")
    if v:
        return rep
    rep.hypotheses_ok = True
    rep.threshold = 4 * k * (k - 1)
    rep.in_range = n >= rep.threshold
    defect = sum((f**n for f in fs), fs[0].field.zero * fs[0]) - sum((g**n for g in gs), gs[0].field.zero * gs[0])
    rep.identity_holds = not defect
    rep.defect_degree = defect.deg if defect else None
    if rep.in_range and rep.identity_holds:
        raise InconsistencyError("equal power sums of pairwise coprime polynomials above the threshold")
    return rep
