"""Taxicab numbers and a meet-in-the-middle search for p^n + q^n = r^n + s^n."""

from __future__ import annotations

import math
import random
import sys
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from .families import IdentityRecord
from .mason import InconsistencyError
from .poly import Polynomial, multigcd
from .serialize import SCHEMA_VERSION, to_jsonable

__all__ = [
    "TaxicabQuery",
    "TaxicabResult",
    "taxicab_int",
    "SearchBox",
    "SearchResult",
    "poly_taxicab_search",
    "canonical_key",
    "MAX_CANDIDATES",
    "MAX_PAIRS",
]

MAX_TAXICAB_LIMIT = 2**48
MAX_CANDIDATES = 10**7
# the pair table holds three arrays of this length
MAX_PAIRS = 2 * 10**7
# Mersenne prime modulus for fingerprints
_MOD = 2**61 - 1


# ---------------------------------------------------------------------------
# integers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TaxicabQuery:
    n: int
    k: int
    j: int
    limit: int

    def __post_init__(self):
        if self.n < 2 or self.k < 2 or self.j < 1 or self.limit < 1:
            raise ValueError("need n >= 2, k >= 2, j >= 1 and a positive limit")
        if self.limit > MAX_TAXICAB_LIMIT:
            raise ValueError(f"limit {self.limit} exceeds 2^48")


@dataclass
class TaxicabResult:
    query: TaxicabQuery
    value: int | None
    representations: list = field(default_factory=list)

    @property
    def found(self):
        return self.value is not None

    def to_dict(self):
        q = self.query
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "taxicab",
            "n": q.n, "k": q.k, "j": q.j, "limit": q.limit,
            "found": self.found,
            "value": self.value,
            "representations": [list(r) for r in self.representations],
        }


def _multisets(powers, k, limit, start=0, prefix=(), total=0):
    # nondecreasing index tuples, pruned as soon as the sum passes the limit
    if k == 0:
        yield prefix, total
        return
    for i in range(start, len(powers)):
        # remaining k summands are all at least powers[i]
        if total + k * powers[i] > limit:
            break
        yield from _multisets(powers, k - 1, limit, i, prefix + (i + 1,), total + powers[i])


def taxicab_int(n, k, j, limit):
    """Smallest N <= limit that is a sum of k positive n-th powers in >= j ways.

    Representations are multisets; all of them are returned, sorted.
    """
    q = TaxicabQuery(n, k, j, limit)
    top = 1
    while (top + 1) ** n <= limit:
        top += 1
    powers = [b**n for b in range(1, top + 1)]
    reps = defaultdict(list)
    for idx, total in _multisets(powers, k, limit):
        reps[total].append(idx)
    hits = [N for N, r in reps.items() if len(r) >= j]
    if not hits:
        return TaxicabResult(q, None)
    best = min(hits)
    return TaxicabResult(q, best, sorted(reps[best]))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchBox:
    n: int
    max_degree: int
    coeff_bound: int
    max_terms: int

    def __post_init__(self):
        if self.n < 2 or self.max_degree < 0 or self.coeff_bound < 1 or self.max_terms < 1:
            raise ValueError("need n >= 2, max_degree >= 0, coeff_bound >= 1, max_terms >= 1")

    def candidate_count(self):
        """Nonzero polynomials in the box; halved for even n (sign is irrelevant)."""
        D, B = self.max_degree + 1, self.coeff_bound
        total = sum(math.comb(D, t) * (2 * B) ** t for t in range(1, min(self.max_terms, D) + 1))
        return total // 2 if self.n % 2 == 0 else total

    def pair_count(self):
        c = self.candidate_count()
        return c * (c + 1) // 2


@dataclass
class SearchResult:
    box: SearchBox
    candidates: int
    pairs: int
    groups_checked: int
    records: list

    def to_dict(self):
        return to_jsonable({
            "schema_version": SCHEMA_VERSION,
            "kind": "poly_search",
            "box": vars(self.box),
            "candidates": self.candidates,
            "pairs": self.pairs,
            "groups_checked": self.groups_checked,
            "records": self.records,
        })


def _candidates(box):
    D = box.max_degree + 1
    vals = [c for c in range(-box.coeff_bound, box.coeff_bound + 1) if c]
    out = []
    for t in range(1, min(box.max_terms, D) + 1):
        for support in combinations(range(D), t):
            for cs in product(vals, repeat=t):
                # even n: p and -p give the same power
                if box.n % 2 == 0 and cs[-1] < 0:
                    continue
                coeffs = [0] * (support[-1] + 1)
                for d, c in zip(support, cs):
                    coeffs[d] = c
                out.append(tuple(coeffs))
    return out


def _sort_key(c):
    return (len(c), c)


def _neg(c):
    return tuple(-x for x in c)


def _pos(c):
    return c if c[-1] > 0 else _neg(c)


def canonical_key(p, q, r, s, n):
    """Orbit representative of p^n + q^n = r^n + s^n under the symmetries.

    Arguments are coefficient tuples (lowest degree first).  Even n: each
    polynomial up to sign, sides unordered, order within a side ignored.
    Odd n: the identity is the zero sum of {p, q, -r, -s}, taken up to a
    global sign.
    """
    if n % 2 == 0:
        left = tuple(sorted((_pos(p), _pos(q)), key=_sort_key))
        right = tuple(sorted((_pos(r), _pos(s)), key=_sort_key))
        return min((left, right), (right, left), key=lambda lr: [_sort_key(c) for side in lr for c in side])
    u = sorted((p, q, _neg(r), _neg(s)), key=_sort_key)
    v = sorted((_neg(c) for c in u), key=_sort_key)
    return tuple(min(u, v, key=lambda w: [_sort_key(c) for c in w]))


def _is_trivial(p, q, r, s, n):
    if n % 2 == 0:
        return sorted((_pos(p), _pos(q))) == sorted((_pos(r), _pos(s)))
    u = sorted((p, q, _neg(r), _neg(s)))
    return u == sorted(_neg(c) for c in u)


def _fingerprints(cands, n, xi):
    out = np.empty(len(cands), dtype=np.int64)
    for idx, c in enumerate(cands):
        v = 0
        for coef in reversed(c):
            v = (v * xi + coef) % _MOD
        out[idx] = pow(v, n, _MOD)
    return out


def _orient(p, q, r, s, n):
    # left side holds the polynomial of largest degree; odd n fixes its sign
    sides = [sorted((p, q), key=_sort_key, reverse=True), sorted((r, s), key=_sort_key, reverse=True)]
    sides.sort(key=lambda side: _sort_key(_pos(side[0])), reverse=True)
    (p, q), (r, s) = sides
    if n % 2 == 1 and p[-1] < 0:
        p, q, r, s = _neg(p), _neg(q), _neg(r), _neg(s)
    if n % 2 == 0:
        p, q, r, s = _pos(p), _pos(q), _pos(r), _pos(s)
    return p, q, r, s


def _verify_groups(groups, cands, pi, pj, n, primitive_only):
    """Exact check of fingerprint collisions; returns (key, quadruple) hits."""
    powers = {}

    def power(idx):
        if idx not in powers:
            powers[idx] = Polynomial(cands[idx]) ** n
        return powers[idx]

    hits = []
    for members in groups:
        for a, b in combinations(members, 2):
            i1, j1, i2, j2 = int(pi[a]), int(pj[a]), int(pi[b]), int(pj[b])
            p, q, r, s = cands[i1], cands[j1], cands[i2], cands[j2]
            if _is_trivial(p, q, r, s, n):
                continue
            if power(i1) + power(j1) != power(i2) + power(j2):
                continue
            polys = [Polynomial(c) for c in (p, q, r, s)]
            if max(x.deg for x in polys) < 1:
                continue
            if primitive_only and (multigcd(polys).deg != 0 or math.gcd(*p, *q, *r, *s) != 1):
                continue
            hits.append((canonical_key(p, q, r, s, n), (p, q, r, s)))
    return hits


def poly_taxicab_search(box, seed=0x5EED, workers=1, primitive_only=True, progress=None):
    """All p^n + q^n = r^n + s^n with p, q, r, s in the box, up to symmetry.

    Pairs are bucketed by a fingerprint sum of p(xi)^n mod a 61-bit prime;
    equal polynomials always collide, and every collision is re-verified
    with exact arithmetic.  Zero polynomials and all-constant quadruples are
    skipped; by default so are quadruples with a common polynomial factor
    or a common integer content.
    """
    if progress is None:
        progress = lambda msg: print(msg, file=sys.stderr)  # noqa: E731
    ncand = box.candidate_count()
    if ncand > MAX_CANDIDATES:
        raise ValueError(f"box has {ncand} candidates, above the cap {MAX_CANDIDATES}")
    npairs = box.pair_count()
    if npairs > MAX_PAIRS:
        raise ValueError(f"box has {npairs} candidate pairs, above the cap {MAX_PAIRS}")
    cands = _candidates(box)
    assert len(cands) == ncand
    progress(f"poly-search: {ncand} candidates, {npairs} pairs")

    xi = random.Random(seed).randrange(2, _MOD - 1)
    h = _fingerprints(cands, box.n, xi)
    pi, pj = np.triu_indices(ncand)
    if box.n % 2 == 1:
        # p^n + (-p)^n = 0 only ever matches trivially
        where = {c: i for i, c in enumerate(cands)}
        neg = np.array([where[_neg(c)] for c in cands])
        keep = pj != neg[pi]
        pi, pj = pi[keep], pj[keep]
    sums = h[pi] + h[pj]
    sums[sums >= _MOD] -= _MOD
    order = np.argsort(sums, kind="stable")
    sums = sums[order]
    pi = pi[order]
    pj = pj[order]
    # runs of equal fingerprint sums
    edges = np.flatnonzero(np.diff(sums)) + 1
    starts = np.concatenate(([0], edges))
    ends = np.concatenate((edges, [len(sums)]))
    big = np.flatnonzero(ends - starts >= 2)
    groups = [list(range(starts[g], ends[g])) for g in big]
    progress(f"poly-search: {len(groups)} colliding buckets")

    if workers > 1 and len(groups) > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [groups[w::workers] for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_verify_groups, chunks, [cands] * workers, [pi] * workers,
                                  [pj] * workers, [box.n] * workers, [primitive_only] * workers))
        hits = [hit for part in parts for hit in part]
    else:
        hits = _verify_groups(groups, cands, pi, pj, box.n, primitive_only)

    unique = {}
    for key, quad in hits:
        if key not in unique or quad < unique[key]:
            unique[key] = quad
    records = []
    for key in sorted(unique, key=lambda k: [_sort_key(c) for c in _flatten(k)]):
        p, q, r, s = _orient(*unique[key], box.n)
        polys = [Polynomial(c) for c in (p, q, r, s)]
        rec = IdentityRecord([box.n] * 4, polys, [1, 1, -1, -1], "poly-search")
        if not rec.holds():
            raise InconsistencyError("search emitted an identity that does not verify")
        gcd_deg = multigcd(polys).deg
        max_deg = max(x.deg for x in polys)
        if box.n >= 16 and gcd_deg == 0 and max_deg >= 1:
            raise InconsistencyError(f"coprime nonconstant identity with n = {box.n} >= 16", rec)
        rec.extras = {"gcd_degree": gcd_deg, "max_degree": max_deg}
        records.append(rec)
    progress(f"poly-search: {len(records)} identities")
    return SearchResult(box, ncand, npairs, len(groups), records)


def _flatten(key):
    out = []
    for part in key:
        if part and isinstance(part[0], tuple):
            out.extend(part)
        else:
            out.append(part)
    return out
