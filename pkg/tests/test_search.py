import itertools
from collections import defaultdict

import pytest

from polytaxi.families import lehmer_family
from polytaxi.search import (
    MAX_PAIRS,
    SearchBox,
    TaxicabQuery,
    canonical_key,
    poly_taxicab_search,
    taxicab_int,
)

QUIET = dict(progress=lambda msg: None)


def brute_taxicab(n, k, j, limit):
    """Independent oracle: dictionary of all sums from itertools."""
    top = int(round(limit ** (1 / n))) + 1
    reps = defaultdict(set)
    for combo in itertools.combinations_with_replacement(range(1, top + 1), k):
        total = sum(b**n for b in combo)
        if total <= limit:
            reps[total].add(combo)
    hits = [N for N, r in reps.items() if len(r) >= j]
    return (min(hits), sorted(reps[min(hits)])) if hits else (None, [])


@pytest.mark.parametrize("n,k,j,limit", [
    (3, 2, 2, 2000), (3, 2, 1, 10), (2, 2, 2, 100), (2, 2, 3, 2000), (3, 3, 2, 500), (4, 2, 2, 10**6),
])
def test_taxicab_against_brute_force(n, k, j, limit):
    res = taxicab_int(n, k, j, limit)
    value, reps = brute_taxicab(n, k, j, limit)
    assert res.value == value
    assert [tuple(r) for r in res.representations] == reps


def test_taxicab_known_values():
    res = taxicab_int(3, 2, 2, 2000)
    assert res.value == 1729 and res.representations == [(1, 12), (9, 10)]
    assert taxicab_int(3, 2, 1, 10).value == 2
    assert taxicab_int(3, 2, 3, 10**8).value == 87539319
    res = taxicab_int(4, 2, 2, 7 * 10**8)
    assert res.value == 635318657
    assert res.representations == [(59, 158), (133, 134)]
    assert 59**4 + 158**4 == 133**4 + 134**4 == 635318657


def test_taxicab_not_found_and_limits():
    res = taxicab_int(3, 2, 2, 1728)
    assert not res.found and res.to_dict()["value"] is None
    with pytest.raises(ValueError):
        TaxicabQuery(3, 2, 2, 2**48 + 1)
    with pytest.raises(ValueError):
        TaxicabQuery(1, 2, 2, 10)


def _neg(c):
    return tuple(-x for x in c)


def test_canonical_key_symmetries():
    p, q, r, s = (1, 2), (0, 0, 3), (5,), (0, -1)
    for n in (3, 4):
        key = canonical_key(p, q, r, s, n)
        assert canonical_key(q, p, r, s, n) == key
        assert canonical_key(r, s, p, q, n) == key
        assert canonical_key(p, q, s, r, n) == key
        if n % 2 == 0:
            assert canonical_key(_neg(p), q, r, _neg(s), n) == key
        else:
            # move a term across: p^3 + q^3 = r^3 + s^3  <=>  p^3 + (-r)^3 = (-q)^3 + s^3
            assert canonical_key(p, _neg(r), _neg(q), s, n) == key
            assert canonical_key(_neg(p), _neg(q), _neg(r), _neg(s), n) == key


def _lehmer_plus_key():
    x, y, z, one = lehmer_family(1).polys
    quad = [tuple(int(c) for c in P.coeffs) for P in (x, y, z, one)]
    # x^3 + y^3 = z^3 + 1
    return canonical_key(*quad, 3)


def _keys(result):
    return {canonical_key(*[tuple(int(c) for c in P.coeffs) for P in rec.polys], rec.exponents[0])
            for rec in result.records}


def test_search_finds_lehmer_plus():
    box = SearchBox(3, 4, 9, 2)
    res = poly_taxicab_search(box, **QUIET)
    assert res.candidates == 3330
    assert _lehmer_plus_key() in _keys(res)
    for rec in res.records:
        assert rec.holds()
        assert rec.extras["gcd_degree"] == 0


def test_search_n5_empty():
    assert poly_taxicab_search(SearchBox(5, 4, 9, 2), **QUIET).records == []


def test_search_even_and_large_exponent():
    assert poly_taxicab_search(SearchBox(4, 3, 4, 2), **QUIET).records == []
    assert poly_taxicab_search(SearchBox(16, 3, 3, 2), **QUIET).records == []


def test_search_worker_and_seed_invariance():
    box = SearchBox(3, 4, 4, 2)
    base = poly_taxicab_search(box, **QUIET)
    assert len(base.records) == 2
    other = poly_taxicab_search(box, seed=12345, workers=2, **QUIET)
    assert [r.polys for r in other.records] == [r.polys for r in base.records]


def test_primitive_filter():
    box = SearchBox(3, 4, 4, 2)
    everything = poly_taxicab_search(box, primitive_only=False, **QUIET)
    assert len(everything.records) > 2


def test_box_caps():
    box = SearchBox(3, 12, 50, 3)
    with pytest.raises(ValueError):
        poly_taxicab_search(box, **QUIET)
    assert SearchBox(3, 4, 9, 2).pair_count() <= MAX_PAIRS
    with pytest.raises(ValueError):
        SearchBox(1, 2, 2, 2)
