import math

import pytest
import sympy

from polytaxi.families import (
    abc_family,
    crt_construct,
    crt_exponents,
    elkies_scan,
    euler_quartic,
    lehmer_family,
    lehmer_instance,
    linear_power_family,
    quartic_field_example,
)
from polytaxi.mason import HypothesisError
from polytaxi.poly import Polynomial, multigcd

X = Polynomial.x()
ONE = Polynomial([1])


@pytest.mark.parametrize("sign", [1, -1])
def test_lehmer_defect_vanishes(sign):
    rec = lehmer_family(sign)
    assert rec.holds() and not rec.defect
    assert [p.deg for p in rec.polys] == [4, 3, 4, 0]


def test_lehmer_instances():
    assert lehmer_instance(1, 1) == (9, 10, 12)
    assert 9**3 + 10**3 == 1729 == 12**3 + 1
    assert lehmer_instance(-1, 1) == (6, 8, 9)
    assert 6**3 + 8**3 == 728 == 9**3 - 1
    for t in range(-20, 21):
        x, y, z = lehmer_instance(1, t)
        assert x**3 + y**3 == z**3 + 1


def test_euler_quartic():
    rec = euler_quartic()
    assert rec.holds()
    assert [p.deg for p in rec.polys] == [7, 6, 7, 6]
    x = sympy.Symbol("x")
    p, q, r, s = (sum(int(c) * x**i for i, c in enumerate(P.coeffs)) for P in rec.polys)
    assert sympy.expand(p**4 + q**4 - r**4 - s**4) == 0


def test_quartic_field_constants():
    rec = quartic_field_example()
    F = rec.field
    e = rec.extras
    assert F.degree == 8
    assert e["i"] ** 2 == -F.one
    assert e["fourth_root_2"] ** 4 == 2 * F.one
    assert e["epsilon"] ** 4 == -F.one
    assert e["fourth_root_8"] ** 4 == 8 * F.one
    p, q, r, s = rec.polys
    lhs = p**4 + q**4
    assert lhs == r**4 + s**4
    assert lhs


def test_crt_exponents_property():
    for ks in ([2, 3, 5], [3, 4, 5], [4, 5, 7], [2, 3, 5, 7], [37, 38, 39]):
        alphas = crt_exponents(ks)
        for i, (k, a) in enumerate(zip(ks, alphas)):
            others = math.prod(ks[:i] + ks[i + 1:])
            assert a % others == 0 and (a + 1) % k == 0
            # least such value
            assert a < others * k
    assert crt_exponents([2, 3, 5]) == [15, 20, 24]


def test_crt_expanded_instance():
    res = crt_construct([X, ONE, -X - 1], [2, 3, 5])
    assert res.alphas == [15, 20, 24] and res.expanded
    rec = res.record
    assert rec.holds()
    g = multigcd([p**k for p, k in zip(rec.polys, rec.exponents)])
    assert g.deg == res.gcd_degree >= 39
    assert not res.exponent_bound_fails


def test_crt_factored_instance():
    res = crt_construct([X, ONE, -X - 1], [37, 38, 39])
    assert not res.expanded and res.record is None
    assert res.gcd_nontrivial and res.exponent_bound_fails


def test_crt_rejections():
    with pytest.raises(HypothesisError):
        crt_construct([X, ONE, -X - 1], [2, 4, 5])
    with pytest.raises(HypothesisError):
        crt_construct([X, ONE, X], [2, 3, 5])


def test_abc_identity_and_radical():
    u = sympy.Symbol("u")
    assert sympy.expand((u - 1) ** 2 * (4 * u - 1) + (3 * u - 1) ** 2 - 4 * u**3) == 0
    for alpha in range(1, 65):
        t = abc_family(alpha)
        assert t.a + t.b == t.c
        assert math.gcd(t.a, t.b) == 1
        if alpha <= 40:
            assert t.rad_abc == math.prod(sympy.primefactors(t.a * t.b * t.c))


def test_abc_small_rows():
    assert abc_family(1).as_row() == [1, 7, 25, 32, 70, "0.815756098418"]
    assert abs(math.log(32) / math.log(70) - 0.815756098418) < 1e-12
    t = abc_family(2)
    assert (t.a, t.b, t.c, t.rad_abc) == (135, 121, 256, 330)


def test_abc_range():
    for bad in (0, 65):
        with pytest.raises(ValueError):
            abc_family(bad)


def test_elkies_examples():
    hits = elkies_scan(20, 3, 3)
    assert hits == [(6, 8, 9, 3, "-"), (9, 10, 12, 3, "+")]
    assert elkies_scan(500, 4, 12) == []
    with pytest.raises(ValueError):
        elkies_scan(1, 3, 3)


def test_elkies_cubes_match_brute_force():
    limit = 200
    cubes = {c**3: c for c in range(2, limit + 1)}
    expect = []
    for A in range(2, limit + 1):
        for B in range(A, limit + 1):
            s = A**3 + B**3
            if s - 1 in cubes:
                expect.append((A, B, cubes[s - 1], 3, "+"))
            if s + 1 in cubes:
                expect.append((A, B, cubes[s + 1], 3, "-"))
    assert elkies_scan(limit, 3, 3) == sorted(expect)
    assert elkies_scan(limit, 3, 4, workers=2) == sorted(expect)


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_linear_power_family(m):
    rec = linear_power_family(range(m))
    assert rec.holds()
    assert rec.exponents == [m - 2] * m
