import json
import operator
import random
from fractions import Fraction

import pytest

from polytaxi.bounds import (
    Inequality,
    coprime_sums_check,
    equal_exponent_check,
    exponent_bound,
    replay_chain,
    two_term_certificate,
    zero_sum_certificate,
)
from polytaxi.exact_fields import nf_make
from polytaxi.families import crt_construct, euler_quartic, lehmer_family, linear_power_family, quartic_field_example
from polytaxi.poly import Polynomial, derivative, poly_gcd
from polytaxi.serialize import to_jsonable

from conftest import GAUSSIAN, ZETA8, int_poly

X = Polynomial.x()
ONE = Polynomial([1])
OPS = {"<": operator.lt, "<=": operator.le, "==": operator.eq, ">=": operator.ge, ">": operator.gt, "!=": operator.ne}


def replay_independently(chain_json):
    """Re-evaluate serialized inequalities without touching the library."""
    for step in chain_json:
        assert OPS[step["relation"]](step["lhs"], step["rhs"]) == step["holds"], step["name"]
    return [s["name"] for s in chain_json if not s["holds"]]


def pythagorean():
    F = nf_make(GAUSSIAN)
    x = Polynomial.x(F)
    return [x**2 - 1, x * 2, (x**2 + 1) * F.gen], [2, 2, 2]


def euler_over_zeta8():
    F = nf_make(ZETA8)
    p, q, r, s = (Polynomial([F(c) for c in P.coeffs], F) for P in euler_quartic().polys)
    return [p, q, r * F.gen, s * F.gen], [4] * 4


def test_exponent_bound_values():
    assert exponent_bound(3) == Fraction(11, 3)
    assert exponent_bound(4) == 16
    assert exponent_bound(5) == 41


def test_inequality_records():
    ok = Inequality.of("a", 3, "<=", 4)
    assert ok.holds and ok.fatal
    bad = Inequality.of("b", 5, "<", 5, fatal=False)
    assert not bad.holds
    assert replay_chain([ok, bad]) == []
    tampered = dict(vars(ok), holds=False)
    assert replay_chain([tampered]) == ["a"]


# -- two terms ----------------------------------------------------------------

def test_two_term_euler():
    cert = two_term_certificate(*euler_quartic().polys, 4)
    assert cert.hypotheses_ok and cert.branch == "wronskian"
    assert cert.k == 7
    assert cert.derivative_identity_holds
    assert cert.deg_d <= 39 and cert.gcd_degree_bound == 39
    assert cert.mason.satisfied
    assert cert.consistent_with_n_lt_16
    data = json.loads(json.dumps(cert.to_dict()))
    failed = replay_independently(data["chain"])
    # only the non-fatal variant of the lower bound may fail
    assert all(not s["fatal"] for s in data["chain"] if s["name"] in failed)


@pytest.mark.parametrize("sign", [1, -1])
def test_two_term_lehmer(sign):
    x, y, z, one = lehmer_family(sign).polys
    cert = two_term_certificate(x, y, z, one * sign, 3)
    assert cert.hypotheses_ok and cert.consistent_with_n_lt_16
    assert cert.k == 4
    assert cert.mason.satisfied


def test_two_term_quartic_field():
    cert = two_term_certificate(*quartic_field_example().polys, 4)
    assert cert.hypotheses_ok and cert.derivative_identity_holds
    assert cert.deg_d <= 6 * cert.k - 3


def test_two_term_rejections():
    cert = two_term_certificate(X, X, X, X, 5)
    assert not cert.hypotheses_ok
    assert "{p^n, q^n} = {r^n, s^n}" in cert.violations
    cert = two_term_certificate(X, ONE, X, X + 1, 3)
    assert "identity p^n + q^n = r^n + s^n fails" in cert.violations
    cert = two_term_certificate(9 * X, 10 * X, 12 * X, X, 3)
    assert "gcd(p, q, r, s) != 1" in cert.violations


def test_two_term_constant_multiple_branch():
    # (x^2 - 1)^2 + (2x)^2 = (x^2 + 1)^2 + 0^2, and 0 = 0 * s
    cert = two_term_certificate(X**2 - 1, 2 * X, Polynomial(), X**2 + 1, 2)
    assert cert.hypotheses_ok and cert.branch == "constant_multiple"
    assert cert.constant_multiple["relation_holds"]


def test_cross_derivative_can_be_constant():
    # p's - ps' for p = x, s = x + 1 is the constant 1
    p, s = X, X + 1
    assert derivative(p) * s - p * derivative(s) == ONE


# -- zero sums ----------------------------------------------------------------

def _check_zero_sum(cert, m):
    assert cert.hypotheses_ok
    degs = dict(cert.p_chain)
    assert degs[m] == degs[m - 1] == 0
    assert cert.w_tilde.deg <= cert.lemw_bound
    assert cert.lemw_bound == ((m**3 - 11 * m**2 + 38 * m - 40) * cert.T) // 3
    assert cert.K < exponent_bound(m)
    data = json.loads(json.dumps(cert.to_dict()))
    failed = replay_independently(data["chain"])
    assert all(not s["fatal"] for s in data["chain"] if s["name"] in failed)
    return data


def test_zero_sum_pythagorean():
    ps, ks = pythagorean()
    cert = zero_sum_certificate(ps, ks)
    data = _check_zero_sum(cert, 3)
    assert cert.K == 2 and cert.final_bound == Fraction(11, 3)
    # at m = 3 the strict form of the H bound reads 0 < 0
    strict = [s for s in data["chain"] if s["name"] == "deg H < 3T(m-3)(m-2)"]
    assert strict and not strict[0]["holds"] and not strict[0]["fatal"]


def test_zero_sum_euler_zeta8():
    ps, ks = euler_over_zeta8()
    cert = zero_sum_certificate(ps, ks)
    _check_zero_sum(cert, 4)
    assert cert.K == 4 and cert.final_bound == 16


@pytest.mark.parametrize("m", [5, 6])
def test_zero_sum_linear_powers(m):
    rec = linear_power_family(range(m))
    assert rec.holds()
    cert = zero_sum_certificate(rec.polys, rec.exponents, rec.weights)
    _check_zero_sum(cert, m)
    # the telescoping steps t = m-1 .. 4 are all present
    assert [s["t"] for s in cert.p_chain_steps] == list(range(m - 1, 3, -1))


def test_zero_sum_rejects_crt_instance():
    res = crt_construct([X, ONE, -X - 1], [2, 3, 5])
    rec = res.record
    cert = zero_sum_certificate(rec.polys, rec.exponents)
    assert not cert.hypotheses_ok
    assert "gcd of power terms != 1" in cert.violations


def test_zero_sum_rejections():
    ps, _ = pythagorean()
    cert = zero_sum_certificate(ps, [2, 2, 3])
    assert "sum of power terms is not zero" in cert.violations
    rec = linear_power_family(range(5))
    cert = zero_sum_certificate(rec.polys, [1] * 5, rec.weights)
    assert any("k_i <= m-3" in v for v in cert.violations)
    cert = zero_sum_certificate([X, X, -2 * X], [1, 1, 1])
    assert "gcd of power terms != 1" in cert.violations
    assert any("linearly dependent" in v for v in cert.violations)


# -- equal exponents and coprime sums -----------------------------------------

def test_equal_exponent_pythagorean():
    ps, _ = pythagorean()
    rep = equal_exponent_check(ps, 2)
    assert rep.hypotheses_ok and rep.support == [0, 1, 2]
    assert rep.satisfied and rep.bound == Fraction(11, 3)
    assert rep.certificate.hypotheses_ok


def test_equal_exponent_shorter_support():
    rep = equal_exponent_check([X, ONE, X + 2, -2 * X - 3], 1)
    assert rep.hypotheses_ok
    assert len(rep.support) < 4
    assert rep.bound == 16


def test_equal_exponent_quotient_constant():
    rep = equal_exponent_check([X, -X, 2 * X, -2 * X], 1)
    assert not rep.hypotheses_ok
    assert any("quotient constant" in v for v in rep.violations)


def test_coprime_sums_examples():
    rep = coprime_sums_check([X, X + 2], [X + 1, 3 * ONE], 16)
    assert rep.hypotheses_ok and rep.in_range and not rep.identity_holds
    rep = coprime_sums_check([X], [X + 1], 3)
    assert "needs k >= 2" in rep.violations


def test_coprime_sums_random():
    rng = random.Random(35)
    done = 0
    while done < 300:
        k = rng.choice([2, 3])
        polys = [int_poly(rng, max_deg=3) for _ in range(2 * k)]
        if any(poly_gcd(polys[i], polys[j]).deg != 0 for i in range(2 * k) for j in range(i)):
            continue
        if all(p.deg < 1 for p in polys):
            continue
        n = 4 * k * (k - 1)
        rep = coprime_sums_check(polys[:k], polys[k:], n)
        assert rep.hypotheses_ok and rep.in_range and not rep.identity_holds
        done += 1


def test_certificates_serialize():
    cert = two_term_certificate(*euler_quartic().polys, 4)
    assert json.dumps(to_jsonable(cert))
