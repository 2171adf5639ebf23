import random
from fractions import Fraction

import pytest

from polytaxi.exact_fields import QQ, nf_make
from polytaxi.families import Q_ALPHA_MIN_POLY
from polytaxi.poly import Polynomial

GAUSSIAN = (1, 0, 1)
ZETA8 = (1, 0, 0, 0, 1)
CUBIC = (-2, 0, 0, 1)  # y^3 - 2

FIELDS = {
    "QQ": QQ,
    "Q(i)": nf_make(GAUSSIAN),
    "Q(2^(1/3))": nf_make(CUBIC),
    "Q(zeta8)": nf_make(ZETA8),
    "Q(alpha)": nf_make(Q_ALPHA_MIN_POLY),
}


def rand_scalar(rng, field, bound=5, rational=True):
    def q():
        num = rng.randint(-bound, bound)
        den = rng.randint(1, 3) if rational else 1
        return Fraction(num, den)

    if field == QQ:
        return q()
    # mostly sparse field elements keep the tests quick
    coords = [q() if rng.random() < 0.5 else 0 for _ in range(field.degree)]
    return field.from_coords(coords)


def rand_poly(rng, field=QQ, max_deg=6, bound=5, rational=True, nonzero=False):
    while True:
        d = rng.randint(0, max_deg)
        p = Polynomial([rand_scalar(rng, field, bound, rational) for _ in range(d + 1)], field)
        if p or not nonzero:
            return p


def int_poly(rng, max_deg=6, bound=5, nonzero=True):
    return rand_poly(rng, QQ, max_deg, bound, rational=False, nonzero=nonzero)


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture(params=list(FIELDS), ids=list(FIELDS))
def field(request):
    return FIELDS[request.param]
