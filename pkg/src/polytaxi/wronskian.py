"""Wronskian matrices, fraction-free determinants and power cofactors."""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Polynomial, derivative

__all__ = [
    "PolyMatrix",
    "CofactorTable",
    "NotDivisibleError",
    "wronskian_matrix",
    "wronskian_det",
    "det",
    "det_cofactor",
    "lin_indep",
    "coefficient_rank",
    "nullspace",
    "divide_out_power",
    "cofactor_table",
]


class NotDivisibleError(ArithmeticError):
    """``a`` is not divisible by the requested power of ``p``."""

    def __init__(self, power):
        self.power = power
        super().__init__(f"not divisible: fails at power {power}")


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match the shape")
        fields = {e.field for e in self.entries}
        if len(fields) > 1:
            raise TypeError("matrix entries live in different coefficient fields")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def as_lists(self):
        return [self.row(i) for i in range(self.rows)]


def wronskian_matrix(fs, order):
    """Row i holds fs[i] and its derivatives up to ``order``."""
    fs = list(fs)
    if not fs:
        raise ValueError("Wronskian of an empty list")
    entries = []
    for f in fs:
        entries.extend(derivative(f, n) for n in range(order + 1))
    return PolyMatrix(len(fs), order + 1, tuple(entries))


def det_cofactor(rows):
    """Laplace expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return rows[0][0] * 0
    return total


def _bareiss(rows):
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = None
    for k in range(n - 1):
        if not m[k][k]:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return m[0][0] * 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = v if prev is None else v.exact_div(prev)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def det(matrix):
    """Exact determinant of a square :class:`PolyMatrix` (or list of rows).

    Fraction-free elimination from 4x4 up, cofactor expansion below.
    """
    rows = matrix.as_lists() if isinstance(matrix, PolyMatrix) else [list(r) for r in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("determinant needs a nonempty square matrix")
    if n < 4:
        return det_cofactor(rows)
    return _bareiss(rows)


def wronskian_det(fs):
    fs = list(fs)
    return det(wronskian_matrix(fs, len(fs) - 1))


# -- coefficient-space linear algebra ----------------------------------------

def _coeff_rows(fs):
    field = fs[0].field
    width = max((len(f.coeffs) for f in fs), default=0)
    zero = field.zero
    return [[f[j] if j < len(f.coeffs) else zero for j in range(width)] for f in fs], field


def _rref(rows, field):
    """Reduced row echelon form in place; returns pivot columns."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def coefficient_rank(fs):
    fs = list(fs)
    rows, field = _coeff_rows(fs)
    if not rows or not rows[0]:
        return 0
    return len(_rref(rows, field))


def lin_indep(fs):
    """Linear independence over the coefficient field, by exact rank."""
    fs = list(fs)
    if not fs:
        raise ValueError("empty family")
    return coefficient_rank(fs) == len(fs)


def nullspace(fs):
    """Basis of {lambda : sum lambda_i fs[i] = 0} as lists of field scalars."""
    fs = list(fs)
    rows, field = _coeff_rows(fs)
    width = len(rows[0]) if rows else 0
    # transpose: unknowns are the lambdas
    cols = [[rows[i][j] for i in range(len(fs))] for j in range(width)]
    if not cols:
        return [[field.one if i == k else field.zero for i in range(len(fs))] for k in range(len(fs))]
    pivots = _rref(cols, field)
    free = [c for c in range(len(fs)) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [field.zero] * len(fs)
        vec[fcol] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = -cols[r][fcol]
        basis.append(vec)
    return basis


# -- power cofactors ---------------------------------------------------------

def divide_out_power(a, p, e):
    """q with a = p**e * q, dividing one factor at a time."""
    if not p:
        raise ValueError("cannot divide by a power of the zero polynomial")
    if not a:
        raise ValueError("divide_out_power expects a nonzero polynomial")
    if e < 0:
        raise ValueError("power must be nonnegative")
    q = a
    for i in range(1, e + 1):
        quo, rem = divmod(q, p)
        if rem:
            raise NotDivisibleError(i)
        q = quo
    return q


@dataclass(frozen=True)
class CofactorTable:
    """entries[n] = (base**exponent)^(n) / base**(exponent - order)."""

    base: Polynomial
    exponent: int
    order: int
    entries: tuple
    weight: object = 1

    def reconstruct(self, n):
        return self.base ** (self.exponent - self.order) * self.entries[n]


def cofactor_table(p, k, order, weight=1):
    """Cofactors of the derivatives of ``weight * p**k`` after removing p**(k-order).

    Degrees follow deg entries[n] = order*deg(p) - n; a mismatch raises.
    """
    if k <= order:
        raise ValueError(f"exponent {k} must exceed the order {order}")
    a = p**k * weight
    t = p.deg
    entries = []
    for n in range(order + 1):
        d = derivative(a, n)
        if not d:
            # constant base: every positive-order derivative vanishes
            entries.append(d)
            continue
        b = divide_out_power(d, p, k - order)
        if b.deg != order * t - n:
            raise ArithmeticError(f"cofactor degree {b.deg} != {order}*{t}-{n}")
        entries.append(b)
    return CofactorTable(p, k, order, tuple(entries), weight)
