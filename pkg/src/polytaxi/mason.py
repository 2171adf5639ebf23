"""Hypothesis-checked validators for Mason-type degree inequalities.

Every checker recomputes both sides of its inequality.  If the hypotheses
hold and the inequality still fails, the theorem would be false, so the
checker raises :class:`InconsistencyError` instead of returning.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations

from .poly import derivative, is_constant, multigcd, poly_gcd, rstar, rstar_of_product
from .serialize import SCHEMA_VERSION

__all__ = [
    "InconsistencyError",
    "HypothesisError",
    "MasonReport",
    "FermatReport",
    "mason_check",
    "fermat_witness",
    "shapiro_sparer_check",
    "debondt_check",
]

MAX_DEBONDT_TERMS = 12


class InconsistencyError(RuntimeError):
    """A verified hypothesis set led to a failed conclusion."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class HypothesisError(ValueError):
    """Inputs do not satisfy the hypotheses of a construction."""


@dataclass
class MasonReport:
    kind: str
    hypotheses_ok: bool
    violations: list = field(default_factory=list)
    max_degree: int | None = None
    bound: int | None = None
    satisfied: bool | None = None
    slack: int | None = None

    def to_dict(self):
        return {"schema_version": SCHEMA_VERSION, **asdict(self)}


@dataclass
class FermatReport:
    hypotheses_ok: bool
    violations: list
    n: int
    identity_holds: bool | None = None
    defect_degree: int | None = None

    def to_dict(self):
        return {"schema_version": SCHEMA_VERSION, "kind": "fermat", **asdict(self)}


def _finish(report):
    report.satisfied = report.max_degree <= report.bound
    report.slack = report.bound - report.max_degree
    if not report.satisfied:
        raise InconsistencyError(f"{report.kind} bound violated under verified hypotheses", report)
    return report


def mason_check(f, g, h):
    """max(deg f, deg g, deg h) <= r*(fgh) - 1 for coprime f + g = h."""
    violations = []
    if f + g != h:
        violations.append("identity f + g = h fails")
    nonzero = [p for p in (f, g, h) if p]
    if not nonzero:
        violations.append("all polynomials are zero")
    elif multigcd([f, g, h]).deg != 0:
        violations.append("gcd(f, g, h) != 1")
    if not any(derivative(p) for p in (f, g, h)):
        violations.append("all derivatives zero")
    if violations:
        return MasonReport("mason", False, violations)
    report = MasonReport("mason", True)
    report.max_degree = max(p.deg for p in (f, g, h))
    report.bound = rstar_of_product([f, g, h]) - 1
    return _finish(report)


def fermat_witness(a, b, c, n):
    """Check that a^n + b^n = c^n has no coprime nonconstant solution.

    Returns the degree of the defect a^n + b^n - c^n.  The all-constant case
    is excluded: over C it is trivially solvable.
    """
    violations = []
    if n < 3:
        violations.append("n < 3")
    if all(is_constant(p) for p in (a, b, c)):
        violations.append("all polynomials constant")
    if not any((a, b, c)):
        violations.append("all polynomials are zero")
    elif multigcd([a, b, c]).deg != 0:
        violations.append("gcd(a, b, c) != 1")
    if violations:
        return FermatReport(False, violations, n)
    defect = a**n + b**n - c**n
    report = FermatReport(True, [], n, identity_holds=not defect, defect_degree=defect.deg if defect else None)
    if not defect:
        raise InconsistencyError("polynomial Fermat lemma violated", report)
    return report


def _pairwise_coprime_violations(fs):
    out = []
    for i, j in combinations(range(len(fs)), 2):
        if poly_gcd(fs[i], fs[j]).deg != 0:
            out.append(f"not pairwise coprime: indices ({i},{j})")
    return out


def shapiro_sparer_check(fs):
    """max deg f_i <= (m-2)(r*(f_1...f_m) - 1) for pairwise coprime zero sums."""
    fs = list(fs)
    m = len(fs)
    violations = []
    if m < 3:
        violations.append("needs m >= 3 summands")
    if not fs or sum(fs[1:], fs[0]):
        violations.append("sum of summands is not zero")
    zeros = [i for i, f in enumerate(fs) if not f]
    if zeros:
        violations.append(f"zero summand at indices {tuple(zeros)}")
    else:
        violations.extend(_pairwise_coprime_violations(fs))
    if all(is_constant(f) for f in fs):
        violations.append("all summands constant")
    if violations:
        return MasonReport("shapiro_sparer", False, violations)
    report = MasonReport("shapiro_sparer", True)
    report.max_degree = max(f.deg for f in fs)
    report.bound = (m - 2) * (rstar_of_product(fs) - 1)
    return _finish(report)


def debondt_check(fs):
    """max deg f_j <= (m-2)(sum r*(f_i) - 1) when vanishing subsums are coprime.

    All 2^m subsets are scanned, so m is capped at 12.  The all-constant
    case is excluded (the bound would be negative).
    """
    fs = list(fs)
    m = len(fs)
    violations = []
    if m < 3:
        violations.append("needs m >= 3 summands")
    if m > MAX_DEBONDT_TERMS:
        violations.append(f"m = {m} exceeds the subset-scan cap {MAX_DEBONDT_TERMS}")
        return MasonReport("debondt", False, violations)
    if not fs or sum(fs[1:], fs[0]):
        violations.append("sum of summands is not zero")
    zeros = [i for i, f in enumerate(fs) if not f]
    if zeros:
        violations.append(f"zero summand at indices {tuple(zeros)}")
    else:
        for size in range(2, m + 1):
            for idx in combinations(range(m), size):
                sub = [fs[i] for i in idx]
                if not sum(sub[1:], sub[0]) and multigcd(sub).deg != 0:
                    violations.append(f"vanishing subsum with common factor: indices {idx}")
    if fs and all(is_constant(f) for f in fs):
        violations.append("all summands constant")
    if violations:
        return MasonReport("debondt", False, violations)
    report = MasonReport("debondt", True)
    report.max_degree = max(f.deg for f in fs)
    report.bound = (m - 2) * (sum(rstar(f) for f in fs) - 1)
    return _finish(report)
