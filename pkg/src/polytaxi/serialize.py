"""JSON encodings: rationals as "num/den" strings, field scalars as coordinate arrays."""

from __future__ import annotations

from fractions import Fraction

from .exact_fields import QQ, NFElement, NumberField
from .poly import Polynomial

SCHEMA_VERSION = 1


def frac_to_json(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def scalar_to_json(c):
    if isinstance(c, NFElement):
        return [frac_to_json(x) for x in c.coords]
    return frac_to_json(c)


def field_to_json(field):
    return None if field == QQ else list(field.min_poly)


def field_from_json(obj):
    return QQ if obj is None else NumberField(obj)


def poly_to_json(p):
    return [scalar_to_json(c) for c in p.coeffs]


def poly_from_json(coeffs, field=QQ):
    if isinstance(field, NumberField):
        return Polynomial([field.from_coords(c) for c in coeffs], field)
    return Polynomial([Fraction(c) for c in coeffs], field)


def to_jsonable(obj):
    """Recursively convert report objects into plain JSON data."""
    if isinstance(obj, Polynomial):
        return poly_to_json(obj)
    if isinstance(obj, (Fraction, NFElement)):
        return scalar_to_json(obj)
    if isinstance(obj, NumberField):
        return list(obj.min_poly)
    if isinstance(obj, dict):
        return {k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    if isinstance(obj, float):
        return None if obj != obj or obj in (float("inf"), float("-inf")) else obj
    return obj


def load_schema(name):
    """JSON schema shipped with the package, e.g. ``load_schema("mason_report")``."""
    import json
    from importlib.resources import files

    return json.loads(files("polytaxi").joinpath("schemas", f"{name}.json").read_text())
