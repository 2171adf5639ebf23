"""Exact polynomial identities of the form sum of weighted powers = 0.

Number fields, Wronskians, Mason-type degree checks, certified exponent
bounds for polynomial taxicab identities, and small integer searches.
"""

from .exact_fields import QQ, NumberField, factorize, nf_make
from .mason import InconsistencyError
from .poly import Polynomial

__version__ = "0.1.0"

__all__ = ["QQ", "NumberField", "Polynomial", "InconsistencyError", "factorize", "nf_make"]
