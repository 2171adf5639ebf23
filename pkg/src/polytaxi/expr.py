"""Tiny polynomial expression language used by the command line.

Grammar (whitespace insensitive, explicit ``*`` required)::

    expr   := term (('+' | '-') term)*
    term   := ['-'] factor ('*' factor)*
    factor := base ('^' INT)?
    base   := NUMBER | VAR | '@' | '(' expr ')'
    NUMBER := INT ('/' INT)?

``@`` denotes the generator of the configured number field.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .exact_fields import QQ, NumberField
from .poly import Polynomial

__all__ = ["PolyExpr", "ParseError", "parse_poly", "format_poly", "format_scalar"]

MAX_EXPONENT = 10**6

_TOKEN = re.compile(r"\s*(?:(\d+(?:\s*/\s*\d+)?)|([A-Za-z_]\w*)|(\^|\*\*)|([-+*()@]))")


class ParseError(ValueError):
    def __init__(self, msg, pos):
        self.pos = pos
        super().__init__(f"{msg} at position {pos}")


class PolyExpr:
    """Parsed source text bound to a coefficient field."""

    def __init__(self, text, field=QQ):
        self.text = text
        self.field = field
        self.var = None
        src = text.replace("−", "-").replace("–", "-")
        self._tokens = self._tokenize(src)
        self._i = 0
        self.value = self._parse_expr()
        if self._peek() is not None:
            kind, val, pos = self._tokens[self._i]
            if kind in ("num", "var") or val == "(":
                raise ParseError(f"unexpected {val!r} (implicit multiplication is not allowed)", pos)
            raise ParseError(f"unexpected {val!r}", pos)

    @staticmethod
    def _tokenize(src):
        out = []
        pos = 0
        while pos < len(src):
            if src[pos:].strip() == "":
                break
            m = _TOKEN.match(src, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {src[pos:].lstrip()[:1]!r}", pos)
            start = m.start(m.lastindex)
            if m.group(1):
                out.append(("num", m.group(1).replace(" ", ""), start))
            elif m.group(2):
                out.append(("var", m.group(2), start))
            elif m.group(3):
                out.append(("op", "^", start))
            else:
                out.append(("op", m.group(4), start))
            pos = m.end()
        return out

    def _peek(self):
        return self._tokens[self._i][1] if self._i < len(self._tokens) else None

    def _next(self):
        if self._i >= len(self._tokens):
            raise ParseError("unexpected end of input", len(self.text))
        tok = self._tokens[self._i]
        self._i += 1
        return tok

    def _parse_expr(self):
        acc = self._parse_term()
        while self._peek() in ("+", "-"):
            op = self._next()[1]
            rhs = self._parse_term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def _parse_term(self):
        neg = False
        if self._peek() == "-":
            self._next()
            neg = True
        acc = self._parse_factor()
        while self._peek() == "*":
            self._next()
            acc = acc * self._parse_factor()
        return -acc if neg else acc

    def _parse_factor(self):
        base = self._parse_base()
        if self._peek() == "^":
            self._next()
            kind, val, pos = self._next()
            if kind != "num" or "/" in val:
                raise ParseError("exponent must be a nonnegative integer", pos)
            e = int(val)
            if e > MAX_EXPONENT:
                raise ParseError(f"exponent {e} exceeds {MAX_EXPONENT}", pos)
            base = base**e
        return base

    def _parse_base(self):
        kind, val, pos = self._next()
        f = self.field
        if kind == "num":
            return Polynomial([Fraction(val)], f)
        if kind == "var":
            if self.var is None:
                self.var = val
            elif val != self.var:
                raise ParseError(f"second variable {val!r} (only {self.var!r} allowed)", pos)
            return Polynomial.x(f)
        if val == "@":
            if not isinstance(f, NumberField):
                raise ParseError("'@' needs a number field (use --field)", pos)
            return Polynomial([f.gen], f)
        if val == "(":
            inner = self._parse_expr()
            k, v, p = self._next()
            if v != ")":
                raise ParseError("expected ')'", p)
            return inner
        raise ParseError(f"unexpected {val!r}", pos)


def parse_poly(text, field=QQ):
    """Parse ``text`` into a :class:`Polynomial` over ``field``."""
    return PolyExpr(text, field).value


def _frac(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_scalar(c):
    """Render a scalar so that it parses back (rationals bare, field elements in parentheses)."""
    if isinstance(c, Fraction) or isinstance(c, int):
        return _frac(Fraction(c))
    if c.is_rational():
        return _frac(c.coords[0])
    inner = format_poly(Polynomial(c.coords, QQ), var="@")
    return f"({inner})"


def format_poly(p, var="x"):
    """Canonical text form, highest degree first."""
    if not p.coeffs:
        return "0"
    parts = []
    for e in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[e]
        if not c:
            continue
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        rational = isinstance(c, Fraction) or c.is_rational()
        if rational:
            q = c if isinstance(c, Fraction) else c.coords[0]
            sign = "-" if q < 0 else "+"
            q = abs(q)
            if mono and q == 1:
                body = mono
            else:
                body = _frac(q) + ("*" + mono if mono else "")
        else:
            sign = "+"
            body = format_scalar(c) + ("*" + mono if mono else "")
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
