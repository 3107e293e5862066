"""Exact one-variable Laurent polynomials with integer coefficients.

Exponents are stored as integers on a quarter-unit grid: a stored exponent
``q`` stands for ``t**(q/4)``.  This lets the bracket variable ``A`` and the
Jones variable ``t = A**-4`` share a single representation.  Bracket values
are kept with the stored exponent equal to the power of ``A``; converting to
``t`` is a call to :func:`substitute_quarter_power` with ``k = -1``.

Coefficients are Python ints, so nothing overflows.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from knotpuzzle.errors import ParseError, ZeroPolynomial

__all__ = [
    "LaurentPoly",
    "poly_add",
    "poly_mul",
    "substitute_quarter_power",
    "normalize_alexander",
    "exact_div",
    "render",
    "parse_poly",
    "t_poly",
    "ZERO",
    "ONE",
]

QUARTER = 4


class LaurentPoly:
    """Immutable Laurent polynomial ``sum(c * t**(q/4))``.

    The term map never holds a zero coefficient; the zero polynomial is the
    empty map.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        acc: dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for q, c in items:
                if c:
                    acc[int(q)] = acc.get(int(q), 0) + int(c)
        self._terms = {q: c for q, c in sorted(acc.items()) if c}
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # trusted constructor: terms already pruned
        p = cls.__new__(cls)
        p._terms = dict(sorted(terms.items()))
        p._hash = None
        return p

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> "LaurentPoly":
        """``coeff * t**(exponent/4)`` (stored-exponent units)."""
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_exponent(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return next(iter(self._terms))

    def max_exponent(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return next(reversed(self._terms))

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def on_integer_grid(self) -> bool:
        """True when every exponent is a whole power of ``t``."""
        return all(q % QUARTER == 0 for q in self._terms)

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({q: -c for q, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return poly_add(self, -_coerce(other))

    def __rsub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return poly_add(_coerce(other), -self)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (q, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with coefficient other than +-1 is not a unit")
            return LaurentPoly._raw({q * n: c ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"

    def __str__(self) -> str:
        return render(self)

    def evaluate(self, value: int | Fraction) -> Fraction:
        """Evaluate at ``t = value``; requires integer-grid exponents unless value is 1."""
        if value == 1:
            return Fraction(sum(self._terms.values()))
        if not self.on_integer_grid():
            raise ValueError("fractional exponents cannot be evaluated exactly")
        v = Fraction(value)
        return sum((c * v ** (q // QUARTER) for q, c in self._terms.items()), Fraction(0))

    def invert_variable(self) -> "LaurentPoly":
        """``p(t) -> p(1/t)``."""
        return substitute_quarter_power(self, -1)


def _coerce(x: "LaurentPoly | int") -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})


def t_poly(coeffs: Mapping[int, int]) -> LaurentPoly:
    """Build a polynomial from whole ``t`` exponents, e.g. ``{-1: 1, 2: -3}``."""
    return LaurentPoly({e * QUARTER: c for e, c in coeffs.items()})


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    out = dict(p._terms)
    for e, c in q._terms.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return LaurentPoly._raw(out)


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    out: dict[int, int] = {}
    for e1, c1 in p._terms.items():
        for e2, c2 in q._terms.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return LaurentPoly._raw({e: c for e, c in out.items() if c})


def substitute_quarter_power(p: LaurentPoly, k: int) -> LaurentPoly:
    """Scale every stored exponent by ``k``.

    With ``k = -1`` this turns a bracket value in ``A`` into ``t`` via
    ``A = t**(-1/4)``; applied to a ``t`` polynomial it maps ``t -> 1/t``.
    """
    if k == 0:
        return LaurentPoly.constant(sum(p._terms.values()))
    return LaurentPoly._raw({q * k: c for q, c in p._terms.items()})


def normalize_alexander(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative of ``p`` up to multiplication by ``+-t**k``.

    The result has lowest exponent 0 and a positive lowest coefficient.
    """
    if p.is_zero():
        raise ZeroPolynomial("the Alexander polynomial cannot be zero")
    if not p.on_integer_grid():
        raise ValueError("Alexander polynomials live on whole powers of t")
    low = p.min_exponent()
    sign = 1 if p._terms[low] > 0 else -1
    return LaurentPoly._raw({q - low: sign * c for q, c in p._terms.items()})


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Quotient ``p / d`` in the Laurent ring; raises ``ValueError`` if inexact."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    dq, dc = next(reversed(d._terms.items()))
    floor = p.min_exponent() - d.min_exponent()
    rem = dict(p._terms)
    quot: dict[int, int] = {}
    while rem:
        top = max(rem)
        qe = top - dq
        c = rem[top]
        if qe < floor or c % dc:
            raise ValueError("polynomial division is not exact")
        qc = c // dc
        quot[qe] = qc
        for e, cc in d._terms.items():
            k = e + qe
            v = rem.get(k, 0) - qc * cc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly._raw(quot)


def _format_exponent(q: int, quarter: bool) -> str:
    value = Fraction(q, QUARTER) if quarter else Fraction(q)
    if value.denominator == 1:
        return str(value.numerator)
    return f"({value.numerator}/{value.denominator})"


def render(p: LaurentPoly, variable: str = "t", quarter: bool = True) -> str:
    """Text form in ascending exponent order, e.g. ``t^-5 - t^-4 + 2 - t``.

    ``quarter=True`` reads stored exponents in quarter units of ``variable``;
    ``quarter=False`` prints them as whole powers (bracket values in ``A``).
    """
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for q, c in p.items():
        mag = abs(c)
        if q == 0:
            body = str(mag)
        else:
            exp = _format_exponent(q, quarter)
            mono = variable if exp == "1" else f"{variable}^{exp}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+)\s*(?:\*\s*)?(?P<var1>[A-Za-z])?
          |(?P<var2>[A-Za-z])
        )
        (?:\s*\^\s*(?P<exp>\{[^}]*\}|\([^)]*\)|[+-]?\d+))?
    """,
    re.VERBOSE,
)


def _parse_exponent(text: str) -> Fraction:
    inner = text.strip()
    if inner[:1] in "({" and inner[-1:] in ")}":
        inner = inner[1:-1].strip()
    try:
        return Fraction(inner.replace(" ", ""))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad exponent {text!r}") from None


def parse_poly(text: str, variable: str = "t", quarter: bool = True) -> LaurentPoly:
    """Parse the format emitted by :func:`render` (braces in exponents allowed)."""
    s = text.strip()
    if s == "0":
        return ZERO
    if not s:
        raise ParseError("empty polynomial text")
    pos = 0
    out: dict[int, int] = {}
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected text at {s[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ParseError(f"missing sign before {s[pos:m.end()].strip()!r}")
        first = False
        var = m.group("var1") or m.group("var2")
        if var is not None and var != variable:
            raise ParseError(f"unknown variable {var!r}, expected {variable!r}")
        coef = int(m.group("coef")) if m.group("coef") else 1
        if m.group("sign") == "-":
            coef = -coef
        if m.group("exp") is not None:
            if var is None:
                raise ParseError("exponent without variable")
            e = _parse_exponent(m.group("exp"))
        else:
            e = Fraction(1 if var else 0)
        scaled = e * QUARTER if quarter else e
        if scaled.denominator != 1:
            raise ParseError(f"exponent {e} is off the quarter grid")
        q = int(scaled)
        out[q] = out.get(q, 0) + coef
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    return LaurentPoly(out)
