"""Exact scalars: rationals and single square-root surds ``c * sqrt(r)``."""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

__all__ = ["Surd", "Scalar", "as_fraction", "fmt_rational", "fmt_scalar", "parse_rational", "parse_scalar"]

Rational = Union[int, Fraction]


def _squarefree_split(r: int) -> tuple[int, int]:
    """Return (outside, inside) with r = outside**2 * inside, inside squarefree."""
    outside, inside = 1, r
    f = 2
    while f * f <= inside:
        while inside % (f * f) == 0:
            inside //= f * f
            outside *= f
        f += 1
    return outside, inside


class Surd:
    """The real number ``coef * sqrt(radicand)`` in canonical form.

    ``radicand`` is squarefree; a zero coefficient forces radicand 1.
    Sums are only defined between like surds, which is all the quotient
    matrices here ever need.
    """

    __slots__ = ("coef", "radicand")

    def __init__(self, coef: Rational = 0, radicand: int = 1):
        coef = Fraction(coef)
        radicand = int(radicand)
        if radicand < 0:
            raise ValueError("negative radicand")
        if radicand == 0 or coef == 0:
            coef, radicand = Fraction(0), 1
        else:
            out, radicand = _squarefree_split(radicand)
            coef *= out
        self.coef = coef
        self.radicand = radicand

    @classmethod
    def sqrt(cls, r: Rational) -> "Surd":
        """sqrt of a nonnegative rational p/q, as sqrt(p*q)/q."""
        r = Fraction(r)
        return cls(Fraction(1, r.denominator), r.numerator * r.denominator)

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    def squared(self) -> Fraction:
        return self.coef * self.coef * self.radicand

    def _coerce(self, other) -> "Surd | None":
        if isinstance(other, Surd):
            return other
        if isinstance(other, (int, Fraction)):
            return Surd(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.coef == 0:
            return self
        if self.coef == 0:
            return o
        if o.radicand != self.radicand:
            raise ArithmeticError(f"cannot add unlike surds {self} and {o}")
        return Surd(self.coef + o.coef, self.radicand)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.coef, self.radicand)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Surd(self.coef * o.coef, self.radicand * o.radicand)

    __rmul__ = __mul__

    def __float__(self) -> float:
        return float(self.coef) * math.sqrt(self.radicand)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coef == o.coef and self.radicand == o.radicand

    def __hash__(self) -> int:
        if self.radicand == 1:
            return hash(self.coef)
        return hash((self.coef, self.radicand))

    def __repr__(self) -> str:
        return f"Surd({self.coef!s}, {self.radicand})"

    def __str__(self) -> str:
        return fmt_scalar(self)


Scalar = Union[int, Fraction, Surd]


def as_fraction(x) -> Fraction:
    """Exact rational value of ``x``; irrational surds raise TypeError."""
    if isinstance(x, Surd):
        if not x.is_rational:
            raise TypeError(f"{x} is irrational")
        return x.coef
    if isinstance(x, (int, Fraction, float)):
        return Fraction(x)
    raise TypeError(f"not a rational scalar: {x!r}")


def fmt_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def fmt_scalar(x) -> str:
    if isinstance(x, Surd):
        if x.is_rational:
            return fmt_rational(x.coef)
        return f"sqrt({x.radicand})*{fmt_rational(x.coef)}"
    return fmt_rational(x)


_SURD_RE = re.compile(r"^\s*sqrt\((\d+)\)\s*\*\s*(.+)$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or a decimal literal exactly (``0.25`` is 1/4)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def parse_scalar(text: str) -> Fraction | Surd:
    m = _SURD_RE.match(text)
    if m:
        return Surd(parse_rational(m.group(2)), int(m.group(1)))
    return parse_rational(text)
