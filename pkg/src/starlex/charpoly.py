"""Exact polynomials in x over the rationals, and the characteristic
polynomial identities for paths, bridges and coalescences.

alpha is always fixed to a rational before a polynomial is built, so every
polynomial here is univariate.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .exact import as_fraction, fmt_rational

__all__ = [
    "Poly",
    "X",
    "f_poly",
    "f_value",
    "phi_path",
    "bridge_phi",
    "coalescence_phi",
    "inequ_difference",
    "inequ_closed_form",
    "char_poly_oracle",
]


class Poly:
    """Immutable polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial has degree -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.is_zero() or o.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out, base = Poly([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction ``x``."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + (c if not isinstance(x, float) else float(c))
        return acc

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        return "[" + ", ".join(fmt_rational(c) for c in (self.coeffs or (Fraction(0),))) + "]"

    @classmethod
    def parse(cls, text: str) -> "Poly":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"expected a bracketed coefficient list, got {text!r}")
        inner = body[1:-1].strip()
        return cls(Fraction(t.strip()) for t in inner.split(",")) if inner else cls()


X = Poly([0, 1])


def _alpha(alpha) -> Fraction:
    alpha = Fraction(alpha)
    if not 0 <= alpha < 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    return alpha


@lru_cache(maxsize=None)
def _f_cached(n: int, alpha: Fraction) -> Poly:
    if n == 0:
        return Poly([1])
    if n == 1:
        return Poly([-alpha, 1])
    beta2 = (1 - alpha) ** 2
    return (X - 2 * alpha) * _f_cached(n - 1, alpha) - beta2 * _f_cached(n - 2, alpha)


def f_poly(n: int, alpha) -> Poly:
    """Characteristic polynomial of A_alpha(P_{n+1}) with an end vertex removed.

    ``f_poly(-1, alpha)`` is the zero polynomial, so degenerate splits need
    no special casing.
    """
    if n < -1:
        raise ValueError("n must be >= -1")
    if n == -1:
        return Poly()
    return _f_cached(n, _alpha(alpha))


def f_value(n: int, alpha, x):
    """f_n(x) by running the three-term recurrence at a point.

    Exact for rational ``x``; with a float ``x`` this is the numerically
    stable route used for root bracketing.
    """
    if n < 0:
        return 0 * x
    if not isinstance(x, float):
        alpha = Fraction(alpha)
    else:
        alpha = float(alpha)
    beta2 = (1 - alpha) ** 2
    prev, cur = 1 + 0 * x, x - alpha
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, (x - 2 * alpha) * cur - beta2 * prev
    return cur


def phi_path(a: int, b: int, alpha) -> Poly:
    """phi_alpha(P_{a+b}) = f_a f_b - (1-alpha)^2 f_{a-1} f_{b-1}.

    Stated for positive ``a`` and ``b``; ``b = 0`` is allowed through the
    convention f_{-1} = 0, which reduces the formula to f_a.
    """
    if a < 0 or b < 0 or a + b < 1:
        raise ValueError("need a, b >= 0 with a + b >= 1")
    alpha = _alpha(alpha)
    return f_poly(a, alpha) * f_poly(b, alpha) - (1 - alpha) ** 2 * f_poly(a - 1, alpha) * f_poly(b - 1, alpha)


def bridge_phi(phi_g: Poly, phi_g_minus_u: Poly, phi_h: Poly, phi_h_minus_v: Poly, w_squared) -> Poly:
    """Characteristic polynomial after joining G and H by a bridge of weight w."""
    w_squared = Fraction(w_squared)
    if w_squared < 0:
        raise ValueError("squared weight must be nonnegative")
    return phi_g * phi_h - w_squared * phi_g_minus_u * phi_h_minus_v


def coalescence_phi(phi_g: Poly, phi_g_minus_u: Poly, phi_h: Poly, phi_h_minus_v: Poly) -> Poly:
    """Characteristic polynomial of the coalescence of G at u with H at v."""
    return phi_g * phi_h_minus_v + phi_g_minus_u * phi_h - X * phi_g_minus_u * phi_h_minus_v


def inequ_closed_form(a: int, b: int, alpha) -> Poly:
    """-(1-alpha)^{2(b-1)} (alpha f_l + (1-alpha)^2 f_{l-1}) with l = a - b."""
    alpha = _alpha(alpha)
    l = a - b
    beta2 = (1 - alpha) ** 2
    return -(beta2 ** (b - 1)) * (alpha * f_poly(l, alpha) + beta2 * f_poly(l - 1, alpha))


def inequ_difference(a: int, b: int, alpha) -> Poly:
    """f_a f_{b-1} - f_{a-1} f_b, checked against its telescoped closed form."""
    if not a > b >= 1:
        raise ValueError(f"need a > b >= 1, got a={a}, b={b}")
    alpha = _alpha(alpha)
    diff = f_poly(a, alpha) * f_poly(b - 1, alpha) - f_poly(a - 1, alpha) * f_poly(b, alpha)
    closed = inequ_closed_form(a, b, alpha)
    if diff != closed:
        raise AssertionError(f"telescoping identity fails at a={a}, b={b}, alpha={alpha}")
    return diff


def char_poly_oracle(m) -> Poly:
    """det(xI - M) for a rational square matrix, by Faddeev-LeVerrier.

    Runs entirely in exact rationals; the 0x0 matrix gives 1.
    """
    arr = np.asarray(m, dtype=object)
    if arr.size == 0:
        return Poly([1])
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"matrix must be square, got shape {arr.shape}")
    n = arr.shape[0]
    a = [[as_fraction(arr[i, j]) for j in range(n)] for i in range(n)]
    # coefficients c[k] of x^k, c[n] = 1
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = _matmul(a, mk)
        for i in range(n):
            prod[i][i] += c[n - k + 1]
        mk = prod
        am = _matmul(a, mk)
        c[n - k] = -sum(am[i][i] for i in range(n)) / k
    return Poly(c)


def _matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]
