"""Spectral radii by two independent routes (cyclic Jacobi and shifted power
iteration), plus the largest root theta_n of f_n by exact-sign bisection."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .charpoly import f_value

__all__ = [
    "RadiusResult",
    "ConvergenceError",
    "radius_symmetric",
    "radius_power",
    "theta",
    "compare_radii",
    "ORDER_TOL",
    "TIE_TOL",
    "QUOTIENT_TOL",
    "SOLVER_TOL",
]

# two radii are ordered only when they differ by more than ORDER_TOL
ORDER_TOL = 1e-9
TIE_TOL = 1e-11
QUOTIENT_TOL = 1e-10
SOLVER_TOL = 1e-9


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class RadiusResult:
    value: float
    residual: float
    iterations: int


def _as_float(m) -> np.ndarray:
    arr = np.asarray(m)
    if arr.dtype == object:
        arr = np.array([[float(x) for x in row] for row in arr], dtype=float).reshape(arr.shape)
    arr = np.asarray(arr, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"square matrix required, got shape {arr.shape}")
    return arr


def radius_symmetric(m, max_sweeps: int = 100) -> RadiusResult:
    """Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.

    ``iterations`` counts sweeps. The residual is measured on the returned
    eigenvector, scaled to unit max-norm.
    """
    a = _as_float(m).copy()
    n = a.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    if np.max(np.abs(a - a.T)) > 1e-12:
        raise ValueError("matrix is not symmetric")
    orig = (a + a.T) / 2
    a = ((a + a.T) / 2).tolist()
    v = np.eye(n).tolist()
    fro = math.sqrt(sum(x * x for row in a for x in row))
    target = 1e-13 * fro
    sweeps = 0
    while True:
        off = math.sqrt(sum(a[i][j] ** 2 for i in range(n) for j in range(n) if i != j))
        if off <= target or fro == 0:
            break
        if sweeps >= max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
        sweeps += 1
        for p in range(n - 1):
            ap = a[p]
            for q in range(p + 1, n):
                apq = ap[q]
                if apq == 0.0:
                    continue
                aq = a[q]
                tau = (aq[q] - ap[p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                app, aqq = ap[p] - t * apq, aq[q] + t * apq
                for r in range(n):
                    arp, arq = ap[r], aq[r]
                    ap[r] = c * arp - s * arq
                    aq[r] = s * arp + c * arq
                for r in range(n):
                    a[r][p] = ap[r]
                    a[r][q] = aq[r]
                ap[p], aq[q] = app, aqq
                ap[q] = aq[p] = 0.0
                for row in v:
                    vp, vq = row[p], row[q]
                    row[p] = c * vp - s * vq
                    row[q] = s * vp + c * vq
    a = np.array(a)
    v = np.array(v)
    diag = np.diag(a)
    k = int(np.argmax(diag))
    lam = float(diag[k])
    x = v[:, k]
    x = x / x[np.argmax(np.abs(x))]
    residual = float(np.max(np.abs(orig @ x - lam * x)))
    return RadiusResult(lam, residual, sweeps)


def radius_power(m, max_iter: int = 1_000_000) -> RadiusResult:
    """Perron root of a nonnegative matrix by power iteration on M + cI.

    The shift c = max diagonal + 1 makes an irreducible matrix primitive.
    Stops once the max-norm residual of the iterate drops below
    1e-13 * max(1, ||M||_inf).
    """
    a = _as_float(m)
    if np.any(a < 0):
        raise ValueError("matrix must be entrywise nonnegative")
    n = a.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    shift = float(np.max(np.diag(a))) + 1.0
    b = a + shift * np.eye(n)
    scale = max(1.0, float(np.max(np.sum(np.abs(a), axis=1))))
    tol = 1e-13 * scale
    x = np.ones(n)
    lam = 0.0
    for it in range(1, max_iter + 1):
        y = b @ x
        lam = float(np.max(y))
        if lam == 0.0:
            raise ConvergenceError("iterate collapsed to zero")
        y /= lam
        res = float(np.max(np.abs(a @ y - (lam - shift) * y)))
        x = y
        if res <= tol:
            return RadiusResult(lam - shift, res, it)
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


@lru_cache(maxsize=None)
def _theta(n: int, alpha: Fraction) -> float:
    if n == 1:
        return float(alpha)
    lo = _theta(n - 1, alpha)
    hi = 2.0

    def sign(x: float) -> int:
        v = f_value(n, alpha, Fraction(x))
        return (v > 0) - (v < 0)

    # all roots of f_n lie below 2 (row sums of B_n are at most 2, not all equal)
    if sign(hi) <= 0:
        raise AssertionError(f"f_{n}(2) is not positive at alpha={alpha}")
    if sign(lo) >= 0:
        raise AssertionError(f"f_{n}(theta_{n - 1}) is not negative at alpha={alpha}")
    while hi - lo > 1e-13:
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        if sign(mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def theta(n: int, alpha) -> float:
    """Largest root of f_n, i.e. the spectral radius of B_n."""
    alpha = Fraction(alpha)
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= alpha < 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    return _theta(n, alpha)


def compare_radii(r1: float, r2: float, tol: float = ORDER_TOL) -> str:
    """'less', 'greater', 'equal' (within TIE_TOL) or 'inconclusive'."""
    d = r2 - r1
    if abs(d) < min(TIE_TOL, tol):
        return "equal"
    if d > tol:
        return "less"
    if d < -tol:
        return "greater"
    return "inconclusive"
