"""Average-size lower-bound functions and their constrained minimizations.

Everything here is exact rational arithmetic. The two bound functions

    zeta(n, b, a) = (2n - 1 + b*a + (n - b - 1)(n - a - 3)) / n
    eta(n, b, a)  = (2n - 1 + b*a) / (a + 3)

take the size b of the small-slice base and the number a of members properly
inside it. Their relaxations f and g share the same algebraic form:

    f(x, y) = n - x - y - 2 + (2xy + 3x + y + 2) / n      (zeta == f pointwise)
    g(x, y) = (2n + xy - 1) / (y + 3)                     (eta == g pointwise)

The minimizers are confirmation devices, not proofs: each scans a rational
grid over the stated feasible region and, independently, every integer
feasible point, both exactly. Ties resolve to the lexicographically
smallest argument, so results are deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import BadK, BadM, BadN, EmptyRegion, InternalError, ZeroDenominator

Rat = Fraction | int


def zeta(n: int, bsize: Rat, asub: Rat) -> Fraction:
    """Height-4, cover-size-1 lower bound for the trimmed average."""
    if n < 1:
        raise BadN("zeta requires n >= 1")
    b, a = Fraction(bsize), Fraction(asub)
    return (2 * n - 1 + b * a + (n - b - 1) * (n - a - 3)) / n


def f_relax(n: int, x: Rat, y: Rat) -> Fraction:
    """Continuous relaxation of zeta; identical to it at every point."""
    if n < 1:
        raise BadN("f requires n >= 1")
    x, y = Fraction(x), Fraction(y)
    return n - x - y - 2 + Fraction(2 * x * y + 3 * x + y + 2, 1) / n


def eta(n: int, bsize: Rat, asub: Rat) -> Fraction:
    """Height-4, cover-size-2 lower bound for the trimmed average."""
    return g_relax(n, bsize, asub)


def g_relax(n: int, x: Rat, y: Rat) -> Fraction:
    """Continuous relaxation of eta; undefined on the line y = -3."""
    if n < 1:
        raise BadN("g requires n >= 1")
    x, y = Fraction(x), Fraction(y)
    if y == -3:
        raise ZeroDenominator("g has a pole at y = -3")
    return (2 * n + x * y - 1) / (y + 3)


@dataclass(frozen=True)
class BoundEval:
    value: Fraction
    at: tuple[Fraction, Fraction]


def _ticks(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    """lo, lo+step, ... capped at hi, with hi always included."""
    out = []
    t = lo
    while t < hi:
        out.append(t)
        t += step
    out.append(hi)
    return out


def _minimize(points, fn) -> BoundEval:
    best = None
    for x, y in points:
        v = fn(x, y)
        key = (v, x, y)
        if best is None or key < best:
            best = key
    if best is None:
        raise EmptyRegion("no feasible points")
    return BoundEval(best[0], (best[1], best[2]))


def minimize_f(n: int, grid_step: Rat) -> BoundEval:
    """Minimum of f over 1 <= y <= x <= (n-1)/2, by exact grid scan plus
    every integer feasible point."""
    if n < 4:
        raise BadN("minimize_f requires n >= 4")
    step = Fraction(grid_step)
    if step <= 0:
        raise ValueError("grid step must be positive")
    hi = Fraction(n - 1, 2)
    if hi < 1:
        raise EmptyRegion("feasible region 1 <= y <= x <= (n-1)/2 is empty")

    def points():
        for x in _ticks(Fraction(1), hi, step):
            for y in _ticks(Fraction(1), x, step):
                yield x, y
        imax = (n - 1) // 2
        for xi in range(1, imax + 1):
            for yi in range(1, xi + 1):
                yield Fraction(xi), Fraction(yi)

    return _minimize(points(), lambda x, y: f_relax(n, x, y))


def minimize_g(n: int, grid_step: Rat) -> BoundEval:
    """Minimum of g over n/2 <= x <= n-2, 1 <= y <= x, same scan scheme."""
    if n < 4:
        raise BadN("minimize_g requires n >= 4")
    step = Fraction(grid_step)
    if step <= 0:
        raise ValueError("grid step must be positive")
    lo, hi = Fraction(n, 2), Fraction(n - 2)
    if hi < lo:
        raise EmptyRegion("feasible region n/2 <= x <= n-2 is empty")

    def points():
        for x in _ticks(lo, hi, step):
            for y in _ticks(Fraction(1), x, step):
                yield x, y
        xmin = -((-n) // 2)  # ceil(n/2)
        for xi in range(xmin, n - 1):
            for yi in range(1, xi + 1):
                yield Fraction(xi), Fraction(yi)

    return _minimize(points(), lambda x, y: g_relax(n, x, y))


def prop_d_check(p: Sequence[Rat], k: int) -> bool:
    """Exact check of the k-subset double-counting identity

        C(N-1, k-1) * sum(p)  ==  sum over k-subsets S of sum_{j in S} p_j

    together with its counting corollary C(N-1, k-1) * N == C(N, k) * k.
    """
    values = [Fraction(v) for v in p]
    n = len(values)
    if not 1 <= k <= n:
        raise BadK(f"k must be in [1, {n}], got {k}")
    lhs = comb(n - 1, k - 1) * sum(values)
    rhs = Fraction(0)
    for subset in itertools.combinations(range(n), k):
        rhs += sum(values[j] for j in subset)
    corollary = comb(n - 1, k - 1) * n == comb(n, k) * k
    return lhs == rhs and corollary


_CASE2_FORMS = {
    4: lambda n: Fraction(7 * n - 1, 12),
    5: lambda n: Fraction(31 * n - 3, 56),
    6: lambda n: Fraction(17 * n - 1, 32),
}


def case2_subcase_bounds(n: int, m: int) -> Fraction:
    """Closed-form trimmed-average lower bound when the small slice has
    exactly m members under the two-set-cover, (n-1)-base structure."""
    if m not in _CASE2_FORMS:
        raise BadM(f"member count must be 4, 5 or 6, got {m}")
    if n < 4:
        raise BadN("case2 bounds require n >= 4")
    value = _CASE2_FORMS[m](n)
    if value <= Fraction(n, 2):
        raise InternalError(f"subcase bound {value} does not exceed n/2")
    return value
