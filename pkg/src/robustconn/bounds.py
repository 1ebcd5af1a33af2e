"""Closed-form and piecewise-linear bounds in exact rational arithmetic."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Number = Union[int, Fraction]


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _factor(r: int, d: Fraction) -> Fraction:
    c = _ceil(d)
    return 1 - (1 + d - c) / ((r - 1) * (c - 1))


_CHAINS: dict[int, list[Fraction]] = {}


def _epsilon_int(r: int, d: int) -> Fraction:
    # chain[k] = eps_r(k + 2), extended iteratively so large d never recurses
    chain = _CHAINS.setdefault(r, [1 - Fraction(2, r)])
    while len(chain) <= d - 2:
        k = len(chain) + 2
        chain.append(chain[-1] * _factor(r, Fraction(k)))
    return chain[d - 2]


def _epsilon(r: int, d: Fraction) -> Fraction:
    if d <= 2:
        return 1 - d / r
    c = _ceil(d)
    return _epsilon_int(r, c - 1) * _factor(r, d)


def epsilon(r: int, d: Number) -> Fraction:
    """Surviving-fraction bound eps_r(d) of the greedy red-vertex reduction.

    For ``0 < d <= 2`` this is ``1 - d/r``; larger ``d`` recurses on
    ``ceil(d) - 1``.  Every factor of the recursion lies in ``(0, 1)`` once
    ``r >= 3`` and ``d > 0``, so the result is positive for all valid input.
    """
    d = Fraction(d)
    if r < 3:
        raise ValueError("r must be at least 3")
    if d <= 0:
        raise ValueError("d must be positive")
    value = _epsilon(r, d)
    if value <= 0:
        raise ArithmeticError(f"eps_{r}({d}) = {value} is not positive")
    return value


def epsilon_floor(r: int, d: int) -> float:
    """Closed-form lower bound (r-2)/(sqrt(e) r) * (d-2)**(-1/(r-1)).

    At ``d = 2`` the power factor diverges; the limit convention returns
    ``(r-2)/(sqrt(e) r)``, which the exact value ``(r-2)/r`` exceeds.
    """
    if r < 3 or d < 2:
        raise ValueError("need r >= 3 and integer d >= 2")
    base = (r - 2) / (math.sqrt(math.e) * r)
    if d == 2:
        return base
    return base * (d - 2) ** (-1 / (r - 1))


@dataclass(frozen=True)
class BoundCurve:
    """Continuous, decreasing piecewise-linear majorant of the blue-component count.

    Piece ``i`` (1-based) lives on ``[breakpoints[i-1], breakpoints[i]]`` with
    slope ``slopes[i-1]``; ``breakpoints[0] == 0`` and the last breakpoint is R0.
    """

    r: int
    d: Fraction
    R0: Fraction
    breakpoints: tuple[Fraction, ...]
    slopes: tuple[int, ...]
    f0: Fraction
    values: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if not self.values:
            vals = [self.f0]
            for i, s in enumerate(self.slopes):
                vals.append(vals[-1] + s * (self.breakpoints[i + 1] - self.breakpoints[i]))
            object.__setattr__(self, "values", tuple(vals))

    def values_at_breakpoints(self) -> list[Fraction]:
        return list(self.values)

    def piece_index(self, t: Number) -> int:
        """Index of the piece whose half-open interval [a_{i-1}, a_i) holds t."""
        t = Fraction(t)
        if not 0 <= t < self.R0:
            raise ValueError("t outside [0, R0)")
        for i in range(len(self.slopes)):
            if self.breakpoints[i] <= t < self.breakpoints[i + 1]:
                return i
        raise AssertionError("breakpoints do not cover [0, R0)")

    def __call__(self, t: Number) -> Fraction:
        t = Fraction(t)
        i = self.piece_index(t)
        return self.values[i] + self.slopes[i] * (t - self.breakpoints[i])

    def g(self, t: Number) -> Fraction:
        t = Fraction(t)
        return self.r * self(t) / (self.R0 - t)

    def right_slope(self, t: Number) -> int:
        return self.slopes[self.piece_index(t)]

    def t1(self) -> Fraction:
        """The point where the curve reaches 1, solved linearly on its piece."""
        vals = self.values_at_breakpoints()
        if vals[0] < 1:
            raise ValueError("curve starts below 1")
        for i, s in enumerate(self.slopes):
            a, b = self.breakpoints[i], self.breakpoints[i + 1]
            if a == b:
                continue
            end = vals[i] + s * (b - a)
            if end <= 1:
                return a + (vals[i] - 1) / (-s)
        raise ValueError("curve does not reach 1 before R0")


def bound_curve(r: int, d: Number, R0: Number) -> BoundCurve:
    """Build the curve starting at d*R0/r whose slopes step up from 1 - ceil(d) to -1.

    Interior breakpoints are the points where ``r f(t) / (R0 - t)`` falls to
    the next integer, clamped at R0; the last breakpoint is R0.
    """
    d, R0 = Fraction(d), Fraction(R0)
    if r < 3 or d <= 0 or R0 <= 0:
        raise ValueError("need r >= 3, d > 0, R0 > 0")
    D = max(_ceil(d), 2)
    f0 = d * R0 / r
    alphas = [Fraction(0)]
    value = f0
    slopes = []
    for i in range(1, D):
        slope = -D + i
        c = D - i
        a = alphas[-1]
        if i == D - 1:
            nxt = R0
        elif a >= R0:
            nxt = R0
        else:
            nxt = min(a + (r * value - c * (R0 - a)) / ((r - 1) * c), R0)
        slopes.append(slope)
        alphas.append(nxt)
        value = value + slope * (nxt - a)
    return BoundCurve(r, d, R0, tuple(alphas), tuple(slopes), f0)


def _expected_slope(curve: BoundCurve, t: Fraction) -> int:
    return min(1 - _ceil(curve.g(t)), -1)


def curve_check(curve: BoundCurve, samples: int = 10) -> bool:
    """Check the right derivative against min{1 - ceil(r f/(R0 - t)), -1} exactly.

    Samples ``samples`` evenly spaced rational points inside every nonempty
    piece, always including its left endpoint.
    """
    b = curve.breakpoints
    vals = curve.values_at_breakpoints()
    for i in range(len(curve.slopes)):
        if vals[i + 1] != vals[i] + curve.slopes[i] * (b[i + 1] - b[i]):
            return False
    if any(x > y for x, y in zip(b, b[1:])) or b[0] != 0 or b[-1] != curve.R0:
        return False
    if any(x > y for x, y in zip(curve.slopes, curve.slopes[1:])) or curve.slopes[-1] != -1:
        return False
    for i, slope in enumerate(curve.slopes):
        lo, hi = b[i], b[i + 1]
        if lo >= hi:
            continue
        for k in range(max(samples, 1)):
            t = lo + (hi - lo) * Fraction(k, max(samples, 1))
            if _expected_slope(curve, t) != slope:
                return False
    return True


def kappa_genus_bound(r: int, gamma: int, *, use_gamma_form: bool = False) -> float:
    """Lower bound (1/27)(gamma+1)**(-1/r) on robust connectivity.

    ``use_gamma_form`` switches to (1/27) gamma**(-1/r), defined for gamma >= 1.
    """
    if r < 3 or gamma < 0:
        raise ValueError("need r >= 3 and gamma >= 0")
    if use_gamma_form:
        if gamma < 1:
            raise ValueError("gamma form needs gamma >= 1")
        return gamma ** (-1 / r) / 27
    return (gamma + 1) ** (-1 / r) / 27


def component_bound(r: int, gamma: int, x: int) -> Fraction:
    """Upper bound 2(x - 2 + gamma)/(r - 2) on components of G - X, |X| = x."""
    if r < 3 or gamma < 0 or x < 0:
        raise ValueError("need r >= 3, gamma >= 0, x >= 0")
    return Fraction(2 * (x - 2 + gamma), r - 2)


def leaf_fraction_floor(r: int, size: int) -> Fraction:
    """min((r-1)/|R|, 1): guaranteed leaf fraction of R in an r-connected graph."""
    return min(Fraction(r - 1, size), Fraction(1))


def epsilon_table(rs, ds) -> list[dict]:
    rows = []
    for r in rs:
        for d in ds:
            e = epsilon(r, d)
            d = Fraction(d)
            rows.append({
                "r": r,
                "d": f"{d.numerator}/{d.denominator}",
                "eps": f"{e.numerator}/{e.denominator}",
                "half_eps": f"{(e / 2).numerator}/{(e / 2).denominator}",
                "eps_decimal": float(e),
            })
    return rows
