"""Invariant surface measure of regions on B^2 - 4AC = 1.

In the chart (A, B) with C = (B^2 - 1)/(4A) the measure is dA dB / (4|A|),
the Leray form of B^2 - 4AC. Regions are intersections of quadric
inequalities g(A, B, C) < 0. For fixed A each g becomes a polynomial of
degree <= 4 in B, so the B-slice is a finite union of intervals found from
polynomial roots, and its length is exact up to root accuracy. The remaining
integral over A is done by adaptive Gauss-Kronrod (scipy.integrate.quad),
split at A = 0 where the slice width pinches to O(|A|).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial import Polynomial
from scipy import integrate

from .region import MAPS, BallPatch

Constraint = Callable[[object, object, object], object]

_B = Polynomial([0.0, 1.0])
_B2_MINUS_1 = Polynomial([-1.0, 0.0, 1.0])

TARGET_ABS_ERROR = {"K": 1e-4, "patch": 1e-6}


@dataclass(frozen=True)
class MeasureEstimate:
    value: float
    abs_error_bound: float


def _inverse(mat) -> tuple[tuple[int, ...], ...]:
    m = [[Fraction(x) for x in row] for row in mat]
    n = len(m)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = [row[n:] for row in aug]
    return tuple(tuple(int(x) if x.denominator == 1 else float(x) for x in row) for row in inv)


@dataclass(frozen=True)
class QuadricRegion:
    """{(A, B, C) on the surface : g(A, B, C) < 0 for every constraint g}.

    box bounds A, B and C; it must contain the region.
    """

    constraints: tuple[Constraint, ...]
    box: tuple[tuple[float, float], tuple[float, float], tuple[float, float]]

    def contains(self, p: Sequence[float]) -> bool:
        return all(g(*p) < 0 for g in self.constraints)

    def image(self, mat) -> "QuadricRegion":
        """Image of the region under an invertible linear map of R^3."""
        inv = _inverse(mat)

        def pull(g):
            return lambda A, B, C: g(*(r[0] * A + r[1] * B + r[2] * C for r in inv))

        box = []
        for row in mat:
            lo = sum(min(m * x for x in iv) for m, iv in zip(row, self.box))
            hi = sum(max(m * x for x in iv) for m, iv in zip(row, self.box))
            box.append((lo, hi))
        return QuadricRegion(tuple(pull(g) for g in self.constraints), tuple(box))

    def slice_length(self, A: float) -> float:
        """Length of {B : (A, B, (B^2 - 1)/(4A)) in region}."""
        b_lo, b_hi = self.box[1]
        C = _B2_MINUS_1 / (4.0 * A)
        cuts = [b_lo, b_hi]
        for g in self.constraints:
            poly = g(A, _B, C)
            coef = poly.coef if isinstance(poly, Polynomial) else np.atleast_1d(poly)
            scale = np.max(np.abs(coef)) if coef.size else 0.0
            if scale == 0.0:
                continue
            roots = np.roots((coef / scale)[::-1])
            for z in roots:
                if abs(z.imag) <= 1e-9 * max(1.0, abs(z.real)) and b_lo < z.real < b_hi:
                    cuts.append(z.real)
        cuts.sort()
        total = 0.0
        for lo, hi in zip(cuts, cuts[1:]):
            if hi <= lo:
                continue
            mid = 0.5 * (lo + hi)
            if self.contains((A, mid, (mid * mid - 1.0) / (4.0 * A))):
                total += hi - lo
        return total


def k_region() -> QuadricRegion:
    return QuadricRegion(
        (
            lambda A, B, C: (A - C) ** 2 - 1,
            lambda A, B, C: B ** 2 - 1,
            lambda A, B, C: (A + C) ** 2 - 1,
        ),
        ((-1.0, 1.0), (-1.0, 1.0), (-1.0, 1.0)),
    )


def ball_region(patch: BallPatch) -> QuadricRegion:
    A0, B0, C0 = (float(x) for x in patch.center)
    r = float(patch.radius)
    g = lambda A, B, C: (A - A0) ** 2 + (B - B0) ** 2 + (C - C0) ** 2 - r * r
    return QuadricRegion((g,), ((A0 - r, A0 + r), (B0 - r, B0 + r), (C0 - r, C0 + r)))


# The chart swap A <-> C, B -> -B is the map S on (A, B, C).
_S = ((0, 0, 1), (0, -1, 0), (1, 0, 0))


def measure_of(region, chart: str = "AB", image: str | None = None,
               epsabs: float | None = None) -> MeasureEstimate:
    """Invariant measure of "K", a BallPatch or a QuadricRegion.

    image names a map from region.MAPS to integrate the image of the region
    instead. chart="CB" parameterises by (C, B), which is the same as
    integrating the S-image in the (A, B) chart.
    """
    if isinstance(region, QuadricRegion):
        reg, kind = region, "K"
    elif isinstance(region, BallPatch):
        reg, kind = ball_region(region), "patch"
    elif str(region).upper() == "K":
        reg, kind = k_region(), "K"
    else:
        raise ValueError(f"unknown region {region!r}")
    if image is not None:
        reg = reg.image(MAPS[image])
    if chart == "CB":
        reg = reg.image(_S)
    elif chart != "AB":
        raise ValueError(f"unknown chart {chart!r}")
    if epsabs is None:
        epsabs = TARGET_ABS_ERROR[kind] / 10

    a_lo, a_hi = reg.box[0]
    density = lambda A: reg.slice_length(A) / (4.0 * abs(A))
    pieces = [(a_lo, min(a_hi, 0.0)), (max(a_lo, 0.0), a_hi)]
    value = err = 0.0
    for lo, hi in pieces:
        if hi <= lo:
            continue
        v, e = integrate.quad(density, lo, hi, epsabs=epsabs, epsrel=0.0, limit=400)
        value += v
        err += e
    return MeasureEstimate(value, err)
