"""The box region K on the unit hyperboloid B^2 - 4AC = 1 and the ball patch around P0.

K is cut out by |A - C| < 1, |B| < 1, |A + C| < 1. For an integer form f of
discriminant d the scaled point f/sqrt(d) lies in K iff the squared integer
inequalities (a - c)^2 < d, b^2 < d, (a + c)^2 < d hold, so K membership is
decided without floating point.

The patch is the Euclidean ball of rational radius around
P0 = (2/5, -2/5, -21/40), intersected with the surface. ``certify_patch``
proves, in exact rational arithmetic, that the closed ball and its images
under T and U stay inside K.
"""

from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import InvalidInputError
from .qform import IntForm, discriminant

SURFACE_TOL = 1e-9
GUARD_BAND = 1e-6
DEFAULT_RADIUS = Fraction(1, 40)

# Linear actions on (A, B, C), matching the coefficient moves on forms.
MAPS: dict[str, tuple[tuple[int, int, int], ...]] = {
    "Identity": ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    "T": ((1, 0, 0), (2, 1, 0), (1, 1, 1)),
    "U": ((0, 0, 1), (0, -1, 2), (1, -1, 1)),
}

# The three functionals bounded by 1 on K.
FUNCTIONALS: dict[str, tuple[int, int, int]] = {
    "A-C": (1, 0, -1),
    "B": (0, 1, 0),
    "A+C": (1, 0, 1),
}


def apply_map(name: str, p: Sequence) -> tuple:
    return tuple(sum(m * x for m, x in zip(row, p)) for row in MAPS[name])


def k_functionals(p: Sequence) -> tuple:
    """(|A - C|, |B|, |A + C|) at p; exact when p holds Fractions."""
    A, B, C = p
    return abs(A - C), abs(B), abs(A + C)


@dataclass(frozen=True)
class SurfacePoint:
    A: float
    B: float
    C: float

    def __post_init__(self):
        if abs(self.B * self.B - 4 * self.A * self.C - 1) > SURFACE_TOL:
            raise InvalidInputError(f"{self} is off the surface B^2 - 4AC = 1")

    @classmethod
    def from_form(cls, f: IntForm, d: int) -> "SurfacePoint":
        s = math.sqrt(d)
        return cls(f[0] / s, f[1] / s, f[2] / s)


def base_point() -> tuple[Fraction, Fraction, Fraction]:
    return Fraction(2, 5), Fraction(-2, 5), Fraction(-21, 40)


@dataclass(frozen=True)
class BallPatch:
    center: tuple[Fraction, Fraction, Fraction]
    radius: Fraction
    _center_f: tuple[float, float, float] = field(init=False, repr=False, compare=False)
    _cutoff_sq: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        center = tuple(Fraction(x) for x in self.center)
        radius = Fraction(self.radius)
        A, B, C = center
        if B * B - 4 * A * C != 1:
            raise InvalidInputError(f"center {center} is not on the surface")
        if radius <= 0:
            raise InvalidInputError("patch radius must be positive")
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "radius", radius)
        object.__setattr__(self, "_center_f", tuple(float(x) for x in center))
        cutoff = float(radius) * (1 - GUARD_BAND)
        object.__setattr__(self, "_cutoff_sq", cutoff * cutoff)

    def contains(self, p: Sequence) -> bool:
        """Guard-banded open-ball test; may reject points just inside the ball."""
        x0, y0, z0 = self._center_f
        dx = float(p[0]) - x0
        dy = float(p[1]) - y0
        dz = float(p[2]) - z0
        return dx * dx + dy * dy + dz * dz < self._cutoff_sq


def default_patch(radius=DEFAULT_RADIUS) -> BallPatch:
    return BallPatch(base_point(), Fraction(radius))


def _check_d(d: int):
    if d <= 0:
        raise InvalidInputError(f"discriminant must be positive, got {d}")


def in_K_exact(f: IntForm, d: int) -> bool:
    _check_d(d)
    a, b, c = f
    if discriminant(f) != d:
        raise InvalidInputError(f"{IntForm(*f)!r} does not have discriminant {d}")
    return (a - c) ** 2 < d and b * b < d and (a + c) ** 2 < d


def in_patch(f: IntForm, d: int, patch: BallPatch) -> bool:
    _check_d(d)
    s = math.sqrt(d)
    return patch.contains((f[0] / s, f[1] / s, f[2] / s))


class CertRow(NamedTuple):
    map: str
    functional: str
    center_value: Fraction
    norm_sq: int
    slack: float
    passed: bool

    @property
    def norm(self) -> float:
        return math.sqrt(self.norm_sq)


@dataclass(frozen=True)
class CertificationReport:
    radius: Fraction
    rows: tuple[CertRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def worst(self) -> CertRow:
        return min(self.rows, key=lambda r: r.slack)


def certify_patch(radius, center=None) -> CertificationReport:
    """Check |l(M P0)| + radius * ||l o M||_2 < 1 for all maps M and functionals l.

    For P in the closed ball, l(M P) differs from l(M P0) by at most
    radius * ||l o M||_2, so a full pass proves the closed patch and its
    T- and U-images lie in K. The comparison is exact: with v = |l(M P0)| < 1
    the condition is radius^2 * ||l o M||^2 < (1 - v)^2 in rationals.
    """
    radius = Fraction(radius)
    if radius <= 0:
        raise InvalidInputError("radius must be positive")
    center = base_point() if center is None else tuple(Fraction(x) for x in center)
    rows = []
    for mname, mat in MAPS.items():
        image = apply_map(mname, center)
        for lname, ell in FUNCTIONALS.items():
            value = abs(sum(l * x for l, x in zip(ell, image)))
            composed = [sum(ell[i] * mat[i][j] for i in range(3)) for j in range(3)]
            norm_sq = sum(x * x for x in composed)
            ok = value < 1 and radius * radius * norm_sq < (1 - value) ** 2
            slack = float(1 - value) - float(radius) * math.sqrt(norm_sq)
            rows.append(CertRow(mname, lname, value, norm_sq, slack, ok))
    return CertificationReport(radius, tuple(rows))


def certified_patch(radius=DEFAULT_RADIUS) -> BallPatch:
    """The ball patch of the given radius, refusing radii that fail certification."""
    return _certified_patch(Fraction(radius))


@lru_cache(maxsize=32)
def _certified_patch(radius: Fraction) -> BallPatch:
    report = certify_patch(radius)
    if not report.passed:
        w = report.worst
        raise InvalidInputError(
            f"radius {Fraction(radius)} fails certification at ({w.map}, {w.functional}),"
            f" slack {w.slack:.3g}")
    return default_patch(radius)
