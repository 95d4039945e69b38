"""Enumeration of primitive discriminant-d forms inside scaled compact regions.

For a fixed middle coefficient b (b = d mod 2) the outer coefficients satisfy
a*c = m with m = (b^2 - d)/4, so candidates come from a divisor search over a
bounded range of a. The search is vectorised with numpy over a (b, a) grid in
row chunks; every candidate is then confirmed with exact integer arithmetic
before it is yielded.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterator, Union

import numpy as np

from .errors import InvalidInputError
from .qform import IntForm
from .region import BallPatch, in_K_exact, in_patch

Region = Union[str, BallPatch]

_GRID_CHUNK = 1 << 20
# Above this the int64 grid could overflow; the pure-int path takes over.
_NUMPY_MAX_D = 1 << 60


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def ceil_sqrt(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


def _normalize_region(region: Region) -> Region:
    if isinstance(region, BallPatch):
        return region
    key = str(region).lower()
    if key in ("box", "fullbox"):
        return "box"
    if key == "k":
        return "K"
    raise InvalidInputError(f"unknown region {region!r}")


@dataclass(frozen=True)
class EnumWindow:
    d: int
    region: Region = "box"

    def __post_init__(self):
        if self.d <= 0:
            raise InvalidInputError(f"discriminant must be positive, got {self.d}")
        object.__setattr__(self, "region", _normalize_region(self.region))

    @property
    def square_discriminant(self) -> bool:
        return is_square(self.d)

    def bounds(self) -> tuple[range, int, int, int, int]:
        """(b values, a_lo, a_hi, c_lo, c_hi): a box containing every admissible form."""
        d = self.d
        if isinstance(self.region, BallPatch):
            s = math.sqrt(d)
            r = float(self.region.radius)
            A0, B0, C0 = (float(x) for x in self.region.center)
            lo = lambda x: math.floor((x - r) * s) - 1
            hi = lambda x: math.ceil((x + r) * s) + 1
            b_lo, b_hi = lo(B0), hi(B0)
            a_lo, a_hi, c_lo, c_hi = lo(A0), hi(A0), lo(C0), hi(C0)
        else:
            # K forces |a|, |b|, |c| < sqrt(d); the box is |.| <= ceil(sqrt(d)).
            R = ceil_sqrt(d)
            b_lo, b_hi = -R, R
            a_lo, a_hi, c_lo, c_hi = -R, R, -R, R
        if (b_lo - d) % 2:
            b_lo += 1
        return range(b_lo, b_hi + 1, 2), a_lo, a_hi, c_lo, c_hi


def _zero_m_candidates(b, a_lo, a_hi, c_lo, c_hi):
    # b^2 = d: a*c = 0, so one outer coefficient vanishes and the other is free.
    out = set()
    if c_lo <= 0 <= c_hi:
        out.update((a, b, 0) for a in range(a_lo, a_hi + 1))
    if a_lo <= 0 <= a_hi:
        out.update((0, b, c) for c in range(c_lo, c_hi + 1))
    return sorted(out, key=lambda f: f[0])


def _candidates_py(d, brange, a_lo, a_hi, c_lo, c_hi):
    for b in brange:
        m4 = b * b - d
        if m4 % 4:
            continue
        m = m4 // 4
        if m == 0:
            yield from _zero_m_candidates(b, a_lo, a_hi, c_lo, c_hi)
            continue
        for a in range(a_lo, a_hi + 1):
            if a and m % a == 0 and c_lo <= m // a <= c_hi:
                yield a, b, m // a


def _candidates_np(d, brange, a_lo, a_hi, c_lo, c_hi):
    avals = np.arange(a_lo, a_hi + 1, dtype=np.int64)
    avals = avals[avals != 0]
    if avals.size == 0 or len(brange) == 0:
        return
    bvals = np.arange(brange.start, brange.stop, brange.step, dtype=np.int64)
    rows = max(1, _GRID_CHUNK // avals.size)
    for i in range(0, bvals.size, rows):
        bs = bvals[i:i + rows]
        m = (bs * bs - d) // 4
        zero = m == 0
        if zero.any():
            # Only possible for square d; handled exactly row by row.
            for j in range(bs.size):
                b = int(bs[j])
                if zero[j]:
                    yield from _zero_m_candidates(b, a_lo, a_hi, c_lo, c_hi)
                else:
                    yield from _candidates_py(d, range(b, b + 1), a_lo, a_hi, c_lo, c_hi)
            continue
        hit = (m[:, None] % avals[None, :]) == 0
        bi, ai = np.nonzero(hit)
        if bi.size == 0:
            continue
        a = avals[ai]
        b = bs[bi]
        c = m[bi] // a
        keep = (c >= c_lo) & (c <= c_hi)
        for a_, b_, c_ in zip(a[keep].tolist(), b[keep].tolist(), c[keep].tolist()):
            yield a_, b_, c_


def enumerate_forms(window: EnumWindow) -> Iterator[IntForm]:
    """Yield the primitive forms of discriminant d in the window's region.

    Order is lexicographic in (b, a); each form appears once.
    """
    d = window.d
    if d % 4 in (2, 3):
        return
    brange, a_lo, a_hi, c_lo, c_hi = window.bounds()
    region = window.region
    if region == "box":
        accept = lambda f: True
    elif region == "K":
        accept = lambda f: in_K_exact(f, d)
    else:
        accept = lambda f: in_patch(f, d, region)
    source = _candidates_np if d < _NUMPY_MAX_D else _candidates_py
    for a, b, c in source(d, brange, a_lo, a_hi, c_lo, c_hi):
        if gcd(gcd(a, b), c) != 1:
            continue
        f = IntForm(a, b, c)
        if f.disc != d:
            raise AssertionError(f"candidate {f!r} has wrong discriminant")
        if accept(f):
            yield f


def lambda_count(d: int, region: Region) -> int:
    """Number of primitive discriminant-d forms whose scaled point lies in region."""
    w = EnumWindow(d, region)
    if w.region == "box":
        raise InvalidInputError("lambda_count takes region K or a patch")
    if w.square_discriminant:
        warnings.warn(f"lambda_count on square discriminant {d}", stacklevel=2)
    return sum(1 for _ in enumerate_forms(w))


def patch_hit(d: int, patch: BallPatch) -> bool:
    """True iff at least one primitive discriminant-d form lands in the patch."""
    return next(enumerate_forms(EnumWindow(d, patch)), None) is not None
