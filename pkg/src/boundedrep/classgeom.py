"""Class data for positive non-square discriminants.

Reduced forms, their rho-cycles (one cycle per proper equivalence class), the
fundamental automorph t^2 - d*u^2 = 4 and the regulator. Their product
h * 2 * log(eps) stands in for the total length of the closed orbits attached
to d, up to one global constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

from .errors import InvalidInputError
from .qform import IntForm

BRUTE_AUTOMORPH_LIMIT = 1000


def check_discriminant(d: int) -> None:
    if d <= 0 or d % 4 not in (0, 1):
        raise InvalidInputError(f"{d} is not a positive discriminant (0 or 1 mod 4)")
    if isqrt(d) ** 2 == d:
        raise InvalidInputError(f"{d} is a square")


def is_reduced(f: IntForm, d: int) -> bool:
    """0 < b < sqrt(d) and sqrt(d) - b < 2|a| < sqrt(d) + b, in exact integers."""
    a, b, _ = f
    if b <= 0 or b * b >= d:
        return False
    s = 2 * abs(a)
    return (s + b) ** 2 > d and (s <= b or (s - b) ** 2 < d)


def reduced_forms(d: int) -> list[IntForm]:
    """All primitive reduced forms of discriminant d, sorted by (b, a)."""
    check_discriminant(d)
    r = isqrt(d)
    out = []
    for b in range(2 - d % 2, r + 1, 2):
        m = (b * b - d) // 4  # negative
        # sqrt(d) - b < 2|a| < sqrt(d) + b
        lo = (r - b) // 2 + 1
        hi = (r + b) // 2
        if hi < lo:
            continue
        ks = np.arange(lo, hi + 1, dtype=np.int64) if d < 1 << 60 else None
        if ks is not None and ks.size > 32:
            cand = ks[(-m) % ks == 0].tolist()
        else:
            cand = [k for k in range(lo, hi + 1) if m % k == 0]
        for k in cand:
            for a in (-k, k):
                f = IntForm(a, b, m // a)
                if gcd(gcd(a, b), f.c) == 1 and is_reduced(f, d):
                    out.append(f)
    out.sort(key=lambda f: (f.b, f.a))
    return out


def rho(f: IntForm, d: int) -> IntForm:
    """[a, b, c] -> [c, b', c'] with b' = -b mod 2c, sqrt(d) - 2|c| < b' < sqrt(d)."""
    _, b, c = f
    r = isqrt(d)
    m = 2 * abs(c)
    b2 = r - (r + b) % m
    return IntForm(c, b2, (b2 * b2 - d) // (4 * c))


def reduction_cycles(d: int) -> list[list[IntForm]]:
    """Partition of the reduced forms into rho-cycles, each starting at its least (b, a)."""
    forms = reduced_forms(d)
    index = {f: i for i, f in enumerate(forms)}
    seen = [False] * len(forms)
    cycles = []
    for i, f in enumerate(forms):
        if seen[i]:
            continue
        cycle = []
        g = f
        while True:
            j = index.get(g)
            if j is None:
                raise AssertionError(f"rho left the reduced set at {g!r}")
            if seen[j]:
                break
            seen[j] = True
            cycle.append(g)
            g = rho(g, d)
        if g != f:
            raise AssertionError(f"rho orbit of {f!r} is not a cycle")
        cycles.append(cycle)
    return cycles


def class_number(d: int) -> int:
    return len(reduction_cycles(d))


def _automorph_cf(d: int) -> tuple[int, int]:
    # Convergents p/q of w = (d mod 2 + sqrt(d))/2; every unit (t + u sqrt(d))/2
    # of norm +-1 gives a convergent with t = 2p - q*(d mod 2), u = q.
    r = isqrt(d)
    P, Q = d % 2, 2
    p0, p1 = 1, 0
    q0, q1 = 0, 1
    while True:
        a = (P + r) // Q
        p0, p1 = a * p0 + p1, p0
        q0, q1 = a * q0 + q1, q0
        t = 2 * p0 - (d % 2) * q0
        if t * t - d * q0 * q0 == 4:
            return t, q0
        P = a * Q - P
        Q = (d - P * P) // Q


def fundamental_automorph(d: int, brute_limit: int = BRUTE_AUTOMORPH_LIMIT) -> tuple[int, int]:
    """Minimal (t, u) with u >= 1 and t^2 - d*u^2 = 4.

    Small solutions are found by ascending search on u; past brute_limit the
    continued fraction of (d mod 2 + sqrt(d))/2 is used.
    """
    check_discriminant(d)
    for u in range(1, brute_limit + 1):
        t2 = d * u * u + 4
        t = isqrt(t2)
        if t * t == t2:
            return t, u
    return _automorph_cf(d)


def regulator_from(t: int, u: int) -> float:
    """log((t + u sqrt(d))/2), written as acosh(t/2) since u sqrt(d) = sqrt(t^2 - 4)."""
    if t < 1 << 1000:
        return math.acosh(t / 2)
    return math.log(t)  # the correction -1/t^2 is far below double precision


@dataclass(frozen=True)
class ClassData:
    d: int
    h: int
    t: int
    u: int
    regulator: float

    @property
    def vol_proxy(self) -> float:
        return self.h * 2 * self.regulator

    def as_dict(self) -> dict:
        return {"d": self.d, "h": self.h, "t": self.t, "u": self.u,
                "regulator": self.regulator, "vol_proxy": self.vol_proxy}


@lru_cache(maxsize=4096)
def class_data(d: int) -> ClassData:
    h = class_number(d)
    t, u = fundamental_automorph(d)
    return ClassData(d, h, t, u, regulator_from(t, u))


def vol_proxy(d: int) -> float:
    return class_data(d).vol_proxy
