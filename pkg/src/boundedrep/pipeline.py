"""End-to-end representation of n = x^2 + y^2 - z^2 with max(x^2, y^2, z^2) <= n.

The solver mirrors the constructive argument: squares are immediate; otherwise
a primitive form of discriminant 4n in the certified patch is parity-repaired
and mapped back to (x, y, z). Two fallbacks (any K form that repairs to a
bounded triple, then exhaustive search) make it complete, and the scan counts
how often each path fires.
"""

from __future__ import annotations

import enum
import math
import statistics
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from .classgeom import class_data
from .dictionary import Triple, form_to_triple, verify_bounded
from .discenum import EnumWindow, enumerate_forms, is_square, lambda_count, patch_hit
from .errors import ConsistencyError, InvalidInputError
from .qform import parity_fix
from .region import DEFAULT_RADIUS, BallPatch, certified_patch


class Path(enum.Enum):
    SQUARE = "SquareCase"
    OMEGA = "OmegaPipeline"
    K_FALLBACK = "KFallback"
    BRUTE_FORCE = "BruteForce"


@dataclass(frozen=True)
class RepresentationResult:
    n: int
    triple: Triple | None = None
    path: Path | None = None

    @property
    def found(self) -> bool:
        return self.triple is not None

    @property
    def outcome(self) -> str:
        return "Found" if self.found else "NotFound"


def brute_force_oracle(n: int) -> Triple | None:
    """First (x, y, z) with 0 <= x <= y, z >= 0 and all squares <= n, scanning y then x.

    For n = 1 this returns (0, 1, 0).
    """
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    r = isqrt(n)
    for y in range(r + 1):
        rest = n - y * y
        # z^2 = x^2 - rest >= 0 needs x^2 >= rest
        x0 = 0 if rest <= 0 else isqrt(rest - 1) + 1
        for x in range(max(x0, 0), y + 1):
            z2 = x * x - rest
            if z2 > n:
                break
            z = isqrt(z2)
            if z * z == z2:
                return Triple(x, y, z, n)
    return None


def _two_squares_search(n: int) -> Triple | None:
    # Exhaust z, solving x^2 + y^2 = n + z^2 with x <= y <= isqrt(n).
    r = isqrt(n)
    for z in range(r + 1):
        target = n + z * z
        for y in range(r, -1, -1):
            x2 = target - y * y
            if x2 > y * y:
                break
            x = isqrt(x2)
            if x * x == x2:
                return Triple(x, y, z, n)
    return None


def _checked(n: int, t: Triple, path: Path) -> RepresentationResult:
    if t.x * t.x + t.y * t.y - t.z * t.z != n or not verify_bounded(t):
        raise ConsistencyError(f"{path.value} produced an invalid triple {t} for n={n}")
    return RepresentationResult(n, t, path)


def represent(n: int, patch: BallPatch | None = None) -> RepresentationResult:
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    if patch is None:
        patch = certified_patch(DEFAULT_RADIUS)
    m = isqrt(n)
    if m * m == n:
        return _checked(n, Triple(m, 0, 0, n), Path.SQUARE)

    d = 4 * n
    for f in enumerate_forms(EnumWindow(d, patch)):
        t = form_to_triple(parity_fix(f).form)
        if not verify_bounded(t):
            raise ConsistencyError(f"certified patch form {f!r} gave unbounded {t}")
        return _checked(n, t, Path.OMEGA)

    for f in enumerate_forms(EnumWindow(d, "K")):
        t = form_to_triple(parity_fix(f).form)
        if verify_bounded(t):
            return _checked(n, t, Path.K_FALLBACK)

    t = _two_squares_search(n)
    if t is not None:
        return _checked(n, t, Path.BRUTE_FORCE)
    return RepresentationResult(n)


def _map(fn, items: Sequence, workers: int, chunksize: int = 256) -> list:
    if workers <= 1 or len(items) < 2 * chunksize:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=chunksize))


@dataclass
class ScanRow:
    n: int
    result: RepresentationResult
    oracle: Triple | None


def _scan_one(args) -> ScanRow:
    n, radius = args
    return ScanRow(n, represent(n, certified_patch(radius)), brute_force_oracle(n))


@dataclass
class ScanReport:
    rows: list[ScanRow]
    radius: Fraction = DEFAULT_RADIUS

    @property
    def exceptional(self) -> list[int]:
        return [r.n for r in self.rows if r.oracle is None]

    @property
    def omega_hits(self) -> list[int]:
        return [r.n for r in self.rows if r.result.path is Path.OMEGA]

    @property
    def path_counts(self) -> dict[str, int]:
        c = Counter(r.result.path.value if r.result.found else "NotFound" for r in self.rows)
        return dict(sorted(c.items()))

    @property
    def disagreements(self) -> list[int]:
        """n where exactly one of solver and oracle found a representation."""
        return [r.n for r in self.rows if r.result.found != (r.oracle is not None)]

    def summary(self) -> dict:
        exc = self.exceptional
        return {
            "from": self.rows[0].n if self.rows else None,
            "to": self.rows[-1].n if self.rows else None,
            "patch_radius": str(self.radius),
            "path_counts": self.path_counts,
            "exceptional": exc,
            "max_exceptional": max(exc) if exc else None,
            "omega_hit_count": len(self.omega_hits),
            "disagreements": self.disagreements,
        }


def scan(n_lo: int, n_hi: int, workers: int = 1, radius=DEFAULT_RADIUS) -> ScanReport:
    if not 1 <= n_lo <= n_hi:
        raise InvalidInputError(f"need 1 <= from <= to, got [{n_lo}, {n_hi}]")
    radius = Fraction(radius)
    certified_patch(radius)
    rows = _map(_scan_one, [(n, radius) for n in range(n_lo, n_hi + 1)], workers)
    report = ScanReport(rows, radius)
    if report.disagreements:
        raise ConsistencyError(f"solver and oracle disagree at n = {report.disagreements[:10]}")
    return report


@dataclass(frozen=True)
class EquidistRow:
    d: int
    lambda_K: int
    lambda_patch: int
    vol_proxy: float

    @property
    def ratio_patch_over_K(self) -> float:
        return self.lambda_patch / self.lambda_K if self.lambda_K else 0.0

    @property
    def normalized_K(self) -> float:
        return self.lambda_K / self.vol_proxy


def check_equidist_d(d: int) -> None:
    if d <= 0 or d % 4 or is_square(d):
        raise InvalidInputError(f"{d} is not a positive non-square discriminant = 0 mod 4")


def _equidist_one(args) -> EquidistRow:
    d, radius = args
    patch = certified_patch(radius)
    row = EquidistRow(d, lambda_count(d, "K"), lambda_count(d, patch), class_data(d).vol_proxy)
    if row.lambda_patch > row.lambda_K:
        raise ConsistencyError(f"patch count exceeds K count at d={d}")
    return row


def _stats(xs: list[float]) -> dict:
    mean = statistics.fmean(xs)
    sd = statistics.pstdev(xs) if len(xs) > 1 else 0.0
    return {"mean": mean, "stddev": sd, "dispersion": sd / mean if mean else None}


def dyadic_block(x: int) -> tuple[int, int]:
    k = x.bit_length() - 1
    return 1 << k, 1 << (k + 1)


def summarize_equidist(rows: Iterable[EquidistRow]) -> list[dict]:
    blocks: dict[tuple[int, int], list[EquidistRow]] = {}
    for r in rows:
        blocks.setdefault(dyadic_block(r.d), []).append(r)
    out = []
    for (lo, hi), rs in sorted(blocks.items()):
        out.append({
            "block": [lo, hi],
            "count": len(rs),
            "normalized_K": _stats([r.normalized_K for r in rs]),
            "ratio_patch_over_K": _stats([r.ratio_patch_over_K for r in rs]),
            "hit_rate": sum(r.lambda_patch >= 1 for r in rs) / len(rs),
        })
    return out


@dataclass
class EquidistReport:
    rows: list[EquidistRow]
    radius: Fraction = DEFAULT_RADIUS
    blocks: list[dict] = field(default_factory=list)

    def summary(self) -> dict:
        return {
            "patch_radius": str(self.radius),
            "count": len(self.rows),
            "hit_rate": (sum(r.lambda_patch >= 1 for r in self.rows) / len(self.rows)
                         if self.rows else None),
            "blocks": self.blocks,
            # The asymptotic statement carries no rate, so these are choices.
            "tolerances_are_engineering_choices": True,
        }


def equidist(d_values: Sequence[int], workers: int = 1, radius=DEFAULT_RADIUS) -> EquidistReport:
    for d in d_values:
        check_equidist_d(d)
    radius = Fraction(radius)
    certified_patch(radius)
    rows = _map(_equidist_one, [(d, radius) for d in d_values], workers, chunksize=16)
    return EquidistReport(rows, radius, summarize_equidist(rows))


def even_nonsquare_discriminants(d_min: int, d_max: int) -> list[int]:
    start = d_min + (-d_min) % 4
    return [d for d in range(max(start, 4), d_max + 1, 4) if not is_square(d)]


def _hit_one(args) -> bool:
    n, radius = args
    return patch_hit(4 * n, certified_patch(radius))


@dataclass(frozen=True)
class HitBlock:
    lo: int
    hi: int
    count: int
    hits: int

    @property
    def fraction(self) -> float:
        return self.hits / self.count if self.count else math.nan


def omega_hit_rates(k_lo: int, k_hi: int, workers: int = 1, radius=DEFAULT_RADIUS) -> list[HitBlock]:
    """Fraction of non-square n in each block [2^k, 2^(k+1)), k_lo <= k <= k_hi,
    for which some primitive form of discriminant 4n lands in the patch."""
    radius = Fraction(radius)
    certified_patch(radius)
    out = []
    for k in range(k_lo, k_hi + 1):
        ns = [n for n in range(1 << k, 1 << (k + 1)) if not is_square(n)]
        hits = _map(_hit_one, [(n, radius) for n in ns], workers, chunksize=2048)
        out.append(HitBlock(1 << k, 1 << (k + 1), len(ns), sum(hits)))
    return out


def count_inversions(values: Sequence[float]) -> int:
    """Number of adjacent steps where the sequence decreases."""
    return sum(b < a for a, b in zip(values, values[1:]))
