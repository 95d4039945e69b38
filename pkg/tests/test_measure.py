import math

import numpy as np
import pytest

from boundedrep.measure import QuadricRegion, ball_region, k_region, measure_of
from boundedrep.region import MAPS, certified_patch, default_patch

LOG2 = math.log(2)


def grid_measure(region: QuadricRegion, n: int = 1500) -> float:
    """Oracle: midpoint rule on an n x n grid of the (A, B) box, density 1/(4|A|)."""
    (a0, a1), (b0, b1), _ = region.box
    ha, hb = (a1 - a0) / n, (b1 - b0) / n
    A = a0 + ha * (np.arange(n) + 0.5)
    B = b0 + hb * (np.arange(n) + 0.5)
    AA, BB = np.meshgrid(A, B, indexing="ij")
    CC = (BB * BB - 1) / (4 * AA)
    inside = np.ones_like(AA, dtype=bool)
    for g in region.constraints:
        inside &= g(AA, BB, CC) < 0
    return float(np.sum(inside / (4 * np.abs(AA))) * ha * hb)


def test_measure_of_K_matches_closed_form():
    # For 0 < |A| < 1 the B-slice of K is |1 - 2|A|| < |B| < 1, which integrates to 2 log 2.
    est = measure_of("K")
    assert est.abs_error_bound < 1e-4
    assert abs(est.value - 2 * LOG2) <= max(2 * est.abs_error_bound, 1e-10)


def test_K_slice_length_closed_form():
    reg = k_region()
    for A in (-0.9, -0.3, 1e-3, 0.25, 0.5, 0.75):
        assert reg.slice_length(A) == pytest.approx(2 * (1 - abs(1 - 2 * abs(A))), abs=1e-9)


def test_measure_of_K_is_chart_swap_invariant():
    ab = measure_of("K", chart="AB")
    cb = measure_of("K", chart="CB")
    assert abs(ab.value - cb.value) <= 2 * (ab.abs_error_bound + cb.abs_error_bound)


def test_patch_measure_matches_grid_oracle():
    p = certified_patch()
    est = measure_of(p)
    assert est.abs_error_bound < 1e-6
    oracle = grid_measure(ball_region(p), n=2000)
    assert est.value == pytest.approx(oracle, rel=2e-3)


def test_K_measure_matches_grid_oracle_away_from_zero():
    reg = k_region()
    sub = QuadricRegion(reg.constraints + (lambda A, B, C: 0.2 - A,), ((0.2, 1.0),) + reg.box[1:])
    exact = 2 * (0.5 * (1 / 2 - 0.2) + (LOG2 / 2 - 1 / 4))  # slice integral from A = 0.2
    assert measure_of(sub).value == pytest.approx(exact, abs=1e-8)
    assert grid_measure(sub, 1500) == pytest.approx(exact, rel=5e-3)


def test_ordering_and_positivity():
    k = measure_of("K").value
    p = measure_of(default_patch()).value
    assert k > p > 0


def test_empty_region_has_zero_measure():
    reg = k_region()
    empty = QuadricRegion(reg.constraints + (lambda A, B, C: 4 - B * B,), reg.box)
    est = measure_of(empty)
    assert est.value == 0.0


@pytest.mark.parametrize("image", ["T", "U"])
def test_patch_measure_is_invariant_under_moves(image):
    p = certified_patch()
    base = measure_of(p)
    moved = measure_of(p, image=image)
    assert abs(base.value - moved.value) <= 3 * (base.abs_error_bound + moved.abs_error_bound)


def test_patch_images_stay_in_K():
    # Intersecting each image with K must not change its measure.
    p = certified_patch()
    for image in ("Identity", "T", "U"):
        moved = ball_region(p).image(MAPS[image])
        inter = QuadricRegion(moved.constraints + k_region().constraints, moved.box)
        a = measure_of(inter, epsabs=1e-8)
        b = measure_of(p, image=image, epsabs=1e-8)
        assert abs(a.value - b.value) <= 3 * (a.abs_error_bound + b.abs_error_bound) + 1e-10
