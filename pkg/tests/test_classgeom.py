import math
from collections import deque
from math import isqrt

import pytest

from boundedrep.classgeom import (class_data, class_number, fundamental_automorph, is_reduced,
                                  reduced_forms, reduction_cycles, rho, vol_proxy)
from boundedrep.discenum import is_square
from boundedrep.errors import InvalidInputError
from boundedrep.qform import IntForm, apply_S, apply_T


def nonsquare_discriminants(lo, hi):
    return [d for d in range(lo, hi + 1) if d % 4 in (0, 1) and not is_square(d)]


def brute_automorph(d, limit=None):
    u = 1
    while limit is None or u <= limit:
        t2 = d * u * u + 4
        t = isqrt(t2)
        if t * t == t2:
            return t, u
        u += 1
    return None


def sl2_components(d):
    """Oracle: proper classes of reduced forms via BFS over T, T^-1, S in a coefficient box."""
    bound = 2 * d
    reduced = reduced_forms(d)
    label = {}
    for start in reduced:
        if start in label:
            continue
        seen = {start}
        queue = deque([start])
        while queue:
            f = queue.popleft()
            a, b, c = f
            for g in (apply_T(f), apply_S(f), IntForm(a, b - 2 * a, a - b + c)):
                if g not in seen and max(map(abs, g)) <= bound:
                    seen.add(g)
                    queue.append(g)
        for f in reduced:
            if f in seen:
                label[f] = start
    return len(set(label.values()))


def cycle_automorph(d, cycle):
    """Independent route to (t, u): compose the SL2 matrices of the rho steps around a cycle."""
    M = ((1, 0), (0, 1))
    for f in cycle:
        g = rho(f, d)
        k = (g.b + f.b) // (2 * f.c)
        step = ((0, -1), (1, k))
        M = tuple(tuple(sum(M[i][l] * step[l][j] for l in range(2)) for j in range(2))
                  for i in range(2))
    a, b, _ = cycle[0]
    t = abs(M[0][0] + M[1][1])
    u = abs(M[1][0]) // abs(a)
    return t, u


@pytest.mark.parametrize("d, forms", [
    (5, [(-1, 1, 1), (1, 1, -1)]),
    (20, [(-1, 4, 1), (1, 4, -1)]),
    (8, [(-1, 2, 1), (1, 2, -1)]),
])
def test_reduced_forms_examples(d, forms):
    assert reduced_forms(d) == forms


@pytest.mark.parametrize("d", [5, 8, 20, 12, 13, 17, 60, 145, 229, 1001, 1996])
def test_reduced_forms_match_exhaustive_scan(d):
    r = isqrt(d)
    expect = set()
    for b in range(1, r + 1):
        for a in range(-d, d + 1):
            if a and (b * b - d) % (4 * a) == 0:
                f = IntForm(a, b, (b * b - d) // (4 * a))
                if math.gcd(math.gcd(a, b), f.c) == 1 and is_reduced(f, d):
                    expect.add(f)
    assert set(reduced_forms(d)) == expect


def test_is_reduced_uses_exact_inequalities():
    assert is_reduced(IntForm(1, 1, -1), 5)
    assert not is_reduced(IntForm(1, 0, -2), 8)
    assert not is_reduced(IntForm(2, 1, -4), 33)  # 2|a| = 4 < sqrt(33) - 1


@pytest.mark.parametrize("d, h", [(5, 1), (8, 1), (12, 2), (60, 4), (20, 1)])
def test_class_number_examples(d, h):
    assert class_number(d) == h


def test_smallest_discriminant_with_two_classes():
    first = next(d for d in nonsquare_discriminants(5, 500) if sl2_components(d) == 2)
    assert first == 12
    assert class_number(first) == 2


@pytest.mark.parametrize("d", nonsquare_discriminants(5, 160))
def test_cycle_count_matches_sl2_orbit_oracle(d):
    assert class_number(d) == sl2_components(d)


@pytest.mark.parametrize("d", nonsquare_discriminants(161, 500)[::7])
def test_cycle_count_matches_sl2_orbit_oracle_sampled(d):
    assert class_number(d) == sl2_components(d)


@pytest.mark.parametrize("d", nonsquare_discriminants(5, 400))
def test_rho_preserves_reducedness_and_cycles_partition(d):
    forms = reduced_forms(d)
    for f in forms:
        g = rho(f, d)
        assert is_reduced(g, d) and g.disc == d
    cycles = reduction_cycles(d)
    flat = [f for c in cycles for f in c]
    assert sorted(flat) == sorted(forms)
    assert len(set(flat)) == len(flat)


@pytest.mark.parametrize("d, tu", [(5, (3, 1)), (8, (6, 2)), (20, (18, 4)), (13, (11, 3))])
def test_fundamental_automorph_examples(d, tu):
    assert fundamental_automorph(d) == tu
    assert brute_automorph(d) == tu


@pytest.mark.parametrize("d", nonsquare_discriminants(5, 3000))
def test_automorph_paths_agree(d):
    t, u = fundamental_automorph(d, brute_limit=0)
    assert t * t - d * u * u == 4 and u >= 1
    small = brute_automorph(d, limit=min(u, 2000))
    if u <= 2000:
        assert small == (t, u)
    else:
        assert small is None
    assert cycle_automorph(d, reduction_cycles(d)[0]) == (t, u)


def test_rejects_invalid_discriminants():
    for d in (0, -8, 9, 16, 7, 6):
        with pytest.raises(InvalidInputError):
            class_data(d)


@pytest.mark.parametrize("d, value", [
    (5, 2 * math.log((3 + math.sqrt(5)) / 2)),
    (8, 2 * math.log(3 + 2 * math.sqrt(2))),
])
def test_vol_proxy_examples(d, value):
    assert vol_proxy(d) == pytest.approx(value, rel=1e-14)
    assert round(vol_proxy(d), 4) == {5: 1.9248, 8: 3.5255}[d]


def test_regulator_for_huge_automorph():
    cd = class_data(4 * 9949)
    assert cd.t.bit_length() > 60
    # log((t + u sqrt(d))/2) with a high-precision reference
    from decimal import Decimal, getcontext
    getcontext().prec = 80
    ref = ((Decimal(cd.t) + Decimal(cd.u) * Decimal(cd.d).sqrt()) / 2).ln()
    assert cd.regulator == pytest.approx(float(ref), rel=1e-14)


def test_vol_proxy_grows_like_sqrt_d():
    import numpy as np
    ds = np.unique(np.geomspace(1000, 100000, 60).astype(int) // 4 * 4)
    ds = [int(d) for d in ds if not is_square(int(d))]
    slope = np.polyfit(np.log(ds), np.log([vol_proxy(d) for d in ds]), 1)[0]
    assert 0.3 <= slope <= 0.7
