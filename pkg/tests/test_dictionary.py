import pytest
from hypothesis import assume, given, strategies as st

from boundedrep.dictionary import Triple, form_to_triple, triple_to_form, verify_bounded
from boundedrep.errors import InvalidInputError, ParityError
from boundedrep.qform import IntForm, discriminant

small = st.integers(-10**4, 10**4)


@st.composite
def triples(draw):
    x, y, z = draw(small), draw(small), draw(small)
    return Triple(x, y, z, x * x + y * y - z * z)


@pytest.mark.parametrize("f, xyz, n", [
    ((3, 2, -1), (2, 1, 1), 4),
    ((1, 0, -1), (1, 0, 0), 1),
    ((0, 2, 0), (0, 1, 0), 1),
])
def test_form_to_triple(f, xyz, n):
    t = form_to_triple(IntForm(*f))
    assert t.xyz() == xyz
    assert t.n == n


@pytest.mark.parametrize("f", [(1, 1, 0), (2, 0, -1), (1, 3, 2)])
def test_form_to_triple_rejects_bad_parity(f):
    with pytest.raises(ParityError):
        form_to_triple(IntForm(*f))


@pytest.mark.parametrize("t, f", [
    (Triple(2, 1, 1, 4), (3, 2, -1)),
    (Triple(7, 0, 0, 49), (7, 0, -7)),
    (Triple(0, 0, 1, -1), (1, 0, 1)),
])
def test_triple_to_form(t, f):
    g = triple_to_form(t)
    assert g == f
    assert discriminant(g) == 4 * t.n


def test_triple_checks_its_value():
    with pytest.raises(InvalidInputError):
        Triple(1, 1, 1, 2)


@pytest.mark.parametrize("t, ok", [
    (Triple(2, 1, 1, 4), True),
    (Triple(1, 1, 1, 1), True),
    (Triple(3, 1, 1, 9), True),
    (Triple(3, 2, 3, 4), False),
])
def test_verify_bounded(t, ok):
    assert verify_bounded(t) is ok


@given(triples())
def test_round_trip_from_triples(t):
    f = triple_to_form(t)
    assert form_to_triple(f) == t
    assert discriminant(f) == 4 * (t.x ** 2 + t.y ** 2 - t.z ** 2)


@given(small, small, small)
def test_round_trip_from_forms(a, half_b, c):
    assume((a - c) % 2 == 0)
    f = IntForm(a, 2 * half_b, c)
    assert triple_to_form(form_to_triple(f)) == f
