"""Integer binary quadratic forms [a, b, c] = a*u^2 + b*u*v + c*v^2.

Coefficients are Python ints, so every operation here is exact at any size.
"""

from __future__ import annotations

import enum
from math import gcd
from typing import NamedTuple

from .errors import InvalidDiscriminantError, InvalidInputError


class IntForm(NamedTuple):
    a: int
    b: int
    c: int

    def __repr__(self):
        return f"[{self.a},{self.b},{self.c}]"

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c


def discriminant(f: IntForm) -> int:
    a, b, c = f
    return b * b - 4 * a * c


def is_primitive(f: IntForm) -> bool:
    a, b, c = f
    if a == 0 and b == 0 and c == 0:
        raise InvalidInputError("the zero form has no content")
    return gcd(gcd(a, b), c) == 1


def apply_T(f: IntForm) -> IntForm:
    """(Tq)(u, v) = q(u + v, v)."""
    a, b, c = f
    return IntForm(a, b + 2 * a, a + b + c)


def apply_S(f: IntForm) -> IntForm:
    """(Sq)(u, v) = q(-v, u)."""
    a, b, c = f
    return IntForm(c, -b, a)


def apply_U(f: IntForm) -> IntForm:
    """U = T o S."""
    a, b, c = f
    return IntForm(c, -b + 2 * c, a - b + c)


class Move(enum.Enum):
    IDENTITY = "Identity"
    T = "T"
    U = "U"


class ParityFixOutcome(NamedTuple):
    form: IntForm
    move: Move


def parity_fix(f: IntForm) -> ParityFixOutcome:
    """Return the first of f, T f, U f whose outer coefficients share parity.

    Requires disc(f) = 0 mod 4, which forces b even. When a and c differ in
    parity, T repairs the case c even and U the case a even.
    """
    f = IntForm(*f)
    if discriminant(f) % 4:
        raise InvalidDiscriminantError(f"discriminant of {f!r} is not 0 mod 4")
    if (f.a - f.c) % 2 == 0:
        return ParityFixOutcome(f, Move.IDENTITY)
    if f.c % 2 == 0:
        return ParityFixOutcome(apply_T(f), Move.T)
    return ParityFixOutcome(apply_U(f), Move.U)
