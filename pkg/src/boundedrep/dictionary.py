"""Bijection between solutions of x^2 + y^2 - z^2 = n and forms of discriminant 4n.

    x = (a - c)/2,  y = b/2,  z = (a + c)/2
    a = x + z,      b = 2y,   c = z - x
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError, ParityError
from .qform import IntForm, discriminant


@dataclass(frozen=True)
class Triple:
    x: int
    y: int
    z: int
    n: int

    def __post_init__(self):
        if self.x * self.x + self.y * self.y - self.z * self.z != self.n:
            raise InvalidInputError(
                f"({self.x},{self.y},{self.z}) does not represent {self.n}")

    def xyz(self) -> tuple[int, int, int]:
        return self.x, self.y, self.z


def form_to_triple(f: IntForm) -> Triple:
    a, b, c = f
    if b % 2 or (a - c) % 2:
        raise ParityError(f"{IntForm(*f)!r} needs b even and a = c mod 2")
    return Triple((a - c) // 2, b // 2, (a + c) // 2, discriminant(f) // 4)


def triple_to_form(t: Triple) -> IntForm:
    return IntForm(t.x + t.z, 2 * t.y, t.z - t.x)


def verify_bounded(t: Triple) -> bool:
    """True iff max(x^2, y^2, z^2) <= n."""
    return max(t.x * t.x, t.y * t.y, t.z * t.z) <= t.n
