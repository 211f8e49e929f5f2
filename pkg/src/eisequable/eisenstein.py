"""Exact arithmetic in the Eisenstein integers Z[w], w = -1/2 + i*sqrt(3)/2.

Elements are stored in w-coordinates: ``EisensteinInt(c1, cw)`` is c1 + cw*w.
Multiplication follows from w**2 = -1 - w.

Coefficients are kept inside the signed 64-bit range. Python integers never
wrap, so every constructor checks the bound and raises ``OverflowError``
instead; the classification pipeline stays far below it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "EisensteinInt",
    "INT64_MAX",
    "INT64_MIN",
    "OMEGA",
    "ONE",
    "ZERO",
    "conjugate",
    "integer_sqrt",
    "is_perfect_square",
    "norm",
    "squarefree_part",
    "to_cartesian",
    "units",
]

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)

_SQRT3_2 = math.sqrt(3.0) / 2.0


def _checked(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"{value} does not fit in a signed 64-bit integer")
    return value


@dataclass(frozen=True, order=True, slots=True)
class EisensteinInt:
    """The lattice point ``c1 + cw*w``."""

    c1: int
    cw: int = 0

    def __post_init__(self) -> None:
        c1, cw = self.c1, self.cw
        if type(c1) is not int or type(cw) is not int:
            for value in (c1, cw):
                if isinstance(value, bool) or not isinstance(value, int):
                    raise TypeError(f"coefficients must be int, got {type(value).__name__}")
            object.__setattr__(self, "c1", int(c1))
            object.__setattr__(self, "cw", int(cw))
        if not (INT64_MIN <= c1 <= INT64_MAX and INT64_MIN <= cw <= INT64_MAX):
            raise OverflowError(f"coefficients ({c1}, {cw}) do not fit in signed 64-bit integers")

    @classmethod
    def coerce(cls, value: EisensteinInt | int | tuple[int, int]) -> EisensteinInt:
        if isinstance(value, EisensteinInt):
            return value
        if isinstance(value, tuple):
            return cls(*value)
        return cls(value)

    def __add__(self, other: EisensteinInt | int) -> EisensteinInt:
        other = EisensteinInt.coerce(other)
        return EisensteinInt(self.c1 + other.c1, self.cw + other.cw)

    __radd__ = __add__

    def __sub__(self, other: EisensteinInt | int) -> EisensteinInt:
        other = EisensteinInt.coerce(other)
        return EisensteinInt(self.c1 - other.c1, self.cw - other.cw)

    def __rsub__(self, other: int) -> EisensteinInt:
        return EisensteinInt.coerce(other) - self

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.c1, -self.cw)

    def __mul__(self, other: EisensteinInt | int) -> EisensteinInt:
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd*w**2,  w**2 = -1 - w
        other = EisensteinInt.coerce(other)
        a, b, c, d = self.c1, self.cw, other.c1, other.cw
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def norm(self) -> int:
        return norm(self)

    def conjugate(self) -> EisensteinInt:
        return conjugate(self)

    def to_cartesian(self) -> tuple[float, float]:
        return to_cartesian(self)

    def __str__(self) -> str:
        if self.cw == 0:
            return str(self.c1)
        if self.cw == 1:
            w = "w"
        elif self.cw == -1:
            w = "-w"
        else:
            w = f"{self.cw}w"
        if self.c1 == 0:
            return w
        sign = "" if w.startswith("-") else "+"
        return f"{self.c1}{sign}{w}"


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)


def norm(z: EisensteinInt) -> int:
    """Squared Euclidean length ``c1**2 - c1*cw + cw**2`` of ``z``."""
    return _checked(z.c1 * z.c1 - z.c1 * z.cw + z.cw * z.cw)


def conjugate(z: EisensteinInt) -> EisensteinInt:
    # conj(w) = -1 - w
    return EisensteinInt(z.c1 - z.cw, -z.cw)


def units() -> list[EisensteinInt]:
    """The six elements of norm 1, in counter-clockwise order from 1."""
    return [
        EisensteinInt(1, 0),
        EisensteinInt(1, 1),
        EisensteinInt(0, 1),
        EisensteinInt(-1, 0),
        EisensteinInt(-1, -1),
        EisensteinInt(0, -1),
    ]


def to_cartesian(z: EisensteinInt) -> tuple[float, float]:
    return (z.c1 - z.cw / 2.0, z.cw * _SQRT3_2)


def integer_sqrt(n: int) -> int:
    """Return floor(sqrt(n)) exactly.

    A float estimate seeds an integer Newton iteration, which is then
    corrected so the result never depends on float rounding.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"integer_sqrt expects an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"integer_sqrt of negative number {n}")
    if n < 2:
        return n
    try:
        x = int(math.sqrt(n)) + 1
    except OverflowError:
        x = 1 << ((n.bit_length() + 1) // 2 + 1)
    # From any x >= floor(sqrt(n)) Newton steps decrease monotonically.
    if x * x <= n:
        x = n
    while True:
        y = (x + n // x) // 2
        if y >= x:
            break
        x = y
    while x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


def is_perfect_square(n: int) -> bool:
    if n < 0:
        raise ValueError(f"is_perfect_square of negative number {n}")
    r = integer_sqrt(n)
    return r * r == n


def squarefree_part(n: int) -> int:
    """Return the squarefree ``d`` with ``n == d * k**2``, by trial division."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"squarefree_part expects an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"squarefree_part needs a positive integer, got {n}")
    d = 1
    p = 2
    while p * p <= n:
        exponent = 0
        while n % p == 0:
            n //= p
            exponent += 1
        if exponent % 2:
            d *= p
        p += 1 if p == 2 else 2
    return d * n
