"""Exact geometry of triangles with vertices on the Eisenstein lattice.

Every length in this module is handled through its square, which is an
integer for lattice points, and every area through the integer ``D`` with
signed area ``(sqrt(3)/4) * D``. Floating point is only used by
:func:`is_equable_float`, an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .eisenstein import (
    EisensteinInt,
    ZERO,
    integer_sqrt,
    norm,
    squarefree_part,
    to_cartesian,
)

__all__ = [
    "CongruenceKey",
    "DegenerateTriangleError",
    "LatticeTriangle",
    "Sqrt3Length",
    "area_quanta",
    "congruence_key",
    "equable_decomposition",
    "heron_equable_identity",
    "is_equable",
    "is_equable_float",
    "side_norms",
    "sqrt3_side_decomposition",
    "sum_sqrt_is_rational",
]


class DegenerateTriangleError(ValueError):
    """Raised when an operation needs a triangle of non-zero area."""


@dataclass(frozen=True, slots=True)
class LatticeTriangle:
    A: EisensteinInt
    B: EisensteinInt
    C: EisensteinInt = ZERO

    def __post_init__(self) -> None:
        for name in ("A", "B", "C"):
            value = getattr(self, name)
            if type(value) is not EisensteinInt:
                object.__setattr__(self, name, EisensteinInt.coerce(value))

    @property
    def vertices(self) -> tuple[EisensteinInt, EisensteinInt, EisensteinInt]:
        return (self.A, self.B, self.C)

    def translated(self, t: EisensteinInt) -> LatticeTriangle:
        return LatticeTriangle(self.A + t, self.B + t, self.C + t)

    def mapped(self, f) -> LatticeTriangle:
        return LatticeTriangle(f(self.A), f(self.B), f(self.C))


@dataclass(frozen=True, order=True, slots=True)
class Sqrt3Length:
    """The length ``n * sqrt(3)``."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"Sqrt3Length needs n >= 1, got {self.n}")

    @property
    def squared(self) -> int:
        return 3 * self.n * self.n

    def __str__(self) -> str:
        return f"{self.n}√3"


class CongruenceKey(NamedTuple):
    """Sorted squared side lengths; a complete invariant under Euclidean motions."""

    n1: int
    n2: int
    n3: int

    @classmethod
    def from_norms(cls, norms: Iterable[int]) -> CongruenceKey:
        a, b, c = sorted(norms)
        if a < 1:
            raise DegenerateTriangleError(f"side norms {a, b, c} include a zero side")
        # sqrt(a) + sqrt(b) > sqrt(c)  <=>  c - a - b < 2 sqrt(ab)
        excess = c - a - b
        if excess >= 0 and excess * excess >= 4 * a * b:
            raise DegenerateTriangleError(f"side norms {a, b, c} violate the triangle inequality")
        return cls(a, b, c)


def side_norms(T: LatticeTriangle) -> tuple[int, int, int]:
    """Squared lengths of the sides AC, BC, AB, in that order."""
    return (norm(T.A - T.C), norm(T.B - T.C), norm(T.A - T.B))


def area_quanta(T: LatticeTriangle) -> int:
    """Integer D with signed area ``(sqrt(3)/4) * D``.

    In w-coordinates, with u = A - C and v = B - C, D = u1*v2 - u2*v1
    (positive when A, B, C run counter-clockwise as seen from C).
    """
    u = T.A - T.C
    v = T.B - T.C
    return u.c1 * v.cw - u.cw * v.c1


def sqrt3_side_decomposition(N: int) -> int | None:
    """Return ``n`` when ``N == 3 * n**2``, else ``None``."""
    if N < 1:
        raise ValueError(f"side norm must be positive, got {N}")
    if N % 3:
        return None
    q = N // 3
    r = integer_sqrt(q)
    return r if r * r == q else None


def equable_decomposition(T: LatticeTriangle) -> tuple[int, int, int] | None:
    """Return the side coefficients ``(n_a, n_b, n_c)`` when ``T`` is equable.

    Perimeter equals area exactly when

        sqrt(Na) + sqrt(Nb) + sqrt(Nc) = (sqrt(3)/4) |D|.

    Multiplying by sqrt(3) turns the right side into the rational 3|D|/4, so
    the sum sqrt(3Na) + sqrt(3Nb) + sqrt(3Nc) is rational and hence each
    3N is a perfect square (see :func:`sum_sqrt_is_rational`). Since N is an
    integer this forces N = 3n**2, and the equation reduces to
    sqrt(3) (n_a + n_b + n_c) = (sqrt(3)/4) |D|, i.e. 4 (n_a + n_b + n_c) = |D|.
    So every equable triangle passes both integer tests below and nothing
    else does.
    """
    D = area_quanta(T)
    if D == 0:
        # area 0 < perimeter, even when all vertices coincide
        return None
    ns = []
    for N in side_norms(T):
        n = sqrt3_side_decomposition(N)
        if n is None:
            return None
        ns.append(n)
    if 4 * sum(ns) != abs(D):
        return None
    return (ns[0], ns[1], ns[2])


def is_equable(T: LatticeTriangle) -> bool:
    return equable_decomposition(T) is not None


def is_equable_float(T: LatticeTriangle, tol: float = 1e-9) -> bool:
    """Floating-point equability check from cartesian coordinates.

    A triangle whose area is below ``tol`` counts as degenerate and is never
    equable; otherwise three coincident vertices would pass as 0 == 0.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    (ax, ay), (bx, by), (cx, cy) = (to_cartesian(v) for v in T.vertices)
    perimeter = math.hypot(ax - cx, ay - cy) + math.hypot(bx - cx, by - cy) + math.hypot(ax - bx, ay - by)
    area = abs((ax - cx) * (by - cy) - (ay - cy) * (bx - cx)) / 2.0
    if area < tol:
        return False
    return abs(perimeter - area) < tol


def sum_sqrt_is_rational(m: Iterable[int]) -> bool:
    """Decide whether ``sum(sqrt(m_i))`` is rational.

    A sum of square roots of positive integers is rational only if every
    term is, so this is true iff every ``m_i`` is a perfect square.
    """
    values = list(m)
    for value in values:
        if value < 1:
            raise ValueError(f"entries must be positive integers, got {value}")
    return all(squarefree_part(value) == 1 for value in values)


def congruence_key(T: LatticeTriangle) -> CongruenceKey:
    if area_quanta(T) == 0:
        raise DegenerateTriangleError(f"{T} is degenerate")
    return CongruenceKey.from_norms(side_norms(T))


def heron_equable_identity(n: tuple[int, int, int]) -> bool:
    """Exact check of Heron's equable relation for sides n_i * sqrt(3).

    With a = n1*sqrt(3), b = n2*sqrt(3), c = n3*sqrt(3) and S = n1 + n2 + n3,

        (a+b+c)(-a+b+c)(a-b+c)(a+b-c) = sqrt(3)**4 * S * P = 9 S P
        16 (a+b+c)**2                 = 16 * 3 * S**2     = 48 S**2

    where P = (-n1+n2+n3)(n1-n2+n3)(n1+n2-n3). Both sides are integers.
    """
    n1, n2, n3 = n
    if min(n1, n2, n3) < 1:
        raise ValueError(f"side coefficients must be positive, got {n}")
    s = n1 + n2 + n3
    p = (-n1 + n2 + n3) * (n1 - n2 + n3) * (n1 + n2 - n3)
    return 9 * s * p == 48 * s * s
