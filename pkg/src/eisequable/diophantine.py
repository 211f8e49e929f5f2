"""Positive integer solutions of 3uvw = 16(u+v+w) and 3xyz = 4(x+y+z).

For an equable triangle with sides a, b, c (all multiples of sqrt(3)) put

    u = (-a+b+c)/sqrt(3),  v = (a-b+c)/sqrt(3),  w = (a+b-c)/sqrt(3).

Heron's formula then becomes 3uvw = 16(u+v+w); u, v, w turn out to be even,
and halving gives 3xyz = 4(x+y+z).

:func:`enumerate_xyz` follows the bounded case analysis for the halved
equation. :func:`enumerate_uvw_bruteforce` scans the original equation over
a box and deliberately knows nothing about those bounds or about parity.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .eisenstein import integer_sqrt
from .triangle import Sqrt3Length

__all__ = [
    "UvwSolution",
    "XyzSolution",
    "enumerate_uvw_bruteforce",
    "enumerate_xyz",
    "xyz_to_sides",
]

DEFAULT_BRUTEFORCE_BOUND = 1000


class XyzSolution(NamedTuple):
    x: int
    y: int
    z: int

    def satisfies(self) -> bool:
        return 3 * self.x * self.y * self.z == 4 * (self.x + self.y + self.z)

    def doubled(self) -> UvwSolution:
        return UvwSolution(2 * self.x, 2 * self.y, 2 * self.z)


class UvwSolution(NamedTuple):
    u: int
    v: int
    w: int

    def satisfies(self) -> bool:
        return 3 * self.u * self.v * self.w == 16 * (self.u + self.v + self.w)


# 3xyz = 4(x+y+z) with x <= y <= z.
#
# Solving for z gives z = 4(x+y)/(3xy-4), and y <= z means
# 3xy**2 - 8y - 4x <= 0, so y <= (4 + sqrt(16 + 12x**2)) / (3x).
# With x <= y this yields 3x**2 <= 4 + sqrt(16 + 12x**2), hence
# (3x**2 - 4)**2 <= 16 + 12x**2, i.e. 9x**4 - 36x**2 <= 0 and x <= 2.
# The right-hand side bound on y decreases in x, so y <= (4 + sqrt(28))/3
# < 3.1 and y <= 3.
_X_MAX = 2
_Y_MAX = 3


def _y_upper(x: int) -> int:
    """floor((4 + sqrt(16 + 12x**2)) / (3x)), computed in integers."""
    # floor((4 + s)/(3x)) with s = sqrt(16 + 12x**2) irrational or integral;
    # scan down from a safe overestimate using exact squared comparisons.
    y = (4 + integer_sqrt(16 + 12 * x * x) + 1) // (3 * x) + 1
    while y > 0:
        lhs = 3 * x * y - 4  # y <= (4+s)/(3x)  <=>  3xy - 4 <= s
        if lhs <= 0 or lhs * lhs <= 16 + 12 * x * x:
            return y
        y -= 1
    return 0


def enumerate_xyz() -> list[XyzSolution]:
    """All solutions of 3xyz = 4(x+y+z) with x <= y <= z, sorted."""
    solutions = []
    for x in range(1, _X_MAX + 1):
        y_max = min(_Y_MAX, _y_upper(x))
        for y in range(x, y_max + 1):
            denominator = 3 * x * y - 4
            if denominator <= 0:
                continue
            z, remainder = divmod(4 * (x + y), denominator)
            if remainder == 0 and z >= y:
                solutions.append(XyzSolution(x, y, z))
    return sorted(solutions)


def enumerate_uvw_bruteforce(bound: int = DEFAULT_BRUTEFORCE_BOUND, same_parity: bool = True) -> list[UvwSolution]:
    """Every u <= v <= w <= bound with 3uvw = 16(u+v+w), by exhaustive scan.

    Triples coming from a triangle always share one parity, because
    u + v = 2 n_c (and likewise for the other pairs); ``same_parity`` keeps
    only those. With ``same_parity=False`` the raw equation is reported,
    which also has mixed-parity solutions such as (1, 8, 18) that no
    triangle produces.

    For each u the whole (v, w) square is evaluated as one integer array;
    3 * bound**3 must fit in int64, which holds far beyond any useful bound.
    """
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    if 3 * bound**3 + 48 * bound >= 2**63:
        raise OverflowError(f"bound {bound} too large for int64 evaluation")
    solutions = []
    w = np.arange(1, bound + 1, dtype=np.int64)
    for u in range(1, bound + 1):
        v = np.arange(u, bound + 1, dtype=np.int64)
        # 3uvw - 16(u+v+w) == 0, written as (3uv - 16) w - 16(u + v)
        residual = (3 * u * v - 16)[:, None] * w[None, u - 1 :] - (16 * (u + v))[:, None]
        rows, cols = np.nonzero(residual == 0)
        for i, j in zip(rows.tolist(), cols.tolist()):
            vv, ww = u + i, u + j
            if ww < vv:
                continue
            if same_parity and not (u % 2 == vv % 2 == ww % 2):
                continue
            solutions.append(UvwSolution(u, vv, ww))
    return sorted(solutions)


def xyz_to_sides(s: XyzSolution) -> tuple[Sqrt3Length, Sqrt3Length, Sqrt3Length]:
    """Side coefficients (n_a, n_b, n_c) = (y+z, x+z, x+y)."""
    x, y, z = s
    return (Sqrt3Length(y + z), Sqrt3Length(x + z), Sqrt3Length(x + y))
