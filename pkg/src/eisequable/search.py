"""Exhaustive lattice searches: points of a given norm, realizations of side
triples, and classification of equable triangles inside a window."""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .eisenstein import EisensteinInt, conjugate, integer_sqrt, units
from .triangle import (
    CongruenceKey,
    LatticeTriangle,
    Sqrt3Length,
    congruence_key,
    is_equable,
)

__all__ = [
    "DEFAULT_WINDOW",
    "SearchWindow",
    "canonical_pair",
    "enumerate_equable_classes",
    "point_group",
    "points_of_norm",
    "points_up_to_norm",
    "realize_sides",
]

DEFAULT_WINDOW = 300
FLOAT_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class SearchWindow:
    """Bound on norm(A - C) and norm(B - C) once C is moved to 0."""

    max_norm: int = DEFAULT_WINDOW

    def __post_init__(self) -> None:
        if self.max_norm < 1:
            raise ValueError(f"max_norm must be >= 1, got {self.max_norm}")


def _coefficient_radius(N: int) -> int:
    # a**2 - ab + b**2 = (a**2 + b**2 + (a-b)**2) / 2 >= (a**2 + b**2) / 2,
    # so norm <= N forces |a|, |b| <= sqrt(2N).
    r = integer_sqrt(2 * N)
    return r if r * r == 2 * N else r + 1


def points_up_to_norm(max_norm: int) -> list[tuple[int, int, int]]:
    """``(c1, cw, norm)`` for every non-zero point with norm <= max_norm."""
    r = _coefficient_radius(max_norm)
    out = []
    for a in range(-r, r + 1):
        for b in range(-r, r + 1):
            n = a * a - a * b + b * b
            if 0 < n <= max_norm:
                out.append((a, b, n))
    return out


def points_of_norm(N: int) -> list[EisensteinInt]:
    """All lattice points of norm exactly ``N``, ordered by (c1, cw)."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    return [EisensteinInt(a, b) for a, b, n in points_up_to_norm(N) if n == N]


def point_group() -> list:
    """The 12 lattice symmetries fixing 0: z -> u*z and z -> u*conj(z)."""
    maps = []
    for u in units():
        maps.append(lambda z, u=u: u * z)
        maps.append(lambda z, u=u: u * conjugate(z))
    return maps


def _pair_key(A: EisensteinInt, B: EisensteinInt) -> tuple[int, int, int, int]:
    return (A.c1, A.cw, B.c1, B.cw)


def canonical_pair(A: EisensteinInt, B: EisensteinInt) -> tuple[EisensteinInt, EisensteinInt]:
    """Least image of (A, B) under the point group, with A and B interchangeable."""
    best = None
    for g in point_group():
        gA, gB = g(A), g(B)
        for pair in ((gA, gB), (gB, gA)):
            if best is None or _pair_key(*pair) < _pair_key(*best):
                best = pair
    return best


def realize_sides(n: tuple[Sqrt3Length | int, Sqrt3Length | int, Sqrt3Length | int]) -> list[LatticeTriangle]:
    """Lattice triangles (A, B, 0) whose sides are n_i * sqrt(3).

    Every assignment of the three lengths to the edges CA, CB, AB is tried,
    so a triple is realized whichever vertex sits at the origin. Results are
    canonical representatives modulo the point group (and A <-> B), sorted.
    """
    ns = [v.n if isinstance(v, Sqrt3Length) else int(v) for v in n]
    if min(ns) < 1:
        raise ValueError(f"side coefficients must be positive, got {ns}")
    a, b, c = sorted(ns)
    if a + b <= c:
        raise ValueError(f"{ns} violates the strict triangle inequality")
    found = set()
    for na, nb, nc in set(itertools.permutations(ns)):
        target_ab = 3 * nc * nc
        for A in points_of_norm(3 * na * na):
            for B in points_of_norm(3 * nb * nb):
                if (A - B).norm() == target_ab:
                    found.add(canonical_pair(A, B))
    return [LatticeTriangle(A, B) for A, B in sorted(found, key=lambda p: _pair_key(*p))]


def _sqrt3_coefficients(max_norm: int) -> dict[int, int]:
    return {3 * k * k: k for k in range(1, integer_sqrt(max_norm // 3) + 1)}


def _scan(points: list[tuple[int, int, int]], a_slice: slice, orientation: int, max_norm: int) -> set[CongruenceKey]:
    # Inlined equability test: for a lattice triangle, perimeter == area iff
    # every side norm is 3n**2 and 4 * (n_a + n_b + n_c) == |D|
    # (see triangle.equable_decomposition). Each hit is re-checked there.
    sqrt3 = _sqrt3_coefficients(4 * max_norm)  # |A - B|**2 <= 4 max_norm
    keys = set()
    for a1, a2, na_norm in points[a_slice]:
        for b1, b2, nb_norm in points:
            D = a1 * b2 - a2 * b1
            if D * orientation <= 0:
                continue
            na = sqrt3.get(na_norm)
            if na is None:
                continue
            nb = sqrt3.get(nb_norm)
            if nb is None:
                continue
            d1, d2 = a1 - b1, a2 - b2
            nc = sqrt3.get(d1 * d1 - d1 * d2 + d2 * d2)
            if nc is None or 4 * (na + nb + nc) != D * orientation:
                continue
            T = LatticeTriangle(EisensteinInt(a1, a2), EisensteinInt(b1, b2))
            if not is_equable(T):
                raise AssertionError(f"inlined check disagrees with is_equable on {T}")
            keys.add(congruence_key(T))
    return keys


def _scan_float(points: list[tuple[int, int, int]], a_slice: slice, orientation: int, max_norm: int) -> set[CongruenceKey]:
    # Perimeter vs area in floating point, without assuming the 3n**2 form.
    keys = set()
    quarter_sqrt3 = math.sqrt(3.0) / 4.0
    for a1, a2, na_norm in points[a_slice]:
        ra = math.sqrt(na_norm)
        for b1, b2, nb_norm in points:
            D = a1 * b2 - a2 * b1
            if D * orientation <= 0:
                continue
            d1, d2 = a1 - b1, a2 - b2
            perimeter = ra + math.sqrt(nb_norm) + math.sqrt(d1 * d1 - d1 * d2 + d2 * d2)
            if abs(perimeter - quarter_sqrt3 * abs(D)) < FLOAT_TOL:
                T = LatticeTriangle(EisensteinInt(a1, a2), EisensteinInt(b1, b2))
                if not is_equable(T):
                    raise AssertionError(f"float scan flags {T}, exact test rejects it")
                keys.add(congruence_key(T))
    return keys


def enumerate_equable_classes(
    window: SearchWindow | int = DEFAULT_WINDOW,
    orientation: int = 1,
    workers: int = 1,
    method: str = "exact",
) -> set[CongruenceKey]:
    """Congruence classes of equable triangles found inside ``window``.

    C is pinned at 0 (translations are motions) and only pairs with
    sign(D) == orientation are scanned (reflections are motions). The result
    certifies nothing outside the window.

    ``method="exact"`` skips pairs early using integer tests; ``"float"``
    compares perimeter and area numerically for every pair and is slower.
    Outer points are split round-robin over ``workers`` processes.
    """
    if isinstance(window, int):
        window = SearchWindow(window)
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    scan = {"exact": _scan, "float": _scan_float}.get(method)
    if scan is None:
        raise ValueError(f"unknown method {method!r}")
    points = points_up_to_norm(window.max_norm)
    if workers <= 1:
        return scan(points, slice(None), orientation, window.max_norm)
    chunks = [slice(i, None, workers) for i in range(workers)]
    keys: set[CongruenceKey] = set()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(scan, points, chunk, orientation, window.max_norm) for chunk in chunks]
        for future in futures:
            keys |= future.result()
    return keys
