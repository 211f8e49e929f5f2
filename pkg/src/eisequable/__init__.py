"""Equable triangles on the Eisenstein lattice, classified exactly."""

from .diophantine import (
    UvwSolution,
    XyzSolution,
    enumerate_uvw_bruteforce,
    enumerate_xyz,
    xyz_to_sides,
)
from .eisenstein import (
    OMEGA,
    EisensteinInt,
    conjugate,
    integer_sqrt,
    is_perfect_square,
    norm,
    squarefree_part,
    to_cartesian,
    units,
)
from .search import SearchWindow, enumerate_equable_classes, points_of_norm, realize_sides
from .triangle import (
    CongruenceKey,
    DegenerateTriangleError,
    LatticeTriangle,
    Sqrt3Length,
    area_quanta,
    congruence_key,
    heron_equable_identity,
    is_equable,
    is_equable_float,
    side_norms,
    sqrt3_side_decomposition,
    sum_sqrt_is_rational,
)

__version__ = "0.1.0"

# The two triangles of the classification, as (A, B, C).
THEOREM_TRIANGLES = {
    "equilateral": LatticeTriangle(EisensteinInt(8, 4), EisensteinInt(4, 8)),
    "scalene": LatticeTriangle(EisensteinInt(6, 3), EisensteinInt(8, 16)),
}
