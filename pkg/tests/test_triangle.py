import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from eisequable.eisenstein import EisensteinInt, conjugate, units
from eisequable.triangle import (
    CongruenceKey,
    DegenerateTriangleError,
    LatticeTriangle,
    Sqrt3Length,
    area_quanta,
    congruence_key,
    equable_decomposition,
    heron_equable_identity,
    is_equable,
    is_equable_float,
    side_norms,
    sqrt3_side_decomposition,
    sum_sqrt_is_rational,
)

E = EisensteinInt
EQUILATERAL = LatticeTriangle(E(8, 4), E(4, 8), E(0))
SCALENE = LatticeTriangle(E(6, 3), E(8, 16), E(0))
UNIT = LatticeTriangle(E(1), E(0, 1), E(0))

coeff = st.integers(min_value=-50, max_value=50)
lattice_points = st.builds(E, coeff, coeff)
triangles = st.builds(LatticeTriangle, lattice_points, lattice_points, lattice_points)


def test_side_norms():
    assert side_norms(EQUILATERAL) == (48, 48, 48)
    assert side_norms(SCALENE) == (27, 192, 147)
    assert side_norms(LatticeTriangle(E(1), E(2), E(0))) == (1, 4, 1)


def test_area_quanta():
    assert area_quanta(EQUILATERAL) == 48
    assert area_quanta(SCALENE) == 72
    assert area_quanta(LatticeTriangle(E(1), E(2), E(0))) == 0
    assert area_quanta(LatticeTriangle(E(1, 1), E(3, 3), E(-2, -2))) == 0


@given(triangles)
def test_area_quanta_matches_shoelace(T):
    (ax, ay), (bx, by), (cx, cy) = (v.to_cartesian() for v in T.vertices)
    shoelace = ((ax - cx) * (by - cy) - (ay - cy) * (bx - cx)) / 2
    assert shoelace == pytest.approx(math.sqrt(3) / 4 * area_quanta(T), abs=1e-7)


@pytest.mark.parametrize("N,expected", [(48, 4), (147, 7), (27, 3), (3, 1), (49, None), (50, None), (12, 2), (6, None)])
def test_sqrt3_side_decomposition(N, expected):
    assert sqrt3_side_decomposition(N) == expected


def test_sqrt3_side_decomposition_exhaustive():
    forms = {3 * n * n: n for n in range(1, 200)}
    for N in range(1, 3 * 199 * 199 + 1):
        assert sqrt3_side_decomposition(N) == forms.get(N)


def test_is_equable_paper_triangles():
    assert is_equable(EQUILATERAL)
    assert equable_decomposition(EQUILATERAL) == (4, 4, 4)
    assert is_equable(SCALENE)
    assert equable_decomposition(SCALENE) == (3, 8, 7)
    assert not is_equable(UNIT)


def test_degenerate_never_equable():
    assert not is_equable(LatticeTriangle(E(0), E(0), E(0)))
    assert not is_equable(LatticeTriangle(E(1), E(2), E(0)))


def test_is_equable_float_examples():
    assert is_equable_float(EQUILATERAL, 1e-9)
    assert not is_equable_float(UNIT, 1e-9)
    with pytest.raises(ValueError):
        is_equable_float(UNIT, 0)


def test_exact_and_float_agree_on_random_triangles():
    rng = random.Random(7)
    for _ in range(100_000):
        T = LatticeTriangle(*(E(rng.randint(-20, 20), rng.randint(-20, 20)) for _ in range(3)))
        assert is_equable(T) == is_equable_float(T, 1e-9)


@pytest.mark.parametrize("m,expected", [([4, 9, 25], True), ([2, 8], False), ([], True), ([1], True), ([3, 12], False)])
def test_sum_sqrt_is_rational(m, expected):
    assert sum_sqrt_is_rational(m) is expected


def test_sum_sqrt_is_rational_rejects_nonpositive():
    with pytest.raises(ValueError):
        sum_sqrt_is_rational([4, 0])


def test_congruence_key():
    assert congruence_key(EQUILATERAL) == CongruenceKey(48, 48, 48)
    assert congruence_key(SCALENE) == CongruenceKey(27, 147, 192)
    for perm in itertools.permutations(SCALENE.vertices):
        assert congruence_key(LatticeTriangle(*perm)) == (27, 147, 192)
    with pytest.raises(DegenerateTriangleError):
        congruence_key(LatticeTriangle(E(1), E(2), E(0)))


def test_congruence_key_triangle_inequality():
    assert CongruenceKey.from_norms([1, 1, 3]) == (1, 1, 3)
    with pytest.raises(DegenerateTriangleError):
        CongruenceKey.from_norms([1, 1, 4])  # 1 + 1 = 2
    with pytest.raises(DegenerateTriangleError):
        CongruenceKey.from_norms([1, 1, 5])


@pytest.mark.parametrize("n", [(8, 7, 3), (4, 4, 4), (3, 8, 7), (7, 3, 8)])
def test_heron_identity_holds_for_paper_triples(n):
    assert heron_equable_identity(n)


def test_heron_identity_arithmetic():
    assert 9 * 18 * 2 * 4 * 12 == 15552 == 48 * 18**2
    assert 9 * 12 * 4**3 == 6912 == 48 * 12**2
    assert not heron_equable_identity((1, 1, 1))


def test_sqrt3_length():
    assert Sqrt3Length(4).squared == 48
    assert str(Sqrt3Length(7)) == "7√3"
    with pytest.raises(ValueError):
        Sqrt3Length(0)


# invariance properties


@given(triangles, lattice_points)
def test_translation_invariance(T, t):
    S = T.translated(t)
    assert side_norms(S) == side_norms(T)
    assert area_quanta(S) == area_quanta(T)


@given(triangles)
def test_unit_rotation_invariance(T):
    for u in units():
        S = T.mapped(lambda z: u * z)
        assert side_norms(S) == side_norms(T)
        assert abs(area_quanta(S)) == abs(area_quanta(T))


@given(triangles)
def test_conjugation_reflects(T):
    S = T.mapped(conjugate)
    assert side_norms(S) == side_norms(T)
    assert area_quanta(S) == -area_quanta(T)


@given(triangles)
def test_swap_negates_orientation(T):
    S = LatticeTriangle(T.B, T.A, T.C)
    assert area_quanta(S) == -area_quanta(T)
    if area_quanta(T):
        assert congruence_key(S) == congruence_key(T)


@given(triangles)
def test_equable_decomposition_consistent_with_area(T):
    ns = equable_decomposition(T)
    if ns is not None:
        assert 4 * sum(ns) == abs(area_quanta(T))
        assert [3 * n * n for n in ns] == list(side_norms(T))


def test_float_check_rejects_collapsed_triangle():
    collapsed = LatticeTriangle(E(3, 1), E(3, 1), E(3, 1))
    assert not is_equable(collapsed)
    assert not is_equable_float(collapsed, 1e-9)
