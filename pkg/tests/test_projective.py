from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import rationals
from minitwistor.errors import InputError, NotDistinct, SingularTransform
from minitwistor.projective import (
    Mobius,
    ProjPoint1,
    ProjPoint3,
    apply_projective,
    c_star_action,
    cross_ratio,
    mobius_from_three_points,
    sigma_CP3,
)

points = st.one_of(rationals(), st.just("inf"))


def test_infinity_and_equality():
    assert ProjPoint1.of("inf").is_inf
    assert ProjPoint1(Fraction(2), Fraction(4)) == Fraction(1, 2)
    with pytest.raises(InputError):
        ProjPoint1(0, 0)


def test_cross_ratio_values():
    assert cross_ratio(0, "inf", 1, 2) == Fraction(1, 2)  # (0-1)(inf-2)/((0-2)(inf-1))
    with pytest.raises(NotDistinct):
        cross_ratio(0, 0, 1, 2)


def test_singular_mobius():
    with pytest.raises(SingularTransform):
        Mobius(1, 2, 2, 4)


@given(st.lists(points, min_size=4, max_size=4), st.lists(rationals(9, 4), min_size=4, max_size=4))
def test_cross_ratio_is_mobius_invariant(pts, m):
    P = [ProjPoint1.of(p) for p in pts]
    assume(all(not (P[i] == P[j]) for i in range(4) for j in range(i)))
    assume(m[0] * m[3] - m[1] * m[2] != 0)
    T = Mobius(*m)
    assert cross_ratio(*P) == cross_ratio(*[T(p) for p in P])


@given(st.lists(points, min_size=6, max_size=6))
def test_three_point_map(pts):
    P = [ProjPoint1.of(p) for p in pts]
    src, dst = P[:3], P[3:]
    for trip in (src, dst):
        assume(not (trip[0] == trip[1] or trip[0] == trip[2] or trip[1] == trip[2]))
    T = mobius_from_three_points(src, dst)
    assert all(T(s) == d for s, d in zip(src, dst))


def test_composition_and_inverse():
    T = Mobius(2, 1, 1, 1)
    S = Mobius(0, 1, -1, 3)
    p = ProjPoint1.of(Fraction(5, 7))
    assert (T @ S)(p) == T(S(p))
    assert (T @ T.inverse()).equals_projectively(Mobius.identity())


def test_cp3_actions():
    p = ProjPoint3.of([1, 2, 3, 4])
    q = c_star_action(Fraction(2), p)
    assert q == ProjPoint3.of([1, 2, 6, 2])
    assert sigma_CP3(sigma_CP3(p)) == p
    assert sigma_CP3([1j, 1, 2, 3]) == ProjPoint3.of([-1j, 1, 3, 2])
    swap = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert apply_projective(swap, p) == ProjPoint3.of([2, 1, 3, 4])
    with pytest.raises(SingularTransform):
        apply_projective([[1, 0, 0, 0]] * 4, p)
