import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import rationals
from minitwistor.errors import NonRealPoint, NotDistinct
from minitwistor.family import WITNESS
from minitwistor.moduli import (
    CircleConfig,
    are_equivalent,
    canonical_invariant,
    family_modulus,
    modulus_of_a,
)
from minitwistor.projective import Mobius

pos_a = st.builds(Fraction, st.integers(1, 300), st.integers(1, 30))


def float_invariant(values):
    """Minimum cross-ratio over cyclic relabelings, in floats, with inf as a limit."""
    def cr(p1, p2, p3, p4):
        def d(x, y):
            if x == "inf":
                return 1.0
            if y == "inf":
                return -1.0
            return float(x) - float(y)
        return d(p1, p3) * d(p2, p4) / (d(p1, p4) * d(p2, p3))

    pts = sorted(values, key=lambda p: (1, 0) if p == "inf" else (0, p))
    return min(cr(*(pts[k:] + pts[:k])) for k in range(4))


def test_known_values():
    assert modulus_of_a(1).value == 2
    assert modulus_of_a(6).value == Fraction(7, 6)
    assert family_modulus(WITNESS).value == Fraction(7, 6)


@given(pos_a)
def test_closed_form(a):
    assert modulus_of_a(a).value == min(1 + a, (1 + a) / a)
    assert float(modulus_of_a(a).value) == pytest.approx(float_invariant([-1, 0, a, "inf"]))


@given(pos_a)
def test_a_and_inverse_are_equivalent(a):
    c1 = CircleConfig.of([-1, 0, a, "inf"])
    c2 = CircleConfig.of([-1, 0, 1 / a, "inf"])
    ok, W = are_equivalent(c1, c2)
    assert ok and W.det > 0
    assert {W(p) for p in c1.points} == set(c2.points)


@given(st.lists(rationals(50, 7), min_size=4, max_size=4, unique=True),
       st.lists(rationals(9, 5), min_size=4, max_size=4))
def test_invariant_under_psl2(pts, m):
    det = m[0] * m[3] - m[1] * m[2]
    assume(det > 0)
    T = Mobius(*m)
    cfg = CircleConfig.of(pts)
    moved = CircleConfig.of([T(p) for p in cfg.points])
    assert canonical_invariant(cfg).value == canonical_invariant(moved).value
    ok, W = are_equivalent(cfg, moved)
    assert ok and W.det > 0
    assert {W(p) for p in cfg.points} == set(moved.points)


@given(pos_a)
def test_invariant_range(a):
    v = modulus_of_a(a).value
    assert 1 < v <= 2


def test_inequivalent_configurations():
    ok, W = are_equivalent(CircleConfig.of([-1, 0, 1, "inf"]), CircleConfig.of([-1, 0, 6, "inf"]))
    assert not ok and W is None


def test_bad_configurations():
    with pytest.raises(NotDistinct):
        CircleConfig.of([0, 0, 1, 2])
    with pytest.raises(NotDistinct):
        CircleConfig.of([0, 1, 2])
    with pytest.raises(NonRealPoint):
        CircleConfig.of([0, 1, 2, 1j])


def test_every_labeling_gives_same_invariant():
    base = [Fraction(-3), Fraction(1, 2), Fraction(4), "inf"]
    vals = {canonical_invariant(CircleConfig.of(list(p))).value for p in itertools.permutations(base)}
    assert len(vals) == 1
