import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import rationals
from minitwistor.algebra import rational_text
from minitwistor.errors import MismatchedA, NonRealInput, NotDistinct
from minitwistor.family import WITNESS, FamilyParams, random_star_family
from minitwistor.surface import (
    EMPTY,
    T2_SPHERE,
    T4_SPHERE,
    ConeCurve,
    branch_curve,
    branch_points_over_line,
    classify_u,
    elliptic_invariants,
    fibers_of_a,
    j_closed_form,
    locus_csv,
    locus_svg,
    q_shift_isomorphism,
    sample_real_locus,
)

pos_a = st.builds(Fraction, st.integers(1, 300), st.integers(1, 30))


def j_weierstrass(a):
    """j of w^2 = u(u+1)(u-a) from c4 and the discriminant of the cubic."""
    A, B, C = 1 - a, -a, Fraction(0)  # u^3 + A u^2 + B u + C
    c4 = 16 * (A * A - 3 * B)
    disc = A * A * B * B - 4 * B ** 3 - 4 * A ** 3 * C - 27 * C * C + 18 * A * B * C
    return c4 ** 3 / (16 * disc)


def test_witness_branch_curve():
    B = branch_curve(WITNESS)
    assert B.A == 1
    # independent: the branch curve at (u, zeta) = (8, -24) comes from the point (8,1,4,-6)
    assert B(Fraction(8), Fraction(-24)) == 0
    pts = [bp.point.text() for bp in branch_points_over_line(B)]
    assert pts == ["-1", "0", "6", "inf"]


def test_j_for_a_six():
    inv = elliptic_invariants(fibers_of_a(6))
    assert inv.lam == 7
    assert inv.j == Fraction(5088448, 441) == j_weierstrass(Fraction(6))
    assert elliptic_invariants(fibers_of_a(1)).j == 1728


@given(pos_a)
def test_j_closed_form_matches_weierstrass(a):
    assert j_closed_form(a) == j_weierstrass(a) == elliptic_invariants(fibers_of_a(a)).j


def test_elliptic_needs_distinct_points():
    with pytest.raises(NotDistinct):
        elliptic_invariants([0, 0, 1, "inf"])


@given(st.integers(0, 5000))
def test_branch_set_is_standard(seed):
    p = random_star_family(random.Random(seed))
    bps = branch_points_over_line(branch_curve(p))
    assert all(b.simple for b in bps)
    assert {b.point.text() for b in bps} == {"-1", "0", rational_text(p.a), "inf"}


@given(pos_a, rationals(), rationals(), rationals(), rationals(), rationals(), rationals())
def test_q_shift_identity(a, q1, q2, q3, r1, r2, r3):
    p1 = FamilyParams(a, (q1, q2, q3))
    p2 = FamilyParams(a, (r1, r2, r3))
    assert q_shift_isomorphism(p1, p2, force=True).verified


def test_q_shift_needs_same_a():
    with pytest.raises(MismatchedA):
        q_shift_isomorphism(FamilyParams(1, (0, 0, 0)), FamilyParams(2, (0, 0, 0)), force=True)


@given(pos_a, rationals(500, 40))
def test_real_locus_partition(a, u):
    got = classify_u(a, u)
    if -1 <= u <= 0:
        assert got == T2_SPHERE
    elif u >= a:
        assert got == T4_SPHERE
    else:
        assert got == EMPTY


def test_classify_edge_cases():
    assert classify_u(6, "inf") == T4_SPHERE
    assert classify_u(6, math.inf) == T4_SPHERE
    with pytest.raises(NonRealInput):
        classify_u(6, 1j)


def test_real_locus_samples_lie_on_the_curve():
    samples = sample_real_locus(WITNESS, 12, seed=1)
    B = branch_curve(WITNESS)
    for s in samples:
        if s.u == "inf":
            continue
        assert s.w ** 2 == pytest.approx(float(s.u * (s.u + 1) * (s.u - 6)), rel=1e-12, abs=1e-12)
        scale = 1 + abs(s.zeta) ** 2
        assert abs(float(B.A) * s.zeta ** 2 + float(B.b(s.u)) * s.zeta + float(B.c(s.u))) <= 1e-9 * scale
    assert {s.component for s in samples} == {T2_SPHERE, T4_SPHERE}
    csv = locus_csv(samples)
    assert csv.splitlines()[0] == "u,w,zeta,component"
    assert locus_svg(samples).startswith("<svg")


def test_cone_curve_json_round_trip():
    B = branch_curve(WITNESS)
    assert ConeCurve.from_json(B.to_json()) == B
