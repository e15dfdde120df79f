import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import nonzero_rationals, rationals
from minitwistor.errors import Indeterminate, InvalidFamily, StarFails
from minitwistor.family import (
    WITNESS,
    FamilyParams,
    check_star,
    cone_real_structure,
    normalize_family,
    quotient_map_psi,
    random_star_family,
    require_star,
    screen_singular_points,
    singular_points,
    star_family_through,
    surface_gradient,
)
from minitwistor.projective import c_star_action


def test_witness_double_root():
    v = check_star(WITNESS)
    assert v.holds and v.lambda0 == 8 and v.interval == "(a,inf)"
    assert v.to_json() == {"star": True, "double_root": "8", "interval": "(a,inf)"}


def test_witness_R_factorization():
    # independent check: R(u) = Q^2 - P has (u - 8)^2 as a factor
    R = WITNESS.R_form.dehomogenize()
    assert R(8) == 0 and R.deriv()(8) == 0 and R.deriv().deriv()(8) != 0


def test_star_fails_for_zero_q():
    # Q = 0: R = -P has four simple roots
    p = FamilyParams(6, (0, 0, 0))
    assert not check_star(p).holds
    with pytest.raises(StarFails):
        require_star(p)


def test_invalid_a():
    with pytest.raises(InvalidFamily):
        FamilyParams(0, (1, 2, 3))
    with pytest.raises(InvalidFamily):
        FamilyParams(1, (1, 2))


def test_singular_points_certified():
    pts = singular_points(WITNESS)
    assert [p.name for p in pts] == ["P_inf", "P_inf_bar", "P_0"]
    assert all(p.certified for p in pts)
    assert pts[2].point.y[0] == 8
    assert all(0 <= p.hessian_rank <= 4 for p in pts)


def test_non_singular_point_has_gradient():
    # (8, 1, 4, -6) is a smooth point of the witness surface
    y = (Fraction(8), Fraction(1), Fraction(4), Fraction(-6))
    assert WITNESS.f_value(y) == 0
    assert any(g != 0 for g in surface_gradient(WITNESS, y))


def test_screen_uses_quadratic_field():
    rep = screen_singular_points(WITNESS, 200, seed=3)
    assert rep.samples == 200 and not rep.singular
    assert rep.quadratic_field > 0


def _negative_root_family(q20):
    # a = 1/2, lambda0 = -1/2: P(-1/2) = 1/4 = (1/2)^2
    return star_family_through(Fraction(1, 2), Fraction(-1, 2), Fraction(1, 2), q20)


def test_normalize_moves_root_past_a():
    params = _negative_root_family(Fraction(3))
    assert check_star(params).interval == "(-1,0)"
    new, rec = normalize_family(params)
    v = check_star(new)
    assert v.holds and v.interval == "(a,inf)"
    assert rec.mobius.det > 0
    # the y-transform carries f to f_new up to the factor 1/kappa
    T = rec.y_transform
    rng = random.Random(0)
    for _ in range(5):
        y = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)]
        ty = [sum(T[i][j] * y[j] for j in range(4)) for i in range(4)]
        assert new.f_value(ty) == params.f_value(y) / rec.kappa


def test_normalize_identity_on_witness():
    new, rec = normalize_family(WITNESS)
    assert new == WITNESS and rec.identity


def test_psi_is_c_star_invariant():
    y = (Fraction(8), Fraction(1), Fraction(4), Fraction(-6))
    base = quotient_map_psi(y)
    assert base.chart == (8, -24)
    for t in (Fraction(2), Fraction(-3, 7)):
        assert quotient_map_psi(c_star_action(t, y)).z == base.z
    with pytest.raises(Indeterminate):
        quotient_map_psi((0, 0, 1, 0))


def test_cone_real_structure_is_an_involution():
    q = (1 + 2j, 3 - 1j)
    assert cone_real_structure(cone_real_structure(q)) == q


@given(st.integers(0, 10_000))
def test_random_star_families_hold(seed):
    p = random_star_family(random.Random(seed))
    v = check_star(p)
    assert v.holds
    # the double root is a root of P's complement: P(lambda0) = Q(lambda0)^2
    assert p.P_poly(v.lambda0) == p.Q_poly(v.lambda0) ** 2


@given(rationals(), rationals(), rationals(), nonzero_rationals())
def test_c_star_orbit_stays_on_surface(y0, y1, y2, t):
    # y3 may live in Q(sqrt(P(y0, y1))); arithmetic there is exact
    from minitwistor.family import surface_point

    if y2 == 0:
        return
    pt = surface_point(WITNESS, y0, y1, y2)
    moved = (pt[0], pt[1], t * pt[2], pt[3] / t)
    assert WITNESS.f_value(moved) == 0
