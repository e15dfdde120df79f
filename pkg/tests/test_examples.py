"""Worked examples with independently computed expected values."""

import random
from fractions import Fraction

import numpy as np
import pytest

from minitwistor.algebra import (
    BinaryForm,
    Poly,
    count_real_roots,
    double_root_profile,
    isolate_real_roots,
    is_perfect_square,
    poly_gcd,
)
from minitwistor.family import (
    WITNESS,
    FamilyParams,
    check_star,
    cone_real_structure,
    normalize_family,
    push_family,
    quotient_map_psi,
)
from minitwistor.moduli import CircleConfig, canonical_invariant
from minitwistor.projective import Mobius, c_star_action, mobius_from_three_points, sigma_CP3
from minitwistor.surface import branch_curve, elliptic_invariants, fibers_of_a, q_shift_isomorphism


def test_witness_R_root_profile():
    roots = isolate_real_roots(WITNESS.R_form)
    got = [(r.text(), r.multiplicity) for r in roots]
    assert got == [("8", 2), ("1225/144", 1), ("inf", 1)]
    # -144 R = (u - 8)^2 (144 u - 1225)
    want = Poly.from_roots([8, 8]) * Poly((-1225, 144))
    assert WITNESS.R_form.dehomogenize() * -144 == want


def test_witness_square_free_factors():
    dec = double_root_profile(WITNESS.R_form)
    by_exp = {e: f for f, e in dec.factors}
    assert set(by_exp) == {1, 2}
    assert by_exp[2].dehomogenize().monic() == Poly((-8, 1))
    # exponent-1 part: (144 u - 1225) together with the root at inf
    assert by_exp[1].degree == 2 and by_exp[1](1, 0) == 0
    assert by_exp[1](Fraction(1225, 144), 1) == 0


def test_perfect_square_examples():
    g = BinaryForm.of([1, 0, 0, 0, -1])  # s^4 - 1
    h, c = is_perfect_square(g * g)
    assert c == 1 and (h == g or h == -g)
    assert is_perfect_square(BinaryForm.of([1, 0, 0, 0, 0, 0, 0, 0, 1])) is None


def _sturm_double_roots(R: Poly):
    """Real double roots: distinct real roots of gcd(R, R'), counted by Sturm."""
    g = poly_gcd(R, R.deriv())
    return 0 if g.degree <= 0 else count_real_roots(g)


@pytest.mark.parametrize("a,q", [(1, (1, 1, 1)), (6, (0, Fraction(53, 12), Fraction(-70, 3))), (1, (0, 0, 0))])
def test_star_agrees_with_sturm_oracle(a, q):
    p = FamilyParams(a, q)
    R = p.R_form.dehomogenize()
    doubles = _sturm_double_roots(R)
    g = poly_gcd(R, R.deriv())
    triples = 0 if g.degree <= 0 else _sturm_double_roots(g)
    assert check_star(p).holds == (doubles == 1 and triples == 0)
    # also against floating roots
    r = np.roots([float(c) for c in reversed(R.c)])
    close = sum(1 for i in range(len(r)) for k in range(i) if abs(r[i] - r[k]) < 1e-5 and abs(r[i].imag) < 1e-5)
    assert (close == 1) == check_star(p).holds


def test_three_point_maps():
    T = mobius_from_three_points([0, 1, "inf"], [1, 0, "inf"])
    assert T.equals_projectively(Mobius(-1, 1, 0, 1))  # u -> 1 - u
    T = mobius_from_three_points([-1, 0, "inf"], [0, 1, "inf"])
    assert T.equals_projectively(Mobius(1, 1, 0, 1))  # u -> u + 1


def test_cross_ratio_of_branch_set():
    from minitwistor.projective import cross_ratio

    assert cross_ratio(-1, 0, 6, "inf") == Fraction(7, 6)


def test_group_actions_on_points():
    assert c_star_action(2, (1, 1, 1, 1)) == (1, 1, 2, Fraction(1, 2))
    assert sigma_CP3((0, 0, 0, 1)) == (0, 0, 1, 0)


def test_psi_intertwines_real_structures():
    rng = random.Random(11)
    for _ in range(100):
        y = tuple(complex(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(4))
        if y[1] == 0:
            continue
        lhs = quotient_map_psi(sigma_CP3(y)).chart
        rhs = cone_real_structure(quotient_map_psi(y).chart)
        assert abs(lhs[0] - rhs[0]) < 1e-12 and abs(lhs[1] - rhs[1]) < 1e-9


def test_branch_curve_is_real():
    B = branch_curve(WITNESS)
    u = 1 + 2j
    disc = complex(B.b(u)) ** 2 - 4 * complex(B.c(u))
    zeta = (-complex(B.b(u)) + disc ** 0.5) / 2
    cu, cz = cone_real_structure((u, zeta))
    assert abs(complex(B.A) * cz * cz + complex(B.b(cu)) * cz + complex(B.c(cu))) < 1e-9


def _arc_swapped_witness():
    # u -> -6/u keeps {-1, 0, 6, inf} and sends the double root 8 to -3/4
    M = Mobius(Fraction(0), Fraction(1), Fraction(-1, 6), Fraction(0))
    params, _ = push_family(WITNESS, M, Fraction(6))
    return params


def test_normalization_round_trip_preserves_j():
    swapped = _arc_swapped_witness()
    v = check_star(swapped)
    assert v.holds and v.interval == "(-1,0)" and v.lambda0 == Fraction(-3, 4)
    new, rec = normalize_family(swapped)
    after = check_star(new)
    assert after.interval == "(a,inf)" and after.lambda0 > new.a
    again, rec2 = normalize_family(new)
    assert again == new and rec2.identity
    j0 = elliptic_invariants(fibers_of_a(swapped.a)).j
    assert elliptic_invariants(fibers_of_a(new.a)).j == j0


def test_q_shift_by_y1_squared():
    other = FamilyParams(6, (0, Fraction(53, 12), Fraction(-70, 3) + 1))
    iso = q_shift_isomorphism(WITNESS, other, force=True)
    assert iso.d == (-1, 0, 0) and iso.verified


def test_moduli_orbits():
    inv6 = canonical_invariant(CircleConfig.of([-1, 0, 6, "inf"]))
    assert set(inv6.orbit) == {Fraction(7, 6), 7} and inv6.value == Fraction(7, 6)
    for pts in ([-1, 0, 2, "inf"], [-1, 0, Fraction(1, 2), "inf"]):
        assert canonical_invariant(CircleConfig.of(pts)).value == Fraction(3, 2)
