import json
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from conftest import nonzero_rationals, rationals
from minitwistor import conics as C
from minitwistor.errors import (
    ConicInsideSurface,
    DegeneratePlane,
    InvalidConic,
    NoConvergence,
    NotTouching,
    OrbitTangentPlane,
    SymmetricConic,
)
from minitwistor.algebra import Poly
from minitwistor.family import WITNESS, quotient_map_psi
from minitwistor.surface import ConeCurve, branch_curve

PLANE = (Fraction(3), Fraction(-5), Fraction(2), Fraction(-2))


@pytest.fixture(scope="module")
def touching():
    return C.find_touching_conic(WITNESS, PLANE, seed=0)


def generic_conic(seed):
    """An exact random conic whose image on the cone is defined and not symmetric."""
    rng = random.Random(seed)
    while True:
        c = C.random_rational_conic(rng)
        if c.plane[2] == 0 or c.plane[3] == 0 or C.symmetry_defect(c) == 0:
            continue
        try:
            C.conic_image_on_cone(c)
        except Exception:
            continue
        return c


# ---------------------------------------------------------------- construction

def test_conic_from_param_is_consistent():
    c = generic_conic(1)
    assert c.exact and c.irreducible
    C.validate_conic(c)
    for s in (Fraction(0), Fraction(2, 3), Fraction(-5)):
        y = c.point(s)
        assert sum(p * y[i] for i, p in enumerate(c.plane)) == 0


def test_collinear_param_rejected():
    Y = (Poly((1, 1)), Poly((2, 2)), Poly((3, 3)), Poly((4, 4)))
    with pytest.raises(InvalidConic):
        C.conic_from_param(Y)


@given(st.integers(0, 10_000))
def test_json_round_trip_exact(seed):
    c = C.random_rational_conic(random.Random(seed))
    back = C.PlaneConic.from_json(json.loads(json.dumps(c.to_json())))
    assert back == c


def test_json_rejects_inconsistent_param():
    obj = generic_conic(2).to_json()
    obj["plane"][0] = "12345"
    with pytest.raises(InvalidConic):
        C.PlaneConic.from_json(obj)


# ---------------------------------------------------------------- touching

def test_random_conic_meets_transversally():
    ok, rep = C.is_touching(WITNESS, generic_conic(1))
    assert not ok
    assert rep.multiplicities == [1] * 8 and rep.total == 8


def test_orbit_conic_lies_in_surface():
    conic = C.orbit_conic(WITNESS, (8, 1, 4, -6))
    with pytest.raises(ConicInsideSurface):
        C.is_touching(WITNESS, conic)


@pytest.mark.parametrize("t", [1, 2, Fraction(-3, 2)])
def test_quadric_sections_touch_and_are_symmetric(t):
    conic = C.quadric_touching_conic(WITNESS, t, random.Random(7))
    ok, rep = C.is_touching(WITNESS, conic)
    assert ok and all(m % 2 == 0 for m in rep.multiplicities)
    assert C.is_symmetric(conic)
    with pytest.raises(SymmetricConic):
        C.conic_image_on_cone(conic)


def test_found_conic_touches(touching):
    ok, rep = C.is_touching(WITNESS, touching)
    assert ok and rep.defect < C.DEFAULT_TOL
    assert rep.multiplicities == [2, 2, 2, 2]
    assert C.line_distance(touching) >= C.LINE_MARGIN
    assert not C.is_symmetric(touching)


def test_perturbed_conic_does_not_touch(touching):
    rng = np.random.default_rng(5)
    Y = []
    for p in touching.param:
        cs = np.array([complex(p.coeff(i)) for i in range(3)])
        Y.append(Poly(cs + 1e-3 * (rng.normal(size=3) + 1j * rng.normal(size=3))))
    moved = C.conic_from_param(Y)
    ok, rep = C.is_touching(WITNESS, moved)
    assert not ok and rep.defect > 1e-8
    with pytest.raises(NotTouching):
        C.lift_minitwistor_line(WITNESS, moved)


def test_float_json_round_trip_keeps_touching(touching):
    back = C.PlaneConic.from_json(json.loads(json.dumps(touching.to_json())))
    assert C.is_touching(WITNESS, back)[0]


# ---------------------------------------------------------------- reflection

planes = st.tuples(rationals(), rationals(), nonzero_rationals(), nonzero_rationals())


@given(planes)
def test_reflection_is_an_involution(plane):
    J = C.reflection_involution(plane)
    y = (Fraction(1), Fraction(-2), Fraction(3), Fraction(5, 7))
    assert J(J(y)) == y


@given(planes, st.tuples(rationals(), rationals(), rationals(), rationals()))
def test_psi_is_reflection_invariant(plane, y):
    assume(any(y))
    assume(not (y[0] == 0 and y[1] == 0))
    J = C.reflection_involution(plane)
    assert quotient_map_psi(J(y)).z == quotient_map_psi(y).z


def test_reflection_needs_gamma_delta():
    with pytest.raises(OrbitTangentPlane):
        C.reflection_involution((1, 2, 0, 3))


@given(st.integers(0, 5000))
def test_symmetrized_conic_is_symmetric(seed):
    c = C.random_rational_conic(random.Random(seed))
    assume(c.plane[2] != 0 and c.plane[3] != 0)
    s = C.symmetrize(c)
    assume(any(x != 0 for r in s.matrix for x in r))
    assert C.symmetry_defect(s) == 0
    with pytest.raises(SymmetricConic):
        C.conic_image_on_cone(s)


# ---------------------------------------------------------------- images and nodes

@pytest.mark.parametrize("seed", range(4))
def test_image_contains_the_curve(seed):
    c = generic_conic(seed)
    G = C.conic_image_on_cone(c)
    assert G.exact and G.A == 1
    for s in (Fraction(1, 3), Fraction(-2), Fraction(7, 5)):
        y0, y1, y2, y3 = c.point(s)
        assert G(y0 / y1, y2 * y3 / (y1 * y1)) == 0


@pytest.mark.parametrize("seed", range(3))
def test_image_matches_resultant(seed):
    c = generic_conic(seed)
    assert C.conic_image_on_cone(c) == C.image_by_resultant(c)


@pytest.mark.parametrize("seed", range(5))
def test_single_node_matches_reflection(seed):
    c = generic_conic(seed)
    nodes = C.detect_nodes(C.conic_image_on_cone(c))
    assert len(nodes) == 1 and nodes[0].kind == C.NODE and nodes[0].multiplicity == 2
    pair = C.node_from_reflection(c)
    assert abs(complex(nodes[0].u) - pair.u) < 1e-8
    assert abs(complex(nodes[0].zeta) - pair.zeta) < 1e-8


def test_branch_curve_is_smooth():
    assert C.detect_nodes(branch_curve(WITNESS)) == []


def test_synthetic_node_and_worse_point():
    # zeta^2 - u^2 (u^2 + 1) has a node at u = 0; zeta^2 - u^3 (u - 1) a cusp
    node = C.detect_nodes(ConeCurve(Fraction(1), Poly(), Poly((0, 0, -1, 0, -1))))
    assert [(n.u, n.zeta, n.kind) for n in node] == [(0, 0, C.NODE)]
    cusp = C.detect_nodes(ConeCurve(Fraction(1), Poly(), Poly((0, 0, 0, 1, -1))))
    assert [(n.u, n.kind, n.multiplicity) for n in cusp] == [(0, C.WORSE, 3)]


def test_low_degree_curve_is_nodal_at_infinity():
    # c of degree 2 makes D vanish doubly at u = inf
    sing = C.detect_nodes(ConeCurve(Fraction(1), Poly(), Poly((-1, 0, 1))))
    assert [(n.u, n.kind) for n in sing] == [("inf", C.NODE)]


def test_float_node_detection():
    # (u^2 - 1)(u^2 - 4) has simple roots; u^2 (u^2 - 4) a double one at 0
    smooth = ConeCurve(1.0 + 0j, Poly([0j]), Poly([-4.0 + 1e-9, 0, 5.0, 0, -1.0]))
    assert C.detect_nodes(smooth) == []
    nodal = ConeCurve(1.0 + 0j, Poly([0j]), Poly([1e-13, 0, 4.0, 0, -1.0]))
    sing = C.detect_nodes(nodal)
    assert [n.kind for n in sing] == [C.NODE]
    assert abs(complex(sing[0].u)) < 1e-5


def test_shifted_branch_curve_meets_transversally():
    B = branch_curve(WITNESS)
    rep = C.contact_with_branch(B.shift(Poly((1,))), WITNESS)
    assert not rep.touching and rep.total == 8


def test_touching_image_has_double_contacts(touching):
    G = C.conic_image_on_cone(touching)
    assert C.contact_with_branch(G, WITNESS).multiplicities == [2, 2, 2, 2]
    assert len([n for n in C.detect_nodes(G) if n.kind == C.NODE]) == 1


# ---------------------------------------------------------------- lifting

def test_branch_value_classification():
    assert C.classify_branch_values(2 + 1j, 2 + 1j) == C.SPLITS_NODAL
    assert C.classify_branch_values(2 + 1j, -2 - 1j) == C.SPLITS_SMOOTH
    assert C.classify_branch_values(1, 3j) == C.IRREDUCIBLE


def test_lift_of_found_conic(touching):
    lift = C.lift_minitwistor_line(WITNESS, touching)
    assert lift.verdict == C.SPLITS_NODAL
    assert abs(lift.w1 - lift.w2) <= 1e-6 * abs(lift.w1)
    assert lift.to_json()["verdict"] == C.SPLITS_NODAL


def test_lift_rejects_non_touching():
    with pytest.raises(NotTouching):
        C.lift_minitwistor_line(WITNESS, generic_conic(3))


# ---------------------------------------------------------------- search

@pytest.mark.parametrize("plane", [(1, -3, 0, 0), (1, 2, 0, 1), (1, -8, 1, 1)])
def test_degenerate_planes(plane):
    # y0 = 3 y1 is C*-invariant, delta = 0 passes through P_inf, and
    # the last plane contains (8, 1, 0, 0)
    with pytest.raises(DegeneratePlane):
        C.find_touching_conic(WITNESS, plane)


def test_no_convergence_reports_seeds():
    with pytest.raises(NoConvergence) as info:
        C.find_touching_conic(WITNESS, PLANE, seed=4, retries=0)
    assert info.value.seeds_tried == []


def test_search_is_reproducible(touching):
    again = C.find_touching_conic(WITNESS, PLANE, seed=0)
    assert again.to_json() == touching.to_json()


def test_twenty_conics_over_five_planes():
    rng = random.Random(2024)
    planes = [C.random_plane(rng) for _ in range(5)]
    found = 0
    for k, plane in enumerate(planes):
        for seed in range(4):
            try:
                conic = C.find_touching_conic(WITNESS, plane, seed=100 * k + seed)
            except (NoConvergence, DegeneratePlane):
                continue
            ok, rep = C.is_touching(WITNESS, conic)
            assert ok and rep.defect < 1e-10
            G = C.conic_image_on_cone(conic)
            assert G.b.degree <= 2 and G.c.degree <= 4
            assert [n.kind for n in C.detect_nodes(G)] == [C.NODE]
            contact = C.contact_with_branch(G, WITNESS)
            assert contact.total == 8 and contact.touching
            found += 1
    assert found >= 20


def test_random_plane_avoids_orbit_planes():
    rng = random.Random(0)
    for _ in range(50):
        p = C.random_plane(rng)
        assert p[2] != 0 and p[3] != 0
