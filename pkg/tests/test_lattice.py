from hypothesis import given, strategies as st

from minitwistor.lattice import (
    ANTICANONICAL,
    Constraints,
    DivisorClass,
    enumerate_line_classes,
    exceptional,
    intersect,
    solve_line_classes,
)

classes = st.builds(DivisorClass, *[st.integers(-5, 5) for _ in range(6)])


def gram(d1, d2):
    """Intersection form from its Gram matrix: hyperbolic plane plus -I4."""
    G = [[0, 1, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0]] + [[0] * 6 for _ in range(4)]
    for i in range(4):
        G[2 + i][2 + i] = -1
    # the class stores +n_j for the coefficient of -E_j, so flip those signs
    v1 = [d1.a, d1.b] + [-x for x in d1.n]
    v2 = [d2.a, d2.b] + [-x for x in d2.n]
    return sum(v1[i] * G[i][j] * v2[j] for i in range(6) for j in range(6))


def test_anticanonical_square():
    assert intersect(ANTICANONICAL, ANTICANONICAL) == 4


def test_exceptional_curves():
    for j in range(4):
        E = exceptional(j)
        assert intersect(E, E) == -1
        assert intersect(ANTICANONICAL, E) == 1


def test_unique_solution():
    L1, L2 = solve_line_classes()
    assert L1 == L2 == ANTICANONICAL
    assert intersect(L1, L2) == 4


def test_relaxing_constraints_loses_uniqueness():
    assert len(enumerate_line_classes(Constraints(transversal=False))) > 1
    assert len(enumerate_line_classes(Constraints(sections=False))) > 1


@given(classes, classes, classes)
def test_pairing_bilinear_symmetric(x, y, z):
    assert intersect(x, y) == intersect(y, x) == gram(x, y)
    assert intersect(x + y, z) == intersect(x, z) + intersect(y, z)
    assert intersect(x.scaled(3), y) == 3 * intersect(x, y)
