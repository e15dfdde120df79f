from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import nonzero_rationals, rationals
from minitwistor.algebra import (
    BinaryForm,
    MPoly,
    Poly,
    count_real_roots,
    double_root_profile,
    isolate_real_roots,
    is_perfect_square,
    poly_gcd,
    rational_text,
    resultant_eliminate,
    to_rational,
    univariate_resultant,
    yun,
)
from minitwistor.errors import InputError, ZeroForm

polys = st.lists(rationals(), min_size=1, max_size=5).map(Poly)


def test_to_rational_accepts_text_and_rejects_floats():
    assert to_rational("53/12") == Fraction(53, 12)
    assert to_rational(-3) == -3
    with pytest.raises(InputError):
        to_rational(0.5)
    with pytest.raises(InputError):
        to_rational("1/0")
    with pytest.raises(InputError):
        to_rational(True)


def test_rational_text():
    assert rational_text(Fraction(-70, 3)) == "-70/3"
    assert rational_text(Fraction(8)) == "8"


@given(rationals(200, 50))
def test_rational_text_round_trip(q):
    assert to_rational(rational_text(q)) == q


@given(polys, polys, polys)
def test_poly_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p - p).is_zero()


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_divmod_identity(p, q):
    quo, rem = p.divmod(q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


def test_gcd_of_products():
    a = Poly.from_roots([1, 2])
    b = Poly.from_roots([2, 3])
    assert poly_gcd(a, b) == Poly.from_roots([2])


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6), nonzero_rationals())
def test_yun_reassembles(roots, lc):
    p = Poly.from_roots(roots) * lc
    c, facs = yun(p)
    acc = Poly.const(c)
    for f, e in facs:
        acc = acc * f ** e
    assert acc == p
    # exponents match the multiplicities of the chosen roots
    want = {r: roots.count(r) for r in set(roots)}
    got = {}
    for f, e in facs:
        for r in set(roots):
            if f(r) == 0:
                got[r] = e
    assert got == want


def test_profile_counts_root_at_infinity():
    # y1^2 * (y0 - y1) * (y0 + 2 y1): u = inf is a double root
    f = BinaryForm.of([0, 0, 1, 1, -2])
    dec = double_root_profile(f)
    assert dec.reassemble() == f
    by_exp = {e: g for g, e in dec.factors}
    assert by_exp[2].degree == 1 and by_exp[2](1, 0) == 0


def test_zero_form_is_rejected():
    with pytest.raises(ZeroForm):
        double_root_profile(BinaryForm.of([0, 0, 0]))


def test_perfect_square():
    g = BinaryForm.of([1, -3, 2])
    ok = is_perfect_square(g * g * Fraction(5))
    assert ok is not None
    h, c = ok
    assert h * h == (g * g) * (Fraction(5) * c)
    assert is_perfect_square(g * g * Fraction(-1)) is None
    assert is_perfect_square(BinaryForm.of([1, 0, -1])) is None


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=5, unique=True))
def test_isolation_finds_rational_roots(roots):
    f = BinaryForm.from_poly(Poly.from_roots(roots) * Poly((1, 0, 1)))  # times u^2 + 1
    found = isolate_real_roots(f)
    assert sorted(r.value.exact for r in found) == sorted(roots)
    assert count_real_roots(f.dehomogenize()) == len(roots)


def test_isolation_of_irrational_root():
    (r1, r2) = isolate_real_roots(BinaryForm.of([1, 0, -2]))
    assert r1.value.exact is None
    assert abs(float(r2.value) - 2 ** 0.5) < 1e-15
    assert r2.value.compare(Fraction(141, 100)) == 1 and r2.value.compare(Fraction(142, 100)) == -1


def test_resultants_agree():
    f = Poly.from_roots([1, 2])
    g = Poly.from_roots([3, -1])
    # Res(f, g) = prod (a_i - b_j) for monic f, g
    want = (1 - 3) * (1 + 1) * (2 - 3) * (2 + 1)
    assert univariate_resultant(f, g) == want
    x = MPoly.var(2, 0)
    y = MPoly.var(2, 1)
    F = x * x - y  # eliminate x: Res_x(x^2 - y, x - 1) = 1 - y
    G = x - MPoly.const(2, 1)
    R = resultant_eliminate(F, G, 0)
    assert R(0, 5) in (-4, 4)
