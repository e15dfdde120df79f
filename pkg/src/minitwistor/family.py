"""The quartic family B(a, Q), its double-root condition and the quotient map.

The family polynomial is

    f = (y2*y3 + Q(y0, y1))**2 - y0*y1*(y0 + y1)*(y0 - a*y1)

with a > 0 rational and Q a rational binary quadratic.  Throughout, ``P``
denotes the quartic ``y0*y1*(y0 + y1)*(y0 - a*y1)`` and ``R = Q**2 - P``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .algebra import (
    INF,
    AlgebraicReal,
    BinaryForm,
    MPoly,
    Poly,
    isolate_real_roots,
    rational_text,
    to_rational,
)
from .errors import (
    Indeterminate,
    InputError,
    InvalidFamily,
    NoAdmissibleTransform,
    StarFails,
)
from .projective import Mobius, ProjPoint1, ProjPoint3, mobius_from_three_points


@dataclass(frozen=True)
class FamilyParams:
    a: Fraction
    q: tuple  # (q20, q11, q02): coefficients of y0^2, y0*y1, y1^2

    def __post_init__(self):
        object.__setattr__(self, "a", to_rational(self.a))
        q = tuple(to_rational(c) for c in self.q)
        if len(q) != 3:
            raise InvalidFamily("Q needs exactly three coefficients")
        object.__setattr__(self, "q", q)
        if self.a <= 0:
            raise InvalidFamily("a must be positive")

    @classmethod
    def parse(cls, a, q) -> "FamilyParams":
        if isinstance(q, str):
            q = [c for c in q.split(",")]
        return cls(to_rational(a), tuple(q))

    def to_json(self) -> dict:
        return {"a": rational_text(self.a), "q": [rational_text(c) for c in self.q]}

    @classmethod
    def from_json(cls, obj) -> "FamilyParams":
        return cls(obj["a"], tuple(obj["q"]))

    # -- the polynomials attached to the family
    @property
    def Q_form(self) -> BinaryForm:
        return BinaryForm(2, self.q)

    @property
    def Q_poly(self) -> Poly:
        """Q(u, 1) in ascending order."""
        q20, q11, q02 = self.q
        return Poly((q02, q11, q20))

    @property
    def P_form(self) -> BinaryForm:
        a = self.a
        return BinaryForm(4, (Fraction(0), Fraction(1), 1 - a, -a, Fraction(0)))

    @property
    def P_poly(self) -> Poly:
        return self.P_form.dehomogenize()

    @property
    def R_form(self) -> BinaryForm:
        return self.Q_form * self.Q_form - self.P_form

    def quartic(self) -> MPoly:
        y = [MPoly.var(4, i) for i in range(4)]
        q20, q11, q02 = self.q
        W = y[2] * y[3] + y[0] * y[0] * q20 + y[0] * y[1] * q11 + y[1] * y[1] * q02
        P = y[0] * y[1] * (y[0] + y[1]) * (y[0] - y[1] * self.a)
        return W * W - P

    def Q_value(self, y0, y1):
        q20, q11, q02 = self.q
        return q20 * y0 * y0 + q11 * y0 * y1 + q02 * y1 * y1

    def P_value(self, y0, y1):
        return y0 * y1 * (y0 + y1) * (y0 - self.a * y1)

    def f_value(self, y):
        y0, y1, y2, y3 = y
        W = y2 * y3 + self.Q_value(y0, y1)
        return W * W - self.P_value(y0, y1)


# ---------------------------------------------------------------------------
# condition (*)

@dataclass(frozen=True)
class StarVerdict:
    holds: bool
    double_root: AlgebraicReal | None
    interval: str | None  # "(-1,0)" or "(a,inf)"
    profile: tuple  # RealRoot entries of R

    def to_json(self) -> dict:
        return {
            "star": self.holds,
            "double_root": self.double_root.text() if self.double_root is not None else None,
            "interval": self.interval,
        }

    @property
    def lambda0(self) -> Fraction:
        """The double root as a Fraction (it is always rational when star holds)."""
        if self.double_root is None:
            raise StarFails("condition (*) does not hold")
        return self.double_root.exact


def check_star(params: FamilyParams) -> StarVerdict:
    """Certify that R = Q^2 - P has exactly one real double root.

    When the certificate holds the root is rational: the exponent-2 part of
    the square-free decomposition of a quartic with a unique real double
    root must be a linear factor, since a quadratic exponent-2 factor would
    produce either two real double roots or a conjugate pair.
    """
    if params.a <= 0:
        raise InvalidFamily("a must be positive")
    roots = tuple(isolate_real_roots(params.R_form))
    doubles = [r for r in roots if r.multiplicity == 2]
    worse = [r for r in roots if r.multiplicity >= 3]
    if len(doubles) != 1 or worse:
        return StarVerdict(False, None, None, roots)
    r = doubles[0]
    if r.is_inf:
        # cannot happen: P has a simple root at infinity, so R does not
        # vanish to order two there; kept as a guard
        return StarVerdict(False, None, None, roots)
    lam = r.value
    if lam.compare(0) < 0 and lam.compare(-1) > 0:
        tag = "(-1,0)"
    elif lam.compare(params.a) > 0:
        tag = "(a,inf)"
    else:  # pragma: no cover - real roots of R live where P >= 0
        raise AssertionError("double root outside the admissible intervals")
    return StarVerdict(True, lam, tag, roots)


def require_star(params: FamilyParams) -> StarVerdict:
    v = check_star(params)
    if not v.holds:
        raise StarFails("condition (*) fails for this family")
    return v


# ---------------------------------------------------------------------------
# linear changes of (y0, y1) and normalization of the double root

def substitute_form(form: BinaryForm, n) -> BinaryForm:
    """F(n00*y0 + n01*y1, n10*y0 + n11*y1) as a binary form."""
    y0 = MPoly.var(2, 0)
    y1 = MPoly.var(2, 1)
    l0 = y0 * n[0][0] + y1 * n[0][1]
    l1 = y0 * n[1][0] + y1 * n[1][1]
    d = form.degree
    acc = MPoly(2)
    for i, c in enumerate(form.coeffs):
        if c != 0:
            acc = acc + (l0 ** (d - i)) * (l1 ** i) * c
    coeffs = tuple(acc.terms.get((d - i, i), Fraction(0)) for i in range(d + 1))
    return BinaryForm(d, coeffs)


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class NormalizationRecord:
    identity: bool
    mobius: Mobius  # acts on u = y0/y1; y' = M y on (y0, y1)
    kappa: Fraction  # P(M^-1 y') = kappa * P'(y')
    sqrt_kappa: Fraction
    y_transform: tuple  # 4x4 matrix sending old y to new y
    lambda0_before: Fraction
    lambda0_after: Fraction
    a_before: Fraction
    a_after: Fraction

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "mobius": self.mobius.to_json(),
            "kappa": rational_text(self.kappa),
            "y_transform": [[rational_text(x) for x in row] for row in self.y_transform],
            "double_root_before": rational_text(self.lambda0_before),
            "double_root_after": rational_text(self.lambda0_after),
            "a_before": rational_text(self.a_before),
            "a_after": rational_text(self.a_after),
        }


def push_family(params: FamilyParams, M: Mobius, a_new: Fraction):
    """Transport the family along y' = M y, if the result is in standard shape.

    Returns ``(params', record)`` or None when P does not pull back to a
    positive rational square times the standard quartic for ``a_new``.
    """
    det = Fraction(M.det)
    N = [[M.d / det, -M.b / det], [-M.c / det, M.a / det]]
    P_new = FamilyParams(a_new, (0, 0, 0)).P_form
    P_pulled = substitute_form(params.P_form, N)
    # find kappa with P_pulled == kappa * P_new
    kappa = None
    for x, y in zip(P_pulled.coeffs, P_new.coeffs):
        if y != 0:
            kappa = Fraction(x) / y
            break
    if kappa is None or kappa <= 0:
        return None
    if any(x != kappa * y for x, y in zip(P_pulled.coeffs, P_new.coeffs)):
        return None
    s = _rational_sqrt(kappa)
    if s is None:
        return None
    Qt = substitute_form(params.Q_form, N)
    new = FamilyParams(a_new, tuple(c / s for c in Qt.coeffs))
    zero, one = Fraction(0), Fraction(1)
    T = (
        (Fraction(M.a), Fraction(M.b), zero, zero),
        (Fraction(M.c), Fraction(M.d), zero, zero),
        (zero, zero, one / s, zero),
        (zero, zero, zero, one),
    )
    return new, (M, kappa, s, T)


def normalize_family(params: FamilyParams):
    """Move the double root into (a', inf) by a real projective change of (y0, y1)."""
    v = require_star(params)
    lam = v.lambda0
    if v.interval == "(a,inf)":
        one, zero = Fraction(1), Fraction(0)
        eye = tuple(tuple(one if i == j else zero for j in range(4)) for i in range(4))
        rec = NormalizationRecord(True, Mobius.identity(), one, one, eye, lam, lam, params.a, params.a)
        return params, rec
    roots = [ProjPoint1.of(0), ProjPoint1.of(-1), ProjPoint1.of(INF), ProjPoint1.of(params.a)]
    targets = [ProjPoint1.of(0), ProjPoint1.of(-1), ProjPoint1.of(INF)]
    candidates = []
    for idx, perm in enumerate(permutations(range(4), 3)):
        fourth = next(i for i in range(4) if i not in perm)
        M = mobius_from_three_points([roots[i] for i in perm], targets)
        img = M(roots[fourth])
        lam_img = M(ProjPoint1.of(lam))
        if img.is_inf or lam_img.is_inf:
            continue
        a_new = img.value
        if a_new <= 0 or lam_img.value <= a_new:
            continue
        pushed = push_family(params, M, a_new)
        if pushed is None:
            continue
        candidates.append((M.det <= 0, idx, M, a_new, lam_img.value, pushed))
    if not candidates:
        raise NoAdmissibleTransform("no admissible real projective transformation found")
    candidates.sort(key=lambda c: (c[0], c[1]))
    _, _, M, a_new, lam_new, (new, (M, kappa, s, T)) = candidates[0]
    after = check_star(new)
    if not after.holds or after.interval != "(a,inf)" or after.lambda0 != lam_new:
        raise NoAdmissibleTransform("transformed family failed its own certificate")
    rec = NormalizationRecord(False, M, kappa, s, T, lam, lam_new, params.a, a_new)
    return new, rec


# ---------------------------------------------------------------------------
# gradient, Hessian, singular points

def surface_gradient(params: FamilyParams, p):
    """The four partial derivatives of f at p (any numeric type, exact stays exact)."""
    y = p.y if isinstance(p, ProjPoint3) else tuple(p)
    y0, y1, y2, y3 = y
    q20, q11, q02 = params.q
    a = params.a
    W = y2 * y3 + params.Q_value(y0, y1)
    Q0 = 2 * q20 * y0 + q11 * y1
    Q1 = q11 * y0 + 2 * q02 * y1
    # P = y0^3 y1 + (1-a) y0^2 y1^2 - a y0 y1^3
    P0 = 3 * y0 * y0 * y1 + 2 * (1 - a) * y0 * y1 * y1 - a * y1 * y1 * y1
    P1 = y0 * y0 * y0 + 2 * (1 - a) * y0 * y0 * y1 - 3 * a * y0 * y1 * y1
    return (2 * W * Q0 - P0, 2 * W * Q1 - P1, 2 * W * y3, 2 * W * y2)


def surface_hessian(params: FamilyParams, p):
    f = params.quartic()
    y = ProjPoint3.of(p).y
    return [[f.diff(i).diff(j)(*y) for j in range(4)] for i in range(4)]


def matrix_rank(rows) -> int:
    """Exact rank by Gaussian elimination over the rationals."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                t = m[r][col] / m[rank][col]
                m[r] = [x - t * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class SingularPoint:
    name: str
    point: ProjPoint3
    gradient: tuple
    hessian_rank: int

    @property
    def certified(self) -> bool:
        return all(g == 0 for g in self.gradient)

    def to_json(self):
        return {
            "name": self.name,
            "point": self.point.to_json(),
            "gradient": [rational_text(g) for g in self.gradient],
            "hessian_rank": self.hessian_rank,
        }


def singular_points(params: FamilyParams):
    """P_inf, its conjugate and P_0 = (lambda0, 1, 0, 0), each certified exactly.

    The Hessian rank (of the 4x4 Hessian of f) is reported as information;
    no claim about the singularity type is made.
    """
    lam = require_star(params).lambda0
    one, zero = Fraction(1), Fraction(0)
    pts = [
        ("P_inf", ProjPoint3((zero, zero, zero, one))),
        ("P_inf_bar", ProjPoint3((zero, zero, one, zero))),
        ("P_0", ProjPoint3((lam, one, zero, zero))),
    ]
    out = []
    for name, pt in pts:
        g = surface_gradient(params, pt)
        out.append(SingularPoint(name, pt, tuple(g), matrix_rank(surface_hessian(params, pt))))
    return out


class QuadraticSurd:
    """x + y*sqrt(d) with rational x, y and a fixed non-square rational d."""

    __slots__ = ("x", "y", "d")

    def __init__(self, x, y, d):
        self.x, self.y, self.d = Fraction(x), Fraction(y), d

    def _lift(self, o):
        return o if isinstance(o, QuadraticSurd) else QuadraticSurd(o, 0, self.d)

    def __add__(self, o):
        o = self._lift(o)
        return QuadraticSurd(self.x + o.x, self.y + o.y, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.x, -self.y, self.d)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._lift(o)
        return QuadraticSurd(self.x * o.x + self.d * self.y * o.y, self.x * o.y + self.y * o.x, self.d)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        n = o.x * o.x - self.d * o.y * o.y
        return self * QuadraticSurd(o.x / n, -o.y / n, self.d)

    def __eq__(self, o):
        o = self._lift(o)
        return self.x == o.x and self.y == o.y

    def is_zero(self):
        return self.x == 0 and self.y == 0


def _random_rational(rng: random.Random, span=20, den=12) -> Fraction:
    return Fraction(rng.randint(-span * den, span * den), rng.randint(1, den))


@dataclass
class ScreenReport:
    samples: int
    exact_rational: int
    quadratic_field: int
    singular: list = field(default_factory=list)

    def to_json(self):
        return {
            "samples": self.samples,
            "rational_points": self.exact_rational,
            "quadratic_field_points": self.quadratic_field,
            "extra_singular_points": len(self.singular),
        }


def surface_point(params: FamilyParams, y0, y1, y2, sign=1):
    """A point of B over the given (y0, y1, y2), exact in Q or Q(sqrt(P))."""
    d = Fraction(params.P_value(y0, y1))
    s = _rational_sqrt(d)
    if s is not None:
        W = sign * s
    else:
        W = QuadraticSurd(0, sign, d)
    y3 = (W - params.Q_value(y0, y1)) / y2
    return (y0, y1, y2, y3)


def screen_singular_points(params: FamilyParams, n: int, seed: int = 0) -> ScreenReport:
    """Probabilistic search for singular points of B beyond the known three.

    Points are drawn by choosing random rational (y0, y1, y2) and solving
    the equation for y3.  When P(y0, y1) is not a rational square the point
    lives over the quadratic field Q(sqrt(P(y0, y1))), where arithmetic is
    still exact, so no sample is skipped.
    """
    rng = random.Random(seed)
    rep = ScreenReport(0, 0, 0)
    while rep.samples < n:
        y0 = _random_rational(rng)
        y1 = _random_rational(rng)
        y2 = _random_rational(rng)
        if y1 == 0 or y2 == 0:
            continue
        pt = surface_point(params, y0, y1, y2, rng.choice((1, -1)))
        val = params.f_value(pt)
        if not (val == 0):
            raise AssertionError("sampled point is not on the surface")
        grad = surface_gradient(params, pt)
        rep.samples += 1
        if isinstance(pt[3], QuadraticSurd):
            rep.quadratic_field += 1
        else:
            rep.exact_rational += 1
        if all(g == 0 for g in grad):
            rep.singular.append(pt)
    return rep


# ---------------------------------------------------------------------------
# the quotient map to the cone z0 z1 = z2^2

@dataclass(frozen=True)
class ConePoint:
    z: tuple
    chart: tuple | None  # (u, zeta) when z1 != 0

    @property
    def is_node(self) -> bool:
        return self.z[0] == 0 and self.z[1] == 0 and self.z[2] == 0

    def on_cone(self) -> bool:
        z0, z1, z2, _ = self.z
        return z0 * z1 == z2 * z2


NODE = ConePoint((0, 0, 0, 1), None)


def quotient_map_psi(p) -> ConePoint:
    y0, y1, y2, y3 = ProjPoint3.of(p).y
    if y0 == 0 and y1 == 0 and y2 * y3 == 0:
        raise Indeterminate("psi is undefined at P_inf and its conjugate")
    z = (y0 * y0, y1 * y1, y0 * y1, y2 * y3)
    if z[1] != 0:
        return ConePoint(z, (z[2] / z[1], z[3] / z[1]))
    return ConePoint(z, None)


def cone_real_structure(q):
    """(u, zeta) -> (conj u, conj zeta); also accepts ConePoint."""

    def cj(x):
        return x.conjugate() if isinstance(x, complex) else x

    if isinstance(q, ConePoint):
        z = tuple(cj(x) for x in q.z)
        chart = None if q.chart is None else (cj(q.chart[0]), cj(q.chart[1]))
        return ConePoint(z, chart)
    u, zeta = q
    return (cj(u), cj(zeta))


# ---------------------------------------------------------------------------
# random families satisfying (*)

KNOWN_POINTS = {Fraction(6): (Fraction(8), Fraction(12))}


def star_family_through(a, lam0, w0, q20) -> FamilyParams:
    """The family with prescribed a, double root lam0 and Q(lam0, 1) = w0.

    Requires P(lam0, 1) = w0**2; the remaining freedom is q20.
    """
    a, lam0, w0, q20 = map(Fraction, (a, lam0, w0, q20))
    base = FamilyParams(a, (0, 0, 0))
    if base.P_poly(lam0) != w0 * w0 or w0 == 0:
        raise InputError("(lam0, w0) is not a point of w^2 = P(u) with w != 0")
    dP = base.P_poly.deriv()(lam0)
    q11 = dP / (2 * w0) - 2 * q20 * lam0
    q02 = w0 - q20 * lam0 * lam0 - q11 * lam0
    return FamilyParams(a, (q20, q11, q02))


def random_star_family(rng: random.Random, a=None, max_tries=10_000) -> FamilyParams:
    """Rejection-sample a rational family satisfying (*).

    Without ``a`` the double root and the value w0 = Q(lam0, 1) are drawn
    first and ``a`` is solved from P(lam0) = w0**2.  With a fixed ``a`` a
    known rational point of w^2 = P(u) is needed; only a handful of values
    are tabulated in ``KNOWN_POINTS``.
    """
    for _ in range(max_tries):
        q20 = Fraction(rng.randint(-40, 40), rng.randint(1, 8))
        if a is None:
            lam0 = Fraction(rng.randint(-60, 60), rng.randint(1, 6))
            if lam0 in (0, -1):
                continue
            w0 = Fraction(rng.randint(1, 40), rng.randint(1, 6)) * rng.choice((1, -1))
            aa = lam0 - w0 * w0 / (lam0 * (lam0 + 1))
            if aa <= 0:
                continue
        else:
            aa = Fraction(a)
            if aa not in KNOWN_POINTS:
                raise InputError(f"no tabulated rational point for a = {rational_text(aa)}")
            lam0, w0 = KNOWN_POINTS[aa]
            w0 = w0 * rng.choice((1, -1))
        params = star_family_through(aa, lam0, w0, q20)
        if check_star(params).holds:
            return params
    raise RuntimeError("rejection sampling exhausted its budget")


WITNESS = FamilyParams(Fraction(6), (Fraction(0), Fraction(53, 12), Fraction(-70, 3)))
