"""The cone, its branch curve, elliptic invariants and the real locus.

Curves on the cone are kept in the chart (u, zeta) = (z2/z1, z3/z1) as
``A*zeta**2 + b(u)*zeta + c(u)`` with ``deg b <= 2`` and ``deg c <= 4``;
homogenizing b and c to degrees 2 and 4 accounts for the fiber over
``u = inf``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .algebra import INF, BinaryForm, Poly, isolate_real_roots, rational_text, to_rational
from .errors import NonRealInput, NotDistinct, NotDoubleCover, MismatchedA
from .family import FamilyParams, require_star
from .projective import ProjPoint1, cross_ratio


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def _num_text(x):
    if _is_exact(x):
        return rational_text(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    return float(x)


@dataclass(frozen=True)
class ConeCurve:
    A: object
    b: Poly
    c: Poly

    def __post_init__(self):
        if self.A == 0 and self.b.is_zero() and self.c.is_zero():
            raise NotDoubleCover("the zero polynomial is not a curve")
        if self.b.degree > 2 or self.c.degree > 4:
            raise NotDoubleCover("coefficients exceed the anticanonical degrees")

    @property
    def anticanonical(self) -> bool:
        return self.A != 0

    @property
    def misses_node(self) -> bool:
        return self.A != 0

    @property
    def exact(self) -> bool:
        return all(_is_exact(x) for x in (self.A, *self.b.c, *self.c.c))

    def __call__(self, u, zeta):
        return self.A * zeta * zeta + self.b(u) * zeta + self.c(u)

    def normalized(self) -> "ConeCurve":
        """Scale to A = 1."""
        if self.A == 0:
            raise NotDoubleCover("A = 0")
        A = self.A
        inv = (Fraction(1) / A) if _is_exact(A) else 1 / A
        return ConeCurve(A * inv, self.b * inv, self.c * inv)

    def discriminant(self) -> BinaryForm:
        """b^2 - 4 A c as a degree-4 binary form in (u, 1)."""
        d = self.b * self.b - self.c * (4 * self.A)
        return BinaryForm.from_poly(d, 4)

    def shift(self, d: Poly) -> "ConeCurve":
        """The curve after substituting zeta -> zeta + d(u)."""
        return ConeCurve(self.A, self.b + d * (2 * self.A), self.c + self.b * d + d * d * self.A)

    def to_json(self) -> dict:
        return {
            "A": _num_text(self.A),
            "b": [_num_text(x) for x in _pad(self.b, 3)],
            "c": [_num_text(x) for x in _pad(self.c, 5)],
        }

    @classmethod
    def from_json(cls, obj) -> "ConeCurve":
        return cls(to_rational(obj["A"]), Poly(to_rational(x) for x in obj["b"]),
                   Poly(to_rational(x) for x in obj["c"]))


def _pad(p: Poly, n):
    return [p.coeff(i) for i in range(n)]


def branch_curve(params: FamilyParams, force: bool = False) -> ConeCurve:
    """zeta^2 + 2 Q(u,1) zeta + Q(u,1)^2 - u(u+1)(u-a).

    ``force`` skips the condition (*) check, for the Q = 0 style examples.
    """
    if not force:
        require_star(params)
    Q = params.Q_poly
    return ConeCurve(Fraction(1), Q * 2, Q * Q - params.P_poly)


@dataclass(frozen=True)
class BranchPoint:
    point: ProjPoint1
    multiplicity: int

    @property
    def simple(self) -> bool:
        return self.multiplicity == 1


def branch_points_over_line(curve: ConeCurve):
    """Real roots of the zeta-discriminant, as a quartic form with inf included."""
    if curve.A == 0:
        raise NotDoubleCover("A = 0: the curve is not a double cover of the u-line")
    disc = curve.discriminant()
    out = []
    for r in isolate_real_roots(disc):
        pt = ProjPoint1.of(INF) if r.is_inf else ProjPoint1.of(r.value.exact) if r.value.exact is not None else r.value
        out.append(BranchPoint(pt, r.multiplicity))
    return out


# ---------------------------------------------------------------------------
# elliptic invariants

def j_from_lambda(lam):
    lam = Fraction(lam)
    return 256 * (lam * lam - lam + 1) ** 3 / (lam * lam * (lam - 1) ** 2)


def j_closed_form(a):
    """j of the double cover branched at {-1, 0, a, inf} as a function of a."""
    a = Fraction(a)
    return 256 * (a * a + a + 1) ** 3 / ((a + 1) ** 2 * a * a)


def sort_points(points):
    """Ascending on the real line with inf last."""
    pts = [ProjPoint1.of(p) for p in points]
    return sorted(pts, key=lambda p: (1, 0) if p.is_inf else (0, p.value))


@dataclass(frozen=True)
class EllipticInvariants:
    branch_set: tuple
    lam: Fraction
    j: Fraction

    def to_json(self):
        return {
            "branch_set": [p.text() for p in self.branch_set],
            "lambda": rational_text(self.lam),
            "j": rational_text(self.j),
        }


def elliptic_invariants(points) -> EllipticInvariants:
    """Legendre lambda and j for four distinct points of the real projective line.

    Labeling: sort ascending with inf last as p1..p4 and send p1, p2, p4 to
    0, 1, inf; lambda is the image of p3.  For {-1, 0, a, inf} this gives
    lambda = a + 1.  j is checked against all 24 labelings.
    """
    pts = sort_points(points)
    if len(pts) != 4:
        raise NotDistinct("need four points")
    for i in range(4):
        for k in range(i):
            if pts[i] == pts[k]:
                raise NotDistinct("branch points must be distinct")
    p1, p2, p3, p4 = pts
    lam = cross_ratio(p3, p2, p1, p4)
    j = j_from_lambda(lam)
    for perm in permutations(pts):
        q1, q2, q3, q4 = perm
        if j_from_lambda(cross_ratio(q3, q2, q1, q4)) != j:
            raise AssertionError("j depends on the labeling")
    return EllipticInvariants(tuple(pts), lam, j)


def reducible_fibers(params: FamilyParams):
    """The four u-values over which the fiber of the double cover degenerates."""
    require_star(params)
    return fibers_of_a(params.a)


def fibers_of_a(a):
    curve = branch_curve(FamilyParams(a, (0, 0, 0)), force=True)
    pts = [bp.point for bp in branch_points_over_line(curve)]
    return sort_points(pts)


# ---------------------------------------------------------------------------
# Q-shift

@dataclass(frozen=True)
class QShift:
    d: tuple  # (d0, d1, d2)
    verified: bool

    def to_json(self):
        return {"d": [rational_text(x) for x in self.d], "verified": self.verified}


def q_shift_isomorphism(p1: FamilyParams, p2: FamilyParams, force: bool = False) -> QShift:
    """d(u) = Q1(u,1) - Q2(u,1); (u, zeta) -> (u, zeta + d) maps curve 1 to curve 2.

    The identity itself is pure algebra and holds for any two quadratics;
    ``force`` drops the requirement that both families satisfy (*).
    """
    if p1.a != p2.a:
        raise MismatchedA("both families must share a")
    c1 = branch_curve(p1, force=force)
    c2 = branch_curve(p2, force=force)
    d = p1.Q_poly - p2.Q_poly
    # a point (u, zeta) of curve 1 goes to (u, zeta + d): curve2(u, zeta + d) == curve1(u, zeta)
    pulled = c2.shift(d)
    ok = pulled.A == c1.A and pulled.b == c1.b and pulled.c == c1.c
    return QShift(tuple(d.coeff(i) for i in range(3)), ok)


# ---------------------------------------------------------------------------
# real locus

T2_SPHERE = "T2_SPHERE"
T4_SPHERE = "T4_SPHERE"
EMPTY = "EMPTY"


def real_locus_classify(params: FamilyParams, u) -> str:
    require_star(params)
    return classify_u(params.a, u)


def classify_u(a, u) -> str:
    """Exact sign test of u(u+1)(u-a); the sphere over [-1,0] or over [a,inf]."""
    if isinstance(u, complex):
        if u.imag != 0:
            raise NonRealInput("u must be real")
        u = u.real
    if isinstance(u, float):
        if math.isinf(u):
            return T4_SPHERE
        if math.isnan(u):
            raise NonRealInput("u is NaN")
        u = Fraction(u)
    p = ProjPoint1.of(u)
    if p.is_inf:
        return T4_SPHERE
    x = p.value
    if x * (x + 1) * (x - a) < 0:
        return EMPTY
    return T2_SPHERE if x <= 0 else T4_SPHERE


@dataclass(frozen=True)
class LocusSample:
    u: object  # Fraction or INF
    w: float  # the fiber coordinate of the Q = 0 normal form: w^2 = u(u+1)(u-a)
    zeta: float  # the point on the branch curve itself: zeta = w - Q(u, 1)
    component: str


def sample_real_locus(params: FamilyParams, n: int, seed: int = 0):
    """n fibers per component of the real locus, both signs of the square root.

    The endpoints -1, 0, a and inf are always among the fibers; interior
    fibers are random rationals.  The radicand u(u+1)(u-a) is checked to be
    nonnegative exactly before the square root is taken in floating point.
    At u = inf the chart degenerates and the row records w = 0 with
    zeta = inf.
    """
    require_star(params)
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    a = params.a
    out = []

    def interior_t2():
        return Fraction(-rng.randint(1, 999), 1000)

    def interior_t4():
        return a + Fraction(rng.randint(1, 4000), rng.randint(1, 400))

    for comp, ends, draw in ((T2_SPHERE, [Fraction(-1), Fraction(0)], interior_t2),
                             (T4_SPHERE, [a, INF], interior_t4)):
        us = list(ends[:n])
        while len(us) < n:
            x = draw()
            if x not in us:
                us.append(x)
        finite = sorted(x for x in us if x != INF)
        ordered = finite + ([INF] if INF in us else [])
        for x in ordered:
            if x == INF:
                out.append(LocusSample(INF, 0.0, math.inf, comp))
                continue
            rad = x * (x + 1) * (x - a)
            if rad < 0:
                raise AssertionError("negative radicand on the real locus")
            w = math.sqrt(rad)
            q = float(params.Q_poly(x))
            for s in ((1,) if rad == 0 else (1, -1)):
                out.append(LocusSample(x, s * w, s * w - q, comp))
    return out


def locus_csv(samples) -> str:
    lines = ["u,w,zeta,component"]
    for s in samples:
        u = INF if s.u == INF else rational_text(s.u)
        z = "inf" if math.isinf(s.zeta) else repr(s.zeta)
        lines.append(f"{u},{s.w!r},{z},{s.component}")
    return "\n".join(lines) + "\n"


def locus_svg(samples, width=640, height=360) -> str:
    """Polylines of w = +-sqrt(u(u+1)(u-a)) over the two components.

    The [a, inf] component is drawn against t = (u - a)/(u - a + 1) so that
    it fits in a bounded box; the [-1, 0] component is drawn against u + 1.
    """
    groups = {}
    for s in samples:
        if s.u == INF:
            x = 1.0
        elif s.component == T2_SPHERE:
            x = float(s.u) + 1.0
        else:
            t = float(s.u) - float(min(x.u for x in samples if x.component == T4_SPHERE and x.u != INF))
            x = t / (t + 1.0)
        groups.setdefault((s.component, s.w >= 0), []).append((x, s.w))
        if s.w == 0:
            groups.setdefault((s.component, False), []).append((x, 0.0))
    wmax = max((abs(w) for pts in groups.values() for _, w in pts), default=1.0) or 1.0
    panel = {T2_SPHERE: 0, T4_SPHERE: 1}
    pw = (width - 60) / 2
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
             f'viewBox="0 0 {width} {height}">']
    for comp, label in ((T2_SPHERE, "u in [-1,0]"), (T4_SPHERE, "u in [a,inf]")):
        x0 = 20 + panel[comp] * (pw + 20)
        parts.append(f'<rect x="{x0:.2f}" y="20" width="{pw:.2f}" height="{height - 40}" '
                     'fill="none" stroke="#999"/>')
        parts.append(f'<text x="{x0 + 4:.2f}" y="34" font-size="12">{label}</text>')
    for (comp, upper), pts in sorted(groups.items()):
        x0 = 20 + panel[comp] * (pw + 20)
        coords = " ".join(
            f"{x0 + x * pw:.3f},{height / 2 - w / wmax * (height / 2 - 30):.3f}" for x, w in sorted(pts)
        )
        parts.append(f'<polyline points="{coords}" fill="none" stroke="#1f4e9c"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
