"""Projective points, Mobius maps, cross-ratios and the real structure on CP^3."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import INF, rational_text, to_rational
from .errors import InputError, NotDistinct, SingularTransform


def _conj(x):
    return x.conjugate() if isinstance(x, complex) else x


@dataclass(frozen=True, eq=False)
class ProjPoint1:
    """A point (p0 : p1) of the projective line; ``inf`` is (1 : 0)."""

    p0: object
    p1: object

    def __post_init__(self):
        if self.p0 == 0 and self.p1 == 0:
            raise InputError("(0:0) is not a projective point")

    @classmethod
    def of(cls, x) -> "ProjPoint1":
        if isinstance(x, ProjPoint1):
            return x
        if isinstance(x, str) and x.strip().lower() in (INF, "oo", "infinity"):
            return cls(Fraction(1), Fraction(0))
        if isinstance(x, (float, complex)):
            return cls(x, 1.0)
        return cls(to_rational(x), Fraction(1))

    @property
    def is_inf(self) -> bool:
        return self.p1 == 0

    @property
    def value(self):
        """Affine value p0/p1, or None at infinity."""
        if self.is_inf:
            return None
        if isinstance(self.p0, (float, complex)) or isinstance(self.p1, (float, complex)):
            return self.p0 / self.p1
        return Fraction(self.p0) / Fraction(self.p1)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint1):
            other = ProjPoint1.of(other)
        return self.p0 * other.p1 == self.p1 * other.p0

    def __hash__(self):
        v = self.value
        return hash(("inf",) if v is None else (v,))

    def text(self) -> str:
        return INF if self.is_inf else rational_text(self.value)

    def __repr__(self):
        return f"ProjPoint1({self.text() if not isinstance(self.p0, (float, complex)) else self.value})"


def det2(p: ProjPoint1, q: ProjPoint1):
    return p.p0 * q.p1 - p.p1 * q.p0


def cross_ratio(p1, p2, p3, p4):
    """[p1,p2;p3,p4] = (p1-p3)(p2-p4) / ((p1-p4)(p2-p3)), homogeneously.

    Returns a Fraction (or float for float input), or ``INF`` in the
    degenerate case where only the denominator vanishes, which cannot
    happen for distinct points.
    """
    pts = [ProjPoint1.of(p) for p in (p1, p2, p3, p4)]
    for i in range(4):
        for j in range(i):
            if pts[i] == pts[j]:
                raise NotDistinct("cross-ratio needs four distinct points")
    a, b, c, d = pts
    num = det2(a, c) * det2(b, d)
    den = det2(a, d) * det2(b, c)
    if den == 0:
        return INF
    if isinstance(num, int) and isinstance(den, int):
        return Fraction(num, den)
    return num / den


@dataclass(frozen=True)
class Mobius:
    """u -> (a u + b) / (c u + d) acting on homogeneous pairs."""

    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        if self.det == 0:
            raise SingularTransform("Mobius matrix has zero determinant")

    @classmethod
    def identity(cls):
        one, zero = Fraction(1), Fraction(0)
        return cls(one, zero, zero, one)

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def orientation(self) -> int:
        """+1 for orientation-preserving real maps, -1 otherwise."""
        return 1 if self.det > 0 else -1

    @property
    def matrix(self):
        return [[self.a, self.b], [self.c, self.d]]

    def __call__(self, p):
        p = ProjPoint1.of(p)
        return ProjPoint1(self.a * p.p0 + self.b * p.p1, self.c * p.p0 + self.d * p.p1)

    def __matmul__(self, other: "Mobius") -> "Mobius":
        """Composition: (self @ other)(p) == self(other(p))."""
        return Mobius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Mobius":
        return Mobius(self.d, -self.b, -self.c, self.a)

    def normalized(self) -> "Mobius":
        """Scale so that the first nonzero entry is 1.

        Real rescaling multiplies the determinant by a square, so the
        orientation flag is unchanged.
        """
        x = next(v for v in (self.a, self.b, self.c, self.d) if v != 0)
        s = 1 / x if isinstance(x, (float, complex)) else 1 / Fraction(x)
        return Mobius(self.a * s, self.b * s, self.c * s, self.d * s)

    def equals_projectively(self, other: "Mobius") -> bool:
        m1 = [self.a, self.b, self.c, self.d]
        m2 = [other.a, other.b, other.c, other.d]
        return all(x * y2 == y * x2 for x, y in zip(m1, m2) for x2, y2 in zip(m1, m2))

    def to_json(self):
        return [[rational_text(self.a), rational_text(self.b)], [rational_text(self.c), rational_text(self.d)]]


def _to_standard(s1, s2, s3) -> Mobius:
    """The Mobius map sending s1, s2, s3 to 0, 1, inf."""
    k1 = det2(s2, s3)
    k2 = det2(s2, s1)
    # row r applied to x gives r0*x0 + r1*x1 = det(x, s) for r = (s.p1, -s.p0)
    return Mobius(k1 * s1.p1, -k1 * s1.p0, k2 * s3.p1, -k2 * s3.p0)


def mobius_from_three_points(src, dst) -> Mobius:
    src = [ProjPoint1.of(p) for p in src]
    dst = [ProjPoint1.of(p) for p in dst]
    for trip in (src, dst):
        if len(trip) != 3 or trip[0] == trip[1] or trip[0] == trip[2] or trip[1] == trip[2]:
            raise NotDistinct("need three distinct points")
    m = _to_standard(*dst).inverse() @ _to_standard(*src)
    return m.normalized()


def apply_projective(T, point):
    """Apply a Mobius map to a ProjPoint1 or a 4x4 matrix to a ProjPoint3."""
    if isinstance(T, Mobius):
        return T(point)
    from .algebra import determinant

    if determinant([list(r) for r in T]) == 0:
        raise SingularTransform("projective transform is singular")
    p = ProjPoint3.of(point)
    coords = tuple(sum(T[i][j] * p.y[j] for j in range(4)) for i in range(4))
    return ProjPoint3(coords)


@dataclass(frozen=True, eq=False)
class ProjPoint3:
    y: tuple

    def __post_init__(self):
        if len(self.y) != 4:
            raise InputError("CP^3 points have four coordinates")
        if all(c == 0 for c in self.y):
            raise InputError("(0:0:0:0) is not a projective point")

    @classmethod
    def of(cls, p) -> "ProjPoint3":
        if isinstance(p, ProjPoint3):
            return p
        coords = []
        for c in p:
            coords.append(c if isinstance(c, (Fraction, float, complex)) else to_rational(c))
        return cls(tuple(coords))

    def __eq__(self, other):
        other = ProjPoint3.of(other)
        a, b = self.y, other.y
        return all(a[i] * b[j] == a[j] * b[i] for i in range(4) for j in range(i + 1, 4))

    def __hash__(self):
        k = next(i for i, c in enumerate(self.y) if c != 0)
        return hash(tuple(c / self.y[k] for c in self.y))

    def normalized(self) -> "ProjPoint3":
        """Divide by the last nonzero coordinate (deterministic chart)."""
        k = max(i for i, c in enumerate(self.y) if c != 0)
        return ProjPoint3(tuple(c / self.y[k] for c in self.y))

    def to_json(self):
        return [rational_text(c) for c in self.y]

    def __repr__(self):
        return f"ProjPoint3({list(self.y)!r})"


def c_star_action(t, p) -> ProjPoint3:
    """(y0, y1, y2, y3) -> (y0, y1, t y2, y3 / t)."""
    if t == 0:
        raise InputError("t must be nonzero")
    y = ProjPoint3.of(p).y
    if not isinstance(t, (float, complex)):
        t = to_rational(t) if not isinstance(t, Fraction) else t
    return ProjPoint3((y[0], y[1], t * y[2], y[3] / t))


def sigma_CP3(p) -> ProjPoint3:
    """The real structure (y0, y1, y2, y3) -> (conj y0, conj y1, conj y3, conj y2)."""
    y = ProjPoint3.of(p).y
    return ProjPoint3((_conj(y[0]), _conj(y[1]), _conj(y[3]), _conj(y[2])))
