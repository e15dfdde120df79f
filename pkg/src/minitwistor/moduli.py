"""Four points on the real projective line up to orientation-preserving Mobius maps.

Orientation-preserving real Mobius maps keep the cyclic order of points on
the circle, so only the four cyclic rotations of a sorted configuration are
admissible relabelings.  For a configuration sorted around the circle every
rotation has cross-ratio in (1, inf), and the two values that occur are
lambda and lambda/(lambda - 1); their minimum lies in (1, 2].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import rational_text
from .errors import NonRealPoint, NotDistinct
from .family import FamilyParams, require_star
from .projective import ProjPoint1, cross_ratio, mobius_from_three_points
from .surface import sort_points


@dataclass(frozen=True)
class CircleConfig:
    points: tuple  # sorted ascending, inf last: this is a cyclic order on RP^1

    @classmethod
    def of(cls, points) -> "CircleConfig":
        pts = []
        for p in points:
            if isinstance(p, complex) and p.imag != 0:
                raise NonRealPoint("configuration points must be real")
            pp = ProjPoint1.of(p)
            if isinstance(pp.p0, complex) or isinstance(pp.p1, complex):
                raise NonRealPoint("configuration points must be real")
            pts.append(pp)
        if len(pts) != 4:
            raise NotDistinct("a configuration has exactly four points")
        for i in range(4):
            for k in range(i):
                if pts[i] == pts[k]:
                    raise NotDistinct("configuration points must be distinct")
        return cls(tuple(sort_points(pts)))

    @classmethod
    def parse(cls, text: str) -> "CircleConfig":
        return cls.of([t.strip() for t in text.split(",")])

    def rotation(self, k: int):
        return self.points[k:] + self.points[:k]

    def text(self):
        return [p.text() for p in self.points]


@dataclass(frozen=True)
class ModulusInvariant:
    value: Fraction
    orbit: tuple  # cross-ratios of the four rotations

    def to_json(self):
        return {"invariant": rational_text(self.value)}


def canonical_invariant(config: CircleConfig) -> ModulusInvariant:
    orbit = tuple(cross_ratio(*config.rotation(k)) for k in range(4))
    for v in orbit:
        if not v > 1:  # pragma: no cover - guaranteed by the cyclic sort
            raise AssertionError("rotation cross-ratio outside (1, inf)")
    return ModulusInvariant(min(orbit), orbit)


def _rotation_with_value(config: CircleConfig, value):
    for k in range(4):
        if cross_ratio(*config.rotation(k)) == value:
            return config.rotation(k)
    raise AssertionError("invariant value not attained by any rotation")


def are_equivalent(c1: CircleConfig, c2: CircleConfig):
    """Decide equivalence; on success also return a positive-determinant witness."""
    i1 = canonical_invariant(c1)
    i2 = canonical_invariant(c2)
    if i1.value != i2.value:
        return False, None
    r1 = _rotation_with_value(c1, i1.value)
    r2 = _rotation_with_value(c2, i2.value)
    T = mobius_from_three_points(r1[:3], r2[:3])
    if not T(r1[3]) == r2[3]:
        raise AssertionError("witness fails on the fourth point")
    if T.det <= 0:
        raise AssertionError("witness reverses orientation")
    return True, T


def configuration_of_a(a) -> CircleConfig:
    return CircleConfig.of([-1, 0, Fraction(a), "inf"])


def modulus_of_a(a) -> ModulusInvariant:
    return canonical_invariant(configuration_of_a(a))


def family_modulus(params: FamilyParams) -> ModulusInvariant:
    """Invariant of the branch configuration {-1, 0, a, inf}; min(1 + a, (1 + a)/a)."""
    require_star(params)
    return modulus_of_a(params.a)
