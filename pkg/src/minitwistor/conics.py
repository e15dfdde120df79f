"""Conics in planes of CP^3, touching conics and their images on the cone.

A :class:`PlaneConic` carries three descriptions of the same curve: the
plane ``alpha*y0 + beta*y1 + gamma*y2 + delta*y3 = 0``, a symmetric 3x3
matrix in plane coordinates and (optionally) a quadratic parametrization
``s -> (y0(s), y1(s), y2(s), y3(s))``.

Plane coordinates drop the coordinate with the largest plane coefficient
(the *pivot*, first one on ties) and keep the other three in their natural
order.

Two arithmetic regimes coexist.  Conics with rational data stay exact
(Fractions), which is how random conics and the touching conics lying on
C*-invariant quadrics are handled.  Conics produced by the Newton search
carry complex floating coefficients; for those all decisions are made with
explicit tolerances (``tol`` for square defects, ``cluster`` for root
multiplicities).
"""

from __future__ import annotations

import cmath
import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np
from numpy.polynomial import polynomial as npoly

from .algebra import (
    BinaryForm,
    MPoly,
    Poly,
    determinant,
    sylvester,
    double_root_profile,
    isolate_real_roots,
    rational_text,
)
from .errors import (
    ConicInsideSurface,
    CurvesCoincide,
    DegeneratePlane,
    InvalidConic,
    MeetsLineAtInfinity,
    NoConvergence,
    NoNode,
    NotAnticanonicalShape,
    NotTouching,
    OrbitTangentPlane,
    SymmetricConic,
)
from .family import FamilyParams, require_star
from .surface import ConeCurve, branch_curve

DEFAULT_TOL = 1e-10
DEFAULT_CLUSTER = 1e-6

SPLITS_NODAL = "SPLITS_NODAL"
SPLITS_SMOOTH = "SPLITS_SMOOTH"
IRREDUCIBLE = "IRREDUCIBLE"

LINE_MARGIN = 1e-3
CONDITION_LIMIT = 1e10

NODE = "NODE"
WORSE = "WORSE"


def _exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def _all_exact(xs) -> bool:
    return all(_exact(x) for x in xs)


def _num_json(x):
    if _exact(x):
        return rational_text(x)
    x = complex(x)
    return [x.real, x.imag]


def _num_from_json(v):
    if isinstance(v, list):
        return complex(v[0], v[1])
    if isinstance(v, (int, float)):
        return complex(v)
    return Fraction(v)


# ---------------------------------------------------------------------------
# plane coordinates

def pivot_index(plane) -> int:
    mags = [abs(complex(c)) for c in plane]
    best = max(mags)
    if best == 0:
        raise InvalidConic("the zero vector is not a plane")
    return mags.index(best)


def plane_basis(plane):
    """4x3 matrix E with y = E x for plane coordinates x."""
    k = pivot_index(plane)
    free = [i for i in range(4) if i != k]
    E = [[0] * 3 for _ in range(4)]
    for col, i in enumerate(free):
        E[i][col] = 1
        E[k][col] = -plane[i] / plane[k] if not _all_exact(plane) else -Fraction(plane[i]) / Fraction(plane[k])
    return E


def to_plane_coords(plane, y):
    k = pivot_index(plane)
    return [y[i] for i in range(4) if i != k]


def _mat_mul(A, B):
    return [[sum(A[i][t] * B[t][j] for t in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def _transpose(A):
    return [list(r) for r in zip(*A)]


# ---------------------------------------------------------------------------
# the conic type

@dataclass(frozen=True)
class PlaneConic:
    plane: tuple
    matrix: tuple  # 3x3 nested tuples, symmetric
    param: tuple | None = None  # four Poly in s, ascending

    @property
    def exact(self) -> bool:
        vals = list(self.plane) + [x for r in self.matrix for x in r]
        if self.param is not None:
            vals += [c for p in self.param for c in p.c]
        return _all_exact(vals)

    def point(self, s):
        if self.param is None:
            raise InvalidConic("conic has no parametrization")
        if s == "inf":
            return tuple(p.coeff(2) for p in self.param)
        return tuple(p(s) for p in self.param)

    def rank(self) -> int:
        if self.exact:
            from .family import matrix_rank

            return matrix_rank(self.matrix)
        sv = np.linalg.svd(np.array(self.matrix, dtype=complex), compute_uv=False)
        return int(np.sum(sv > 1e-10 * sv[0]))

    @property
    def irreducible(self) -> bool:
        return self.rank() == 3

    def to_json(self) -> dict:
        out = {
            "plane": [_num_json(c) for c in self.plane],
            "matrix": [[_num_json(x) for x in row] for row in self.matrix],
            "param": None,
        }
        if self.param is not None:
            # descending in s, like the binary forms elsewhere
            out["param"] = [[_num_json(p.coeff(2 - i)) for i in range(3)] for p in self.param]
        return out

    @classmethod
    def from_json(cls, obj) -> "PlaneConic":
        plane = tuple(_num_from_json(v) for v in obj["plane"])
        matrix = tuple(tuple(_num_from_json(v) for v in row) for row in obj["matrix"])
        param = None
        if obj.get("param") is not None:
            param = tuple(Poly(reversed([_num_from_json(v) for v in row])) for row in obj["param"])
        conic = cls(plane, matrix, param)
        validate_conic(conic)
        return conic


def _float_tol_zero(x, scale, tol=1e-9):
    return abs(complex(x)) <= tol * max(scale, 1e-300)


def validate_conic(conic: PlaneConic):
    """Parametrization lies in the plane and satisfies the matrix equation."""
    if conic.param is None:
        return
    exact = conic.exact
    plane_rest = sum((p * conic.plane[i] for i, p in enumerate(conic.param)), Poly())
    X = to_plane_coords(conic.plane, conic.param)
    quad = Poly()
    for i in range(3):
        for j in range(3):
            quad = quad + X[i] * X[j] * conic.matrix[i][j]
    if exact:
        if not plane_rest.is_zero() or not quad.is_zero():
            raise InvalidConic("parametrization inconsistent with plane or matrix")
    else:
        scale = max(abs(complex(c)) for p in conic.param for c in p.c) or 1.0
        mscale = max(abs(complex(x)) for r in conic.matrix for x in r) * scale * scale
        pscale = max(abs(complex(c)) for c in conic.plane) * scale
        if any(not _float_tol_zero(c, pscale) for c in plane_rest.c):
            raise InvalidConic("parametrization leaves the plane")
        if any(not _float_tol_zero(c, mscale) for c in quad.c):
            raise InvalidConic("parametrization does not satisfy the conic equation")


def plane_of_param(Y):
    """Cofactor vector of the 4x3 coefficient matrix of four quadratics."""
    rows = [[p.coeff(j) for j in range(3)] for p in Y]
    out = []
    for i in range(4):
        minor = [rows[r] for r in range(4) if r != i]
        out.append((-1) ** i * determinant(minor))
    return tuple(out)


def _nullvector_exact(rows, n):
    """A nonzero rational vector in the kernel of ``rows`` (n columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][col] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                t = m[i][col]
                m[i] = [x - t * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return None
    f = free[0]
    v = [Fraction(0)] * n
    v[f] = Fraction(1)
    for i, pc in enumerate(pivots):
        v[pc] = -m[i][f]
    return v


_IDX = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]


def _sym_from_vec(m):
    M = [[0] * 3 for _ in range(3)]
    for v, (i, j) in zip(m, _IDX):
        M[i][j] = v
        M[j][i] = v
    return tuple(tuple(r) for r in M)


def conic_from_param(Y) -> PlaneConic:
    """Build plane and matrix from four quadratics (exact or complex)."""
    Y = tuple(p if isinstance(p, Poly) else Poly(p) for p in Y)
    if any(p.degree > 2 for p in Y):
        raise InvalidConic("parametrization must be quadratic")
    plane = plane_of_param(Y)
    exact = _all_exact([c for p in Y for c in p.c])
    if exact:
        if all(c == 0 for c in plane):
            raise InvalidConic("the parametrization does not span a plane")
    else:
        plane = tuple(complex(c) for c in plane)
        scale = max(abs(complex(c)) for p in Y for c in p.c) ** 3
        if max(abs(c) for c in plane) <= 1e-12 * scale:
            raise InvalidConic("the parametrization does not span a plane")
    X = to_plane_coords(plane, Y)
    # x^T M x == 0 identically: 5 linear equations in the 6 entries of M
    rows = [[0] * 6 for _ in range(5)]
    for k, (i, j) in enumerate(_IDX):
        prod = X[i] * X[j] * (1 if i == j else 2)
        for d in range(5):
            rows[d][k] = prod.coeff(d)
    if exact:
        m = _nullvector_exact(rows, 6)
        if m is None:
            raise InvalidConic("no conic through the parametrization")
    else:
        A = np.array(rows, dtype=complex)
        _, sv, vh = np.linalg.svd(A)
        m = list(vh[-1].conj())
        big = max(m, key=abs)
        m = [x / big for x in m]
    conic = PlaneConic(tuple(plane), _sym_from_vec(m), Y)
    validate_conic(conic)
    return conic


def parametrize_through(M, xstar, d0, d1):
    """Quadratic parametrization of the conic x^T M x = 0 through xstar.

    Lines through ``xstar`` in direction ``v = d0 + s*d1`` meet the conic a
    second time at ``(v^T M v) xstar - 2 (xstar^T M v) v``.
    """
    V = [Poly((d0[i], d1[i])) for i in range(3)]
    vMv = Poly()
    xMv = Poly()
    for i in range(3):
        for j in range(3):
            vMv = vMv + V[i] * V[j] * M[i][j]
            xMv = xMv + V[j] * (xstar[i] * M[i][j])
    return [vMv * xstar[c] - xMv * V[c] * 2 for c in range(3)]


def conic_from_matrix(plane, M, xstar=None) -> PlaneConic:
    """Conic from plane and matrix; parametrized when a point ``xstar`` is given."""
    M = tuple(tuple(r) for r in M)
    if xstar is None:
        return PlaneConic(tuple(plane), M, None)
    exact = _all_exact(list(plane) + [x for r in M for x in r] + list(xstar))
    basis = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    # two basis vectors completing xstar
    k = max(range(3), key=lambda i: abs(complex(xstar[i])))
    d0, d1 = [basis[i] for i in range(3) if i != k]
    if exact:
        d0 = [Fraction(x) for x in d0]
        d1 = [Fraction(x) for x in d1]
    X = parametrize_through(M, xstar, d0, d1)
    E = plane_basis(plane)
    Y = tuple(sum((X[c] * E[i][c] for c in range(3)), Poly()) for i in range(4))
    conic = PlaneConic(tuple(plane), M, Y)
    validate_conic(conic)
    return conic


# ---------------------------------------------------------------------------
# restriction of the quartic and the touching test

def restrict_surface_to_conic(params: FamilyParams, conic: PlaneConic) -> BinaryForm:
    """f composed with the parametrization, as a degree-8 form in s."""
    if conic.param is None:
        raise InvalidConic("conic has no parametrization")
    y0, y1, y2, y3 = conic.param
    q20, q11, q02 = params.q
    W = y2 * y3 + y0 * y0 * q20 + y0 * y1 * q11 + y1 * y1 * q02
    P = y0 * y1 * (y0 + y1) * (y0 - y1 * params.a)
    F = W * W - P
    return BinaryForm.from_poly(F, 8)


def _exact_square_root(R: BinaryForm):
    """A form g with g^2 = const * R, or None; the constant may have any sign."""
    dec = double_root_profile(R)
    if any(e % 2 for _, e in dec.factors):
        return None
    g = BinaryForm(0, (Fraction(1),))
    for h, e in dec.factors:
        g = g * (h ** (e // 2))
    return g


@dataclass
class ContactReport:
    points: list  # (parameter, multiplicity); parameter is complex, Fraction or "inf"
    total: int
    defect: float | None = None
    against: str = "B"

    @property
    def multiplicities(self):
        return sorted(m for _, m in self.points)

    @property
    def touching(self) -> bool:
        return bool(self.points) and all(m % 2 == 0 for _, m in self.points)

    def to_json(self):
        pts = []
        for s, m in self.points:
            if s == "inf":
                sv = "inf"
            elif _exact(s):
                sv = rational_text(s)
            else:
                z = complex(s)
                sv = [z.real, z.imag]
            pts.append({"at": sv, "multiplicity": m})
        out = {"against": self.against, "points": pts, "multiplicities": self.multiplicities,
               "total": self.total, "touching": self.touching}
        if self.defect is not None:
            out["defect"] = self.defect
        return out


def _asc(form: BinaryForm) -> np.ndarray:
    return np.array(list(reversed(form.coeffs)), dtype=complex)


def proj_roots(coeffs_asc, degree, rel=1e-13):
    """Roots of a polynomial of formal degree ``degree``; ``None`` stands for infinity."""
    c = np.array(coeffs_asc, dtype=complex)
    c = np.concatenate([c, np.zeros(max(0, degree + 1 - len(c)))])[: degree + 1]
    scale = np.max(np.abs(c)) or 1.0
    top = degree
    while top > 0 and abs(c[top]) <= rel * scale:
        top -= 1
    finite = list(npoly.polyroots(c[: top + 1])) if top > 0 else []
    return finite + [None] * (degree - top)


def cluster_roots(roots, radius=DEFAULT_CLUSTER):
    """Group roots closer than ``radius`` (relative to max(1, |root|)); None is infinity."""
    groups = []
    for r in roots:
        for g in groups:
            c = g[0]
            if r is None or c is None:
                if r is None and c is None:
                    g.append(r)
                    break
                continue
            if abs(r - c) <= radius * max(1.0, abs(c)):
                g.append(r)
                break
        else:
            groups.append([r])
    out = []
    for g in groups:
        if g[0] is None:
            out.append(("inf", len(g)))
        else:
            out.append((complex(np.mean(g)), len(g)))
    return out


def _rel_value(c, x, j=0):
    """|p^(j)(x)| relative to the sum of the absolute values of its terms."""
    d = np.array(c, dtype=complex)
    for _ in range(j):
        d = npoly.polyder(d)
    if len(d) == 0:
        return 0.0
    terms = np.abs(d) * np.abs(x) ** np.arange(len(d))
    tot = float(np.sum(terms))
    return abs(complex(npoly.polyval(x, d))) / tot if tot else 0.0


def multiple_roots(coeffs_asc, degree, cluster=DEFAULT_CLUSTER, value_tol=1e-5):
    """Roots with multiplicities for floating coefficients.

    A root of multiplicity m splits into m roots at distance about
    eps**(1/m), so distance alone cannot recognize it.  Nearby roots are
    merged when they lie within ``cluster`` (relative) of each other, or
    when a root of the (m-1)-st derivative close to them makes the
    polynomial and its first m-1 derivatives vanish to ``value_tol``
    (relative to the size of the terms).  ``"inf"`` marks roots at infinity.
    """
    c = np.array(coeffs_asc, dtype=complex)
    c = np.concatenate([c, np.zeros(max(0, degree + 1 - len(c)))])[: degree + 1]
    scale = float(np.max(np.abs(c))) or 1.0
    n_inf = 0
    while n_inf < degree and abs(c[degree - n_inf]) <= 1e-13 * scale:
        n_inf += 1
    c = c[: degree + 1 - n_inf]
    roots = list(npoly.polyroots(c)) if len(c) > 1 else []
    out = [("inf", n_inf)] if n_inf else []
    window = math.sqrt(cluster)
    while roots:
        r = roots.pop(0)
        roots.sort(key=lambda x: abs(x - r))
        near = [x for x in roots if abs(x - r) <= window * max(1.0, abs(r))]
        m, center = 1, r
        for k in range(1, len(near) + 1):
            group = [r] + near[:k]
            guess = complex(np.mean(group))
            if all(abs(x - guess) <= cluster * max(1.0, abs(guess)) for x in group):
                m, center = k + 1, guess
                continue
            d = np.array(c)
            for _ in range(k):
                d = npoly.polyder(d)
            cand = [z for z in npoly.polyroots(d)] if len(d) > 1 else []
            if not cand:
                break
            z = min(cand, key=lambda z: abs(z - guess))
            if all(_rel_value(c, z, j) <= value_tol for j in range(k)):
                m, center = k + 1, z
            else:
                break
        del roots[: m - 1]
        out.append((center, m))
    return out


def _matchings(items):
    if not items:
        yield []
        return
    first = items[0]
    for k in range(1, len(items)):
        rest = items[1:k] + items[k + 1:]
        for m in _matchings(rest):
            yield [(first, items[k])] + m


def square_fit(F_asc, degree=8, iters=8):
    """Best quartic g with g^2 close to F; returns (g ascending, relative defect)."""
    F = np.array(F_asc, dtype=complex)
    F = np.concatenate([F, np.zeros(max(0, degree + 1 - len(F)))])[: degree + 1]
    nF = np.linalg.norm(F)
    if nF == 0:
        raise ConicInsideSurface("restriction vanishes identically")
    roots = proj_roots(F, degree)
    finite = [r for r in roots if r is not None]
    best = None
    if len(finite) % 2 == 0 and len(finite) <= 8:
        for m in _matchings(list(range(len(finite)))):
            cost = sum(abs(finite[i] - finite[j]) for i, j in m)
            if best is None or cost < best[0]:
                best = (cost, m)
        centers = [(finite[i] + finite[j]) / 2 for i, j in best[1]]
    else:
        centers = finite[: len(finite) // 2]
    top = max(i for i in range(degree + 1) if F[i] != 0)
    g = npoly.polyfromroots(centers) if centers else np.array([1.0 + 0j])
    g = g * cmath.sqrt(F[top] / (g[-1] ** 2 if len(g) else 1))
    g = np.concatenate([g, np.zeros(degree // 2 + 1 - len(g))])[: degree // 2 + 1]

    def resid(g):
        return npoly.polysub(F, npoly.polymul(g, g))

    for _ in range(iters):
        r = np.concatenate([resid(g), np.zeros(degree + 1)])[: degree + 1]
        if np.linalg.norm(r) <= 1e-16 * nF:
            break
        J = np.zeros((degree + 1, len(g)), dtype=complex)
        for k in range(len(g)):
            J[k: k + len(g), k] += 2 * g
        step = np.linalg.lstsq(J, r, rcond=None)[0]
        g_new = g + step
        r_new = np.concatenate([resid(g_new), np.zeros(degree + 1)])[: degree + 1]
        if np.linalg.norm(r_new) >= np.linalg.norm(r):
            break
        g = g_new
    r = np.concatenate([resid(g), np.zeros(degree + 1)])[: degree + 1]
    return g, float(np.linalg.norm(r) / nF)


def is_touching(params: FamilyParams, conic: PlaneConic, tol=DEFAULT_TOL, cluster=DEFAULT_CLUSTER):
    """Decide whether the conic touches B at every intersection point."""
    R = restrict_surface_to_conic(params, conic)
    if R.is_zero:
        raise ConicInsideSurface("the conic lies in the surface")
    if conic.exact:
        dec = double_root_profile(R)
        pts = []
        for fac, e in dec.factors:
            for r in proj_roots(_asc(fac), fac.degree):
                if r is None:
                    pts.append(("inf", e))
                else:
                    pts.append((r, e))
        sq = _exact_square_root(R)
        rep = ContactReport(pts, sum(m for _, m in pts), 0.0 if sq is not None else None)
        return sq is not None, rep
    F = _asc(R)
    g, defect = square_fit(F)
    if defect < tol:
        pts = [("inf" if r is None else r, 2) for r in proj_roots(g, 4)]
        rep = ContactReport(pts, 8, defect)
        return True, rep
    pts = multiple_roots(F, 8, cluster)
    return False, ContactReport(pts, sum(m for _, m in pts), defect)


# ---------------------------------------------------------------------------
# the reflection of a plane

@dataclass(frozen=True)
class Reflection:
    plane: tuple
    matrix: tuple  # 4x4 acting on y

    def __call__(self, y):
        return tuple(sum(self.matrix[i][j] * y[j] for j in range(4)) for i in range(4))

    @property
    def fixed_line(self):
        """The fixed line as the intersection of the plane with gamma*y2 = delta*y3."""
        _, _, g, d = self.plane
        return (self.plane, (0, 0, g, -d))

    @property
    def isolated_point(self):
        _, _, g, d = self.plane
        return (0, 0, d, -g)

    def plane_matrix(self):
        """The involution in plane coordinates."""
        E = plane_basis(self.plane)
        k = pivot_index(self.plane)
        JE = _mat_mul([list(r) for r in self.matrix], E)
        return [JE[i] for i in range(4) if i != k]


def reflection_involution(plane) -> Reflection:
    """(y0, y1, y2, y3) -> (y0, y1, (delta/gamma) y3, (gamma/delta) y2)."""
    _, _, g, d = plane
    if g == 0 or d == 0:
        raise OrbitTangentPlane("the reflection needs gamma and delta nonzero")
    if _all_exact(plane):
        g, d = Fraction(g), Fraction(d)
        one, zero = Fraction(1), Fraction(0)
    else:
        one, zero = 1.0, 0.0
    J = (
        (one, zero, zero, zero),
        (zero, one, zero, zero),
        (zero, zero, zero, d / g),
        (zero, zero, g / d, zero),
    )
    return Reflection(tuple(plane), J)


def reflected_matrix(conic: PlaneConic):
    T = reflection_involution(conic.plane).plane_matrix()
    M = [list(r) for r in conic.matrix]
    return _mat_mul(_transpose(T), _mat_mul(M, T))


def symmetry_defect(conic: PlaneConic):
    """0 for symmetric conics; a scale-free distance otherwise (exact: 0 or 1)."""
    M2 = reflected_matrix(conic)
    M = conic.matrix
    vals = [(M[i][j], M2[i][j]) for i in range(3) for j in range(3)]
    if conic.exact:
        prop = all(x * y2 == y * x2 for x, y in vals for x2, y2 in vals)
        return 0 if prop else 1
    a = np.array([complex(x) for x, _ in vals])
    b = np.array([complex(y) for _, y in vals])
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    phase = np.vdot(a, b)
    return float(np.linalg.norm(b - phase / abs(phase) * a)) if abs(phase) > 0 else 1.0


def is_symmetric(conic: PlaneConic, tol=1e-8) -> bool:
    return symmetry_defect(conic) <= tol


def symmetrize(conic: PlaneConic) -> PlaneConic:
    """The matrix M + T^T M T; invariant under the reflection by construction.

    The result carries no parametrization: a rational point on it is not
    available in general.
    """
    M2 = reflected_matrix(conic)
    S = tuple(tuple(conic.matrix[i][j] + M2[i][j] for j in range(3)) for i in range(3))
    return PlaneConic(conic.plane, S, None)


# ---------------------------------------------------------------------------
# images on the cone

def _infinity_resultant(conic: PlaneConic):
    y0, y1 = conic.param[0], conic.param[1]
    # formal degree 2 on both sides, so build the 4x4 Sylvester matrix directly
    fc = [y0.coeff(2 - i) for i in range(3)]
    gc = [y1.coeff(2 - i) for i in range(3)]
    mat = [fc + [0], [0] + fc, gc + [0], [0] + gc]
    return determinant(mat)


def line_distance(conic: PlaneConic) -> float:
    """How far C stays from the line y0 = y1 = 0: |y1| / |y| at the points with y0 = 0."""
    y0 = [complex(conic.param[0].coeff(i)) for i in range(3)]
    best = 1.0
    for s in proj_roots(y0, 2):
        y = _eval_param(conic, s)
        best = min(best, abs(y[1]) / max(np.linalg.norm(y), 1e-300))
    return best


def conic_image_on_cone(conic: PlaneConic, sym_tol=1e-8) -> ConeCurve:
    """Implicit equation of psi(C) in the chart (u, zeta)."""
    if conic.exact:
        if symmetry_defect(conic) == 0:
            raise SymmetricConic("the conic is invariant under the reflection")
    elif symmetry_defect(conic) <= sym_tol:
        raise SymmetricConic("the conic is invariant under the reflection")
    if conic.param is None:
        raise InvalidConic("conic has no parametrization")
    res_inf = _infinity_resultant(conic)
    scale = max(abs(complex(c)) for p in conic.param for c in p.c)
    if res_inf == 0 or (not conic.exact and abs(complex(res_inf)) <= 1e-12 * scale ** 4):
        raise MeetsLineAtInfinity("the conic meets the line y0 = y1 = 0")
    b, c = _image_coefficients(conic)
    one = Fraction(1) if conic.exact else 1.0 + 0j
    return ConeCurve(one, b, c)


def _image_coefficients(conic: PlaneConic):
    """Solve (y2 y3)^2 + B(y0, y1) y2 y3 + C(y0, y1) == 0 identically in s.

    B and C are binary forms of degrees 2 and 4, i.e. b(u) and c(u) after
    dividing by y1^2 and y1^4.  The identity gives nine linear equations in
    the eight unknown coefficients; the system is consistent exactly when
    the image has the anticanonical shape with zeta^2 coefficient 1.
    """
    y0, y1, y2, y3 = conic.param
    Z = y2 * y3
    cols = [y0 ** i * y1 ** (2 - i) * Z for i in range(3)] + [y0 ** i * y1 ** (4 - i) for i in range(5)]
    rhs = -(Z * Z)
    if conic.exact:
        rows = [[col.coeff(d) for col in cols] + [rhs.coeff(d)] for d in range(9)]
        sol = _solve_exact(rows, 8)
        if sol is None:
            raise NotAnticanonicalShape("the image does not have the anticanonical shape")
    else:
        # The monomial system can have condition numbers near 1e11, so it is
        # solved in extended precision from the (exactly representable)
        # double-precision inputs and rounded once at the end.
        with mpmath.workdps(60):
            Ym = [[mpmath.mpc(complex(x)) for x in p.c] for p in conic.param]
            Zm = _mp_mul(Ym[2], Ym[3])
            mcols = [_mp_mul(_mp_mul(_mp_pow(Ym[0], i), _mp_pow(Ym[1], 2 - i)), Zm) for i in range(3)]
            mcols += [_mp_mul(_mp_pow(Ym[0], i), _mp_pow(Ym[1], 4 - i)) for i in range(5)]
            mrhs = [-x for x in _mp_mul(Zm, Zm)]
            A = mpmath.matrix([[_mp_coeff(col, d) for col in mcols] for d in range(9)])
            r = mpmath.matrix([_mp_coeff(mrhs, d) for d in range(9)])
            AH = A.H
            try:
                x = mpmath.lu_solve(AH * A, AH * r)
            except ZeroDivisionError:
                raise NotAnticanonicalShape("the image does not have the anticanonical shape") from None
            resid = mpmath.norm(A * x - r)
            if resid > mpmath.mpf(10) ** -30 * max(mpmath.norm(r), mpmath.mpf(10) ** -300):
                raise NotAnticanonicalShape("the image does not have the anticanonical shape")
            sol = [complex(x[k]) for k in range(8)]
    return Poly(sol[:3]), Poly(sol[3:])


def _mp_mul(a, b):
    out = [mpmath.mpc(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _mp_pow(a, n):
    out = [mpmath.mpc(1)]
    for _ in range(n):
        out = _mp_mul(out, a)
    return out


def _mp_coeff(p, d):
    return p[d] if d < len(p) else mpmath.mpc(0)


def _solve_exact(rows, n):
    """Unique solution of an augmented rational system, or None."""
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    piv_cols = []
    for col in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            return None
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][col] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                t = m[i][col]
                m[i] = [x - t * y for x, y in zip(m[i], m[r])]
        piv_cols.append(col)
        r += 1
    if any(m[i][n] != 0 for i in range(r, len(m))):
        return None
    return [m[i][n] for i in range(n)]


def image_by_resultant(conic: PlaneConic) -> ConeCurve:
    """The same image through Res_s(y1 u - y0, y1^2 zeta - y2 y3); exact conics only."""
    y0, y1, y2, y3 = conic.param
    S = lambda p: MPoly.from_univariate(3, 0, p)  # noqa: E731
    u = MPoly.var(3, 1)
    z = MPoly.var(3, 2)
    f = S(y1) * u - S(y0)
    g = S(y1 * y1) * z - S(y2 * y3)
    # formal s-degrees 2 and 4 keep the roots at s = inf
    fc = list(reversed(_pad_coeffs(f.coeffs_in(0), 3, 3)))
    gc = list(reversed(_pad_coeffs(g.coeffs_in(0), 5, 3)))
    zero = MPoly(3)
    res = determinant(sylvester(fc, gc, zero), one=MPoly.const(3, 1), zero=zero)
    terms = {(k[1], k[2]): v for k, v in res.terms.items()}
    if any(kz > 2 for (_, kz) in terms) or any(ku for (ku, kz) in terms if kz == 2):
        raise NotAnticanonicalShape("image is not of anticanonical shape")
    A = terms[(0, 2)]
    b = Poly(terms.get((i, 1), 0) / A for i in range(3))
    c = Poly(terms.get((i, 0), 0) / A for i in range(5))
    return ConeCurve(Fraction(1), b, c)


def _pad_coeffs(cs, n, nvars):
    cs = list(cs)
    while len(cs) < n:
        cs.append(MPoly(nvars))
    return cs


# ---------------------------------------------------------------------------
# nodes of cone curves

@dataclass(frozen=True)
class CurveSingularity:
    u: object  # Fraction, complex or "inf"
    zeta: object  # in the chart at infinity (zeta/u^2) when u == "inf"
    kind: str
    multiplicity: int

    def to_json(self):
        def enc(x):
            if x == "inf":
                return "inf"
            if _exact(x):
                return rational_text(x)
            z = complex(x)
            return [z.real, z.imag]

        return {"u": enc(self.u), "zeta": enc(self.zeta), "kind": self.kind, "multiplicity": self.multiplicity}


def detect_nodes(curve: ConeCurve, cluster=DEFAULT_CLUSTER):
    """Singular points of A zeta^2 + b zeta + c.

    Eliminating zeta with the zeta-derivative leaves the discriminant
    D = b^2 - 4Ac: singular points sit over multiple roots of D (as a
    quartic form, so u = inf is included), at zeta = -b/(2A).  The Hessian
    determinant there equals -D''/2, so a double root of D is a node and a
    root of higher multiplicity is a worse singularity.
    """
    if curve.A == 0:
        raise NotAnticanonicalShape("A = 0")
    out = []
    A = curve.A
    if curve.exact:
        D = curve.discriminant()
        if D.is_zero:
            raise NotAnticanonicalShape("discriminant vanishes: the curve is a double curve")
        dec = double_root_profile(D)
        for fac, e in dec.factors:
            if e < 2:
                continue
            kind = NODE if e == 2 else WORSE
            rational = [r.value.exact for r in isolate_real_roots(fac)
                        if not r.is_inf and r.value.exact is not None]
            for r in proj_roots(_asc(fac), fac.degree):
                if r is None:
                    out.append(CurveSingularity("inf", -Fraction(curve.b.coeff(2)) / (2 * A), kind, e))
                    continue
                # report rational roots exactly; the numerical root only tells which one
                near = [q for q in rational if abs(complex(r) - float(q)) <= 1e-6 * max(1.0, abs(r))]
                if near:
                    rational.remove(near[0])
                    out.append(CurveSingularity(near[0], -curve.b(near[0]) / (2 * A), kind, e))
                else:
                    out.append(CurveSingularity(r, -complex(curve.b(r)) / (2 * complex(A)), kind, e))
        return out
    D = _asc(curve.discriminant())
    for r, m in multiple_roots(D, 4, cluster):
        if m < 2:
            continue
        kind = NODE if m == 2 else WORSE
        if r == "inf":
            out.append(CurveSingularity("inf", -complex(curve.b.coeff(2)) / (2 * complex(A)), kind, m))
        else:
            out.append(CurveSingularity(r, -complex(curve.b(r)) / (2 * complex(A)), kind, m))
    return out


@dataclass(frozen=True)
class ResidualPair:
    s1: complex
    s2: complex
    u: complex
    zeta: complex


def _eval_param(conic, s):
    return [complex(p(s)) for p in conic.param] if s is not None else [complex(p.coeff(2)) for p in conic.param]


def node_from_reflection(conic: PlaneConic) -> ResidualPair:
    """The node of psi(C) as psi of the two points of C and its mirror image off the fixed line."""
    M2 = reflected_matrix(conic)
    X = to_plane_coords(conic.plane, conic.param)
    h = Poly()
    for i in range(3):
        for j in range(3):
            h = h + X[i] * X[j] * M2[i][j]
    coeffs = [complex(h.coeff(i)) for i in range(5)]
    roots = proj_roots(coeffs, 4)
    _, _, g, d = (complex(x) for x in conic.plane)

    def off_line(s):
        y = _eval_param(conic, s)
        return abs(g * y[2] - d * y[3]) / (max(abs(v) for v in y) * max(abs(g), abs(d)))

    ranked = sorted(roots, key=lambda s: -off_line(s))
    s1, s2 = ranked[0], ranked[1]
    y = _eval_param(conic, s1)
    z1, z2, z3 = y[1] * y[1], y[0] * y[1], y[2] * y[3]
    if abs(z1) == 0:
        raise NoNode("residual point lies over u = inf")
    return ResidualPair(s1, s2, z2 / z1, z3 / z1)


# ---------------------------------------------------------------------------
# contact with the branch curve

def _cone_resultant(G: ConeCurve, B: ConeCurve) -> Poly:
    """Res_zeta of two anticanonical curves, a polynomial of degree <= 8 in u."""
    Gn, Bn = G.normalized(), B.normalized()
    db = Gn.b - Bn.b
    dc = Gn.c - Bn.c
    # for zeta^2 + b1 zeta + c1 and zeta^2 + b2 zeta + c2
    return dc * dc - db * (Gn.b * Bn.c - Bn.b * Gn.c) * (-1)


def contact_with_branch(curve: ConeCurve, params: FamilyParams, cluster=DEFAULT_CLUSTER) -> ContactReport:
    """Intersection multiplicities of a curve with the branch curve, counted over u."""
    B = branch_curve(params)
    Res = _cone_resultant(curve, B)
    if all((c == 0) if _exact(c) else abs(complex(c)) == 0 for c in Res.c):
        raise CurvesCoincide("the curve shares a component with the branch curve")
    Gn, Bn = curve.normalized(), B.normalized()
    db = Gn.b - Bn.b
    dc = Gn.c - Bn.c

    def zeta_at(u):
        den = db(u)
        if abs(complex(den)) < 1e-14:
            return None
        return -dc(u) / den

    if curve.exact:
        form = BinaryForm.from_poly(Res, 8)
        dec = double_root_profile(form)
        pts = []
        for fac, e in dec.factors:
            for r in proj_roots(_asc(fac), fac.degree):
                pts.append(("inf" if r is None else r, e))
    else:
        pts = multiple_roots([complex(c) for c in Res.c], 8, cluster)
    rep = ContactReport(pts, sum(m for _, m in pts), None, against="branch_curve")
    rep.zeta = [None if u == "inf" else zeta_at(u) for u, _ in pts]
    return rep


# ---------------------------------------------------------------------------
# lifting to the double cover

@dataclass
class LiftResult:
    verdict: str
    s1: complex
    s2: complex
    w1: complex
    w2: complex
    branches: list = field(default_factory=list)

    def to_json(self):
        def c(z):
            z = complex(z)
            return [z.real, z.imag]

        return {
            "verdict": self.verdict,
            "node_parameters": [c(self.s1), c(self.s2)],
            "branch_values": [c(self.w1), c(self.w2)],
            "branches": self.branches,
        }


def classify_branch_values(w1, w2, tol=1e-8) -> str:
    """Compare the values of one branch of the cover at the two preimages of the node.

    Equal values mean the node survives on each branch; opposite values
    mean the branches separate the two preimages.  Anything else means the
    data does not split consistently.
    """
    w1, w2 = complex(w1), complex(w2)
    scale = max(abs(w1), abs(w2), 1e-300)
    if abs(w1 - w2) <= tol * scale:
        return SPLITS_NODAL
    if abs(w1 + w2) <= tol * scale:
        return SPLITS_SMOOTH
    return IRREDUCIBLE


def lift_minitwistor_line(params: FamilyParams, conic: PlaneConic, tol=DEFAULT_TOL,
                          cluster=DEFAULT_CLUSTER, compare_tol=1e-6) -> LiftResult:
    touching, _ = is_touching(params, conic, tol, cluster)
    if not touching:
        raise NotTouching("the conic does not touch the surface")
    image = conic_image_on_cone(conic)
    nodes = [n for n in detect_nodes(image, cluster) if n.kind == NODE]
    if len(nodes) != 1:
        raise NoNode(f"expected one node on the image, found {len(nodes)}")
    pair = node_from_reflection(conic)
    if pair.s1 is None or pair.s2 is None:
        raise NoNode("node preimage at s = inf")
    R = restrict_surface_to_conic(params, conic)
    if conic.exact:
        g = np.array([complex(x) for x in reversed(_exact_square_root(R).coeffs)])
    else:
        g, _ = square_fit(_asc(R))
    y1 = _eval_param(conic, pair.s1)
    z1 = [y1[0] ** 2, y1[1] ** 2, y1[0] * y1[1], y1[2] * y1[3]]
    k = max(range(4), key=lambda i: abs(z1[i]))

    def w_at(s):
        y = _eval_param(conic, s)
        z = [y[0] ** 2, y[1] ** 2, y[0] * y[1], y[2] * y[3]]
        return complex(npoly.polyval(s, g)) / z[k]

    w1, w2 = w_at(pair.s1), w_at(pair.s2)
    verdict = classify_branch_values(w1, w2, compare_tol)
    zlabel = ["y0^2", "y1^2", "y0*y1", "y2*y3"][k]
    branches = [
        {"sign": sgn, "numerator": [[complex(sgn * x).real, complex(sgn * x).imag] for x in g], "denominator": zlabel}
        for sgn in (1, -1)
    ]
    return LiftResult(verdict, pair.s1, pair.s2, w1, w2, branches)


# ---------------------------------------------------------------------------
# exact sample conics

def orbit_conic(params: FamilyParams, point) -> PlaneConic:
    """Closure of the C*-orbit of a point of B: (p0 s, p1 s, p2 s^2, p3)."""
    p0, p1, p2, p3 = point
    Y = (Poly((0, p0)), Poly((0, p1)), Poly((0, 0, p2)), Poly((p3,)))
    return conic_from_param(Y)


def random_rational_conic(rng: random.Random, span=6) -> PlaneConic:
    while True:
        Y = tuple(Poly(Fraction(rng.randint(-span, span)) for _ in range(3)) for _ in range(4))
        try:
            conic = conic_from_param(Y)
        except InvalidConic:
            continue
        if conic.irreducible:
            return conic


def quadric_matrix(params: FamilyParams, t) -> list:
    """Symmetric 4x4 matrix of t^2 y0 y1 + 2t (y2 y3 + Q) + (y0 + y1)(y0 - a y1).

    Every plane section of this quadric restricts f to a perfect square,
    (y2 y3 + Q + t y0 y1)^2.
    """
    t = Fraction(t)
    a = params.a
    q20, q11, q02 = params.q
    S = [[Fraction(0)] * 4 for _ in range(4)]
    S[0][0] = 2 * t * q20 + 1
    S[1][1] = 2 * t * q02 - a
    S[0][1] = S[1][0] = (t * t + 2 * t * q11 + 1 - a) / 2
    S[2][3] = S[3][2] = t
    return S


def quadric_touching_conic(params: FamilyParams, t, rng: random.Random) -> PlaneConic:
    """An exact touching conic: a plane section of a C*-invariant quadric.

    A rational point of the quadric is found by solving for y3 (the
    quadric is linear in it), and a random rational plane through that
    point is chosen, so the section has a rational parametrization.
    """
    S = quadric_matrix(params, t)
    while True:
        y0, y1, y2 = (Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3))
        if y2 == 0:
            continue
        rest = S[0][0] * y0 * y0 + 2 * S[0][1] * y0 * y1 + S[1][1] * y1 * y1
        y3 = -rest / (2 * S[2][3] * y2)
        p = (y0, y1, y2, y3)
        al, be, ga = (Fraction(rng.randint(-5, 5)) for _ in range(3))
        if y3 == 0 or ga == 0:
            continue
        de = -(al * y0 + be * y1 + ga * y2) / y3
        plane = (al, be, ga, de)
        if de == 0:
            continue
        E = plane_basis(plane)
        M = _mat_mul(_transpose(E), _mat_mul(S, E))
        xstar = to_plane_coords(plane, p)
        try:
            conic = conic_from_matrix(plane, M, xstar)
        except InvalidConic:
            continue
        if conic.irreducible and any(not p.is_zero() for p in conic.param):
            try:
                conic_from_param(conic.param)
            except InvalidConic:
                continue
            return conic


# ---------------------------------------------------------------------------
# Newton search for touching conics in a given plane

def _plane_quartic_singular_screen(params: FamilyParams, plane, rng: np.random.Generator, starts=40):
    """Look for singular points of the plane quartic B restricted to the plane."""
    E = np.array(plane_basis(plane), dtype=complex)
    a = float(params.a)
    q20, q11, q02 = (float(x) for x in params.q)

    def grad_y(y):
        y0, y1, y2, y3 = y
        W = y2 * y3 + q20 * y0 * y0 + q11 * y0 * y1 + q02 * y1 * y1
        Q0 = 2 * q20 * y0 + q11 * y1
        Q1 = q11 * y0 + 2 * q02 * y1
        P0 = 3 * y0 * y0 * y1 + 2 * (1 - a) * y0 * y1 * y1 - a * y1 ** 3
        P1 = y0 ** 3 + 2 * (1 - a) * y0 * y0 * y1 - 3 * a * y0 * y1 * y1
        return np.array([2 * W * Q0 - P0, 2 * W * Q1 - P1, 2 * W * y3, 2 * W * y2])

    def hess_y(y, h=1e-7):
        H = np.zeros((4, 4), dtype=complex)
        for j in range(4):
            d = np.zeros(4, dtype=complex)
            d[j] = h
            H[:, j] = (grad_y(y + d) - grad_y(y - d)) / (2 * h)
        return H

    for _ in range(starts):
        x = rng.normal(size=3) + 1j * rng.normal(size=3)
        ell = rng.normal(size=3) + 1j * rng.normal(size=3)
        x = x / (ell @ x)
        for _ in range(40):
            y = E @ x
            r = np.concatenate([E.T @ grad_y(y), [ell @ x - 1]])
            J = np.vstack([E.T @ hess_y(y) @ E, ell[None, :]])
            step = np.linalg.lstsq(J, -r, rcond=None)[0]
            x = x + step
            if np.linalg.norm(step) < 1e-14 * np.linalg.norm(x):
                break
        y = E @ x
        g = E.T @ grad_y(y)
        if np.linalg.norm(g) < 1e-9 * max(1.0, np.linalg.norm(y)) ** 3:
            return x
    return None


def screen_plane(params: FamilyParams, plane, seed=0):
    """Raise DegeneratePlane when B meets the plane in a singular curve (numerical screen)."""
    lam = require_star(params).lambda0
    al, be, ga, de = plane
    if ga == 0 and de == 0:
        raise DegeneratePlane("C*-invariant plane: the section of B splits into two conics")
    if ga == 0 or de == 0:
        raise DegeneratePlane("plane passes through a singular point at y0 = y1 = 0")
    if abs(complex(al * lam + be)) == 0:
        raise DegeneratePlane("plane passes through the singular point (lambda0, 1, 0, 0)")
    rng = np.random.default_rng([seed, 7919])
    if _plane_quartic_singular_screen(params, plane, rng) is not None:
        raise DegeneratePlane("the plane section of B is singular (tangent plane)")


class _Seeder:
    """Touching conics from an explicit algebraic family on the cone.

    On the cone, with eta = zeta + Q(u, 1), the curves
        (eta + e p(u))^2 = (e^2 - 1)(p(u)^2 - P(u))
    touch the branch curve eta^2 = P(u) wherever they meet it, because
    substituting eta^2 = P leaves (e*eta + p)^2.  Choosing the quadratic p
    with p^2 - P divisible by (u - u0)^2 puts a node at u0.  The curve is
    rational; lifting a parametrization to CP^3 means writing
    zeta * y1^2 as y2 * y3, i.e. splitting a quartic into two quadratics.

    The free parameters (u0, k, c) (k the leading coefficient of p and c
    the scale of the C*-action) move the plane of the lifted conic; all
    square roots and root orderings are continued from the previous call
    so that the map is continuous along a homotopy path.
    """

    def __init__(self, params: FamilyParams, e, u1):
        self.a = float(params.a)
        self.P = np.array([0.0, -self.a, 1 - self.a, 1.0])
        self.dP = npoly.polyder(self.P)
        q20, q11, q02 = (float(x) for x in params.q)
        self.Q = np.array([q02, q11, q20])
        self.e = e
        self.u1 = u1
        self.state = None

    @staticmethod
    def _near(value, prev):
        if prev is None:
            return value
        return value if abs(value - prev) <= abs(-value - prev) else -value

    def build(self, z, state=None):
        u0, k, c = z
        w_prev, r_prev, roots_prev = state if state is not None else (None, None, None)
        w0 = self._near(cmath.sqrt(complex(npoly.polyval(u0, self.P))), w_prev)
        p1 = npoly.polyval(u0, self.dP) / (2 * w0)
        L = np.array([-u0, 1.0], dtype=complex)
        p = npoly.polyadd(npoly.polyadd(k * npoly.polymul(L, L), [w0]), p1 * L)
        D = npoly.polysub(npoly.polymul(p, p), self.P)
        m, _ = npoly.polydiv(D, npoly.polymul(L, L))
        m = np.concatenate([m, np.zeros(3)])[:3]
        mm = (self.e * self.e - 1) * m
        u1 = self.u1
        r1 = self._near(cmath.sqrt(complex(npoly.polyval(u1, mm))), r_prev)
        S = np.array([0.0, 1.0], dtype=complex)
        alpha = npoly.polyadd([r1], -u1 * S)
        U0 = npoly.polysub(npoly.polymul(alpha, alpha), [mm[0]])
        U1 = u1 * npoly.polysub(npoly.polymul(S, S), [mm[2]])
        V = npoly.polyadd(r1 * U1, npoly.polymul(S, npoly.polysub(U0, u1 * U1)))

        def hom(cf):
            out = np.zeros(1, dtype=complex)
            for i, ci in enumerate(cf):
                t = np.array([ci], dtype=complex)
                for _ in range(i):
                    t = npoly.polymul(t, U0)
                for _ in range(2 - i):
                    t = npoly.polymul(t, U1)
                out = npoly.polyadd(out, t)
            return out

        N = npoly.polysub(
            npoly.polysub(npoly.polymul(npoly.polysub(U0, u0 * U1), V), self.e * hom(p)),
            hom(self.Q),
        )
        N = np.concatenate([N, np.zeros(5)])[:5]
        roots = npoly.polyroots(N)
        if len(roots) != 4:
            raise FloatingPointError("degenerate quartic")
        if roots_prev is not None:
            best = min(itertools.permutations(range(4)),
                       key=lambda pm: sum(abs(roots[pm[i]] - roots_prev[i]) for i in range(4)))
            roots = roots[list(best)]
        y2 = c * npoly.polyfromroots(roots[:2])
        y3 = (N[4] / c) * npoly.polyfromroots(roots[2:])
        Y = np.array([np.concatenate([q, np.zeros(3)])[:3] for q in (U0, U1, y2, y3)])
        Y = Y / np.linalg.norm(Y)
        return Y, (w0, r1, roots)


def _plane_of_array(Y):
    return np.array([(-1) ** i * np.linalg.det(np.delete(Y, i, 0)) for i in range(4)])


def _track_to_plane(seeder: _Seeder, target, rng, corrector_tol=1e-8, max_steps=120):
    """Continue the seed family until the conic's plane equals ``target``."""
    z = np.array([
        rng.normal() * 2 + 1j * rng.normal() * 2,
        rng.normal() + 1j * rng.normal(),
        cmath.exp(rng.normal() * 0.5 + 1j * rng.uniform(0, 2 * math.pi)),
    ])
    Y, state = seeder.build(z)
    kk = int(np.argmax(np.abs(target)))
    t = target / target[kk]
    pi0 = _plane_of_array(Y)
    pi0 = pi0 / pi0[kk]

    def res(z, goal, state):
        Y, st = seeder.build(z, state)
        pl = _plane_of_array(Y)
        return np.array([pl[i] / pl[kk] - goal[i] for i in range(4) if i != kk]), st, Y

    tau, dt, steps = 0.0, 1.0 / 20, 0
    while tau < 1.0:
        steps += 1
        if steps > max_steps:
            return None
        tn = min(1.0, tau + dt)
        goal = (1 - tn) * pi0 + tn * t
        zz, st, ok = z.copy(), state, False
        try:
            for _ in range(8):
                r, st2, _ = res(zz, goal, st)
                if np.linalg.norm(r) < corrector_tol * (1 + np.linalg.norm(goal)):
                    ok = True
                    break
                J = np.zeros((3, 3), dtype=complex)
                for j in range(3):
                    d = np.zeros(3, dtype=complex)
                    h = 1e-7 * max(1.0, abs(zz[j]))
                    d[j] = h
                    J[:, j] = (res(zz + d, goal, st2)[0] - res(zz - d, goal, st2)[0]) / (2 * h)
                zz = zz + np.linalg.solve(J, -r)
                st = st2
        except (np.linalg.LinAlgError, FloatingPointError, ZeroDivisionError, ValueError):
            ok = False
        if ok and np.max(np.abs(zz - z)) < 0.5 * (1 + np.max(np.abs(z))):
            z, state, tau = zz, st2, tn
            dt = min(dt * 1.5, 0.2)
        else:
            dt /= 2
            if dt < 1e-6:
                return None
    Y, _ = seeder.build(z, state)
    return Y


def _quartic_and_gradients(params: FamilyParams, Y):
    """f(Y(s)) and the four partials of f along Y(s), as ascending coefficient arrays."""
    a = float(params.a)
    q20, q11, q02 = (float(x) for x in params.q)
    y0, y1, y2, y3 = Y
    m = npoly.polymul
    add = npoly.polyadd
    Q = add(add(q20 * m(y0, y0), q11 * m(y0, y1)), q02 * m(y1, y1))
    W = add(m(y2, y3), Q)
    P = m(m(y0, y1), m(add(y0, y1), add(y0, -a * y1)))
    F = npoly.polysub(m(W, W), P)
    Q0 = add(2 * q20 * y0, q11 * y1)
    Q1 = add(q11 * y0, 2 * q02 * y1)
    P0 = add(add(3 * m(m(y0, y0), y1), 2 * (1 - a) * m(m(y0, y1), y1)), -a * m(m(y1, y1), y1))
    P1 = add(add(m(m(y0, y0), y0), 2 * (1 - a) * m(m(y0, y0), y1)), -3 * a * m(m(y0, y1), y1))
    G = [npoly.polysub(2 * m(W, Q0), P0), npoly.polysub(2 * m(W, Q1), P1), 2 * m(W, y3), 2 * m(W, y2)]
    return _fix(F, 9), [_fix(g, 9) for g in G]


def _fix(c, n):
    c = np.asarray(c, dtype=complex)
    return np.concatenate([c, np.zeros(max(0, n - len(c)))])[:n]


@dataclass
class NewtonTrace:
    defects: list
    chart: int
    certified: bool
    condition: float = math.inf


def newton_touching_in_plane(params: FamilyParams, plane, X0, rng, chart_rank=0,
                             tol=DEFAULT_TOL, max_iter=30):
    """Newton iteration on  restriction - g^2 = 0  for a conic in a fixed plane.

    Unknowns: the six entries of the conic matrix with one of them fixed to 1
    (the ``chart_rank``-th largest among the sizeable ones), and the five
    coefficients of the quartic g.  The conic is parametrized by the pencil
    of lines through a pinned point x* of the starting conic, which adds
    the equation x*^T M x* = 0.  That gives a square 10 x 10 system:
    nine coefficient equations and the pin.
    """
    E = np.array(plane_basis(plane), dtype=complex)
    X0 = np.asarray(X0, dtype=complex)
    # conic matrix of the starting parametrization
    rows = np.zeros((5, 6), dtype=complex)
    for k, (i, j) in enumerate(_IDX):
        rows[:, k] = _fix(npoly.polymul(X0[i], X0[j]), 5) * (1 if i == j else 2)
    m = np.linalg.svd(rows)[2][-1].conj()
    s_star = complex(rng.normal() * 0.5, rng.normal() * 0.5)
    xstar = np.array([npoly.polyval(s_star, X0[i]) for i in range(3)])
    xstar = xstar / np.linalg.norm(xstar)
    Qm, _ = np.linalg.qr(np.column_stack([xstar, rng.normal(size=3), rng.normal(size=3)]).astype(complex))
    d0, d1 = Qm[:, 1], Qm[:, 2]
    basis = []
    for (i, j) in _IDX:
        Ek = np.zeros((3, 3))
        Ek[i, j] = Ek[j, i] = 1
        Xk = parametrize_through(Ek, list(xstar), list(d0), list(d1))
        basis.append(np.array([_fix(p.c, 3) for p in Xk]))
    order = [k for k in np.argsort(-np.abs(m)) if abs(m[k]) >= 0.1 * np.max(np.abs(m))]
    kfix = int(order[chart_rank % len(order)])
    m = m / m[kfix]
    pin = np.array([xstar[i] * xstar[j] * (1 if i == j else 2) for (i, j) in _IDX])
    free = [k for k in range(6) if k != kfix]

    def param_of(mv):
        X = sum(mv[k] * basis[k] for k in range(6))
        return E @ X

    F, _ = _quartic_and_gradients(params, param_of(m))
    g, _ = square_fit(F)
    zvec = np.concatenate([m[free], g])

    def system(zv):
        mv = np.insert(zv[:5], kfix, 1.0)
        gg = zv[5:]
        Yc = param_of(mv)
        F, G = _quartic_and_gradients(params, Yc)
        r = np.zeros(10, dtype=complex)
        r[:9] = F - _fix(npoly.polymul(gg, gg), 9)
        r[9] = pin @ mv
        J = np.zeros((10, 10), dtype=complex)
        for col, k in enumerate(free):
            dY = E @ basis[k]
            J[:9, col] = sum(_fix(npoly.polymul(G[c], dY[c]), 9) for c in range(4))
            J[9, col] = pin[k]
        for k in range(5):
            J[k: k + 5, 5 + k] -= 2 * gg
        return r, J, F, Yc, mv

    defects = []
    r, J, F, Yc, mv = system(zvec)
    defects.append(float(np.linalg.norm(r[:9]) / np.linalg.norm(F)))
    for _ in range(max_iter):
        if defects[-1] < tol * 1e-4:
            break
        try:
            zvec = zvec + np.linalg.solve(J, -r)
        except np.linalg.LinAlgError:
            break
        r, J, F, Yc, mv = system(zvec)
        d = float(np.linalg.norm(r[:9]) / np.linalg.norm(F))
        defects.append(d)
        if not np.isfinite(d):
            break
        if len(defects) > 6 and d > 0.5 * min(defects[:-1]):
            break
    crossing = next((i for i, d in enumerate(defects) if d < tol), None)
    certified = (
        crossing is not None and crossing >= 1
        and defects[crossing - 1] >= 100 * defects[crossing]
        and defects[-1] < tol
    )
    M = np.zeros((3, 3), dtype=complex)
    for v, (i, j) in zip(mv, _IDX):
        M[i, j] = M[j, i] = v
    # condition of the column-scaled Jacobian at the final iterate
    cn = np.linalg.norm(J, axis=0)
    cond = float(np.linalg.cond(J / np.where(cn > 0, cn, 1.0))) if np.all(np.isfinite(J)) else math.inf
    return Yc, M, NewtonTrace(defects, kfix, certified, cond)


@dataclass
class TouchingSearchResult:
    conic: PlaneConic
    defect: float
    retry: int
    trace: NewtonTrace


def find_touching_conic(params: FamilyParams, plane, seed=0, tol=DEFAULT_TOL, retries=16,
                        return_details=False):
    """A touching conic in the given plane, found by Newton iteration in 64-bit floats.

    Each retry draws a starting conic from an explicit family of nodal
    touching curves (see :class:`_Seeder`) continued numerically until its
    plane is close to the requested one, moves it slightly off the touching
    locus, and then runs :func:`newton_touching_in_plane`.  A result is
    accepted when the defect is below ``tol`` and the Newton step that
    crossed below ``tol`` reduced it at least a hundredfold.  Results must
    also be well conditioned (scaled Jacobian condition at most
    ``CONDITION_LIMIT``, distance to the line y0 = y1 = 0 at least
    ``LINE_MARGIN``), irreducible and not symmetric, so that the node and
    the branch values downstream are meaningful in double precision.
    Retries use the independent streams ``(seed, retry)``.
    """
    plane = tuple(plane)
    screen_plane(params, plane, seed)
    target = np.array([complex(c) for c in plane])
    tried = []
    for retry in range(retries):
        rng = np.random.default_rng([int(seed), retry])
        tried.append((int(seed), retry))
        e = complex(rng.uniform(1.3, 2.5), rng.uniform(-0.5, 0.5))
        u1 = complex(rng.uniform(0.2, 0.8), rng.uniform(0.1, 0.5))
        seeder = _Seeder(params, e, u1)
        try:
            with np.errstate(all="ignore"):
                Y = _track_to_plane(seeder, target, rng)
        except (np.linalg.LinAlgError, FloatingPointError, ZeroDivisionError, ValueError):
            Y = None
        if Y is None:
            continue
        k = pivot_index(plane)
        X0 = np.array([Y[i] for i in range(4) if i != k])
        X0 = X0 / np.linalg.norm(X0)
        X0 = X0 + 1e-7 * (rng.normal(size=X0.shape) + 1j * rng.normal(size=X0.shape))
        try:
            Yc, M, trace = newton_touching_in_plane(params, plane, X0, rng, chart_rank=retry, tol=tol)
        except (np.linalg.LinAlgError, FloatingPointError, ZeroDivisionError, ValueError):
            continue
        if not trace.certified or trace.condition > CONDITION_LIMIT:
            continue
        Yc = Yc / np.max(np.abs(Yc))
        param = tuple(Poly(complex(c) for c in row) for row in Yc)
        try:
            conic = PlaneConic(tuple(complex(c) for c in plane), tuple(tuple(complex(x) for x in r) for r in M), param)
            validate_conic(conic)
        except InvalidConic:
            continue
        if not conic.irreducible or is_symmetric(conic, 1e-6):
            continue
        # conics passing close to y0 = y1 = 0 have badly conditioned images
        if line_distance(conic) < LINE_MARGIN:
            continue
        ok, rep = is_touching(params, conic, tol)
        if not ok:
            continue
        if return_details:
            return TouchingSearchResult(conic, rep.defect, retry, trace)
        return conic
    raise NoConvergence(f"no certified touching conic after {retries} retries", tried)


def random_plane(rng: random.Random, span=5):
    """A random plane with integer coefficients and gamma * delta != 0."""
    while True:
        pl = tuple(Fraction(rng.randint(-span, span)) for _ in range(4))
        if pl[2] != 0 and pl[3] != 0:
            return pl
