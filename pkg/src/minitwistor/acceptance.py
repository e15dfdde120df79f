"""The acceptance suite: ten end-to-end checks with time limits.

Each check returns a :class:`CriterionResult`.  A criterion passes when its
assertions hold *and* it finished within its time limit.  Randomness is
derived from the suite seed, so repeated runs give identical results.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import conics as C
from .algebra import rational_text
from .errors import InvalidConic, MeetsLineAtInfinity, MinitwistorError, NoConvergence, SymmetricConic
from .family import (
    WITNESS,
    check_star,
    random_star_family,
    screen_singular_points,
    singular_points,
    star_family_through,
)
from .lattice import ANTICANONICAL, intersect, solve_line_classes
from .moduli import CircleConfig, are_equivalent, canonical_invariant, modulus_of_a
from .projective import Mobius, ProjPoint1
from .surface import (
    EMPTY,
    T2_SPHERE,
    T4_SPHERE,
    branch_curve,
    branch_points_over_line,
    classify_u,
    elliptic_invariants,
    fibers_of_a,
    j_closed_form,
    q_shift_isomorphism,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    elapsed: float
    limit: float
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number:2d} {self.name}: {self.detail} ({self.elapsed:.2f}s / {self.limit:g}s)"

    def to_json(self):
        return {
            "criterion": self.number,
            "name": self.name,
            "passed": self.passed,
            "elapsed_s": round(self.elapsed, 3),
            "limit_s": self.limit,
            "detail": self.detail,
        }


class CheckFailed(Exception):
    pass


def _require(cond, message):
    if not cond:
        raise CheckFailed(message)


def _run(number, name, limit, fn, *args):
    t0 = time.perf_counter()
    try:
        detail = fn(*args)
        ok = True
    except (CheckFailed, MinitwistorError, AssertionError) as exc:
        detail = f"{type(exc).__name__}: {exc}"
        ok = False
    elapsed = time.perf_counter() - t0
    if ok and elapsed > limit:
        ok = False
        detail += "; time limit exceeded"
    return CriterionResult(number, name, ok, elapsed, limit, detail)


def _random_star_families(rng, n, a=None):
    return [random_star_family(rng, a) for _ in range(n)]


# ---------------------------------------------------------------------------

def check_star_witness(seed):
    v = check_star(WITNESS)
    _require(v.holds, "star condition fails for the witness")
    _require(v.lambda0 == 8 and v.interval == "(a,inf)", f"double root {v.lambda0} in {v.interval}")
    return "double root 8 in (6, inf), exact"


def check_branch_set(seed, n=50):
    rng = random.Random(seed)
    for params in _random_star_families(rng, n):
        pts = branch_points_over_line(branch_curve(params))
        got = [p.point for p in pts]
        want = [ProjPoint1.of(x) for x in (-1, 0, params.a, "inf")]
        _require(len(got) == 4 and all(p.multiplicity == 1 for p in pts), "branch points not four simple points")
        _require(all(any(g == w for g in got) for w in want),
                 f"branch set {[g.text() for g in got]} for a = {rational_text(params.a)}")
    return f"{n} families, branch set {{-1, 0, a, inf}} exactly"


def check_j_invariant(seed, n=10):
    rng = random.Random(seed)
    a = Fraction(6)
    want = j_closed_form(a)
    for params in _random_star_families(rng, n, a):
        pts = [bp.point for bp in branch_points_over_line(branch_curve(params))]
        got = elliptic_invariants(pts).j
        _require(got == want, f"j = {got}, closed form {want}")
    j1 = elliptic_invariants(fibers_of_a(1)).j
    _require(j1 == 1728, f"a = 1 gives j = {j1}")
    return f"{n} families at a = 6 give j = {rational_text(want)}; a = 1 gives 1728"


def check_q_shift(seed, n=20):
    rng = random.Random(seed)
    for _ in range(n):
        p1 = random_star_family(rng)
        lam0 = check_star(p1).lambda0
        w0 = p1.Q_poly(lam0)
        while True:
            q20 = Fraction(rng.randint(-40, 40), rng.randint(1, 8))
            p2 = star_family_through(p1.a, lam0, w0 * rng.choice((1, -1)), q20)
            if p2 != p1 and check_star(p2).holds:
                break
        iso = q_shift_isomorphism(p1, p2)
        _require(iso.verified, "shifted curve differs from the target")
    return f"{n} pairs, polynomial identity exact"


def check_singular_points(seed, n=20, samples=10_000):
    rng = random.Random(seed)
    families = _random_star_families(rng, n)
    per = samples // n
    total = 0
    for k, params in enumerate(families):
        pts = singular_points(params)
        _require(len(pts) == 3 and all(p.certified for p in pts), "gradient does not vanish exactly")
        rep = screen_singular_points(params, per, seed=seed * 1000 + k)
        total += rep.samples
        _require(not rep.singular, f"screen found {len(rep.singular)} extra singular points")
    _require(total >= samples, f"only {total} samples screened")
    return f"{n} families certified; {total} screen samples, no extra singular point"


def check_nodal_images(seed, n=20):
    rng = random.Random(seed)
    worst = 0.0
    done = 0
    while done < n:
        conic = C.random_rational_conic(rng)
        if conic.plane[2] == 0 or conic.plane[3] == 0:
            continue  # plane contains a C*-orbit direction; no reflection to compare with
        try:
            image = C.conic_image_on_cone(conic)
        except (SymmetricConic, MeetsLineAtInfinity, InvalidConic):
            continue
        _require(image.A == 1 and image.b.degree <= 2 and image.c.degree <= 4, "image shape")
        nodes = C.detect_nodes(image)
        _require(len(nodes) == 1 and nodes[0].kind == C.NODE, f"singularities {[x.to_json() for x in nodes]}")
        node = nodes[0]
        _require(node.u != "inf", "node over u = inf")
        pair = C.node_from_reflection(conic)
        du = abs(complex(node.u) - pair.u)
        dz = abs(complex(node.zeta) - pair.zeta)
        worst = max(worst, du, dz)
        _require(du <= 1e-8 and dz <= 1e-8, f"cross-check off by {max(du, dz):.2e}")
        done += 1
    return f"{n} conics, one node each, cross-check within {worst:.1e}"


def check_touching_pipeline(seed, n=10, tol=C.DEFAULT_TOL):
    rng = random.Random(seed)
    done = 0
    planes = 0
    while done < n:
        plane = C.random_plane(rng)
        planes += 1
        try:
            conic = C.find_touching_conic(WITNESS, plane, seed=seed + planes, tol=tol)
        except NoConvergence:
            continue
        touching, rep = C.is_touching(WITNESS, conic, tol)
        _require(touching and rep.defect < tol, f"defect {rep.defect}")
        image = C.conic_image_on_cone(conic)
        contact = C.contact_with_branch(image, WITNESS)
        _require(contact.multiplicities == [2, 2, 2, 2], f"contact profile {contact.multiplicities}")
        lift = C.lift_minitwistor_line(WITNESS, conic, tol)
        _require(lift.verdict == C.SPLITS_NODAL, f"lift verdict {lift.verdict}")
        done += 1
    return f"{n} touching conics from {planes} planes; profile (2,2,2,2); SPLITS_NODAL"


def check_real_locus(seed, n=20):
    rng = random.Random(seed)
    for _ in range(n):
        a = Fraction(rng.randint(1, 400), rng.randint(1, 40))
        _require(classify_u(a, -1) == T2_SPHERE and classify_u(a, 0) == T2_SPHERE, "[-1, 0] endpoints")
        _require(classify_u(a, a) == T4_SPHERE and classify_u(a, "inf") == T4_SPHERE, "[a, inf] endpoints")
        for _ in range(50):
            u = Fraction(rng.randint(-4000, 4000), rng.randint(1, 300))
            want = T2_SPHERE if -1 <= u <= 0 else T4_SPHERE if u >= a else EMPTY
            got = classify_u(a, u)
            _require(got == want, f"u = {u}, a = {a}: {got}")
            radicand = u * (u + 1) * (u - a)
            _require((radicand >= 0) == (got != EMPTY), "sign partition")
        _require(not (0 >= a), "components overlap")
    return f"{n} values of a, exact partition, components disjoint"


def _random_psl2(rng):
    while True:
        m = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)]
        if m[0] * m[3] - m[1] * m[2] > 0:
            return Mobius(*m)


def check_moduli(seed, n=500):
    rng = random.Random(seed)
    for _ in range(n):
        pts = set()
        while len(pts) < 4:
            pts.add(Fraction(rng.randint(-50, 50), rng.randint(1, 7)))
        pts = list(pts)
        if rng.random() < 0.3:
            pts[0] = "inf"
        cfg = CircleConfig.of(pts)
        T = _random_psl2(rng)
        moved = CircleConfig.of([T(p) for p in cfg.points])
        _require(canonical_invariant(cfg).value == canonical_invariant(moved).value, "invariant changed")
    witnesses = 0
    for _ in range(10):
        a = Fraction(rng.randint(1, 60), rng.randint(1, 12))
        ok, W = are_equivalent(CircleConfig.of([-1, 0, a, "inf"]), CircleConfig.of([-1, 0, 1 / a, "inf"]))
        _require(ok and W.det > 0, f"a = {a} and 1/a not equivalent")
        witnesses += 1
    m1, m6 = modulus_of_a(1).value, modulus_of_a(6).value
    _require(m1 == 2 and m6 == Fraction(7, 6), f"invariants {m1}, {m6}")
    return f"{n} transforms; {witnesses} a <-> 1/a witnesses; a = 1 vs 6: 2 vs 7/6"


def check_lattice(seed):
    _require(intersect(ANTICANONICAL, ANTICANONICAL) == 4, "(-K)^2 != 4")
    L1, L2 = solve_line_classes()
    _require(L1 == L2 == ANTICANONICAL, "solution differs from -K")
    return "(-K)^2 = 4; unique solution (2,2,1,1,1,1) twice"


CRITERIA = [
    (1, "star witness", 1.0, check_star_witness),
    (2, "branch set", 30.0, check_branch_set),
    (3, "j-invariant", 5.0, check_j_invariant),
    (4, "Q-shift isomorphism", 5.0, check_q_shift),
    (5, "singular points", 60.0, check_singular_points),
    (6, "nodal images", 120.0, check_nodal_images),
    (7, "touching-conic pipeline", 300.0, check_touching_pipeline),
    (8, "real locus", 5.0, check_real_locus),
    (9, "moduli", 10.0, check_moduli),
    (10, "lattice", 1.0, check_lattice),
]


def run_criterion(number: int, seed: int = 0) -> CriterionResult:
    for num, name, limit, fn in CRITERIA:
        if num == number:
            return _run(num, name, limit, fn, seed)
    raise KeyError(number)


def run_all(seed: int = 0, only=None):
    return [run_criterion(num, seed) for num, *_ in CRITERIA if only is None or num in only]
