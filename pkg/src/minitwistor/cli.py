"""Command-line front end.

    minitwistor family check --a 6 --q 0,53/12,-70/3
    minitwistor cone real-locus --a 6 --q 0,53/12,-70/3 --format csv
    minitwistor conic lift --plane 3,-5,2,-2 --seed 0
    minitwistor moduli equiv --points=-1,0,2,inf --points=-1,0,1/2,inf
    minitwistor suite all

Exit status: 0 on success, 1 when a verification fails, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys

from . import conics as C
from .acceptance import run_all
from .algebra import rational_text, to_rational
from .errors import InputError, MeetsLineAtInfinity, MinitwistorError, SymmetricConic, VerificationError
from .family import (
    FamilyParams,
    check_star,
    normalize_family,
    require_star,
    screen_singular_points,
    singular_points,
)
from .lattice import ANTICANONICAL, Constraints, intersect, solve_line_classes
from .moduli import CircleConfig, are_equivalent, canonical_invariant, family_modulus, modulus_of_a
from .surface import (
    branch_curve,
    branch_points_over_line,
    elliptic_invariants,
    fibers_of_a,
    locus_csv,
    locus_svg,
    reducible_fibers,
    sample_real_locus,
)


class UsageError(InputError):
    pass


def _clean(obj):
    """Make floats JSON-safe (no NaN/inf tokens)."""
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        if math.isnan(obj):
            return "nan"
        return obj
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def _family(args, need_q=True):
    if args.a is None:
        raise UsageError("--a is required")
    if args.q is None:
        if need_q:
            raise UsageError("--q is required")
        return None
    return FamilyParams.parse(args.a, args.q)


def _rationals(text, n=None):
    vals = [to_rational(t.strip()) for t in text.split(",")]
    if n is not None and len(vals) != n:
        raise UsageError(f"expected {n} comma-separated rationals")
    return vals


def _load_conic(source):
    if source.startswith("@"):
        with open(source[1:]) as fh:
            text = fh.read()
    elif os.path.exists(source):
        with open(source) as fh:
            text = fh.read()
    else:
        text = source
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--conic is not valid JSON: {exc}") from None
    obj = obj.get("conic", obj)
    try:
        return C.PlaneConic.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise UsageError(f"malformed conic: {exc}") from None


def _plane(args, rng):
    if args.plane:
        return tuple(_rationals(args.plane, 4))
    return C.random_plane(rng)


def _conic_for(args, params, touching=False):
    """The conic named by --conic, or one generated from --seed."""
    if args.conic:
        return _load_conic(args.conic)
    rng = random.Random(args.seed)
    if touching:
        plane = _plane(args, rng)
        return C.find_touching_conic(params, plane, seed=args.seed, tol=args.tol_defect)
    while True:
        conic = C.random_rational_conic(rng)
        if conic.plane[2] != 0 and conic.plane[3] != 0 and C.symmetry_defect(conic) != 0:
            try:
                C.conic_image_on_cone(conic)
            except (MeetsLineAtInfinity, SymmetricConic):
                continue
            return conic


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (payload, exit_code)

def cmd_family(args):
    if args.action == "check":
        v = check_star(_family(args))
        return v.to_json(), 0 if v.holds else 1
    if args.action == "normalize":
        new, rec = normalize_family(_family(args))
        return {"family": new.to_json(), "record": rec.to_json()}, 0
    if args.action == "singular":
        params = _family(args)
        pts = singular_points(params)
        rep = screen_singular_points(params, args.samples, seed=args.seed)
        ok = all(p.certified for p in pts) and not rep.singular
        return {"singular_points": [p.to_json() for p in pts], "screen": rep.to_json()}, 0 if ok else 1
    raise UsageError(args.action)


def cmd_cone(args):
    if args.action in ("j", "fibers"):
        params = _family(args, need_q=False)
        if params is not None:
            require_star(params)
            pts = reducible_fibers(params)
        else:
            pts = fibers_of_a(to_rational(args.a))
        if args.action == "fibers":
            return {"fibers": [p.text() for p in pts]}, 0
        return elliptic_invariants(pts).to_json(), 0
    params = _family(args)
    if args.action == "branch-curve":
        return branch_curve(params).to_json(), 0
    if args.action == "branch-points":
        bps = branch_points_over_line(branch_curve(params))
        return {"branch_points": [{"u": b.point.text(), "multiplicity": b.multiplicity} for b in bps]}, 0
    if args.action == "real-locus":
        samples = sample_real_locus(params, args.samples, seed=args.seed)
        if args.format == "csv":
            return locus_csv(samples), 0
        if args.format == "svg":
            return locus_svg(samples), 0
        rows = [
            {"u": s.u if s.u == "inf" else rational_text(s.u), "w": s.w, "zeta": s.zeta, "component": s.component}
            for s in samples
        ]
        return {"samples": rows}, 0
    raise UsageError(args.action)


def cmd_conic(args):
    params = _family(args)
    require_star(params)
    tol, cl = args.tol_defect, args.tol_cluster
    if args.action == "touch":
        conic = _conic_for(args, params, touching=not args.conic)
        ok, rep = C.is_touching(params, conic, tol, cl)
        return {"conic": conic.to_json(), "touching": ok, "contact": rep.to_json()}, 0
    if args.action == "lift":
        conic = _conic_for(args, params, touching=not args.conic)
        lift = C.lift_minitwistor_line(params, conic, tol, cl)
        return {"conic": conic.to_json(), "lift": lift.to_json()}, 0
    conic = _conic_for(args, params)
    image = C.conic_image_on_cone(conic)
    if args.action == "image":
        return {"conic": conic.to_json(), "image": image.to_json()}, 0
    if args.action == "node":
        nodes = C.detect_nodes(image, cl)
        out = {"image": image.to_json(), "nodes": [n.to_json() for n in nodes]}
        pair = C.node_from_reflection(conic)
        out["cross_check"] = {"u": [pair.u.real, pair.u.imag], "zeta": [pair.zeta.real, pair.zeta.imag]}
        agree = False
        if len(nodes) == 1 and nodes[0].u != "inf":
            du = abs(complex(nodes[0].u) - pair.u)
            dz = abs(complex(nodes[0].zeta) - pair.zeta)
            out["cross_check"]["difference"] = max(du, dz)
            agree = max(du, dz) <= 1e-8
        out["cross_check"]["agrees"] = agree
        return out, 0 if agree else 1
    if args.action == "contact":
        rep = C.contact_with_branch(image, params, cl)
        return {"image": image.to_json(), "contact": rep.to_json()}, 0
    raise UsageError(args.action)


def cmd_moduli(args):
    if args.action == "invariant":
        if not args.points:
            raise UsageError("--points is required")
        inv = canonical_invariant(CircleConfig.parse(args.points[0]))
        return inv.to_json(), 0
    if args.action == "equiv":
        if not args.points or len(args.points) != 2:
            raise UsageError("give two configurations with --points twice")
        c1, c2 = (CircleConfig.parse(p) for p in args.points)
        ok, W = are_equivalent(c1, c2)
        out = {
            "equivalent": ok,
            "invariant": [rational_text(canonical_invariant(c).value) for c in (c1, c2)],
            "witness": W.to_json() if W is not None else None,
        }
        return out, 0
    if args.action == "of-family":
        params = _family(args, need_q=False)
        inv = family_modulus(params) if params is not None else modulus_of_a(to_rational(args.a))
        return inv.to_json(), 0
    raise UsageError(args.action)


def cmd_lattice(args):
    L1, L2 = solve_line_classes()
    return {
        "constraints": Constraints().table(),
        "solution": [list(L1), list(L2)],
        "anticanonical": list(ANTICANONICAL),
        "self_intersection": intersect(ANTICANONICAL, ANTICANONICAL),
        "pairing": intersect(L1, L2),
    }, 0


def cmd_suite(args):
    only = None
    if args.criteria:
        only = {int(x) for x in args.criteria.split(",")}
    results = run_all(args.seed, only)
    for r in results:
        print(r.line(), file=sys.stderr)
    passed = all(r.passed for r in results)
    return {"criteria": [r.to_json() for r in results], "all_passed": passed}, 0 if passed else 1


# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", help="the parameter a > 0 (rational)")
    common.add_argument("--q", help="q20,q11,q02 as comma-separated rationals")
    common.add_argument("--points", action="append", help="four points on RP^1, comma-separated, 'inf' allowed")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "csv", "svg"), default="json")
    common.add_argument("--tol-defect", type=float, default=C.DEFAULT_TOL)
    common.add_argument("--tol-cluster", type=float, default=C.DEFAULT_CLUSTER)
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--samples", type=int, default=20, help="sample count for real-locus and screens")
    common.add_argument("--conic", help="conic as JSON text, or @path to a JSON file")
    common.add_argument("--plane", help="alpha,beta,gamma,delta of a plane")
    common.add_argument("--criteria", help="suite: comma-separated criterion numbers")

    parser = argparse.ArgumentParser(prog="minitwistor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="group", required=True)
    groups = {
        "family": ("check", "normalize", "singular"),
        "cone": ("branch-curve", "branch-points", "j", "fibers", "real-locus"),
        "conic": ("image", "touch", "node", "contact", "lift"),
        "moduli": ("invariant", "equiv", "of-family"),
        "lattice": ("verify",),
        "suite": ("all",),
    }
    for name, actions in groups.items():
        p = sub.add_parser(name, parents=[common])
        p.add_argument("action", choices=actions)
    return parser


HANDLERS = {
    "family": cmd_family,
    "cone": cmd_cone,
    "conic": cmd_conic,
    "moduli": cmd_moduli,
    "lattice": cmd_lattice,
    "suite": cmd_suite,
}


def _emit(payload, args):
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(_clean(payload)) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format != "json" and not (args.group == "cone" and args.action == "real-locus"):
        print("error: csv and svg output exist only for cone real-locus", file=sys.stderr)
        return 2
    try:
        payload, code = HANDLERS[args.group](args)
    except VerificationError as exc:
        print(f"verification failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        if getattr(exc, "seeds_tried", None):
            print(f"seeds tried: {exc.seeds_tried}", file=sys.stderr)
        return 1
    except (InputError, ZeroDivisionError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except MinitwistorError as exc:  # pragma: no cover - every error is one of the two kinds
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(payload, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
