"""Exact and numerical tools for a family of quartic double solids with C* symmetry.

The surfaces are f = (y2 y3 + Q(y0, y1))^2 - y0 y1 (y0 + y1)(y0 - a y1) = 0 in
CP^3.  The subpackages cover the family itself, the branch curve on the
quotient cone, touching conics and their lifts, the moduli of the branch
configuration, and a small intersection-lattice computation.
"""

from .errors import InputError, MinitwistorError, VerificationError
from .family import FamilyParams, WITNESS, check_star, normalize_family, singular_points
from .surface import branch_curve, branch_points_over_line, elliptic_invariants
from .conics import (
    PlaneConic,
    conic_image_on_cone,
    contact_with_branch,
    detect_nodes,
    find_touching_conic,
    is_touching,
    lift_minitwistor_line,
)
from .moduli import CircleConfig, are_equivalent, canonical_invariant
from .lattice import ANTICANONICAL, intersect, solve_line_classes

__version__ = "0.1.0"

__all__ = [
    "ANTICANONICAL",
    "CircleConfig",
    "FamilyParams",
    "InputError",
    "MinitwistorError",
    "PlaneConic",
    "VerificationError",
    "WITNESS",
    "are_equivalent",
    "branch_curve",
    "branch_points_over_line",
    "canonical_invariant",
    "check_star",
    "conic_image_on_cone",
    "contact_with_branch",
    "detect_nodes",
    "elliptic_invariants",
    "find_touching_conic",
    "intersect",
    "is_touching",
    "lift_minitwistor_line",
    "normalize_family",
    "singular_points",
    "solve_line_classes",
]
