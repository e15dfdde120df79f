"""Intersection numbers on the quadric blown up at four points.

A class (a, b, n1, n2, n3, n4) stands for O(a, b) pulled back minus the sum
of n_j E_j.  The anticanonical class is (2, 2, 1, 1, 1, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple


class DivisorClass(NamedTuple):
    a: int
    b: int
    n1: int = 0
    n2: int = 0
    n3: int = 0
    n4: int = 0

    @property
    def n(self):
        return (self.n1, self.n2, self.n3, self.n4)

    def __add__(self, other):
        return DivisorClass(*(x + y for x, y in zip(self, other)))

    def scaled(self, k: int):
        return DivisorClass(*(k * x for x in self))


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    return d1.a * d2.b + d2.a * d1.b - sum(x * y for x, y in zip(d1.n, d2.n))


ANTICANONICAL = DivisorClass(2, 2, 1, 1, 1, 1)


def exceptional(j: int) -> DivisorClass:
    n = [0, 0, 0, 0]
    n[j] = -1  # E_j itself is O(0,0) - (-1) E_j
    return DivisorClass(0, 0, *n)


BIDEGREES = ((1, 3), (2, 2), (3, 1))


@dataclass(frozen=True)
class Constraints:
    """Which geometric inputs to impose on the pair of line components."""

    sum_is_twice_anticanonical: bool = True
    transversal: bool = True  # n_ij = 1 for all i, j
    sections: bool = True  # a_i = b_i

    def table(self):
        return [
            {"constraint": "L1 + L2 = -2K", "active": self.sum_is_twice_anticanonical},
            {"constraint": "n_ij = 1", "active": self.transversal},
            {"constraint": "a_i = b_i", "active": self.sections},
            {"constraint": "(a_i, b_i) in {(1,3), (2,2), (3,1)}", "active": True},
            {"constraint": "n_ij in {0, 1, 2}", "active": True},
        ]


def enumerate_line_classes(constraints: Constraints = Constraints()):
    twice_k = ANTICANONICAL.scaled(2)
    sols = []
    for (a1, b1), (a2, b2) in product(BIDEGREES, repeat=2):
        if constraints.sections and (a1 != b1 or a2 != b2):
            continue
        for n1 in product(range(3), repeat=4):
            if constraints.transversal and any(x != 1 for x in n1):
                continue
            for n2 in product(range(3), repeat=4):
                if constraints.transversal and any(x != 1 for x in n2):
                    continue
                L1 = DivisorClass(a1, b1, *n1)
                L2 = DivisorClass(a2, b2, *n2)
                if constraints.sum_is_twice_anticanonical and L1 + L2 != twice_k:
                    continue
                sols.append((L1, L2))
    return sols


def solve_line_classes():
    """The unique pair of classes of the two components; both equal -K."""
    sols = enumerate_line_classes()
    if len(sols) != 1:
        raise AssertionError(f"expected a unique solution, found {len(sols)}")
    L1, L2 = sols[0]
    if L1 != ANTICANONICAL or L2 != ANTICANONICAL:
        raise AssertionError("solution is not the anticanonical class")
    return L1, L2
