"""Exact polynomial arithmetic over the rationals.

Univariate polynomials (:class:`Poly`) store ascending coefficients, while
binary forms (:class:`BinaryForm`) follow the textbook convention of
descending powers of the first variable, so that ``coeffs[0]`` multiplies
``y0**d``.  A binary form of formal degree ``d`` whose first ``m``
coefficients vanish has the point ``(1:0)`` (written ``inf``) as a root of
multiplicity ``m``.

:class:`MPoly` is a small sparse multivariate polynomial used for
elimination.  Its coefficients may be any commutative ring elements
(Fraction, int, float, complex), which lets the same resultant code serve
the exact path and the floating path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence

from .errors import DegenerateElimination, InputError, ZeroForm

INF = "inf"


# ---------------------------------------------------------------------------
# rational text encoding

def to_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to Fraction.

    Floats are rejected on purpose: silently turning ``0.1`` into a
    55-bit fraction is almost never what a caller wants.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {x!r}") from exc
    raise InputError(f"not a rational: {x!r}")


def rational_text(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# univariate polynomials

def _trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Poly:
    """Univariate polynomial with ascending coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        self.c = _trim(coeffs)

    @classmethod
    def const(cls, x):
        return cls((x,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots):
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    # -- basic queries
    @property
    def degree(self) -> int:
        return len(self.c) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.c

    @property
    def lc(self):
        return self.c[-1] if self.c else 0

    def coeff(self, i):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __call__(self, x):
        acc = 0
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Poly({list(self.c)!r})"

    # -- ring operations
    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return Poly(a + b for a, b in zip_longest(self.c, other.c, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-a for a in self.c)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(a * other for a in self.c)
        if not self.c or not other.c:
            return Poly()
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(other.c):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        dq = other.degree
        lc = other.lc
        if len(rem) - 1 < dq:
            return Poly(), Poly(rem)
        quo = [0] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            t = rem[k + dq] / lc if not isinstance(lc, int) else Fraction(rem[k + dq], lc)
            quo[k] = t
            if t != 0:
                for j, b in enumerate(other.c):
                    rem[k + j] -= t * b
        return Poly(quo), Poly(rem[:dq])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def deriv(self) -> "Poly":
        return Poly(i * a for i, a in enumerate(self.c) if i)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = Fraction(self.lc)
        return Poly(Fraction(a) / lc for a in self.c)

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly()
        for a in reversed(self.c):
            acc = acc * inner + a
        return acc

    def map(self, fn) -> "Poly":
        return Poly(fn(a) for a in self.c)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over the rationals (Euclid; sizes here are tiny)."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


# ---------------------------------------------------------------------------
# binary forms

@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form in (y0, y1), coefficients descending in y0."""

    degree: int
    coeffs: tuple

    def __post_init__(self):
        if self.degree < 0 or len(self.coeffs) != self.degree + 1:
            raise InputError("coefficient list length must be degree + 1")

    @classmethod
    def of(cls, coeffs: Sequence) -> "BinaryForm":
        cs = tuple(to_rational(c) if isinstance(c, (str, int)) else c for c in coeffs)
        return cls(len(cs) - 1, cs)

    @classmethod
    def from_poly(cls, p: Poly, degree: int | None = None) -> "BinaryForm":
        """Homogenize ``p(u)`` with ``u = y0/y1`` to the given formal degree."""
        d = p.degree if degree is None else degree
        if p.degree > d:
            raise InputError("formal degree below polynomial degree")
        d = max(d, 0)
        return cls(d, tuple(p.coeff(d - i) for i in range(d + 1)))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def dehomogenize(self) -> Poly:
        """``f(u, 1)`` as an ascending polynomial in u."""
        return Poly(reversed(self.coeffs))

    @property
    def inf_multiplicity(self) -> int:
        if self.is_zero:
            raise ZeroForm("zero form has no well-defined roots")
        m = 0
        for c in self.coeffs:
            if c != 0:
                break
            m += 1
        return m

    def __call__(self, y0, y1):
        d = self.degree
        return sum(c * y0 ** (d - i) * y1 ** i for i, c in enumerate(self.coeffs))

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return BinaryForm(self.degree, tuple(c * other for c in self.coeffs))
        p = Poly(reversed(self.coeffs)) * Poly(reversed(other.coeffs))
        return BinaryForm.from_poly(p, self.degree + other.degree)

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise InputError("adding forms of different degree")
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return BinaryForm(self.degree, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, n):
        out = BinaryForm(0, (Fraction(1),))
        for _ in range(n):
            out = out * self
        return out

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [rational_text(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "BinaryForm":
        cs = tuple(to_rational(c) for c in obj["coeffs"])
        if int(obj["degree"]) != len(cs) - 1:
            raise InputError("degree does not match coefficient count")
        return cls(len(cs) - 1, cs)


# ---------------------------------------------------------------------------
# square-free decomposition

def yun(p: Poly):
    """Yun's square-free decomposition of a nonconstant univariate ``p``.

    Returns ``(lc, [(factor, exponent), ...])`` with monic, pairwise coprime,
    square-free factors and ``p == lc * prod(factor**exponent)``.
    """
    if p.is_zero():
        raise ZeroForm("zero polynomial")
    lc = p.lc
    if p.degree <= 0:
        return lc, []
    f = p.monic()
    out = []
    df = f.deriv()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a) - b.deriv()
    i = 1
    while b.degree > 0:
        d = poly_gcd(b, c)
        if d.degree > 0:
            out.append((d, i))
        b = b.exact_div(d)
        c = c.exact_div(d) - b.deriv()
        i += 1
    return lc, out


@dataclass(frozen=True)
class SquareFreeDecomposition:
    constant: Fraction
    factors: tuple  # of (BinaryForm, exponent), exponents strictly increasing

    def reassemble(self) -> BinaryForm:
        total = sum(f.degree * e for f, e in self.factors)
        out = BinaryForm(0, (Fraction(self.constant),))
        for f, e in self.factors:
            out = out * (f ** e)
        if out.degree != total:  # pragma: no cover - guarded by construction
            raise ArithmeticError("degree bookkeeping failed")
        return out


def double_root_profile(f: BinaryForm) -> SquareFreeDecomposition:
    """Square-free decomposition of a binary form, ``inf`` included.

    A root at ``inf`` of multiplicity ``m`` contributes the linear form
    ``y1`` to the factor of exponent ``m`` (created if absent).
    """
    if f.is_zero:
        raise ZeroForm("zero form")
    m = f.inf_multiplicity
    lc, facs = yun(f.dehomogenize())
    by_exp = {e: g for g, e in facs}
    y1 = Poly((1,))  # homogenizing a constant one degree up gives y1
    forms = {}
    for e, g in by_exp.items():
        forms[e] = BinaryForm.from_poly(g)
    if m:
        extra = BinaryForm.from_poly(y1, 1)
        forms[m] = forms[m] * extra if m in forms else extra
    factors = tuple((forms[e], e) for e in sorted(forms))
    return SquareFreeDecomposition(Fraction(lc), factors)


def is_perfect_square(f: BinaryForm):
    """Return ``(g, c)`` with ``g**2 == c*f`` and ``c > 0``, or None.

    ``g`` is normalized to have a leading (first nonzero) coefficient of 1
    before the constant is fixed, so the answer is unique up to the sign of g.
    """
    if f.degree % 2:
        raise InputError("perfect-square test needs even degree")
    if f.is_zero:
        raise ZeroForm("zero form")
    dec = double_root_profile(f)
    if any(e % 2 for _, e in dec.factors):
        return None
    g = BinaryForm(0, (Fraction(1),))
    for h, e in dec.factors:
        g = g * (h ** (e // 2))
    # degree bookkeeping: g has degree deg f / 2
    g2 = g * g
    c = Fraction(1) / dec.constant  # g2 == f / constant
    if c <= 0:
        return None
    assert g2 == BinaryForm(f.degree, tuple(x * c for x in f.coeffs))
    return g, c


# ---------------------------------------------------------------------------
# Sturm sequences and real algebraic numbers

def sturm_chain(p: Poly):
    chain = [p, p.deriv()]
    while not chain[-1].is_zero():
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append(-r)
    return [q for q in chain if not q.is_zero()]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs) -> int:
    s = [v for v in signs if v]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def sign_variations(chain, x) -> int:
    if x == math.inf:
        return _variations([_sign(q.lc) for q in chain])
    if x == -math.inf:
        return _variations([_sign(q.lc) * (-1) ** q.degree for q in chain])
    return _variations([_sign(q(x)) for q in chain])


def count_real_roots(p: Poly, lo=-math.inf, hi=math.inf) -> int:
    """Distinct real roots of ``p`` in ``(lo, hi)``; endpoints must not be roots."""
    ch = sturm_chain(p)
    return sign_variations(ch, lo) - sign_variations(ch, hi)


def cauchy_bound(p: Poly) -> Fraction:
    lc = abs(Fraction(p.lc))
    return 1 + max((abs(Fraction(a)) / lc for a in p.c[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class AlgebraicReal:
    """A real root of a square-free rational polynomial.

    The root is the unique root of ``poly`` in the open interval
    ``(lo, hi)``; when ``lo == hi`` the root is that rational number.
    """

    poly: Poly
    lo: Fraction
    hi: Fraction

    @classmethod
    def rational(cls, q) -> "AlgebraicReal":
        q = Fraction(q)
        return cls(Poly((-q, 1)), q, q)

    @property
    def exact(self):
        """The value as a Fraction when it is rational and known, else None."""
        if self.lo == self.hi:
            return self.lo
        if self.poly.degree == 1:
            return -Fraction(self.poly.c[0]) / Fraction(self.poly.c[1])
        return None

    def refine(self, width) -> "AlgebraicReal":
        if self.exact is not None:
            q = self.exact
            return AlgebraicReal(self.poly, q, q)
        lo, hi = self.lo, self.hi
        slo = _sign(self.poly(lo))
        while hi - lo > width:
            mid = (lo + hi) / 2
            sm = _sign(self.poly(mid))
            if sm == 0:
                return AlgebraicReal(self.poly, mid, mid)
            if sm == slo:
                lo = mid
            else:
                hi = mid
        return AlgebraicReal(self.poly, lo, hi)

    def __float__(self):
        q = self.exact
        if q is not None:
            return float(q)
        r = self.refine(Fraction(1, 2**60) * max(1, abs(self.lo)))
        return float((r.lo + r.hi) / 2)

    def compare(self, q) -> int:
        """Sign of ``self - q`` for a rational ``q``."""
        q = Fraction(q)
        e = self.exact
        if e is not None:
            return _sign(e - q)
        if self.poly(q) == 0 and self.lo < q < self.hi:
            return 0
        r = self
        while r.lo <= q <= r.hi:
            r = r.refine((r.hi - r.lo) / 4)
            if r.exact is not None:
                return _sign(r.exact - q)
        return 1 if r.lo > q else -1

    def text(self) -> str:
        e = self.exact
        if e is not None:
            return rational_text(e)
        return f"root of {list(map(rational_text, self.poly.c))} in ({rational_text(self.lo)}, {rational_text(self.hi)})"


def _isolate_squarefree(p: Poly):
    """Isolating intervals for the real roots of a square-free ``p``."""
    if p.degree <= 0:
        return []
    if p.degree == 1:
        return [AlgebraicReal.rational(-Fraction(p.c[0]) / Fraction(p.c[1]))]
    ch = sturm_chain(p)
    b = cauchy_bound(p)
    out = []
    stack = [(-b, b)]
    while stack:
        lo, hi = stack.pop()
        n = sign_variations(ch, lo) - sign_variations(ch, hi)
        if n == 0:
            continue
        if n == 1:
            out.append(AlgebraicReal(p, lo, hi))
            continue
        mid = (lo + hi) / 2
        k = 1
        while p(mid) == 0:
            # never split exactly on a root
            if k > 64:
                break
            mid = lo + (hi - lo) * Fraction(2 * k + 1, 4 * k + 4)
            k += 1
        if p(mid) == 0:
            # pathological only for exact rational roots; record it
            out.append(AlgebraicReal.rational(mid))
            eps = (hi - lo) / 2**20
            while p(mid - eps) == 0 or p(mid + eps) == 0:
                eps /= 2
            stack.append((lo, mid - eps))
            stack.append((mid + eps, hi))
            continue
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort(key=lambda r: (r.lo, r.hi))
    return [_pin_rational(r) for r in out]


def _primitive_lead(p: Poly) -> int:
    """Leading coefficient of the primitive integer multiple of p."""
    den = 1
    for a in p.c:
        den = math.lcm(den, Fraction(a).denominator)
    ints = [int(Fraction(a) * den) for a in p.c]
    g = 0
    for a in ints:
        g = math.gcd(g, a)
    return abs(ints[-1] // g)


def _pin_rational(r: AlgebraicReal) -> AlgebraicReal:
    """Replace an isolating interval by the exact value when the root is rational.

    A rational root p/q of an integer polynomial has q dividing the leading
    coefficient L, and two distinct fractions with denominators <= L differ
    by at least 1/L**2, so after refining below that width the only possible
    candidate is the best approximation with denominator <= L.
    """
    if r.exact is not None:
        return r
    lead = _primitive_lead(r.poly)
    rr = r.refine(Fraction(1, 2 * lead * lead))
    if rr.exact is not None:
        return AlgebraicReal.rational(rr.exact)
    cand = ((rr.lo + rr.hi) / 2).limit_denominator(lead)
    if rr.lo < cand < rr.hi and r.poly(cand) == 0:
        return AlgebraicReal.rational(cand)
    return r


@dataclass(frozen=True)
class RealRoot:
    value: object  # AlgebraicReal or INF
    multiplicity: int

    @property
    def is_inf(self) -> bool:
        return self.value == INF

    def text(self) -> str:
        return INF if self.is_inf else self.value.text()


def _root_key(r: RealRoot):
    return (1, 0) if r.is_inf else (0, float(r.value))


def isolate_real_roots(f: BinaryForm):
    """All real projective roots of ``f`` with multiplicities, ``inf`` last."""
    if f.is_zero:
        raise ZeroForm("zero form")
    m = f.inf_multiplicity
    p = f.dehomogenize()
    out = []
    if p.degree > 0:
        _, facs = yun(p)
        for g, e in facs:
            for r in _isolate_squarefree(g):
                out.append(RealRoot(r, e))
    out.sort(key=_root_key)
    if m:
        out.append(RealRoot(INF, m))
    return out


# ---------------------------------------------------------------------------
# sparse multivariate polynomials and resultants

class MPoly:
    """Sparse polynomial: exponent tuples mapped to coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def const(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n, i, c=1):
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): c})

    def is_zero(self):
        return not self.terms

    def _lift(self, other):
        if isinstance(other, MPoly):
            return other
        return MPoly.const(self.n, other)

    def __add__(self, other):
        other = self._lift(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return MPoly(self.n, t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return MPoly(self.n, {k: v * other for k, v in self.terms.items()})
        t = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                t[k] = t.get(k, 0) + v1 * v2
        return MPoly(self.n, t)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = MPoly.const(self.n, 1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._lift(other)
        return self.n == other.n and self.terms == other.terms

    def __repr__(self):
        return f"MPoly({self.n}, {self.terms!r})"

    def degree_in(self, i) -> int:
        return max((k[i] for k in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def coeffs_in(self, i):
        """List (ascending) of coefficient polynomials with respect to variable i."""
        d = self.degree_in(i)
        out = [MPoly(self.n) for _ in range(d + 1)]
        for k, v in self.terms.items():
            kk = list(k)
            kk[i] = 0
            out[k[i]].terms[tuple(kk)] = v
        return out

    def diff(self, i):
        t = {}
        for k, v in self.terms.items():
            if k[i]:
                kk = list(k)
                kk[i] -= 1
                t[tuple(kk)] = v * k[i]
        return MPoly(self.n, t)

    def __call__(self, *xs):
        acc = 0
        for k, v in self.terms.items():
            term = v
            for x, e in zip(xs, k):
                if e:
                    term = term * x ** e
            acc = acc + term
        return acc

    def subs(self, i, value: "MPoly"):
        """Substitute variable i by a polynomial."""
        out = MPoly(self.n)
        cs = self.coeffs_in(i)
        for e in range(len(cs) - 1, -1, -1):
            out = out * value + cs[e]
        return out

    def to_univariate(self, i) -> Poly:
        """Read off a polynomial that only involves variable i."""
        cs = {}
        for k, v in self.terms.items():
            if any(e for j, e in enumerate(k) if j != i):
                raise InputError("polynomial involves other variables")
            cs[k[i]] = v
        d = max(cs, default=-1)
        return Poly(cs.get(j, 0) for j in range(d + 1))

    @classmethod
    def from_univariate(cls, n, i, p: Poly):
        out = {}
        for j, c in enumerate(p.c):
            e = [0] * n
            e[i] = j
            out[tuple(e)] = c
        return cls(n, out)

    def map(self, fn):
        return MPoly(self.n, {k: fn(v) for k, v in self.terms.items()})


def determinant(mat, one=1, zero=0):
    """Division-free determinant over any commutative ring.

    Laplace expansion with memoization over column subsets: O(n 2^n) ring
    operations, fine for the Sylvester matrices (n <= 8) used here.
    """
    n = len(mat)
    if n == 0:
        return one
    dp = {0: one}
    for row in range(n):
        new = {}
        for mask, val in dp.items():
            # sign of placing the next row's entry in column j: count of
            # already used columns to the right of j
            for j in range(n):
                if mask >> j & 1:
                    continue
                a = mat[row][j]
                if isinstance(a, (int, Fraction, float, complex)) and a == 0:
                    continue
                if isinstance(a, MPoly) and a.is_zero():
                    continue
                higher = bin(mask >> (j + 1)).count("1")
                term = val * a
                if higher % 2:
                    term = -term
                m2 = mask | (1 << j)
                new[m2] = new[m2] + term if m2 in new else term
        dp = new
    return dp.get((1 << n) - 1, zero)


def sylvester(fc, gc, zero):
    """Sylvester matrix from descending coefficient lists."""
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(fc) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(gc) + [zero] * (size - n - 1 - i))
    return rows


def resultant_eliminate(f: MPoly, g: MPoly, eliminate: int) -> MPoly:
    """Resultant of f and g with respect to variable ``eliminate``."""
    if f.is_zero() or g.is_zero():
        raise DegenerateElimination("zero input polynomial")
    if f.degree_in(eliminate) < 1 or g.degree_in(eliminate) < 1:
        raise DegenerateElimination("no positive degree in the eliminated variable")
    fc = list(reversed(f.coeffs_in(eliminate)))
    gc = list(reversed(g.coeffs_in(eliminate)))
    zero = MPoly(f.n)
    mat = sylvester(fc, gc, zero)
    return determinant(mat, one=MPoly.const(f.n, 1), zero=zero)


def univariate_resultant(f: Poly, g: Poly):
    """Resultant of two univariate polynomials (coefficients any ring)."""
    fc = list(reversed(f.c))
    gc = list(reversed(g.c))
    if len(fc) < 2 and len(gc) < 2:
        return 1
    return determinant(sylvester(fc, gc, 0))
