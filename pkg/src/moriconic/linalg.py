"""Exact rational scalars, dense matrices, and binary-form utilities.

Scalars are fractions.Fraction throughout; nothing in this package touches
floating point, because every classification downstream is a discrete verdict
that must be exact.  Binary forms are homogeneous polynomials in (s, t),
stored by coefficient of s^(d-i) t^i.  Irrational roots are never constructed;
existence is certified through the discriminant or gcd degrees.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction

_RAT_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def as_rat(x) -> Fraction:
    """Coerce an int, Fraction, or 'p/q' decimal string to an exact rational.

    Floats are rejected: they would silently break exactness.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        if not _RAT_RE.match(x):
            raise ValueError(f"malformed rational string: {x!r}")
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


def format_rat(x: Fraction) -> str:
    """Canonical wire form: 'p' or 'p/q' with q > 1."""
    return str(x)


class RatMatrix:
    """Dense matrix over Q; all elimination is exact."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = [tuple(as_rat(x) for x in row) for row in entries]
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        if any(len(r) != self.cols for r in rows):
            raise ValueError("ragged rows")
        self.entries: tuple[tuple[Fraction, ...], ...] = tuple(rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"RatMatrix({[list(map(str, r)) for r in self.entries]})"

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(list(zip(*self.entries))) if self.rows else RatMatrix([])

    def __mul__(self, other: "RatMatrix") -> "RatMatrix":
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        ot = list(zip(*other.entries))
        return RatMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot] for row in self.entries]
        )

    def rref(self) -> tuple["RatMatrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        m = [list(r) for r in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            pv = m[r][c]
            m[r] = [x / pv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return RatMatrix(m) if m else RatMatrix([]), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def right_nullspace(self) -> tuple[tuple[Fraction, ...], ...]:
        """Basis of {v : Mv = 0}, one tuple per free column."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [Fraction(0)] * self.cols
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -red.entries[r][fc]
            basis.append(tuple(v))
        return tuple(basis)

    def left_nullspace(self) -> tuple[tuple[Fraction, ...], ...]:
        """Basis of {w : w^T M = 0}."""
        return self.transpose().right_nullspace()


# ---------------------------------------------------------------------------
# Binary forms in (s, t)
# ---------------------------------------------------------------------------


class BinaryForm:
    """Homogeneous form in (s, t); coeffs[i] multiplies s^(degree-i) t^i.

    The zero form keeps its nominal degree.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Iterable):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        cs = tuple(as_rat(c) for c in coeffs)
        if len(cs) != degree + 1:
            raise ValueError(f"expected {degree + 1} coefficients, got {len(cs)}")
        self.degree = degree
        self.coeffs = cs

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(degree, [0] * (degree + 1))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.degree, self.coeffs))

    def __repr__(self) -> str:
        return f"BinaryForm({self.degree}, {[str(c) for c in self.coeffs]})"

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        return BinaryForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(self.degree, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            d = self.degree + other.degree
            out = [Fraction(0)] * (d + 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return BinaryForm(d, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "BinaryForm":
        c = as_rat(c)
        return BinaryForm(self.degree, [c * x for x in self.coeffs])

    def __call__(self, s, t) -> Fraction:
        s, t = as_rat(s), as_rat(t)
        total = Fraction(0)
        for i, c in enumerate(self.coeffs):
            if c:
                total += c * s ** (self.degree - i) * t**i
        return total

    @property
    def t_valuation(self) -> int | None:
        """Multiplicity of the root (1:0), i.e. the power of t dividing the form."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def dehomogenize(self) -> tuple[Fraction, ...]:
        """The univariate polynomial f(s, 1), low degree first, trailing zeros cut."""
        poly = [self.coeffs[self.degree - m] for m in range(self.degree + 1)]
        while poly and poly[-1] == 0:
            poly.pop()
        return tuple(poly)

    def normalized(self) -> "BinaryForm":
        """Scaled to integer coprime coefficients with positive leading entry.

        Leading entry means the first nonzero coefficient (highest s power).
        """
        if self.is_zero:
            return self
        lcm = 1
        for c in self.coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        ints = [v // g for v in ints]
        lead = next(v for v in ints if v != 0)
        if lead < 0:
            ints = [-v for v in ints]
        return BinaryForm(self.degree, ints)

    def to_json(self) -> list[str]:
        return [format_rat(c) for c in self.coeffs]


class AllZero:
    """Distinguished marker: the gcd of a family of identically-zero forms."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "AllZero"


ALL_ZERO = AllZero()


# Univariate helpers over Fraction, low degree first, canonical (no trailing 0).


def _upoly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _upoly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    rem = list(a)
    quot = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    db = len(b) - 1
    lead = b[-1]
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + db] / lead
        quot[k] = c
        if c:
            for j, bj in enumerate(b):
                rem[k + j] -= c * bj
    return _upoly_trim(quot), _upoly_trim(rem)


def _upoly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while b:
        _, r = _upoly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def binary_form_gcd(forms: Sequence[BinaryForm]) -> "BinaryForm | AllZero":
    """Gcd of binary forms, tracked through the common power of t.

    The forms may vanish at (1:0); dehomogenizing at t = 1 erases that root,
    so its multiplicity is restored from the minimum t-valuation.  The result
    divides every input as a form and is normalized to coprime integers with
    positive leading coefficient.  If every input is zero, returns ALL_ZERO.
    """
    if not forms:
        raise ValueError("at least one form required")
    nonzero = [f for f in forms if not f.is_zero]
    if not nonzero:
        return ALL_ZERO
    tpow = min(f.t_valuation for f in nonzero)
    g: list[Fraction] = []
    for f in nonzero:
        g = _upoly_gcd(g, list(f.dehomogenize())) if g else _upoly_trim(list(f.dehomogenize()))
        if len(g) == 1 and tpow == 0:
            break
    dg = len(g) - 1
    degree = dg + tpow
    coeffs = [Fraction(0)] * (degree + 1)
    for m, c in enumerate(g):
        # g's s^m term becomes s^m t^(dg - m + tpow), stored at index degree - m
        coeffs[degree - m] = c
    return BinaryForm(degree, coeffs).normalized()


def binary_form_exact_div(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Quotient f / g as binary forms; raises ValueError if g does not divide f."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero form")
    if f.degree < g.degree:
        raise ValueError("degree of divisor exceeds degree of dividend")
    d = f.degree - g.degree
    if f.is_zero:
        return BinaryForm.zero(d)
    tf, tg = f.t_valuation, g.t_valuation
    if tg > tf:
        raise ValueError("divisor has a higher-order root at (1:0) than dividend")
    quot, rem = _upoly_divmod(list(f.dehomogenize()), list(g.dehomogenize()))
    if rem:
        raise ValueError("forms do not divide exactly")
    tq = tf - tg
    if len(quot) - 1 + tq > d:
        raise ValueError("forms do not divide exactly")
    coeffs = [Fraction(0)] * (d + 1)
    for m, c in enumerate(quot):
        coeffs[d - m] = c
    return BinaryForm(d, coeffs)


def binary_form_divides(g: BinaryForm, f: BinaryForm) -> bool:
    try:
        binary_form_exact_div(f, g)
    except (ValueError, ZeroDivisionError):
        return False
    return True


# ---------------------------------------------------------------------------
# Root structure of forms of degree <= 2
# ---------------------------------------------------------------------------


class RootKind(Enum):
    NO_ROOT = "no_root"
    SIMPLE_ROOT = "simple_root"
    TWO_DISTINCT_ROOTS = "two_distinct_roots"
    DOUBLE_ROOT = "double_root"


@dataclass(frozen=True)
class RootStructure:
    """Roots of a binary form of degree <= 2 on the projective line.

    Rational roots are listed as canonical (s, t) pairs; when the two roots of
    a quadratic are irrational (conjugate over some quadratic extension, real
    or complex), ``roots`` is empty, ``rational`` is False, and the
    discriminant is the existence certificate.
    """

    kind: RootKind
    roots: tuple[tuple[Fraction, Fraction], ...]
    rational: bool
    discriminant: Fraction | None


def _is_square(x: Fraction) -> bool:
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d


def _sqrt(x: Fraction) -> Fraction:
    return Fraction(math.isqrt(x.numerator), math.isqrt(x.denominator))


def _proj_point(s: Fraction, t: Fraction) -> tuple[Fraction, Fraction]:
    # canonical representative: (r, 1) if t != 0, else (1, 0)
    if t != 0:
        return (s / t, Fraction(1))
    return (Fraction(1), Fraction(0))


def quadratic_root_structure(f: BinaryForm) -> RootStructure:
    """Classify the roots of a nonzero binary form of degree 0, 1, or 2."""
    if f.is_zero:
        raise ValueError("root structure of the zero form is undefined")
    if f.degree > 2:
        raise ValueError("only forms of degree <= 2 are classified")
    if f.degree == 0:
        return RootStructure(RootKind.NO_ROOT, (), True, None)
    if f.degree == 1:
        c0, c1 = f.coeffs
        root = _proj_point(-c1, c0) if c0 != 0 else (Fraction(1), Fraction(0))
        return RootStructure(RootKind.SIMPLE_ROOT, (root,), True, None)
    c0, c1, c2 = f.coeffs
    disc = c1 * c1 - 4 * c0 * c2
    if c0 == 0:
        # t divides the form
        if c1 == 0:
            return RootStructure(
                RootKind.DOUBLE_ROOT, ((Fraction(1), Fraction(0)),), True, disc
            )
        roots = ((Fraction(1), Fraction(0)), _proj_point(-c2, c1))
        return RootStructure(RootKind.TWO_DISTINCT_ROOTS, roots, True, disc)
    if disc == 0:
        return RootStructure(
            RootKind.DOUBLE_ROOT, (_proj_point(-c1, 2 * c0),), True, disc
        )
    if _is_square(disc):
        w = _sqrt(disc)
        roots = (_proj_point(-c1 + w, 2 * c0), _proj_point(-c1 - w, 2 * c0))
        return RootStructure(RootKind.TWO_DISTINCT_ROOTS, roots, True, disc)
    return RootStructure(RootKind.TWO_DISTINCT_ROOTS, (), False, disc)
