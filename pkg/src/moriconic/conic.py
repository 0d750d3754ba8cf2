"""Wedge coordinates of the degree-2 map attached to a Kronecker module.

A module M gives a 2 x (n+1) matrix G of binary linear forms (column 1 of M
pairs with s, column 2 with t); its 2x2 minors are the Pluecker coordinates
p_I(s, t), one binary quadratic per pair I = {i < j}, tracing out a conic in
the Pluecker space of the Grassmannian of codimension-2 subspaces.  The
envelope is the span of the coefficient vectors of s^2, st, t^2 across all I,
a plane for an honest conic.

For a one-parameter family M(lambda) the wedge may vanish identically at
lambda = 0 without vanishing nearby; the elementary modification divides all
coordinates by the maximal common power of lambda and then specializes.
Residual base points of the modified conic (common roots of the coordinates
at lambda = 0) are reported so the caller can see where stabilization would
act; the blow-up charts beyond that point are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IdenticallyZero, ZeroConic
from .kronecker import KroneckerModule, LinearForm, column_minors, index_pairs
from .linalg import (
    ALL_ZERO,
    BinaryForm,
    RatMatrix,
    as_rat,
    binary_form_gcd,
    quadratic_root_structure,
)


class PluckerConic:
    """Tuple of binary quadratics p_I indexed by pairs I = {i < j} in {0..n}."""

    __slots__ = ("n", "coords")

    def __init__(self, n: int, coords: dict):
        expected = index_pairs(n)
        if set(coords) != set(expected):
            raise ValueError("coordinates must cover every index pair exactly once")
        for f in coords.values():
            if f.degree != 2:
                raise ValueError("each Pluecker coordinate must be a binary quadratic")
        self.n = n
        self.coords = {pair: coords[pair] for pair in expected}

    @property
    def is_zero(self) -> bool:
        return all(f.is_zero for f in self.coords.values())

    def forms(self) -> list[BinaryForm]:
        return list(self.coords.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PluckerConic):
            return NotImplemented
        return self.n == other.n and self.coords == other.coords

    def __repr__(self) -> str:
        nz = {ij: f for ij, f in self.coords.items() if not f.is_zero}
        return f"PluckerConic(n={self.n}, nonzero={nz!r})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "coords": {f"{i},{j}": self.coords[(i, j)].to_json() for i, j in self.coords},
        }

    @classmethod
    def from_json(cls, doc: dict) -> "PluckerConic":
        n = doc["n"]
        coords = {}
        for key, cs in doc["coords"].items():
            i, j = (int(part) for part in key.split(","))
            coords[(i, j)] = BinaryForm(2, [as_rat(c) for c in cs])
        return cls(n, coords)


@dataclass(frozen=True)
class Envelope:
    """Span of the coefficient vectors of a conic, in reduced echelon form."""

    dim: int
    basis: tuple[tuple[Fraction, ...], ...]


def plucker_conic(M: KroneckerModule) -> PluckerConic:
    """Wedge coordinates of the pencil matrix of M, one quadratic per pair."""
    minors = column_minors(M)
    return PluckerConic(M.n, dict(zip(index_pairs(M.n), minors)))


def envelope(c: PluckerConic) -> Envelope:
    """Linear envelope of the conic: the span of its three coefficient slices."""
    if c.is_zero:
        raise ZeroConic("the envelope of the zero conic is undefined")
    slices = [[f.coeffs[k] for f in c.coords.values()] for k in range(3)]
    red, pivots = RatMatrix(slices).rref()
    basis = tuple(red.row(i) for i in range(len(pivots)))
    return Envelope(len(pivots), basis)


def conic_degree(c: PluckerConic) -> int:
    """Parametrized degree: 2 minus the degree of the common factor.

    A common linear factor of all coordinates drops the degree by one; a
    common quadratic factor means the map is constant.
    """
    if c.is_zero:
        raise ZeroConic("the degree of the zero conic is undefined")
    g = binary_form_gcd(c.forms())
    return 2 - g.degree


class LambdaFamily:
    """2x2 matrix whose entries are polynomials in lambda with LinearForm coefficients."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries):
        rows = tuple(tuple(tuple(e) for e in row) for row in entries)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("entries must form a 2x2 matrix")
        for row in rows:
            for entry in row:
                for f in entry:
                    if not isinstance(f, LinearForm) or f.n != n:
                        raise ValueError("entry coefficients must be LinearForms sharing n")
        self.n = n
        self.entries = rows

    def specialize(self, lam) -> KroneckerModule:
        """The module at a rational parameter value; raises if the matrix is zero there."""
        lam = as_rat(lam)
        forms = []
        for row in self.entries:
            for entry in row:
                f = LinearForm.zero(self.n)
                power = Fraction(1)
                for coeff_form in entry:
                    f = f + power * coeff_form
                    power *= lam
                forms.append(f)
        return KroneckerModule(self.n, *forms)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "matrix": [
                [[f.to_json() for f in entry] for entry in row] for row in self.entries
            ],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "LambdaFamily":
        n = doc["n"]
        rows = doc["matrix"]
        entries = [
            [[LinearForm(n, tuple(as_rat(c) for c in f)) for f in entry] for entry in row]
            for row in rows
        ]
        return cls(n, entries)


@dataclass(frozen=True)
class ModificationResult:
    """Outcome of the lambda-power division step.

    k is the power of lambda divided out of every wedge coordinate, conic is
    the modified conic at lambda = 0, base_gcd the common factor of its
    coordinates (degree 0 when base-point-free), and base_points the rational
    common roots, where the modified map still fails to be defined.
    """

    k: int
    conic: PluckerConic
    base_gcd: BinaryForm
    base_points: tuple[tuple[Fraction, Fraction], ...]


def _entry_pairs(entry, i: int):
    """Coefficients of x_i through the lambda-polynomial entry."""
    return [f.coeffs[i] for f in entry]


def _lambda_minor(g1i, g1j, g2i, g2j) -> list[BinaryForm]:
    """Minor of two lambda-polynomial columns of G, as a lambda-list of quadratics.

    Each argument is a list over lambda-degree of (a, b) pairs standing for
    the linear form a*s + b*t.
    """

    def conv(u, v):
        if not u or not v:
            return []
        out = [BinaryForm.zero(2) for _ in range(len(u) + len(v) - 1)]
        for d1, (a1, b1) in enumerate(u):
            for d2, (a2, b2) in enumerate(v):
                prod = BinaryForm(2, (a1 * a2, a1 * b2 + b1 * a2, b1 * b2))
                out[d1 + d2] = out[d1 + d2] + prod
        return out

    plus, minus = conv(g1i, g2j), conv(g1j, g2i)
    size = max(len(plus), len(minus))
    out = []
    for d in range(size):
        a = plus[d] if d < len(plus) else BinaryForm.zero(2)
        b = minus[d] if d < len(minus) else BinaryForm.zero(2)
        out.append(a - b)
    while out and out[-1].is_zero:
        out.pop()
    return out


def _family_minors(F: LambdaFamily) -> dict:
    (e11, e12), (e21, e22) = F.entries

    def g_entry(left, right, i):
        a = _entry_pairs(left, i)
        b = _entry_pairs(right, i)
        size = max(len(a), len(b))
        return [
            (a[d] if d < len(a) else Fraction(0), b[d] if d < len(b) else Fraction(0))
            for d in range(size)
        ]

    g1 = [g_entry(e11, e12, i) for i in range(F.n + 1)]
    g2 = [g_entry(e21, e22, i) for i in range(F.n + 1)]
    return {(i, j): _lambda_minor(g1[i], g1[j], g2[i], g2[j]) for i, j in index_pairs(F.n)}


def family_conic(F: LambdaFamily, lam) -> PluckerConic:
    """Wedge coordinates of the family at a specific rational parameter value."""
    lam = as_rat(lam)
    minors = _family_minors(F)
    coords = {}
    for pair, lam_list in minors.items():
        f = BinaryForm.zero(2)
        power = Fraction(1)
        for coeff in lam_list:
            f = f + power * coeff
            power *= lam
        coords[pair] = f
    return PluckerConic(F.n, coords)


def modify_family(F: LambdaFamily) -> ModificationResult:
    """Divide the wedge of the family by its maximal lambda power, then set lambda = 0."""
    minors = _family_minors(F)
    valuations = []
    for lam_list in minors.values():
        val = next((d for d, f in enumerate(lam_list) if not f.is_zero), None)
        if val is not None:
            valuations.append(val)
    if not valuations:
        raise IdenticallyZero("the wedge of the family vanishes for every lambda")
    k = min(valuations)
    coords = {
        pair: (lam_list[k] if k < len(lam_list) else BinaryForm.zero(2))
        for pair, lam_list in minors.items()
    }
    conic = PluckerConic(F.n, coords)
    g = binary_form_gcd(conic.forms())
    assert g is not ALL_ZERO  # impossible by minimality of k
    points: tuple[tuple[Fraction, Fraction], ...] = ()
    if g.degree >= 1:
        points = quadratic_root_structure(g).roots
    return ModificationResult(k, conic, g, points)
