"""Shared builders: random SL2(Q) changes of basis, normal-form modules, and
the independent sympy route for cross-checking minor-gcd classifications."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from moriconic import KroneckerModule, LinearForm, RatMatrix, Stratum

Mat2 = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]


def mat2(rows) -> Mat2:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def mat2_mul(a: Mat2, b: Mat2) -> Mat2:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def random_sl2(rng: random.Random, size: int = 5) -> Mat2:
    """Random element of SL2(Q): elementary shears, sometimes a diagonal torus factor."""
    m = mat2([[1, rng.randint(-size, size)], [0, 1]])
    m = mat2_mul(m, mat2([[1, 0], [rng.randint(-size, size), 1]]))
    m = mat2_mul(m, mat2([[1, rng.randint(-size, size)], [0, 1]]))
    if rng.random() < 0.5:
        r = Fraction(rng.randint(1, size), rng.randint(1, size))
        m = mat2_mul(m, mat2([[r, 0], [0, 1 / r]]))
    return m


def random_form(rng: random.Random, n: int, lo: int = -4, hi: int = 4) -> LinearForm:
    return LinearForm(n, tuple(rng.randint(lo, hi) for _ in range(n + 1)))


def random_nonzero_form(rng: random.Random, n: int) -> LinearForm:
    while True:
        f = random_form(rng, n)
        if not f.is_zero:
            return f


def _coeff_rank(forms: list[LinearForm]) -> int:
    return RatMatrix([f.coeffs for f in forms]).rank()


def independent_forms(rng: random.Random, n: int, count: int) -> list[LinearForm]:
    """count linearly independent forms (count <= n + 1)."""
    assert count <= n + 1
    while True:
        forms = [random_nonzero_form(rng, n) for _ in range(count)]
        if _coeff_rank(forms) == count:
            return forms


def lin_comb(n: int, coeffs: dict[int, object]) -> LinearForm:
    return LinearForm(n, tuple(Fraction(coeffs.get(i, 0)) for i in range(n + 1)))


# Normal-form builders, one per orbit-type class.


def scalar_module(rng, n) -> KroneckerModule:
    g = random_nonzero_form(rng, n)
    z = LinearForm.zero(n)
    return KroneckerModule(n, g, z, z, g)


def proportional_triangular_module(rng, n) -> KroneckerModule:
    """Triangular with proportional diagonal and an off-diagonal entry outside <g>."""
    g, k = independent_forms(rng, n, 2)
    c = Fraction(rng.choice([x for x in range(-3, 4) if x != 0]))
    return KroneckerModule(n, g, k, LinearForm.zero(n), c * g)


def nonscalar_diagonal_module(rng, n) -> KroneckerModule:
    g, h = independent_forms(rng, n, 2)
    z = LinearForm.zero(n)
    return KroneckerModule(n, g, z, z, h)


def irrational_diagonalizable_module(rng, n) -> KroneckerModule:
    """g*Id + h*S with S^2 = D*Id for non-square D: diagonalizable only over Q(sqrt D)."""
    g, h = independent_forms(rng, n, 2)
    d = rng.choice([2, 3, 5, -1, -2, 7])
    return KroneckerModule(n, g, Fraction(d) * h, h, g)


def generic_triangular_module(rng, n) -> KroneckerModule:
    """Triangular with off-diagonal entry outside the span of the diagonal."""
    g, h, k = independent_forms(rng, n, 3)
    return KroneckerModule(n, g, k, LinearForm.zero(n), h)


def zero_row_module(rng, n) -> KroneckerModule:
    g = random_nonzero_form(rng, n)
    h = random_form(rng, n)
    z = LinearForm.zero(n)
    return KroneckerModule(n, g, h, z, z)


def random_module(rng, n) -> KroneckerModule:
    while True:
        forms = [random_form(rng, n) for _ in range(4)]
        if not all(f.is_zero for f in forms):
            return KroneckerModule(n, *forms)


def random_stable_module(rng, n) -> KroneckerModule:
    from moriconic import Verdict, classify_stability

    while True:
        m = random_module(rng, n)
        if classify_stability(m).verdict is Verdict.STABLE:
            return m


NORMAL_FORM_BUILDERS = {
    Stratum.Y0: scalar_module,
    Stratum.Z0: proportional_triangular_module,
    Stratum.Y1: nonscalar_diagonal_module,
    Stratum.Z1: generic_triangular_module,
    Stratum.UNSTABLE_LOCUS: zero_row_module,
    Stratum.STABLE_LOCUS: random_stable_module,
}


# Independent classification route via sympy, sharing no code with the package.


def sympy_stratum(M: KroneckerModule) -> Stratum:
    import sympy as sp

    def frac(x):
        return sp.Rational(x.numerator, x.denominator)

    # instability: a constant nullvector on either side of the 2x2 matrix
    col_stack = sp.Matrix(
        [[frac(a), frac(b)] for a, b in zip(M.m11.coeffs + M.m21.coeffs,
                                            M.m12.coeffs + M.m22.coeffs)]
    )
    row_stack = sp.Matrix(
        [[frac(a), frac(b)] for a, b in zip(M.m11.coeffs + M.m12.coeffs,
                                            M.m21.coeffs + M.m22.coeffs)]
    )
    if col_stack.nullspace() or row_stack.nullspace():
        return Stratum.UNSTABLE_LOCUS

    s, t = sp.symbols("s t")
    rows = []
    for left, right in ((M.m11, M.m12), (M.m21, M.m22)):
        rows.append(
            [s * frac(a) + t * frac(b) for a, b in zip(left.coeffs, right.coeffs)]
        )
    G = sp.Matrix(rows)
    n1 = G.shape[1]
    minors = [
        sp.expand(G[0, i] * G[1, j] - G[0, j] * G[1, i])
        for i in range(n1)
        for j in range(i + 1, n1)
    ]
    nonzero = [m for m in minors if m != 0]
    if not nonzero:
        return Stratum.Y0
    g = sp.Poly(nonzero[0], s, t)
    for m in nonzero[1:]:
        g = sp.gcd(g, sp.Poly(m, s, t))
    deg = sp.Poly(g, s, t).total_degree()
    if deg == 0:
        return Stratum.STABLE_LOCUS
    if deg == 1:
        return Stratum.Z1
    p = sp.Poly(g, s, t)
    c0 = p.coeff_monomial(s**2)
    c1 = p.coeff_monomial(s * t)
    c2 = p.coeff_monomial(t**2)
    disc = sp.expand(c1**2 - 4 * c0 * c2)
    return Stratum.Z0 if disc == 0 else Stratum.Y1


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260808)
