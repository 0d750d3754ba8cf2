"""GIT classification of 2x2 matrices of linear forms (Kronecker modules).

A module is a point of P(V* (x) gl_2) with dim V = n + 1, acted on by
SL_2 x SL_2 through row and column operations with constant coefficients.
The classifier decides stability, locates semistable points in the orbit-type
stratification Y0 / Z0 / Y1 / Z1 / stable locus, and computes the determinant
quadric together with its rank.

Decision procedure.  Instability is the existence of a constant nullvector on
either side (a zero row or column after row/column operations); since the
coefficient matrices are rational, a witness exists over Q whenever it exists
at all.  Strict semistability is the existence of some direction v = (s, t)
along which the two entries of Mv become proportional linear forms, i.e. the
2 x (n+1) coefficient matrix of Mv drops to rank <= 1; that is detected by
the gcd of its 2x2 minors, a family of binary quadratics in (s, t).  The gcd
structure separates the orbit types:

    all minors zero          -> Y0 (scalar matrices)
    gcd with a double root   -> Z0 (triangular, proportional diagonal)
    gcd with distinct roots  -> Y1 (non-scalar diagonal), even when the roots
                                are an irrational conjugate pair
    gcd of degree 1          -> Z1 (generic triangular)
    gcd of degree 0          -> stable

Scaling every entry by a nonzero constant changes nothing above, so verdicts
only depend on the projective class.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd as _int_gcd

from .errors import NotSemistable
from .linalg import (
    ALL_ZERO,
    BinaryForm,
    RatMatrix,
    RootKind,
    as_rat,
    binary_form_gcd,
    format_rat,
    quadratic_root_structure,
)


@dataclass(frozen=True)
class LinearForm:
    """Element of V*: exact rational coefficients of x_0 .. x_n."""

    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(as_rat(c) for c in self.coeffs))
        if len(self.coeffs) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls, n: int) -> "LinearForm":
        return cls(n, (0,) * (n + 1))

    @classmethod
    def variable(cls, i: int, n: int) -> "LinearForm":
        """The coordinate form x_i."""
        if not 0 <= i <= n:
            raise ValueError(f"variable index {i} out of range for n={n}")
        return cls(n, tuple(1 if j == i else 0 for j in range(n + 1)))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")
        return LinearForm(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self + (-1) * other

    def __rmul__(self, c) -> "LinearForm":
        c = as_rat(c)
        return LinearForm(self.n, tuple(c * x for x in self.coeffs))

    def to_json(self) -> list[str]:
        return [format_rat(c) for c in self.coeffs]


@dataclass(frozen=True)
class KroneckerModule:
    """2x2 matrix of linear forms on an (n+1)-dimensional space, n >= 2."""

    n: int
    m11: LinearForm
    m12: LinearForm
    m21: LinearForm
    m22: LinearForm

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("ambient parameter n must be >= 2")
        for f in (self.m11, self.m12, self.m21, self.m22):
            if f.n != self.n:
                raise ValueError("all entries must share the ambient parameter n")
        if all(f.is_zero for f in (self.m11, self.m12, self.m21, self.m22)):
            raise ValueError("the zero matrix is not a point of the projective space")

    @classmethod
    def from_rows(cls, n: int, rows) -> "KroneckerModule":
        (a, b), (c, d) = rows
        return cls(n, a, b, c, d)

    def entries(self):
        return ((self.m11, self.m12), (self.m21, self.m22))

    def transpose(self) -> "KroneckerModule":
        return KroneckerModule(self.n, self.m11, self.m21, self.m12, self.m22)

    def scale(self, c) -> "KroneckerModule":
        c = as_rat(c)
        if c == 0:
            raise ValueError("scaling by zero leaves the projective space")
        return KroneckerModule(self.n, c * self.m11, c * self.m12, c * self.m21, c * self.m22)

    def transform(self, A, B) -> "KroneckerModule":
        """A . M . B^{-1} for constant 2x2 matrices A, B (det B != 0)."""
        (a11, a12), (a21, a22) = [[as_rat(x) for x in row] for row in A]
        (b11, b12), (b21, b22) = [[as_rat(x) for x in row] for row in B]
        det_b = b11 * b22 - b12 * b21
        if det_b == 0:
            raise ValueError("B must be invertible")
        # B^{-1} = adj(B) / det(B)
        c11, c12 = b22 / det_b, -b12 / det_b
        c21, c22 = -b21 / det_b, b11 / det_b
        t11 = a11 * self.m11 + a12 * self.m21
        t12 = a11 * self.m12 + a12 * self.m22
        t21 = a21 * self.m11 + a22 * self.m21
        t22 = a21 * self.m12 + a22 * self.m22
        return KroneckerModule(
            self.n,
            c11 * t11 + c21 * t12,
            c12 * t11 + c22 * t12,
            c11 * t21 + c21 * t22,
            c12 * t21 + c22 * t22,
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "matrix": [
                [self.m11.to_json(), self.m12.to_json()],
                [self.m21.to_json(), self.m22.to_json()],
            ],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "KroneckerModule":
        n = doc["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError("'n' must be an integer")
        rows = doc["matrix"]
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("'matrix' must be 2x2")
        forms = [[LinearForm(n, tuple(as_rat(c) for c in entry)) for entry in row] for row in rows]
        return cls.from_rows(n, forms)


class Verdict(Enum):
    UNSTABLE = "unstable"
    STRICTLY_SEMISTABLE = "strictly_semistable"
    STABLE = "stable"


class Stratum(Enum):
    Y0 = "Y0"
    Z0 = "Z0"
    Y1 = "Y1"
    Z1 = "Z1"
    STABLE_LOCUS = "stable_locus"
    UNSTABLE_LOCUS = "unstable_locus"


class StabilizerKind(Enum):
    SL2_Z2 = "SL2_Z2"
    CSTAR_Z2 = "Cstar_Z2"
    FINITE = "finite"


class WitnessKind(Enum):
    ZERO_COLUMN = "zero_column"
    ZERO_ROW = "zero_row"
    RANK_DROP = "rank_drop"
    GCD_CERTIFICATE = "gcd_certificate"


@dataclass(frozen=True)
class Witness:
    """Destabilizing data: a rational vector when one exists, else the gcd form."""

    kind: WitnessKind
    vector: tuple[Fraction, Fraction] | None = None
    form: BinaryForm | None = None

    def to_json(self) -> dict:
        doc: dict = {"kind": self.kind.value}
        doc["vector"] = [format_rat(c) for c in self.vector] if self.vector else None
        doc["form"] = self.form.to_json() if self.form is not None else None
        return doc


@dataclass(frozen=True)
class StabilityClass:
    verdict: Verdict
    witness: Witness | None
    closed_orbit: bool | None
    stabilizer_kind: StabilizerKind | None


@dataclass(frozen=True)
class QuadricForm:
    """Symmetric Gram matrix of a quadratic form on V."""

    n: int
    gram: RatMatrix

    def __post_init__(self):
        if self.gram.rows != self.n + 1 or self.gram.cols != self.n + 1:
            raise ValueError("Gram matrix size must be n+1")
        if self.gram != self.gram.transpose():
            raise ValueError("Gram matrix must be symmetric")


@dataclass(frozen=True)
class CokernelKind:
    """Shape of the cokernel sheaf determined by the determinant rank."""

    kind: str  # "twisted_ideal_of_quadric" | "plane_pair_extension"
    det_rank: int


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def index_pairs(n: int) -> list[tuple[int, int]]:
    """Lexicographic pairs i < j in {0..n}, the minor / wedge index set."""
    return list(combinations(range(n + 1), 2))


def pencil_matrix(M: KroneckerModule, s, t) -> RatMatrix:
    """The 2 x (n+1) coefficient matrix of M(s, t) = s * column1 + t * column2."""
    s, t = as_rat(s), as_rat(t)
    row1 = [s * a + t * b for a, b in zip(M.m11.coeffs, M.m12.coeffs)]
    row2 = [s * a + t * b for a, b in zip(M.m21.coeffs, M.m22.coeffs)]
    return RatMatrix([row1, row2])


def column_minors(M: KroneckerModule) -> list[BinaryForm]:
    """2x2 minors of the coefficient matrix of Mv for v = (s, t).

    Entry (k, i) of that matrix is the linear form s * (x_i coefficient of
    m_k1) + t * (x_i coefficient of m_k2); the minor over columns i < j is a
    binary quadratic.  Minors are listed in lexicographic pair order.
    """
    a1, b1 = M.m11.coeffs, M.m12.coeffs
    a2, b2 = M.m21.coeffs, M.m22.coeffs
    out = []
    for i, j in index_pairs(M.n):
        s2 = a1[i] * a2[j] - a1[j] * a2[i]
        st = a1[i] * b2[j] + b1[i] * a2[j] - a1[j] * b2[i] - b1[j] * a2[i]
        t2 = b1[i] * b2[j] - b1[j] * b2[i]
        out.append(BinaryForm(2, (s2, st, t2)))
    return out


@lru_cache(maxsize=1024)
def minor_gcd(M: KroneckerModule):
    """Gcd of all column minors; ALL_ZERO exactly on the scalar-matrix locus."""
    return binary_form_gcd(column_minors(M))


def _normalize_vector(v: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    lcm = 1
    for c in v:
        lcm = lcm * c.denominator // _int_gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in v]
    g = 0
    for x in ints:
        g = _int_gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(Fraction(x) for x in ints)


@lru_cache(maxsize=1024)
def _destabilizing_witness(M: KroneckerModule) -> Witness | None:
    """Rational v with Mv = 0, else rational w with w^T M = 0, else None."""
    col1 = M.m11.coeffs + M.m21.coeffs
    col2 = M.m12.coeffs + M.m22.coeffs
    right = RatMatrix(list(zip(col1, col2))).right_nullspace()
    if right:
        v = _normalize_vector(right[0])
        return Witness(WitnessKind.ZERO_COLUMN, vector=(v[0], v[1]))
    row1 = M.m11.coeffs + M.m12.coeffs
    row2 = M.m21.coeffs + M.m22.coeffs
    left = RatMatrix(list(zip(row1, row2))).right_nullspace()
    if left:
        w = _normalize_vector(left[0])
        return Witness(WitnessKind.ZERO_ROW, vector=(w[0], w[1]))
    return None


def _stratum_of_semistable(g) -> Stratum:
    if g is ALL_ZERO:
        return Stratum.Y0
    if g.degree == 0:
        return Stratum.STABLE_LOCUS
    if g.degree == 1:
        return Stratum.Z1
    rs = quadratic_root_structure(g)
    return Stratum.Y1 if rs.kind is RootKind.TWO_DISTINCT_ROOTS else Stratum.Z0


def stratify(M: KroneckerModule) -> Stratum:
    """Locate M in the stratification of the semistable locus by orbit type."""
    if _destabilizing_witness(M) is not None:
        return Stratum.UNSTABLE_LOCUS
    return _stratum_of_semistable(minor_gcd(M))


def _semistable_witness(g) -> Witness:
    if g is ALL_ZERO:
        # every direction drops the rank; (1, 0) is as good as any
        return Witness(WitnessKind.RANK_DROP, vector=(Fraction(1), Fraction(0)))
    rs = quadratic_root_structure(g)
    if rs.roots:
        s, t = rs.roots[0]
        return Witness(WitnessKind.RANK_DROP, vector=(s, t))
    return Witness(WitnessKind.GCD_CERTIFICATE, form=g)


def classify_stability(M: KroneckerModule) -> StabilityClass:
    """Full GIT verdict with witness, orbit closedness, and stabilizer kind."""
    w = _destabilizing_witness(M)
    if w is not None:
        return StabilityClass(Verdict.UNSTABLE, w, None, None)
    g = minor_gcd(M)
    stratum = _stratum_of_semistable(g)
    if stratum is Stratum.STABLE_LOCUS:
        return StabilityClass(Verdict.STABLE, None, True, StabilizerKind.FINITE)
    witness = _semistable_witness(g)
    if stratum is Stratum.Y0:
        return StabilityClass(Verdict.STRICTLY_SEMISTABLE, witness, True, StabilizerKind.SL2_Z2)
    if stratum is Stratum.Y1:
        return StabilityClass(Verdict.STRICTLY_SEMISTABLE, witness, True, StabilizerKind.CSTAR_Z2)
    return StabilityClass(Verdict.STRICTLY_SEMISTABLE, witness, False, None)


def det_quadric(M: KroneckerModule) -> QuadricForm:
    """Symmetric Gram matrix of det M = m11 m22 - m12 m21."""
    a, d = M.m11.coeffs, M.m22.coeffs
    b, c = M.m12.coeffs, M.m21.coeffs
    half = Fraction(1, 2)
    size = M.n + 1
    gram = [
        [half * (a[i] * d[j] + a[j] * d[i]) - half * (b[i] * c[j] + b[j] * c[i]) for j in range(size)]
        for i in range(size)
    ]
    return QuadricForm(M.n, RatMatrix(gram))


def quadric_rank(Q: QuadricForm) -> int:
    return Q.gram.rank()


def cokernel_kind(M: KroneckerModule) -> CokernelKind:
    """Shape of the cokernel of 2O(-1) -> 2O given by a semistable module.

    Determinant rank 3 or 4 gives a twisted ideal sheaf of a codimension-two
    linear space inside an irreducible quadric; rank <= 2 gives an extension
    of two hyperplane structure sheaves.
    """
    cls = classify_stability(M)
    if cls.verdict is Verdict.UNSTABLE:
        raise NotSemistable("cokernel shape is defined for semistable modules only")
    r = quadric_rank(det_quadric(M))
    if r >= 3:
        return CokernelKind("twisted_ideal_of_quadric", r)
    return CokernelKind("plane_pair_extension", r)
