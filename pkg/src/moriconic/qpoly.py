"""Exact arithmetic for univariate integer polynomials in the motivic variable q.

A polynomial is a tuple of arbitrary-precision integer coefficients, index i
holding the coefficient of q^i, with trailing zeros stripped.  The zero
polynomial is the empty tuple; its degree is None, never an integer.
Coefficients are Python ints, so overflow is impossible by construction.

Division is exact polynomial long division: a nonzero remainder (or a
non-integer quotient) raises NotDivisible rather than ever being truncated.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import NotDivisible


class QPoly:
    """Univariate polynomial over the integers, always in canonical form."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "QPoly":
        return cls(())

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def q(cls) -> "QPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPoly":
        """c * q^k."""
        if k < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return cls([0] * k + [c])

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("QPoly", self.coeffs))

    def coefficient(self, k: int) -> int:
        """Coefficient of q^k (0 beyond the degree)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "QPoly | None":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return QPoly((other,))
        return None

    def __add__(self, other) -> "QPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "QPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "QPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "QPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power")
        result = QPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- exact division and substitution ------------------------------------

    def exact_div(self, den: "QPoly") -> "QPoly":
        """Quotient r with self = den * r exactly; NotDivisible otherwise."""
        if den.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return QPoly()
        dn = len(den.coeffs) - 1
        qn = len(self.coeffs) - 1 - dn
        if qn < 0:
            raise NotDivisible("numerator degree below denominator degree")
        rem = [Fraction(c) for c in self.coeffs]
        lead = Fraction(den.coeffs[-1])
        quot = [Fraction(0)] * (qn + 1)
        for k in range(qn, -1, -1):
            c = rem[k + dn] / lead
            quot[k] = c
            if c:
                for j, dj in enumerate(den.coeffs):
                    rem[k + j] -= c * dj
        if any(rem):
            raise NotDivisible("long division left a nonzero remainder")
        if any(c.denominator != 1 for c in quot):
            raise NotDivisible("quotient has non-integer coefficients")
        return QPoly([int(c) for c in quot])

    def subst_q_power(self, k: int) -> "QPoly":
        """The polynomial evaluated at q^k, for k >= 1."""
        if k < 1:
            raise ValueError("substitution power must be >= 1")
        if k == 1 or self.is_zero:
            return self
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return QPoly(out)

    def eval_at_one(self) -> int:
        """Sum of coefficients (topological Euler characteristic probe)."""
        return sum(self.coeffs)

    def __call__(self, x):
        """Horner evaluation at an exact scalar (int or Fraction)."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    # -- serialization -----------------------------------------------------

    def to_json(self) -> list[str]:
        """JSON form: decimal coefficient strings, lowest degree first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list[str]) -> "QPoly":
        return cls([int(s) for s in data])

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                sign = "-" if c < 0 else ""
                var = "q" if i == 1 else f"q^{i}"
                terms.append(f"{sign}{mag}{var}")
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def exact_div(num: QPoly, den: QPoly) -> QPoly:
    return num.exact_div(den)


def subst_q_power(p: QPoly, k: int) -> QPoly:
    return p.subst_q_power(k)


def eval_at_one(p: QPoly) -> int:
    return p.eval_at_one()


def one_minus_q_pow(k: int) -> QPoly:
    """The factor 1 - q^k, the building block of every closed formula here."""
    if k < 1:
        raise ValueError("power must be >= 1")
    return QPoly([1] + [0] * (k - 1) + [-1])
