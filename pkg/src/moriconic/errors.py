"""Domain errors shared across the toolkit.

Every error that corresponds to a defined failure of a mathematical
precondition (as opposed to malformed input) derives from DomainError and
carries a stable machine-readable ``code`` used by the CLI.
"""


class DomainError(Exception):
    """Base class for errors with a defined JSON error code."""

    code = "domain_error"


class NotDivisible(DomainError):
    """Polynomial long division left a remainder, or a non-integer quotient.

    Raised instead of ever truncating: every formula in this toolkit is
    claimed to have a polynomial value, so a remainder is a bug tripwire.
    """

    code = "not_divisible"


class NonIntegral(DomainError):
    """A half-integer combination failed to land back in integer coefficients."""

    code = "non_integral"


class NotSemistable(DomainError):
    """An operation defined only on semistable modules was fed an unstable one."""

    code = "not_semistable"


class ZeroConic(DomainError):
    """All Pluecker coordinates vanish identically."""

    code = "zero_conic"


class IdenticallyZero(DomainError):
    """The wedge of a one-parameter family vanishes for every parameter value."""

    code = "identically_zero"


class ZeroDivisor(DomainError):
    """A divisor combination with all coefficients zero cannot be located."""

    code = "zero_divisor"
