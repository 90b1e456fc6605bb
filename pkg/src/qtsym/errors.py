"""Exception types shared across the package."""


class QtsymError(Exception):
    """Base class for all package-specific errors."""


class NotDivisible(QtsymError):
    """Exact polynomial division was requested but the quotient is not polynomial."""


class DivisionByZero(QtsymError):
    """Division by the zero polynomial or zero rational function."""


class PoleAtPoint(QtsymError):
    """A rational function was evaluated at a point where its denominator vanishes."""


class GenuinePole(QtsymError):
    """A perturbation-series ratio has no finite limit (numerator order below denominator order)."""


class WeightMismatch(QtsymError):
    """An operation mixed homogeneous components of different total degree."""


class DegreeCapExceeded(QtsymError):
    """A symmetric-function construction exceeded the configured degree cap."""


class NotSymmetric(QtsymError):
    """An operator was applied to a polynomial that is not symmetric in its variables."""


class DegenerateConfig(QtsymError):
    """A parameter configuration makes a required denominator vanish identically."""


class IdentityViolated(QtsymError):
    """A checked identity failed; the witness configuration is carried in args."""


class SingularSystem(QtsymError):
    """An exact linear system expected to be uniquely solvable was singular or inconsistent."""


class InternalInvariant(QtsymError):
    """An internal consistency check failed; indicates a bug, not bad input."""
