"""Exception types shared across the package.

Every domain error derives from WittkitError so callers (and the CLI)
can distinguish usage mistakes from internal bugs.  The class name is
the stable, machine-readable error identifier.
"""


class WittkitError(Exception):
    """Base class for all domain errors raised by wittkit."""

    @property
    def name(self) -> str:
        return type(self).__name__


class SpecMismatch(WittkitError):
    """Operands belong to different rings or carrier shapes."""


class SetMismatch(WittkitError):
    """Operands are indexed by different truncation sets."""


class NotSubset(WittkitError):
    """Restriction target is not contained in the source truncation set."""


class InvalidTruncationSet(WittkitError):
    """Member list is not divisor-closed (or otherwise malformed)."""


class NotPrime(WittkitError):
    """A prime number was required."""


class NotDivisible(WittkitError):
    """Exact division has no solution in the ring."""


class ZeroDivisor(WittkitError):
    """Exact division is ambiguous because the divisor kills elements."""


class NotAUnit(WittkitError):
    """Inversion of a non-unit (series with constant term != 1)."""


class NotInGhostImage(WittkitError):
    """A ghost sequence fails the integrality needed to lift it."""


class UnsupportedRing(WittkitError):
    """The operation needs structure (e.g. torsion-freeness) the ring lacks."""


class MissingVariable(WittkitError):
    """A polynomial specialization did not cover every variable."""


class IntegralityViolation(WittkitError):
    """An exact division in the universal-polynomial recursion failed.

    This cannot happen for correct inputs; it indicates a bug in the
    recursion itself, so it is reported loudly instead of being wrapped.
    """


class CeilingExceeded(WittkitError):
    """A universal-polynomial request went past the configured ceiling."""


class CacheCorrupt(WittkitError):
    """The on-disk universal-polynomial cache could not be parsed."""


class NotInvertible(WittkitError):
    """An integer that must be a unit in the base ring is not."""


class BudgetExceeded(WittkitError):
    """An exhaustive-enumeration request is larger than the allowed budget."""
