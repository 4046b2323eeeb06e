"""Exception types shared across the package."""


class PluricotError(Exception):
    """Base class for all domain errors raised by this package."""


class PreconditionError(PluricotError):
    """An operation was called outside its mathematical domain of validity."""


class SegreNotPositiveError(PreconditionError):
    """The second Segre number c1^2 - c2 is not positive.

    Every threshold and degree computation divides by (or takes roots
    controlled by) c1^2 - c2; when it vanishes no symmetric power yields a
    generically finite map, and when it is negative the bundle is not big.
    """


class HypothesisNotMetError(PluricotError):
    """A stated hypothesis of a criterion fails, so its conclusion is not asserted."""


class InconsistentInputError(PluricotError):
    """Caller-supplied data contradicts an exact identity it must satisfy."""


class InvalidPolarizationError(PluricotError):
    """A polarization type must be a divisibility chain d1 | d2 | ... of positive integers."""


class NoetherViolationError(InconsistentInputError):
    """Chern numbers and Hodge numbers violate c1^2 + c2 = 12(1 - q + pg)."""


class ResourceLimitError(PluricotError):
    """A scan request exceeds the configured cell budget."""
