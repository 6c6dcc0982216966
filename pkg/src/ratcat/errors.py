"""Domain-level exception types shared across the package."""


class DomainError(Exception):
    """Base class for errors raised on mathematically invalid input."""


class MalformedPath(DomainError):
    """Step string has the wrong length, alphabet, or letter counts."""


class AboveDiagonal(DomainError):
    """Path leaves the region weakly below the rectangle diagonal."""


class LimitExceeded(DomainError):
    """Requested enumeration is larger than the configured size limit."""


class Overflow(DomainError):
    """Exact arithmetic produced a non-integral or out-of-range result."""


class EmptyInput(DomainError):
    """A generating set is empty or misses a congruence class."""


class NotCoprimeCase(DomainError):
    """Operation is only defined when d = 1."""


class NotNormalized(DomainError):
    """Operation requires a 0-normalized invariant subset."""


class InvalidCore(DomainError):
    """Partition is not a core of the required type."""


class Infeasible(DomainError):
    """Shift-bound relaxation failed to stabilize (corrupted bounds)."""


class TooManyVertices(DomainError):
    """Canonicalization by permutation search is capped at 8 vertices."""


class InvalidGraph(DomainError):
    """Labeled digraph violates the gluing-data membership conditions."""


class InvalidSkeleton(DomainError):
    """Value set is not the skeleton of any invariant subset."""


class NotBalanced(DomainError):
    """Interval does not contain n vertical and m horizontal steps."""


class NoIntersection(DomainError):
    """Paths required to intersect do not."""


class FormulaMismatch(DomainError):
    """Two formulas that must agree produced different results."""
