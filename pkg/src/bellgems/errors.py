"""Exception hierarchy shared across the package."""


class BellGemsError(Exception):
    """Base class for all package errors."""


class IdentityTermPresent(BellGemsError):
    """A Hamiltonian spec contains the all-identity Pauli string."""


class InconsistentArity(BellGemsError):
    """Terms in a spec disagree on the number of sites."""


class OddArity(BellGemsError):
    """Operation requires an even site count n = 2d."""


class TimeOutOfRange(BellGemsError):
    """Requested time lies outside the coefficient schedule."""


class NonHermitian(BellGemsError):
    """Matrix fails the Hermiticity tolerance."""


class OddDimension(BellGemsError):
    """Matrix dimension must be even to pair basis states."""


class CoefficientMismatch(BellGemsError):
    """Rotation coefficient list does not match the pair count."""


class NotNormalized(BellGemsError):
    """|A|^2 + |B|^2 differs from 1 beyond tolerance."""


class BlockStructureViolation(BellGemsError):
    """The coupling graph has a connected component with 3+ vertices."""

    def __init__(self, component, message=None):
        self.component = sorted(component)
        super().__init__(message or f"coupling component too large: {self.component}")


class PairingDrift(BellGemsError):
    """Block pairings differ between schedule segments."""


class EmptySchedule(BellGemsError):
    """A block schedule must contain at least one segment."""
