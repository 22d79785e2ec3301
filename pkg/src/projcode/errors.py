"""Shared exception types."""


class GuardExceeded(ValueError):
    """Input is past the enumeration/scan budget this build is sized for."""


class NotCovered(ValueError):
    """Parameters outside the range any implemented construction handles."""


class ConstructionFailed(RuntimeError):
    """A construction's internal self-check failed; indicates a defect."""
