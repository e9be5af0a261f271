"""Typed errors raised by the synthesis and analysis layers."""


class MwfiltError(Exception):
    """Base class for all package errors."""

    code = "internal"


class InvalidSpec(MwfiltError):
    """A design spec violates an ordering, range or sign constraint."""

    code = "invalid_spec"

    def __init__(self, constraint: str):
        super().__init__(constraint)
        self.constraint = constraint


class InfeasibleDesign(MwfiltError):
    """The spec is well-formed but no physical design exists for it."""

    code = "infeasible_design"

    def __init__(self, constraint: str):
        super().__init__(constraint)
        self.constraint = constraint


class NonPhysical(MwfiltError):
    """Synthesis produced a non-realizable element value (<= 0)."""

    code = "non_physical"


class SingularFrequency(MwfiltError):
    """A branch immittance is singular at the requested frequency."""


class SingularConversion(MwfiltError):
    """ABCD -> S conversion denominator vanished."""


class EmptyNetwork(MwfiltError):
    """A cascade was requested over zero matrices."""
