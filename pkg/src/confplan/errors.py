"""Exception types shared across the package."""

from __future__ import annotations


class ConformantError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameters(ConformantError, ValueError):
    """A parameter is outside its documented domain."""


class StructuralError(ConformantError, ValueError):
    """A value violates a structural invariant (bad proposition index,
    duplicate condition on one proposition, unknown operator id, ...)."""


class InapplicableOperator(ConformantError):
    """An operator was applied in a state that violates its precondition."""

    def __init__(self, operator_id: int, state: tuple[bool, ...]):
        self.operator_id = operator_id
        self.state = state
        bits = "".join("1" if v else "0" for v in state)
        super().__init__(f"operator {operator_id} is inapplicable in state {bits}")


class NoDelta(ConformantError):
    """Two problem instances are identical; there is no difference to classify."""


class MultiDelta(ConformantError):
    """Two problem instances differ in a way that no single one-proposition
    delta can express; decompose the change into a chain instead."""


class DocumentError(ConformantError, ValueError):
    """An on-disk document does not parse as a valid instance, plan or curve."""
