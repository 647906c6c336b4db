"""Desk-scale laboratory for conformant planning under random instance models.

The package generates random conformant-planning instances, decides one-step
plan-repair solvability exactly, evaluates the matching analytic operator-count
bounds, and runs Monte Carlo density sweeps that expose the solvability phase
transition.
"""

from .errors import (
    ConformantError,
    DocumentError,
    InapplicableOperator,
    InvalidParameters,
    MultiDelta,
    NoDelta,
    StructuralError,
)
from .model import (
    BeliefState,
    FailureKind,
    Instance,
    Literal,
    Operator,
    Plan,
    State,
    ValidationReport,
    apply,
    apply_belief,
    is_applicable,
    literal_holds,
    make_instance,
    make_operator,
    run_plan,
    satisfies,
    validate_plan,
)

__version__ = "0.1.0"

__all__ = [
    "BeliefState",
    "ConformantError",
    "DocumentError",
    "FailureKind",
    "InapplicableOperator",
    "Instance",
    "InvalidParameters",
    "Literal",
    "MultiDelta",
    "NoDelta",
    "Operator",
    "Plan",
    "State",
    "StructuralError",
    "ValidationReport",
    "apply",
    "apply_belief",
    "is_applicable",
    "literal_holds",
    "make_instance",
    "make_operator",
    "run_plan",
    "satisfies",
    "validate_plan",
    "__version__",
]
