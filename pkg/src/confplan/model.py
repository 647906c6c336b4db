"""Exact semantics of propositions, states, operators and conformant plans.

States are complete truth assignments over ``n`` propositions, kept as plain
bool tuples.  A belief state is a nonempty set of equally sized states; a
literal "holds in" a belief state iff it holds in every member state.  All
operations here are pure functions over immutable values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import InapplicableOperator, StructuralError

State = tuple[bool, ...]
Plan = tuple[int, ...]


class Literal(NamedTuple):
    """A signed proposition: ``p3`` is ``Literal(3)``, ``not p3`` is ``Literal(3, True)``."""

    prop: int
    neg: bool = False

    def inverted(self) -> "Literal":
        return Literal(self.prop, not self.neg)


class Operator(NamedTuple):
    """Precondition/postcondition literal sets under a stable integer id.

    ``pre`` and ``post`` each mention a proposition at most once; that
    invariant is enforced by :func:`make_operator` and by instance
    construction, not by this raw tuple type.
    """

    id: int
    pre: frozenset[Literal]
    post: frozenset[Literal]


def make_operator(op_id: int, pre: Iterable[Literal], post: Iterable[Literal]) -> Operator:
    """Validated operator constructor; rejects two conditions on one proposition."""
    pre_set = frozenset(Literal(int(l[0]), bool(l[1])) for l in pre)
    post_set = frozenset(Literal(int(l[0]), bool(l[1])) for l in post)
    for name, lits in (("pre", pre_set), ("post", post_set)):
        if len({l.prop for l in lits}) != len(lits):
            raise StructuralError(
                f"operator {op_id}: {name} mentions some proposition more than once"
            )
    return Operator(int(op_id), pre_set, post_set)


@dataclass(frozen=True)
class BeliefState:
    """A nonempty set of distinct complete states of equal width."""

    states: frozenset[State]

    def __post_init__(self) -> None:
        states = frozenset(tuple(bool(v) for v in s) for s in self.states)
        object.__setattr__(self, "states", states)
        if not states:
            raise StructuralError("belief state must contain at least one state")
        widths = {len(s) for s in states}
        if len(widths) != 1:
            raise StructuralError(f"belief state mixes state widths {sorted(widths)}")

    @property
    def n(self) -> int:
        return len(next(iter(self.states)))

    def __iter__(self) -> Iterator[State]:
        return iter(self.states)

    def __len__(self) -> int:
        return len(self.states)

    def sorted_states(self) -> tuple[State, ...]:
        """Members in lexicographic order (the canonical order used for
        witnesses, visited-set keys and serialization)."""
        return tuple(sorted(self.states))

    def fixed_literals(self) -> frozenset[Literal]:
        """The literals that hold in every member state."""
        ref = next(iter(self.states))
        out = []
        for p, v in enumerate(ref):
            if all(s[p] == v for s in self.states):
                out.append(Literal(p, not v))
        return frozenset(out)


class FailureKind(enum.Enum):
    INAPPLICABLE = "inapplicable-in-some-initial-branch"
    GOAL_UNMET = "goal-unmet"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validating a plan; valid iff no failure is recorded."""

    valid: bool
    failure_step: int | None = None
    failure_kind: FailureKind | None = None

    def __post_init__(self) -> None:
        if self.valid != (self.failure_step is None and self.failure_kind is None):
            raise StructuralError("validity flag contradicts the failure fields")


@dataclass(frozen=True)
class Instance:
    """A conformant planning instance with its goal partitioned into the
    protected literals (true in every initial state) and the target literals
    (each false in at least one initial state)."""

    n: int
    operators: tuple[Operator, ...]
    initial: BeliefState
    goal: frozenset[Literal]
    protected: frozenset[Literal]
    target: frozenset[Literal]

    def __post_init__(self) -> None:
        object.__setattr__(self, "operators", tuple(self.operators))
        object.__setattr__(self, "goal", frozenset(self.goal))
        object.__setattr__(self, "protected", frozenset(self.protected))
        object.__setattr__(self, "target", frozenset(self.target))
        _check_instance(self)

    def operator_by_id(self, op_id: int) -> Operator:
        for op in self.operators:
            if op.id == op_id:
                return op
        raise StructuralError(f"unknown operator id {op_id}")


def _check_literals(lits: Iterable[Literal], n: int, where: str) -> None:
    seen = set()
    for l in lits:
        p = l.prop
        if not 0 <= p < n:
            raise StructuralError(f"{where}: proposition {p} out of range [0, {n})")
        if p in seen:
            raise StructuralError(f"{where}: proposition {p} mentioned more than once")
        seen.add(p)


def _check_instance(inst: Instance) -> None:
    if inst.n < 1:
        raise StructuralError("instance needs at least one proposition")
    if inst.initial.n != inst.n:
        raise StructuralError(
            f"initial belief is over {inst.initial.n} propositions, instance has {inst.n}"
        )
    ids = [op.id for op in inst.operators]
    if len(set(ids)) != len(ids):
        raise StructuralError("operator ids must be unique")
    n = inst.n
    for op in inst.operators:
        _check_literals(op.pre, n, f"operator {op.id} pre")
        _check_literals(op.post, n, f"operator {op.id} post")
    _check_literals(inst.goal, n, "goal")
    if inst.protected | inst.target != inst.goal or inst.protected & inst.target:
        raise StructuralError("protected and target must partition the goal")
    states = inst.initial.states
    for l in inst.protected:
        if any(s[l.prop] == l.neg for s in states):
            raise StructuralError(
                f"protected literal on proposition {l.prop} fails in some initial state"
            )
    for l in inst.target:
        if all(s[l.prop] != l.neg for s in states):
            raise StructuralError(
                f"target literal on proposition {l.prop} already holds in every initial state"
            )


def make_instance(
    n: int,
    operators: Iterable[Operator],
    initial: BeliefState | Iterable[State],
    goal: Iterable[Literal],
) -> Instance:
    """Build an instance, computing the protected/target goal partition.

    A goal literal is protected iff it holds in every initial state; the
    partition is forced, so callers never supply it by hand.
    """
    belief = initial if isinstance(initial, BeliefState) else BeliefState(frozenset(initial))
    goal_set = frozenset(goal)
    protected = frozenset(
        l for l in goal_set if all(s[l.prop] != l.neg for s in belief.states)
    )
    return Instance(
        n=n,
        operators=tuple(operators),
        initial=belief,
        goal=goal_set,
        protected=protected,
        target=goal_set - protected,
    )


def literal_holds(lit: Literal, state: State) -> bool:
    """True iff the state assigns the literal's sign to its proposition."""
    if not 0 <= lit.prop < len(state):
        raise StructuralError(
            f"proposition {lit.prop} out of range for a state of width {len(state)}"
        )
    return state[lit.prop] != lit.neg


def is_applicable(op: Operator, state: State) -> bool:
    """True iff every precondition literal holds; an empty precondition always applies."""
    return all(literal_holds(l, state) for l in op.pre)


def apply(op: Operator, state: State) -> State:
    """Execute ``op`` in ``state``.

    Postcondition literals overwrite their propositions, everything else is
    untouched.  Applying an inapplicable operator is a contract violation and
    raises rather than silently skipping.
    """
    if not is_applicable(op, state):
        raise InapplicableOperator(op.id, state)
    out = list(state)
    for l in op.post:
        out[l.prop] = not l.neg
    return tuple(out)


def apply_belief(op: Operator, belief: BeliefState) -> BeliefState:
    """Set image of :func:`apply` over the belief; duplicates merge.

    Raises :class:`InapplicableOperator` naming the lexicographically first
    failing state when the precondition fails in any branch.
    """
    for s in belief.sorted_states():
        if not is_applicable(op, s):
            raise InapplicableOperator(op.id, s)
    return BeliefState(frozenset(apply(op, s) for s in belief.states))


def satisfies(belief: BeliefState, goals: Iterable[Literal]) -> bool:
    """True iff every goal literal holds in every state of the belief."""
    return all(literal_holds(l, s) for l in goals for s in belief.states)


def run_plan(inst: Instance, plan: Sequence[int]) -> tuple[BeliefState | None, ValidationReport]:
    """Fold the plan over the initial belief.

    Returns the final belief (present iff every step applied in every branch)
    together with the validation report for the full plan.
    """
    by_id = {op.id: op for op in inst.operators}
    belief = inst.initial
    for step, op_id in enumerate(plan):
        if op_id not in by_id:
            raise StructuralError(f"unknown operator id {op_id} at plan step {step}")
        try:
            belief = apply_belief(by_id[op_id], belief)
        except InapplicableOperator:
            report = ValidationReport(False, step, FailureKind.INAPPLICABLE)
            return None, report
    if satisfies(belief, inst.goal):
        return belief, ValidationReport(True)
    return belief, ValidationReport(False, None, FailureKind.GOAL_UNMET)


def validate_plan(inst: Instance, plan: Sequence[int]) -> ValidationReport:
    """Check that the plan applies in every branch and achieves the goal."""
    return run_plan(inst, plan)[1]
