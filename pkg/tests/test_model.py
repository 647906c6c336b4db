"""Semantics of literals, operators, belief states and plan validation."""

import pytest
from hypothesis import given, strategies as st

from confplan import (
    BeliefState,
    FailureKind,
    InapplicableOperator,
    Literal,
    StructuralError,
    apply,
    apply_belief,
    is_applicable,
    literal_holds,
    make_instance,
    make_operator,
    satisfies,
    validate_plan,
)


def S(bits: str) -> tuple[bool, ...]:
    return tuple(ch == "1" for ch in bits)


def B(*bitstrings: str) -> BeliefState:
    return BeliefState(frozenset(S(b) for b in bitstrings))


class TestLiteralHolds:
    def test_positive_in_true_state(self):
        assert literal_holds(Literal(0), S("1")) is True

    def test_negative_in_true_state(self):
        assert literal_holds(Literal(0, True), S("1")) is False

    def test_negative_matches_false_value(self):
        assert literal_holds(Literal(2, True), S("110")) is True

    def test_out_of_range_proposition(self):
        with pytest.raises(StructuralError):
            literal_holds(Literal(3), S("110"))


class TestApplicability:
    def test_empty_precondition_applies_everywhere(self):
        op = make_operator(0, [], [Literal(0)])
        assert is_applicable(op, S("00"))
        assert is_applicable(op, S("11"))

    def test_satisfied_precondition(self):
        op = make_operator(0, [Literal(0), Literal(1, True)], [])
        assert is_applicable(op, S("10"))

    def test_violated_precondition(self):
        op = make_operator(0, [Literal(0), Literal(1, True)], [])
        assert not is_applicable(op, S("11"))


class TestApply:
    def test_empty_postcondition_is_identity(self):
        op = make_operator(0, [], [])
        assert apply(op, S("10")) == S("10")

    def test_single_postcondition(self):
        op = make_operator(0, [], [Literal(1)])
        assert apply(op, S("10")) == S("11")

    def test_overwrites_and_sets(self):
        op = make_operator(0, [Literal(0)], [Literal(0, True), Literal(1)])
        assert apply(op, S("10")) == S("01")

    def test_inapplicable_is_an_error_not_a_noop(self):
        op = make_operator(7, [Literal(0)], [Literal(1)])
        with pytest.raises(InapplicableOperator):
            apply(op, S("00"))

    def test_contradictory_postcondition_rejected(self):
        with pytest.raises(StructuralError):
            make_operator(0, [], [Literal(1), Literal(1, True)])


class TestApplyBelief:
    def test_identity_postcondition(self):
        b = B("10", "00")
        op = make_operator(0, [], [])
        assert apply_belief(op, b) == b

    def test_branches_merge(self):
        op = make_operator(0, [], [Literal(0)])
        assert apply_belief(op, B("10", "00")) == B("10")

    def test_inapplicable_branch_reports_witness(self):
        op = make_operator(3, [Literal(0)], [])
        with pytest.raises(InapplicableOperator) as exc:
            apply_belief(op, B("10", "00"))
        assert exc.value.state == S("00")
        assert exc.value.operator_id == 3


class TestSatisfies:
    def test_empty_goal(self):
        assert satisfies(B("10", "01"), [])

    def test_holds_in_every_branch(self):
        assert satisfies(B("11", "10"), [Literal(0)])

    def test_fails_in_one_branch(self):
        assert not satisfies(B("11", "10"), [Literal(1)])


class TestValidatePlan:
    def test_goal_true_initially_accepts_empty_plan(self):
        inst = make_instance(2, [], B("10", "11"), [Literal(0)])
        report = validate_plan(inst, ())
        assert report.valid and report.failure_step is None and report.failure_kind is None

    def test_one_step_plan(self):
        a0 = make_operator(0, [Literal(0)], [Literal(1)])
        inst = make_instance(2, [a0], B("10"), [Literal(0), Literal(1)])
        assert validate_plan(inst, (0,)).valid

    def test_goal_unmet_without_steps(self):
        a0 = make_operator(0, [Literal(0)], [Literal(1)])
        inst = make_instance(2, [a0], B("10"), [Literal(0), Literal(1)])
        report = validate_plan(inst, ())
        assert not report.valid
        assert report.failure_kind is FailureKind.GOAL_UNMET

    def test_inapplicable_step_index(self):
        a0 = make_operator(0, [Literal(1)], [Literal(0)])
        inst = make_instance(2, [a0], B("10", "11"), [Literal(0)])
        report = validate_plan(inst, (0,))
        assert not report.valid
        assert report.failure_step == 0
        assert report.failure_kind is FailureKind.INAPPLICABLE

    def test_unknown_operator_id(self):
        inst = make_instance(2, [], B("10"), [Literal(0)])
        with pytest.raises(StructuralError):
            validate_plan(inst, (5,))


class TestInstanceInvariants:
    def test_partition_is_forced(self):
        a0 = make_operator(0, [], [Literal(1)])
        inst = make_instance(2, [a0], B("10", "11"), [Literal(0), Literal(1)])
        assert inst.protected == frozenset([Literal(0)])
        assert inst.target == frozenset([Literal(1)])

    def test_misplaced_protected_literal_rejected(self):
        from confplan import Instance

        with pytest.raises(StructuralError):
            Instance(
                n=2,
                operators=(),
                initial=B("10", "11"),
                goal=frozenset([Literal(1)]),
                protected=frozenset([Literal(1)]),
                target=frozenset(),
            )

    def test_two_goal_literals_on_one_proposition_rejected(self):
        with pytest.raises(StructuralError):
            make_instance(2, [], B("10"), [Literal(0), Literal(0, True)])


# --- property tests ---------------------------------------------------------

props = st.integers(min_value=1, max_value=5)


@st.composite
def op_and_state(draw):
    n = draw(props)
    state = tuple(draw(st.booleans()) for _ in range(n))
    pre_props = draw(st.sets(st.integers(0, n - 1)))
    post_props = draw(st.sets(st.integers(0, n - 1)))
    pre = [Literal(p, draw(st.booleans())) for p in pre_props]
    post = [Literal(p, draw(st.booleans())) for p in post_props]
    return make_operator(0, pre, post), state


@given(op_and_state())
def test_postcondition_fixpoint_and_frame(op_state):
    op, state = op_state
    if not is_applicable(op, state):
        return
    result = apply(op, state)
    for l in op.post:
        assert literal_holds(l, result)
    touched = {l.prop for l in op.post}
    for p, (old, new) in enumerate(zip(state, result)):
        if p not in touched:
            assert old == new


@given(op_and_state())
def test_idempotent_on_image(op_state):
    op, state = op_state
    if not is_applicable(op, state):
        return
    once = apply(op, state)
    if is_applicable(op, once):
        assert apply(op, once) == once


@st.composite
def op_and_belief(draw):
    n = draw(props)
    k = draw(st.integers(1, 4))
    states = frozenset(
        tuple(draw(st.booleans()) for _ in range(n)) for _ in range(k)
    )
    post = [Literal(p, draw(st.booleans())) for p in draw(st.sets(st.integers(0, n - 1)))]
    return make_operator(0, [], post), BeliefState(states)


@given(op_and_belief())
def test_belief_never_grows(op_belief):
    op, belief = op_belief
    assert len(apply_belief(op, belief)) <= len(belief)
