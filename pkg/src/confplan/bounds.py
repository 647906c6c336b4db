"""Closed-form solvability thresholds and the condition-consistency recurrence.

``consistency_prob(j, n, w)`` is the probability that ``j`` conditions drawn
over ``n`` propositions (distinct propositions, uniform signs) are all
consistent with a given set of ``w`` conditions.  It satisfies

    f(j, n, w) = ((n - w) / n) * f(j-1, n-1, w) + (w / 2n) * f(j-1, n-1, w-1)

with f(0, ., .) = 1 and f(., ., 0) = 1.  The corner values f(j, n, n) = 2**-j
and f(n, n, w) = 2**-w follow from the recurrence alone; the evaluation below
is arranged so they come out bit-exact in double precision.

The threshold functions bracket one-step solvability of a random instance
whose goal has exactly one unachieved literal: below ``upper_bound_alpha``
operators almost no instance is one-step solvable, above ``lower_bound_alpha``
almost every instance is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameters


@dataclass(frozen=True)
class BoundParams:
    """Parameter bundle for the threshold formulas."""

    n: int
    r: int
    c: int
    k: int
    sigma: float

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameters(f"need at least one proposition, got n={self.n}")
        if not 0 <= self.r <= self.n:
            raise InvalidParameters(f"precondition count r={self.r} outside [0, {self.n}]")
        if not 1 <= self.c <= self.n:
            raise InvalidParameters(f"postcondition count c={self.c} outside [1, {self.n}]")
        if self.k < 1:
            raise InvalidParameters(f"initial-state count k={self.k} must be >= 1")
        if not 0.0 < self.sigma < 1.0:
            raise InvalidParameters(f"confidence parameter sigma={self.sigma} outside (0, 1)")


def consistency_prob(j: int, n: int, w: int) -> float:
    """Probability that ``j`` random conditions over ``n`` propositions are
    consistent with a fixed set of ``w`` conditions.

    Dynamic programming over one row per drawn condition; only the two
    trivial base cases (no conditions drawn, nothing to be consistent with)
    are special-cased.
    """
    if not (isinstance(j, int) and isinstance(n, int) and isinstance(w, int)):
        raise InvalidParameters("consistency_prob takes integer arguments")
    if not (0 <= j <= n and 0 <= w <= n):
        raise InvalidParameters(
            f"arguments outside domain: need 0 <= j <= n and 0 <= w <= n, got j={j} n={n} w={w}"
        )
    if j == 0 or w == 0:
        return 1.0
    # Level l holds f(l, n-j+l, w') for w' = 0..min(w, n-j+l).
    prev = [1.0] * (min(w, n - j) + 1)
    for level in range(1, j + 1):
        nl = n - j + level
        hi = min(w, nl)
        cur = [1.0] * (hi + 1)
        for wp in range(1, hi + 1):
            keep = prev[wp] if wp < len(prev) else 0.0  # coefficient is 0 when wp == nl
            cur[wp] = ((nl - wp) * keep + 0.5 * wp * prev[wp - 1]) / nl
        prev = cur
    return prev[w]


def upper_bound_alpha(n: int, c: int, sigma: float) -> float:
    """Operator count below which almost no instance is one-step solvable.

    Solves 1 - (1 - c/2n)**o = sigma for o: with fewer operators than this,
    the single unachieved goal literal is a postcondition of no operator in
    at least a 1 - sigma fraction of instances.
    """
    _check_common(n=n, c=c, sigma=sigma)
    if c >= 2 * n:
        raise InvalidParameters(f"postcondition count c={c} must be < 2n = {2 * n}")
    return math.log(1.0 - sigma) / math.log(1.0 - c / (2 * n))


def lower_bound_alpha(n: int, r: int, c: int, k: int, sigma: float) -> float:
    """Operator count above which almost every instance is one-step solvable.

    Evaluates exp(r*k) * exp(c) * (2n/c) * ln(1/sigma); valid under both
    random instance models because each one-operator success probability is
    at least exp(-r*k) * exp(-c) * c/2n.
    """
    _check_common(n=n, c=c, sigma=sigma, r=r, k=k)
    return math.exp(r * k + c) * (2 * n / c) * math.log(1.0 / sigma)


def one_op_success_prob_variable(n: int, r: int, c: int, k: int) -> float:
    """Chance that one operator of the variable model solves a random instance
    in one step, with k initial states idealized as independent:
    (1 - r/2n)**(n*k) * (1 - c/2n)**(n-1) * (c/2n)."""
    _check_common(n=n, c=c, r=r, k=k)
    pre_ok = (1.0 - r / (2 * n)) ** (n * k)
    keep_achieved = (1.0 - c / (2 * n)) ** (n - 1)
    return pre_ok * keep_achieved * (c / (2 * n))


def one_op_success_prob_fixed(n: int, r: int, c: int, k: int) -> float:
    """Chance that one operator of the fixed model solves a random instance in
    one step: 2**(-r*k) * f(c-1, n-1, n-1) * (c/2n)."""
    _check_common(n=n, c=c, r=r, k=k)
    if n < 2 and c > 1:
        raise InvalidParameters("fixed-model success probability needs c <= n")
    keep_achieved = consistency_prob(c - 1, n - 1, n - 1) if n > 1 else 1.0
    return 2.0 ** (-r * k) * keep_achieved * (c / (2 * n))


def goal_in_some_postcond_prob(n: int, c: int, o: int) -> float:
    """Probability 1 - (1 - c/2n)**o that a specific literal is a
    postcondition of at least one of ``o`` operators (both models)."""
    if n < 1:
        raise InvalidParameters(f"need at least one proposition, got n={n}")
    if not 0 <= c <= 2 * n:
        raise InvalidParameters(f"postcondition count c={c} outside [0, {2 * n}]")
    if o < 0:
        raise InvalidParameters(f"operator count o={o} must be >= 0")
    return 1.0 - (1.0 - c / (2 * n)) ** o


def _check_common(
    n: int,
    c: int,
    sigma: float | None = None,
    r: int | None = None,
    k: int | None = None,
) -> None:
    if n < 1:
        raise InvalidParameters(f"need at least one proposition, got n={n}")
    if not 1 <= c <= n:
        raise InvalidParameters(f"postcondition count c={c} outside [1, {n}]")
    if r is not None and not 0 <= r <= n:
        raise InvalidParameters(f"precondition count r={r} outside [0, {n}]")
    if k is not None and k < 1:
        raise InvalidParameters(f"initial-state count k={k} must be >= 1")
    if sigma is not None and not 0.0 < sigma < 1.0:
        raise InvalidParameters(f"confidence parameter sigma={sigma} outside (0, 1)")
