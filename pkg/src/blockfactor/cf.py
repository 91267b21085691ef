"""Bounded continued-fraction convergents of a rational number."""

from dataclasses import dataclass, field
from typing import Optional

__all__ = ["Convergent", "convergent_bounded", "partial_quotients"]


@dataclass(frozen=True)
class Convergent:
    """A convergent b/q of num/den.

    ``q_next`` is the denominator of the following convergent, or None when
    b/q is the whole expansion (``exact``).  ``steps`` counts the Euclidean
    divisions spent and is excluded from comparisons.
    """

    b: int
    q: int
    q_next: Optional[int]
    exact: bool
    steps: int = field(default=0, compare=False)


def convergent_bounded(num: int, den: int, bound: int) -> Convergent:
    """Return the last convergent of num/den whose denominator is <= bound.

    Partial quotients are consumed one at a time and the walk stops at the
    first denominator past ``bound``, so no larger convergent is built beyond
    that single value.  When two convergents share the denominator 1, the
    later one wins.
    """
    if den < 1:
        raise ValueError("den must be >= 1")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    b_prev, b = 0, 1
    q_prev, q = 1, 0
    steps = 0
    while den:
        t, r = divmod(num, den)
        steps += 1
        b_new = t * b + b_prev
        q_new = t * q + q_prev
        if q_new > bound:
            return Convergent(b, q, q_new, False, steps)
        b_prev, b = b, b_new
        q_prev, q = q, q_new
        num, den = den, r
    return Convergent(b, q, None, True, steps)


def partial_quotients(num: int, den: int) -> list[int]:
    """Full list of partial quotients of num/den (den >= 1)."""
    out = []
    while den:
        t, r = divmod(num, den)
        out.append(t)
        num, den = den, r
    return out
