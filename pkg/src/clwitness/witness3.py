"""Explicit witness profiles for three alternatives.

A rule on ``{x, y, z}`` is identified by its middle score ``s2``.  For every
pair ``(s2, s2p)`` with ``s2 != 1/2`` and ``s2 != s2p`` one of six parametric
profiles makes ``x`` the Condorcet loser, elected alone by ``s2`` and not
elected by ``s2p``.  Counts are listed in the fixed order type sequence

    n1: x>y>z  n2: x>z>y  n3: y>x>z  n4: y>z>x  n5: z>x>y  n6: z>y>x
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import Profile, ScoreVector
from .errors import ConstructionFault, DomainError, NotApplicable
from .verify import verify_witness

HALF = Fraction(1, 2)
NAMES = ("x", "y", "z")
ORDER_TYPES = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))

CASES = ("A111", "A112", "A113", "A114", "A115", "A116")


@dataclass(frozen=True)
class WitnessParameters:
    case_id: str
    b: Fraction
    p: int
    q: int
    c: Optional[int] = None

    def describe(self) -> str:
        text = f"case {self.case_id} b={self.b} p={self.p} q={self.q}"
        if self.c is not None:
            text += f" c={self.c}"
        return text


def pick_rational_in(lo, hi=None) -> Fraction:
    """A positive rational strictly inside ``(lo, hi)``; ``hi=None`` means +inf.

    Midpoint for a bounded interval, ``lo + 1`` otherwise.
    """
    lo = Fraction(lo)
    if lo < 0:
        raise DomainError(f"lower bound {lo} must be nonnegative")
    if hi is None:
        return lo + 1
    hi = Fraction(hi)
    if not lo < hi:
        raise DomainError(f"empty interval ({lo}, {hi})")
    return (lo + hi) / 2


def pick_integer_above(t) -> int:
    """Smallest integer ``> t`` that is also ``>= 1``."""
    return max(1, math.floor(Fraction(t)) + 1)


def counts_to_profile(counts) -> Profile:
    return Profile(NAMES, dict(zip(ORDER_TYPES, counts)))


def profile_to_counts(p: Profile) -> tuple[int, ...]:
    if p.m != 3:
        raise DomainError("three-alternative profile expected")
    return tuple(p.count(o) for o in ORDER_TYPES)


def case_of(s2, s2p) -> str:
    """The construction used for ``(s2, s2p)``.

    Boundary pairs with ``s2p = 1/2`` that fall under A111 or A115 are routed
    to A114 and A113, whose strict inequalities accept them.
    """
    s2, s2p = Fraction(s2), Fraction(s2p)
    if not (0 <= s2 <= 1 and 0 <= s2p <= 1):
        raise DomainError(f"middle scores must lie in [0, 1], got {s2}, {s2p}")
    if s2 == HALF:
        raise NotApplicable("the electing rule is Borda")
    if s2 == s2p:
        raise NotApplicable("the two rules coincide")
    if s2 > HALF:
        if s2p > s2:
            return "A112"
        return "A111" if s2p > HALF else "A114"
    if s2p >= HALF:
        return "A113"
    return "A115" if s2p > s2 else "A116"


def _rational(case_id, b, c=None) -> tuple[WitnessParameters, int, int]:
    params = WitnessParameters(case_id, b, b.numerator, b.denominator, c)
    return params, b.numerator, b.denominator


def construct(s2, s2p) -> tuple[tuple[int, ...], WitnessParameters]:
    """Counts ``(n1, ..., n6)`` and the chosen parameters, without verification."""
    s, t = Fraction(s2), Fraction(s2p)
    case_id = case_of(s, t)
    if case_id == "A111":
        b = pick_rational_in(1 / (2 * s - 1), 1 / (2 * t - 1))
        params, bq, q = _rational(case_id, b)
        counts = (0, 0, bq, q, bq, 0)
    elif case_id == "A112":
        # s < t <= 1 forces s < 1, so the lower bound is finite
        assert s < 1
        hi = None if t == 1 else t / (1 - t)
        b = pick_rational_in(s / (1 - s), hi)
        c = pick_integer_above((b * s + 1) / (2 * s - 1))
        params, bq, q = _rational(case_id, b, c)
        cq = c * q
        counts = (cq, bq, cq, 0, cq, bq + cq + q)
    elif case_id == "A113":
        b = pick_integer_above((1 + s) / (1 - 2 * s))
        params = WitnessParameters(case_id, Fraction(b), b, 1)
        counts = (0, b + 1, 0, b, 0, 2)
    elif case_id == "A114":
        b = pick_integer_above(1 / (2 * s - 1))
        params = WitnessParameters(case_id, Fraction(b), b, 1)
        counts = (0, 0, b, 0, b, 1)
    elif case_id == "A115":
        b = pick_rational_in(1 / (2 - 4 * s), 1 / (2 - 4 * t))
        params, bq, q = _rational(case_id, b)
        counts = (bq, 2 * bq, 0, 2 * bq, 0, bq + q)
    else:
        b = pick_rational_in((2 - 3 * t) / (1 - 2 * t), (2 - 3 * s) / (1 - 2 * s))
        c = pick_integer_above(b + (1 + 2 * s) / (1 - 2 * s))
        params, bq, q = _rational(case_id, b, c)
        cq = c * q
        counts = (0, cq + 2 * q, bq, cq, bq, 3 * q)
    return counts, params


def score_gaps(case_id: str, s2, s2p, params: WitnessParameters) -> dict[str, Fraction]:
    """Closed-form score differences of each case; all must be positive.

    Keys name the difference: ``"x-y"`` is x's total minus y's under the
    electing rule, a primed key such as ``"y'-x'"`` is taken under the other
    rule.
    """
    s, t = Fraction(s2), Fraction(s2p)
    b, q = params.b, params.q
    c = params.c
    if case_id == "A111":
        return {
            "x-y": q * (b * (2 * s - 1) - 1),
            "x-z": q * (b * (2 * s - 1) - s),
            "y'-x'": q * (1 - b * (2 * t - 1)),
        }
    if case_id == "A112":
        return {
            "x-y": q * (b * (1 - s) - s),
            "x-z": q * (c * (2 * s - 1) - (b * s + 1)),
            "y'-x'": q * (-b * (1 - t) + t),
        }
    if case_id == "A113":
        return {
            "x-y": 1 - 2 * s,
            "x-z": b * (1 - 2 * s) - (1 + s),
            "z'-x'": 1 - b + t * (2 * b + 1),
        }
    if case_id == "A114":
        return {
            "x-y": b * (2 * s - 1) - s,
            "x-z": b * (2 * s - 1) - 1,
            "z'-x'": b + 1 - 2 * b * t,
        }
    if case_id == "A115":
        return {
            "x-y": q * (b * (1 - 2 * s) - s),
            "x-z": q * (b * (2 - 4 * s) - 1),
            "z'-x'": q * (1 - b * (2 - 4 * t)),
        }
    if case_id == "A116":
        return {
            "x-y": q * (2 - 3 * s - b * (1 - 2 * s)),
            "x-z": q * ((c - b) * (1 - 2 * s) - (1 + 2 * s)),
            "y'-x'": q * (b * (1 - 2 * t) - (2 - 3 * t)),
        }
    raise DomainError(f"unknown case {case_id!r}")


def witness_three(s2, s2p) -> tuple[Profile, WitnessParameters]:
    """Verified witness on ``{x, y, z}`` with ``x`` (id 0) the target."""
    s2, s2p = Fraction(s2), Fraction(s2p)
    counts, params = construct(s2, s2p)
    profile = counts_to_profile(counts)
    s = ScoreVector((1, s2, 0))
    sp = ScoreVector((1, s2p, 0))
    verdicts = verify_witness(profile, s, sp, 0)
    if not verdicts.ok:
        raise ConstructionFault(f"{params.describe()} failed verification: {verdicts}")
    return profile, params
