"""Reduction of an m-alternative pair of score vectors to a smaller one.

For ``m >= 4`` three derived vectors are available: ``drop_first`` (remove
rank 1 and renormalize), ``drop_last`` (remove rank m and renormalize) and the
three-entry ``ave`` collapsing all middle ranks to their mean.  A pair
``(s, sp)`` reduces through one of them when the derived pair is again a valid
"non-Borda ``s``, different ``sp``" instance.  The single exception is
``s = (1, 1/2, ..., 1/2, 0)`` against ``sp = (1, a, ..., a, 0)``, handled by
explicit profiles.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .core import ScoreVector, is_borda, is_score_vector
from .errors import ConstructionFault, DomainError, NotApplicable

HALF = Fraction(1, 2)


class Reduction(enum.Enum):
    DROP_FIRST = "drop_first"
    DROP_LAST = "drop_last"
    AVERAGE = "average"
    SPECIAL_LOW = "special_low"
    SPECIAL_HIGH = "special_high"


class DerivedVectors(NamedTuple):
    drop_first: tuple[Fraction, ...]
    drop_last: tuple[Fraction, ...]
    ave: tuple[Fraction, ...]

    def get(self, route: Reduction) -> tuple[Fraction, ...]:
        return {
            Reduction.DROP_FIRST: self.drop_first,
            Reduction.DROP_LAST: self.drop_last,
            Reduction.AVERAGE: self.ave,
        }[route]


@dataclass(frozen=True)
class ReductionCase:
    route: Reduction
    pair: Optional[tuple[ScoreVector, ScoreVector]] = None
    alpha: Optional[Fraction] = None

    def describe(self) -> str:
        if self.pair is not None:
            return f"{self.route.value} {self.pair[0]} vs {self.pair[1]}"
        return f"{self.route.value} alpha={self.alpha}"


def derived_vectors(s: ScoreVector) -> DerivedVectors:
    e = tuple(s)
    m = len(e)
    if m < 4:
        raise DomainError(f"derived vectors need m >= 4, got {m}")
    if e[1] == 0:
        first = (Fraction(0),) * (m - 1)
    else:
        first = tuple(v / e[1] for v in e[1:])
    if e[m - 2] == 1:
        last = (Fraction(1),) * (m - 1)
    else:
        low = e[m - 2]
        last = tuple((v - low) / (1 - low) for v in e[: m - 1])
    ave = (Fraction(1), sum(e[1 : m - 1], Fraction(0)) / (m - 2), Fraction(0))
    return DerivedVectors(first, last, ave)


def sub_conditions(s: ScoreVector, sp: ScoreVector, route: Reduction) -> tuple[bool, bool, bool, bool]:
    """Conditions (a)-(d) for reducing through ``route``: derived ``s`` valid,
    derived ``sp`` valid, derived ``s`` not Borda, derived vectors differ."""
    ds = derived_vectors(s).get(route)
    dsp = derived_vectors(sp).get(route)
    a = is_score_vector(ds)
    # a degenerate all-zero or all-one vector is not the Borda vector
    return (a, is_score_vector(dsp), not (a and is_borda(ds)), ds != dsp)


def is_special(s: ScoreVector, sp: ScoreVector) -> bool:
    m = len(s)
    return s[1] == s[m - 2] == HALF and sp[1] == sp[m - 2]


_ORDER = (Reduction.AVERAGE, Reduction.DROP_FIRST, Reduction.DROP_LAST)


def classify(s: ScoreVector, sp: ScoreVector) -> ReductionCase:
    """Pick the reduction for ``(s, sp)``; averaging is preferred, then
    dropping the first rank, then dropping the last."""
    m = len(s)
    if m < 4:
        raise DomainError(f"classification needs m >= 4, got {m}")
    if len(sp) != m:
        raise DomainError("score vectors of different lengths")
    if is_borda(s):
        raise NotApplicable("the electing rule is Borda")
    if s == sp:
        raise NotApplicable("the two rules coincide")
    if is_special(s, sp):
        alpha = sp[1]
        # alpha = 1/2 would make sp == s
        if alpha == HALF:
            raise ConstructionFault("special case with alpha = 1/2 reached")
        return ReductionCase(Reduction.SPECIAL_LOW if alpha < HALF else Reduction.SPECIAL_HIGH, alpha=alpha)
    ds, dsp = derived_vectors(s), derived_vectors(sp)
    for route in _ORDER:
        if all(sub_conditions(s, sp, route)):
            return ReductionCase(route, pair=(ScoreVector(ds.get(route)), ScoreVector(dsp.get(route))))
    raise ConstructionFault(f"no reduction applies to {s} vs {sp}")
