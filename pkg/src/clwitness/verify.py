"""Independent check of the three witness conditions, via core tallies only."""

from __future__ import annotations

from typing import NamedTuple

from .core import Profile, ScoreVector, condorcet_loser, winners
from .errors import DomainError


class Verdicts(NamedTuple):
    condorcet_loser: bool
    unique_winner: bool
    excluded: bool

    @property
    def ok(self) -> bool:
        return self.condorcet_loser and self.unique_winner and self.excluded


def verify_witness(p: Profile, s: ScoreVector, sp: ScoreVector, x: int) -> Verdicts:
    """(1) ``x`` is the Condorcet loser, (2) ``s`` elects exactly ``{x}``,
    (3) ``sp`` does not elect ``x``."""
    if len(s) != p.m or len(sp) != p.m:
        raise DomainError("score vectors and profile disagree on the number of alternatives")
    if not 0 <= x < p.m:
        raise DomainError(f"no alternative with id {x}")
    return Verdicts(
        condorcet_loser(p) == x,
        winners(p, s) == {x},
        x not in winners(p, sp),
    )
