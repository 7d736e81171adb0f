"""Brute-force ground truth over bounded slices of the profile space.

Anonymous profiles with ``n`` voters over ``m`` alternatives are the
compositions of ``n`` into ``m!`` parts, enumerated here in a fixed
stars-and-bars order.  All tallies go through :mod:`clwitness.kernels`
(integer arithmetic on count matrices), never through the rational tallies
of :mod:`clwitness.core`, so the two routes check each other.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .core import Profile, ScoreVector, borda_vector, relabel_profile
from .errors import BudgetExceeded, DomainError, NotApplicable
from .kernels import cl_outcomes, integer_scores, order_types, rank_table
from .montecarlo import Culture, chunk_rng, compositions_from_bars, draw_counts

DEFAULT_BUDGET = 10**7
BATCH = 1 << 15


def space_size(m: int, n: int) -> int:
    k = math.factorial(m)
    return math.comb(n + k - 1, k - 1)


def _names(m: int) -> tuple[str, ...]:
    return ("x", "y", "z") if m == 3 else tuple(f"x{i}" for i in range(1, m + 1))


def _check_budget(count: int, budget: int):
    if count > budget:
        raise BudgetExceeded(count, budget)


def composition_batches(k: int, n: int, batch: int = BATCH) -> Iterator[np.ndarray]:
    """All compositions of ``n`` into ``k`` parts as ``(b, k)`` int64 blocks."""
    bars = itertools.combinations(range(n + k - 1), k - 1)
    while True:
        block = list(itertools.islice(bars, batch))
        if not block:
            return
        yield compositions_from_bars(np.array(block, dtype=np.int64).reshape(len(block), k - 1), n, k)


def enumerate_anonymous_profiles(m: int, n: int, budget: int = DEFAULT_BUDGET) -> Iterator[Profile]:
    if m < 3:
        raise DomainError("need at least three alternatives")
    _check_budget(space_size(m, n), budget)
    orders = order_types(m)
    names = _names(m)

    def generate():
        for block in composition_batches(len(orders), n):
            for row in block:
                yield Profile(names, {o: int(c) for o, c in zip(orders, row) if c})

    return generate()


def profile_row(p: Profile) -> np.ndarray:
    return np.array([p.count(o) for o in order_types(p.m)], dtype=object)


def _outcomes_for(p: Profile, vectors):
    return cl_outcomes(profile_row(p), rank_table(order_types(p.m)), integer_scores(vectors))


def selects_cl(p: Profile, s: ScoreVector) -> bool:
    """The Condorcet loser exists and is among the winners of ``s``."""
    if len(s) != p.m:
        raise DomainError("score vector and profile disagree on the number of alternatives")
    return bool(_outcomes_for(p, [s]).in_winners[0, 0])


def loser_of(p: Profile) -> Optional[int]:
    cl = int(_outcomes_for(p, [borda_vector(p.m)]).loser[0])
    return None if cl < 0 else cl


def borda_audit_level(m: int, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Profiles with exactly ``n`` voters where Borda elects the Condorcet loser."""
    _check_budget(space_size(m, n), budget)
    ranks = rank_table(order_types(m))
    scores = integer_scores([borda_vector(m)])
    return sum(
        int(cl_outcomes(block, ranks, scores).in_winners.sum())
        for block in composition_batches(math.factorial(m), n)
    )


def borda_audit(m: int, n_max: int, budget: int = DEFAULT_BUDGET) -> int:
    """Violations over every profile with at most ``n_max`` voters; must be 0."""
    _check_budget(sum(space_size(m, n) for n in range(n_max + 1)), budget)
    return sum(borda_audit_level(m, n, budget) for n in range(n_max + 1))


def random_borda_audit(m: int, samples: int, n_max: int = 30, seed: int = 0) -> int:
    """Violations over IC profiles with ``1..n_max`` voters drawn uniformly."""
    ranks = rank_table(order_types(m))
    scores = integer_scores([borda_vector(m)])
    k = math.factorial(m)
    violations = 0
    for index, start in enumerate(range(0, samples, BATCH)):
        size = min(BATCH, samples - start)
        rng = chunk_rng(seed, index)
        n = rng.integers(1, n_max + 1, size=size)
        counts = draw_counts(rng, Culture.IC, n, k, size)
        violations += int(cl_outcomes(counts, ranks, scores).in_winners.sum())
    return violations


def _require_three(s: ScoreVector, sp: ScoreVector):
    if len(s) != 3 or len(sp) != 3:
        raise DomainError("exhaustive search is limited to three alternatives")


def _to_profile(row, m: int, target: int | None = None) -> Profile:
    p = Profile(_names(m), {o: int(c) for o, c in zip(order_types(m), row) if c})
    if target:
        perm = list(range(m))
        perm[0], perm[target] = target, 0
        p = relabel_profile(p, perm, names=_names(m))
    return p


def minimal_witness_search(s: ScoreVector, sp: ScoreVector, n_max: int,
                           budget: int = DEFAULT_BUDGET) -> Optional[tuple[int, Profile]]:
    """Smallest ``n`` with a profile where the Condorcet loser wins alone under
    ``s`` and loses under ``sp``; the profile is relabelled so the loser is id 0."""
    _require_three(s, sp)
    if s == sp:
        raise NotApplicable("the two rules coincide")
    _check_budget(sum(space_size(3, n) for n in range(n_max + 1)), budget)
    ranks = rank_table(order_types(3))
    scores = integer_scores([s, sp])
    for n in range(1, n_max + 1):
        for block in composition_batches(6, n):
            out = cl_outcomes(block, ranks, scores)
            hit = np.flatnonzero(out.unique_winner[:, 0] & ~out.in_winners[:, 1])
            if hit.size:
                i = hit[0]
                return n, _to_profile(block[i], 3, int(out.loser[i]))
    return None


@dataclass
class ScanRow:
    n: int
    profiles: int
    in_f: int
    in_fp: int
    f_only: int
    fp_only: int


@dataclass
class ScanReport:
    n_max: int
    rows: list[ScanRow] = field(default_factory=list)
    f_only_example: Optional[Profile] = None
    fp_only_example: Optional[Profile] = None

    @property
    def f_only(self) -> int:
        return sum(r.f_only for r in self.rows)

    @property
    def fp_only(self) -> int:
        return sum(r.fp_only for r in self.rows)


def dominance_scan(s: ScoreVector, sp: ScoreVector, n_max: int, budget: int = DEFAULT_BUDGET) -> ScanReport:
    """Sizes of the loser-selection sets of both rules, and their differences,
    for every voter count up to ``n_max``."""
    _require_three(s, sp)
    _check_budget(sum(space_size(3, n) for n in range(n_max + 1)), budget)
    ranks = rank_table(order_types(3))
    scores = integer_scores([s, sp])
    report = ScanReport(n_max)
    for n in range(n_max + 1):
        row = ScanRow(n, 0, 0, 0, 0, 0)
        for block in composition_batches(6, n):
            win = cl_outcomes(block, ranks, scores).in_winners
            a, b = win[:, 0], win[:, 1]
            row.profiles += block.shape[0]
            row.in_f += int(a.sum())
            row.in_fp += int(b.sum())
            only_f, only_fp = a & ~b, b & ~a
            row.f_only += int(only_f.sum())
            row.fp_only += int(only_fp.sum())
            if report.f_only_example is None and only_f.any():
                report.f_only_example = _to_profile(block[only_f.argmax()], 3)
            if report.fp_only_example is None and only_fp.any():
                report.fp_only_example = _to_profile(block[only_fp.argmax()], 3)
        report.rows.append(row)
    return report
