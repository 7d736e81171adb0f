"""Monte Carlo estimates of how often a three-alternative rule elects the
Condorcet loser.

Seeding is counter based: the samples of a run are cut into chunks of
``CHUNK`` profiles and chunk ``i`` draws from
``Generator(Philox(SeedSequence([seed, i])))``.  A run split into chunk ranges
and merged with :meth:`Tally.merge` is therefore identical to a single run,
whatever the partition.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .core import Profile
from .errors import DomainError
from .kernels import cl_outcomes, integer_scores, order_types, rank_table

CHUNK = 1 << 16

S2_GRID = tuple(Fraction(k, 10) for k in range(11))
# published probabilities for 101 voters
REFERENCE_101 = (0.047, 0.024, 0.013, 0.005, 0.001, 0.0, 0.001, 0.005, 0.014, 0.025, 0.045)


class Culture(enum.Enum):
    IC = "ic"
    IAC = "iac"


def chunk_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


def compositions_from_bars(bars: np.ndarray, n: int, k: int) -> np.ndarray:
    """Stars and bars: sorted bar positions in ``0..n+k-2`` to part sizes."""
    size = bars.shape[0]
    edges = np.empty((size, k + 1), dtype=np.int64)
    edges[:, 0] = -1
    edges[:, 1:k] = bars
    edges[:, k] = n + k - 1
    return np.diff(edges, axis=1) - 1


def draw_counts(rng: np.random.Generator, culture: Culture, n, k: int, size: int) -> np.ndarray:
    """``(size, k)`` order counts; ``n`` may be an array of per-row sizes for IC."""
    culture = Culture(culture)
    if culture is Culture.IC:
        return rng.multinomial(n, np.full(k, 1.0 / k), size=size).astype(np.int64)
    if not np.isscalar(n):
        raise DomainError("IAC sampling needs a single voter count")
    slots = n + k - 1
    keys = rng.random((size, slots))
    if k > 1 and slots > k - 1:
        chosen = np.argpartition(keys, k - 2, axis=1)[:, : k - 1]
    else:
        chosen = np.tile(np.arange(k - 1), (size, 1))
    return compositions_from_bars(np.sort(chosen, axis=1), n, k)


def sample_profile(culture: Culture, n: int, m: int, seed: int) -> Profile:
    if n < 1:
        raise DomainError("need at least one voter")
    orders = order_types(m)
    row = draw_counts(chunk_rng(seed, 0), culture, n, len(orders), 1)[0]
    names = ("x", "y", "z") if m == 3 else tuple(f"x{i}" for i in range(1, m + 1))
    return Profile(names, {o: int(c) for o, c in zip(orders, row)})


@dataclass
class Tally:
    """Raw counters; merging is plain addition."""

    s2: tuple[Fraction, ...]
    samples: int = 0
    with_loser: int = 0
    selected: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.selected is None:
            self.selected = np.zeros(len(self.s2), dtype=np.int64)

    def merge(self, other: Tally) -> Tally:
        if other.s2 != self.s2:
            raise DomainError("cannot merge tallies over different rules")
        return Tally(
            self.s2,
            self.samples + other.samples,
            self.with_loser + other.with_loser,
            self.selected + other.selected,
        )


def tally(
    s2_values: Sequence,
    n: int,
    culture: Culture,
    samples: int,
    seed: int,
    chunks: range | None = None,
    backend: str | None = None,
) -> Tally:
    """Count loser selections over ``samples`` profiles (or the given chunk range)."""
    if samples < 1:
        raise DomainError("need at least one sample")
    s2 = tuple(Fraction(v) for v in s2_values)
    if any(not 0 <= v <= 1 for v in s2):
        raise DomainError("middle scores must lie in [0, 1]")
    ranks = rank_table(order_types(3))
    scores = integer_scores([(1, v, 0) for v in s2])
    n_chunks = -(-samples // CHUNK)
    if chunks is None:
        chunks = range(n_chunks)
    result = Tally(s2)
    for index in chunks:
        if not 0 <= index < n_chunks:
            raise DomainError(f"chunk {index} outside 0..{n_chunks - 1}")
        size = min(CHUNK, samples - index * CHUNK)
        counts = draw_counts(chunk_rng(seed, index), culture, n, 6, size)
        out = cl_outcomes(counts, ranks, scores, backend=backend)
        result = result.merge(
            Tally(s2, size, int((out.loser >= 0).sum()), out.in_winners.sum(axis=0).astype(np.int64))
        )
    return result


@dataclass(frozen=True)
class Estimate:
    s2: Fraction
    hits: int
    sample_count: int
    conditional: bool
    culture: Culture

    @property
    def point(self) -> float:
        return self.hits / self.sample_count

    @property
    def stderr(self) -> float:
        p = self.point
        return math.sqrt(p * (1 - p) / self.sample_count)

    def record(self) -> dict:
        return {
            "s2": str(self.s2),
            "point": self.point,
            "stderr": self.stderr,
            "hits": self.hits,
            "samples": self.sample_count,
            "culture": self.culture.value,
            "conditional": self.conditional,
        }


def estimates(t: Tally, culture: Culture, conditional: bool) -> list[Estimate]:
    denominator = t.with_loser if conditional else t.samples
    if denominator == 0:
        raise DomainError("no sampled profile has a Condorcet loser; conditional estimate undefined")
    return [
        Estimate(v, int(h), denominator, conditional, Culture(culture))
        for v, h in zip(t.s2, t.selected)
    ]


def estimate_cl_selection(s2, n: int, culture: Culture, samples: int, conditional: bool, seed: int) -> Estimate:
    t = tally([s2], n, culture, samples, seed)
    return estimates(t, culture, conditional)[0]


@dataclass(frozen=True)
class SweepRow:
    s2: Fraction
    conditional: Estimate
    unconditional: Estimate


def grid_sweep(n: int = 101, samples: int = 10**6, seed: int = 0, culture: Culture = Culture.IC,
                 grid: Sequence = S2_GRID) -> list[SweepRow]:
    """All grid rules on one shared sample, both normalizations."""
    t = tally(grid, n, culture, samples, seed)
    cond = estimates(t, culture, True)
    uncond = estimates(t, culture, False)
    return [SweepRow(v, c, u) for v, c, u in zip(t.s2, cond, uncond)]
