"""Exact domain model: score vectors, anonymous profiles, tallies and majorities.

Alternatives are identified by their integer id ``0..m-1``; a profile carries
the display names in ``Profile.alternatives``.  A linear order is a tuple of
ids, best first.  All tallies use :class:`fractions.Fraction`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Sequence

from .errors import DomainError

Order = tuple[int, ...]


# ---------------------------------------------------------------------------
# Score vectors


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise DomainError(f"floats are not exact; pass {value!r} as a string or Fraction")
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {value!r}") from exc


def is_score_vector(entries: Sequence[Fraction]) -> bool:
    """True iff ``entries`` is normalized: first 1, last 0, nonincreasing."""
    if len(entries) < 2 or entries[0] != 1 or entries[-1] != 0:
        return False
    return all(a >= b for a, b in zip(entries, entries[1:]))


@dataclass(frozen=True)
class ScoreVector:
    """Normalized positional scores ``1 = s(1) >= ... >= s(m) = 0``.

    ``entries[k - 1]`` is the score for rank ``k``.  Use :meth:`normalize` for
    arbitrary nonincreasing input such as ``(2, 1, 0)``.
    """

    entries: tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(_as_fraction(v) for v in self.entries)
        object.__setattr__(self, "entries", entries)
        if not is_score_vector(entries):
            raise DomainError(
                f"not a normalized score vector: {format_vector(entries)}"
            )

    @classmethod
    def normalize(cls, values: Iterable) -> ScoreVector:
        vals = [_as_fraction(v) for v in values]
        if len(vals) < 2:
            raise DomainError("a score vector needs at least two entries")
        if any(a < b for a, b in zip(vals, vals[1:])):
            raise DomainError(f"scores must be nonincreasing: {format_vector(vals)}")
        top, bottom = vals[0], vals[-1]
        if top == bottom:
            raise DomainError("a constant score sequence does not define a rule")
        return cls(tuple((v - bottom) / (top - bottom) for v in vals))

    @property
    def m(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __str__(self):
        return format_vector(self.entries)


def format_vector(entries: Iterable) -> str:
    return "(" + ", ".join(str(Fraction(e)) for e in entries) + ")"


def borda_vector(m: int) -> ScoreVector:
    if m < 3:
        raise DomainError(f"the Borda vector needs m >= 3, got {m}")
    return ScoreVector(tuple(Fraction(m - k, m - 1) for k in range(1, m + 1)))


def plurality_vector(m: int) -> ScoreVector:
    return ScoreVector((Fraction(1),) + (Fraction(0),) * (m - 1))


def antiplurality_vector(m: int) -> ScoreVector:
    return ScoreVector((Fraction(1),) * (m - 1) + (Fraction(0),))


def k_approval_vector(m: int, k: int) -> ScoreVector:
    if not 1 <= k <= m - 1:
        raise DomainError(f"k-approval needs 1 <= k <= m-1, got k={k}, m={m}")
    return ScoreVector((Fraction(1),) * k + (Fraction(0),) * (m - k))


def is_borda(s: ScoreVector | Sequence[Fraction]) -> bool:
    """Equal consecutive differences, compared exactly."""
    entries = tuple(s)
    gaps = [a - b for a, b in zip(entries, entries[1:])]
    return all(g == gaps[0] for g in gaps)


# ---------------------------------------------------------------------------
# Profiles


def _check_order(order: Sequence[int], m: int) -> Order:
    order = tuple(order)
    if len(order) != m or sorted(order) != list(range(m)):
        raise DomainError(f"{order!r} is not a linear order of {m} alternatives")
    return order


class Profile:
    """Anonymous preference profile: a multiset of linear orders.

    ``counts`` maps each order (tuple of alternative ids, best first) to its
    positive multiplicity; orders with count zero are not stored.  Instances
    are immutable and hashable.
    """

    __slots__ = ("_alternatives", "_counts", "_hash")

    def __init__(self, alternatives: Sequence[str], counts: Mapping[Sequence[int], int] | None = None):
        alternatives = tuple(str(a) for a in alternatives)
        if len(set(alternatives)) != len(alternatives):
            raise DomainError(f"duplicate alternative names in {alternatives!r}")
        if not alternatives:
            raise DomainError("a profile needs at least one alternative")
        m = len(alternatives)
        store: dict[Order, int] = {}
        for order, count in (counts or {}).items():
            order = _check_order(order, m)
            if isinstance(count, bool) or int(count) != count or count < 0:
                raise DomainError(f"count for {order!r} must be a nonnegative integer, got {count!r}")
            if count:
                store[order] = store.get(order, 0) + int(count)
        self._alternatives = alternatives
        self._counts = dict(sorted(store.items()))
        self._hash = None

    @classmethod
    def from_rankings(cls, alternatives: Sequence[str], rankings: Iterable[tuple[int, Sequence[str]]]) -> Profile:
        """Build from ``(count, [name, name, ...])`` pairs; duplicates accumulate."""
        alternatives = tuple(alternatives)
        index = {name: i for i, name in enumerate(alternatives)}
        counts: dict[Order, int] = {}
        for count, names in rankings:
            try:
                order = tuple(index[n] for n in names)
            except KeyError as exc:
                raise DomainError(f"unknown alternative {exc.args[0]!r}") from None
            order = _check_order(order, len(alternatives))
            counts[order] = counts.get(order, 0) + count
        return cls(alternatives, counts)

    @property
    def alternatives(self) -> tuple[str, ...]:
        return self._alternatives

    @property
    def m(self) -> int:
        return len(self._alternatives)

    @property
    def n(self) -> int:
        return sum(self._counts.values())

    @property
    def counts(self) -> Mapping[Order, int]:
        return MappingProxyType(self._counts)

    def count(self, order: Sequence[int]) -> int:
        return self._counts.get(tuple(order), 0)

    def items(self):
        return self._counts.items()

    def index(self, name: str) -> int:
        try:
            return self._alternatives.index(name)
        except ValueError:
            raise DomainError(f"unknown alternative {name!r}") from None

    def __eq__(self, other):
        if not isinstance(other, Profile):
            return NotImplemented
        return self._alternatives == other._alternatives and self._counts == other._counts

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._alternatives, tuple(self._counts.items())))
        return self._hash

    def __repr__(self):
        body = ", ".join(
            f"{c}:{'>'.join(self._alternatives[a] for a in o)}" for o, c in self._counts.items()
        )
        return f"Profile({' '.join(self._alternatives)} | {body})"


def rank(order: Sequence[int], x: int) -> int:
    """1-based position of ``x`` in ``order``."""
    try:
        return tuple(order).index(x) + 1
    except ValueError:
        raise DomainError(f"alternative {x!r} does not appear in {tuple(order)!r}") from None


def position_counts(p: Profile) -> list[list[int]]:
    """``table[x][k]`` = number of voters ranking ``x`` at position ``k+1``."""
    table = [[0] * p.m for _ in range(p.m)]
    for order, count in p.items():
        for pos, x in enumerate(order):
            table[x][pos] += count
    return table


def total_scores(p: Profile, s: ScoreVector) -> tuple[Fraction, ...]:
    """Total score of every alternative, indexed by id."""
    if len(s) != p.m:
        raise DomainError(f"score vector has length {len(s)}, profile has {p.m} alternatives")
    return tuple(
        sum((c * w for c, w in zip(row, s.entries) if c), Fraction(0))
        for row in position_counts(p)
    )


def winners(p: Profile, s: ScoreVector) -> frozenset[int]:
    """Argmax set of the total scores; every alternative on an empty profile."""
    scores = total_scores(p, s)
    best = max(scores)
    return frozenset(x for x, v in enumerate(scores) if v == best)


@dataclass(frozen=True)
class MajorityMatrix:
    """``margin(x, y)`` = #voters preferring x to y minus #preferring y to x."""

    table: tuple[tuple[int, ...], ...]

    def margin(self, x: int, y: int) -> int:
        return self.table[x][y]

    def __getitem__(self, pair):
        x, y = pair
        return self.table[x][y]

    @property
    def m(self) -> int:
        return len(self.table)


def majority_margins(p: Profile) -> MajorityMatrix:
    m = p.m
    table = [[0] * m for _ in range(m)]
    for order, count in p.items():
        for i, x in enumerate(order):
            row = table[x]
            for y in order[i + 1:]:
                row[y] += count
                table[y][x] -= count
    return MajorityMatrix(tuple(tuple(r) for r in table))


def condorcet_loser(p: Profile) -> int | None:
    """The alternative beaten by every other one in pairwise majority, if any."""
    margins = majority_margins(p)
    for x in range(p.m):
        if all(margins[x, y] < 0 for y in range(p.m) if y != x):
            return x
    return None


# ---------------------------------------------------------------------------
# Profile algebra


def merge_profiles(ps: Sequence[Profile]) -> Profile:
    ps = list(ps)
    if not ps:
        raise DomainError("nothing to merge")
    alternatives = ps[0].alternatives
    counts: dict[Order, int] = {}
    for p in ps:
        if p.alternatives != alternatives:
            raise DomainError(
                f"cannot merge profiles over {alternatives!r} and {p.alternatives!r}"
            )
        for order, c in p.items():
            counts[order] = counts.get(order, 0) + c
    return Profile(alternatives, counts)


def replicate_profile(p: Profile, k: int) -> Profile:
    if int(k) != k or k < 1:
        raise DomainError(f"replication factor must be a positive integer, got {k!r}")
    return Profile(p.alternatives, {o: c * k for o, c in p.items()})


def insert_alternative(p: Profile, name: str, position: int | Callable[[Order], int]) -> Profile:
    """Add a new alternative (id ``p.m``) to every order at the given rank.

    ``position`` is a fixed 1-based rank in ``1..m+1`` or a function of the
    original order returning that rank.
    """
    if name in p.alternatives:
        raise DomainError(f"alternative {name!r} already present")
    w = p.m
    counts: dict[Order, int] = {}
    for order, c in p.items():
        r = position(order) if callable(position) else position
        if not 1 <= r <= p.m + 1:
            raise DomainError(f"rank {r} out of bounds 1..{p.m + 1}")
        new = order[: r - 1] + (w,) + order[r - 1:]
        counts[new] = counts.get(new, 0) + c
    return Profile(p.alternatives + (name,), counts)


def uniform_profile(alternatives: Sequence[str], t: int) -> Profile:
    """Every linear order over ``alternatives`` with multiplicity ``t``."""
    if int(t) != t or t < 1:
        raise DomainError(f"multiplicity must be a positive integer, got {t!r}")
    m = len(alternatives)
    return Profile(alternatives, {o: t for o in itertools.permutations(range(m))})


def restrict_profile(p: Profile, keep: Sequence[int]) -> Profile:
    """Restriction to the alternatives ``keep`` (relabelled ``0..len(keep)-1``)."""
    keep = list(keep)
    where = {x: i for i, x in enumerate(keep)}
    if len(where) != len(keep) or any(not 0 <= x < p.m for x in keep):
        raise DomainError(f"invalid restriction {keep!r}")
    counts: dict[Order, int] = {}
    for order, c in p.items():
        sub = tuple(where[x] for x in order if x in where)
        counts[sub] = counts.get(sub, 0) + c
    return Profile(tuple(p.alternatives[x] for x in keep), counts)


def relabel_profile(p: Profile, perm: Sequence[int], names: Sequence[str] | None = None) -> Profile:
    """Rename alternative ``x`` to ``perm[x]``.

    Names follow their alternatives unless ``names`` gives the new list.
    """
    perm = list(perm)
    if sorted(perm) != list(range(p.m)):
        raise DomainError(f"{perm!r} is not a permutation of 0..{p.m - 1}")
    if names is None:
        new_names = [""] * p.m
        for x, y in enumerate(perm):
            new_names[y] = p.alternatives[x]
    else:
        new_names = list(names)
    return Profile(new_names, {tuple(perm[x] for x in o): c for o, c in p.items()})
