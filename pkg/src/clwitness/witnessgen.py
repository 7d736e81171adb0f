"""Witness synthesis for any number of alternatives.

``witness(s, sp)`` returns a profile on which the Condorcet loser (always id
0) is the unique winner under ``s`` and loses under ``sp``.  Three
alternatives are handled by :mod:`clwitness.witness3`; larger instances are
reduced with :func:`clwitness.reduce.classify` and grown back:

* drop routes: the smaller witness gets the new alternative at the bottom
  (or top), uniform padding blocks place it at every other rank once, and
  one extra voter ``x_m > ... > x_1`` breaks the resulting head-to-head tie;
* average route: each base voter ``a > b > c`` is spread over every ordering
  of ``b`` with the dummies between ``a`` and ``c``, and balancing blocks put
  each dummy first and last over all orders of the rest;
* the two exceptional pairs get cyclic profiles.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .core import (
    Profile,
    ScoreVector,
    insert_alternative,
    is_borda,
    majority_margins,
    merge_profiles,
    replicate_profile,
    restrict_profile,
    total_scores,
    uniform_profile,
)
from .errors import ConstructionFault, DomainError, NotApplicable
from .reduce import HALF, Reduction, classify, is_special, sub_conditions
from .verify import Verdicts, verify_witness
from .witness3 import pick_integer_above, witness_three


@dataclass(frozen=True)
class TraceStep:
    depth: int
    m: int
    tag: str
    params: tuple[tuple[str, object], ...] = ()

    def describe(self) -> str:
        extra = "".join(f" {k}={v}" for k, v in self.params)
        return f"depth={self.depth} m={self.m} case {self.tag}{extra}"


@dataclass(frozen=True)
class WitnessReport:
    profile: Profile
    target: int
    s: ScoreVector
    s_prime: ScoreVector
    trace: tuple[TraceStep, ...]
    verdicts: Verdicts


class Embedding(NamedTuple):
    profile: Profile
    params: tuple[tuple[str, object], ...]


def standard_names(m: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, m + 1))


def _renamed(p: Profile, names) -> Profile:
    return Profile(names, p.counts)


def embed_drop(base: WitnessReport, side: str, s: ScoreVector, sp: ScoreVector) -> Embedding:
    """Grow an (m-1)-alternative witness by one alternative.

    ``side="last"`` expects ``base`` built for the drop-last pair and adds the
    new alternative at rank m; ``side="first"`` expects the drop-first pair
    and adds it at rank 1.
    """
    m = len(s)
    route = {"last": Reduction.DROP_LAST, "first": Reduction.DROP_FIRST}.get(side)
    if route is None:
        raise DomainError(f"side must be 'first' or 'last', got {side!r}")
    if base.profile.m != m - 1 or base.target != 0:
        raise DomainError("base witness must have m-1 alternatives and target id 0")
    if not all(sub_conditions(s, sp, route)):
        raise DomainError(f"{route.value} does not apply to {s} vs {sp}")

    names = standard_names(m)
    new = m - 1
    core_names = names[:-1]
    block1 = insert_alternative(_renamed(base.profile, core_names), names[-1], m if side == "last" else 1)
    pad_ranks = range(1, m) if side == "last" else range(2, m + 1)
    uniform = uniform_profile(core_names, 1)
    pads = [insert_alternative(uniform, names[-1], r) for r in pad_ranks]

    per_pad = math.factorial(m - 1)
    k0 = math.lcm(base.profile.n, per_pad)
    unit = merge_profiles(
        [replicate_profile(block1, k0 // base.profile.n)]
        + [replicate_profile(pad, k0 // per_pad) for pad in pads]
    )

    # every strict x1-vs-xk gap must exceed the largest swing of a single voter
    gaps = []
    for vec in (s, sp):
        totals = total_scores(unit, vec)
        gaps += [abs(totals[0] - totals[k]) for k in range(1, m) if totals[0] != totals[k]]
    doubling = 1
    while gaps and min(gaps) * doubling <= 1:
        doubling *= 2
    blocks = replicate_profile(unit, doubling)
    K = k0 * doubling

    for vec in (s, sp):
        totals = total_scores(blocks, vec)
        if totals[new] != K * sum(vec.entries, Fraction(0)):
            raise ConstructionFault("padded alternative does not get the average score")
        strict = [abs(totals[0] - totals[k]) for k in range(1, m) if totals[0] != totals[k]]
        if strict and min(strict) <= 1:
            raise ConstructionFault("replication left a score gap of at most 1")
    if majority_margins(blocks)[0, new] != 0:
        raise ConstructionFault("x1 and the new alternative are not tied before the extra voter")

    extra = Profile(names, {tuple(range(m - 1, -1, -1)): 1})
    profile = merge_profiles([blocks, extra])
    params = (("side", side), ("K", K), ("t", K // per_pad), ("replication", K // base.profile.n))
    return Embedding(profile, params)


def rank_partition(p: Profile, x: int = 0) -> tuple[int, ...]:
    """Number of voters ranking ``x`` first, second, ..., last."""
    parts = [0] * p.m
    for order, c in p.items():
        parts[order.index(x)] += c
    return tuple(parts)


def embed_average(base3: WitnessReport, s: ScoreVector, sp: ScoreVector) -> Embedding:
    """Grow a witness for the averaged pair on ``{x, y, z}`` to m alternatives."""
    m = len(s)
    if base3.profile.m != 3 or base3.target != 0:
        raise DomainError("base witness must be on three alternatives with target id 0")
    if not all(sub_conditions(s, sp, Reduction.AVERAGE)):
        raise DomainError(f"averaging does not apply to {s} vs {sp}")
    n = base3.profile.n
    n1, n2, n3 = rank_partition(base3.profile)
    if not n3 > n1:
        raise DomainError("target must be ranked last more often than first")

    names = standard_names(m)
    dummies = tuple(range(3, m))
    copies = 3 * (m - 2)
    star: dict[tuple[int, ...], int] = {}
    for (a, b, c), count in base3.profile.items():
        for middle in itertools.permutations((b,) + dummies):
            order = (a,) + middle + (c,)
            star[order] = star.get(order, 0) + copies * count
    balance: dict[tuple[int, ...], int] = {}
    for w in dummies:
        rest = tuple(i for i in range(m) if i != w)
        for perm in itertools.permutations(rest):
            balance[(w,) + perm] = balance.get((w,) + perm, 0) + n
            balance[perm + (w,)] = balance.get(perm + (w,), 0) + n
    star_p = Profile(names, star)
    balance_p = Profile(names, balance)
    profile = merge_profiles([star_p, balance_p])

    spread = copies * math.factorial(m - 2)
    if restrict_profile(star_p, (0, 1, 2)) != replicate_profile(_renamed(base3.profile, names[:3]), spread):
        raise ConstructionFault("spread profile does not restrict to copies of the base")
    if star_p.n != 3 * n * (m - 2) * math.factorial(m - 2):
        raise ConstructionFault("spread profile has the wrong size")
    if balance_p.n != 2 * n * (m - 3) * math.factorial(m - 1):
        raise ConstructionFault("balancing profile has the wrong size")
    for vec in (s, sp):
        totals = total_scores(profile, vec)
        anchor = n * (2 * m - 5) * math.factorial(m - 2) * sum(vec.entries, Fraction(0))
        if any(totals[w] != anchor for w in dummies) or sum(totals) != m * anchor:
            raise ConstructionFault("a dummy does not get exactly the average score")
    params = (("n", n), ("n1", n1), ("n2", n2), ("n3", n3), ("spread", star_p.n), ("balance", balance_p.n))
    return Embedding(profile, params)


def _rotation(m: int, j: int) -> list[int]:
    """``y_j, y_{j+1}, ..., y_{j-1}`` over ids ``1..m-1``."""
    return [((j - 1 + i) % (m - 1)) + 1 for i in range(m - 1)]


def _check_special(s: ScoreVector, sp: ScoreVector, alpha) -> Fraction:
    alpha = Fraction(alpha)
    if len(s) < 4 or len(sp) != len(s):
        raise DomainError("cyclic profiles need m >= 4 and matching lengths")
    if not is_special(s, sp) or sp[1] != alpha:
        raise DomainError(f"{s} vs {sp} is not the exceptional pair with alpha={alpha}")
    return alpha


def special_low(s: ScoreVector, sp: ScoreVector, alpha) -> Embedding:
    alpha = _check_special(s, sp, alpha)
    if not alpha < HALF:
        raise DomainError(f"alpha must be below 1/2, got {alpha}")
    m = len(s)
    b = pick_integer_above((1 - alpha) / (1 - 2 * alpha))
    counts = {}
    for j in range(1, m):
        ys = _rotation(m, j)
        counts[tuple(ys[:-1]) + (0,) + (ys[-1],)] = b
    counts[tuple(range(m))] = 1
    return Embedding(Profile(standard_names(m), counts), (("alpha", alpha), ("b", b)))


def special_high_parameters(m: int, alpha) -> tuple[int, int]:
    alpha = Fraction(alpha)
    bound = min(
        Fraction(2 * m - 4, m - 1),
        (2 + (m - 4) * alpha) / (m - 1 - (m - 2) * alpha),
    )
    assert bound > 1
    b = 1
    while not b + 1 < bound * b:
        b += 1
    return b, b + 1


def special_high(s: ScoreVector, sp: ScoreVector, alpha) -> Embedding:
    alpha = _check_special(s, sp, alpha)
    if not alpha > HALF:
        raise DomainError(f"alpha must exceed 1/2, got {alpha}")
    m = len(s)
    b, c = special_high_parameters(m, alpha)
    counts = {}
    for j in range(1, m):
        ys = tuple(_rotation(m, j))
        counts[ys[:-1] + (0,) + ys[-1:]] = b
        counts[ys + (0,)] = b
        counts[(0,) + ys] = c
    return Embedding(Profile(standard_names(m), counts), (("alpha", alpha), ("b", b), ("c", c)))


def witness(s: ScoreVector, sp: ScoreVector) -> WitnessReport:
    """Verified witness: id 0 is the Condorcet loser, ``s`` elects only it,
    ``sp`` does not elect it."""
    return _witness(s, sp, 0)


def _witness(s: ScoreVector, sp: ScoreVector, depth: int) -> WitnessReport:
    m = len(s)
    if len(sp) != m:
        raise DomainError(f"score vectors of lengths {m} and {len(sp)}")
    if m < 3:
        raise DomainError("at least three alternatives are needed")
    if is_borda(s):
        raise NotApplicable("the electing rule is Borda, which never elects a Condorcet loser")
    if s == sp:
        raise NotApplicable("the two rules coincide")

    if m == 3:
        profile, params = witness_three(s[1], sp[1])
        fields = (("b", params.b), ("p", params.p), ("q", params.q))
        if params.c is not None:
            fields += (("c", params.c),)
        trace = (TraceStep(depth, m, params.case_id, fields),)
    else:
        case = classify(s, sp)
        route = case.route
        if route is Reduction.SPECIAL_LOW:
            emb, below = special_low(s, sp, case.alpha), ()
        elif route is Reduction.SPECIAL_HIGH:
            emb, below = special_high(s, sp, case.alpha), ()
        else:
            base = _witness(*case.pair, depth + 1)
            if route is Reduction.AVERAGE:
                emb = embed_average(base, s, sp)
            else:
                emb = embed_drop(base, "last" if route is Reduction.DROP_LAST else "first", s, sp)
            below = base.trace
        profile = emb.profile
        trace = (TraceStep(depth, m, route.value, emb.params),) + below

    verdicts = verify_witness(profile, s, sp, 0)
    if not verdicts.ok:
        raise ConstructionFault(f"witness for {s} vs {sp} failed verification: {verdicts}")
    return WitnessReport(profile, 0, s, sp, trace, verdicts)
