"""Batch integer tallies over count matrices.

A batch is an ``(N, K)`` matrix of order multiplicities, one row per profile,
columns indexed by a fixed list of ``K`` orders.  ``ranks[k, a]`` is the
0-based position of alternative ``a`` in order ``k`` and ``scores[j, r]`` the
integer score of position ``r`` under rule ``j`` (rational vectors are scaled
to integers first, which leaves every argmax unchanged).

For every row the kernels report the Condorcet loser (``-1`` if none),
whether it is among the winners of each rule, and whether it is the only one.
Two interchangeable backends exist: a numba loop and vectorized numpy.  The
numpy path also accepts ``dtype=object`` arrays for exact big-integer work.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from . import _accel

INT64_SAFE = 2**62


class Outcomes(NamedTuple):
    loser: np.ndarray          # (N,) int64
    in_winners: np.ndarray     # (N, S) bool
    unique_winner: np.ndarray  # (N, S) bool


def order_types(m: int) -> list[tuple[int, ...]]:
    """All linear orders of ``0..m-1`` in lexicographic order."""
    return list(itertools.permutations(range(m)))


def rank_table(orders: Sequence[Sequence[int]]) -> np.ndarray:
    orders = np.asarray(orders, dtype=np.int64)
    ranks = np.empty_like(orders)
    rows = np.arange(orders.shape[0])[:, None]
    ranks[rows, orders] = np.arange(orders.shape[1])
    return ranks


def integer_scores(vectors) -> np.ndarray:
    """Scale each rational score vector by the lcm of its denominators."""
    rows = []
    for vec in vectors:
        entries = [Fraction(v) for v in vec]
        scale = math.lcm(*(e.denominator for e in entries))
        rows.append([int(e * scale) for e in entries])
    table = np.array(rows, dtype=object)
    if all(abs(v) < INT64_SAFE for v in table.flat):
        return table.astype(np.int64)
    return table


def outcomes_numpy(counts: np.ndarray, ranks: np.ndarray, scores: np.ndarray) -> Outcomes:
    counts = np.asarray(counts)
    N, K = counts.shape
    m = ranks.shape[1]
    S = scores.shape[0]
    dtype = object if object in (counts.dtype, scores.dtype) else np.int64
    counts = counts.astype(dtype)

    pref = (ranks[:, :, None] < ranks[:, None, :]).reshape(K, m * m).astype(dtype)
    above = (counts @ pref).reshape(N, m, m)
    beaten = above < above.transpose(0, 2, 1)
    beaten |= np.eye(m, dtype=bool)[None]
    is_loser = beaten.all(axis=2)
    has = is_loser.any(axis=1)
    loser = np.where(has, is_loser.argmax(axis=1), -1).astype(np.int64)

    weights = scores.astype(dtype)[:, ranks]                  # (S, K, m)
    flat = weights.transpose(1, 0, 2).reshape(K, S * m)
    totals = (counts @ flat).reshape(N, S, m)
    best = totals.max(axis=2)
    pick = np.where(has, loser, 0)
    cl_total = totals[np.arange(N), :, pick]
    in_win = has[:, None] & (cl_total == best)
    ties = (totals == best[:, :, None]).sum(axis=2)
    unique = in_win & (ties == 1)
    return Outcomes(loser, np.asarray(in_win, dtype=bool), np.asarray(unique, dtype=bool))


@_accel.njit
def _outcomes_loop(counts, ranks, scores, loser, in_win, unique):
    N, K = counts.shape
    m = ranks.shape[1]
    S = scores.shape[0]
    above = np.zeros((m, m), np.int64)
    totals = np.zeros(m, np.int64)
    for i in range(N):
        above[:, :] = 0
        for k in range(K):
            c = counts[i, k]
            if c == 0:
                continue
            for a in range(m):
                for b in range(m):
                    if ranks[k, a] < ranks[k, b]:
                        above[a, b] += c
        cl = -1
        for a in range(m):
            ok = True
            for b in range(m):
                if b != a and above[a, b] >= above[b, a]:
                    ok = False
                    break
            if ok:
                cl = a
                break
        loser[i] = cl
        if cl < 0:
            continue
        for j in range(S):
            totals[:] = 0
            for k in range(K):
                c = counts[i, k]
                if c == 0:
                    continue
                for a in range(m):
                    totals[a] += c * scores[j, ranks[k, a]]
            best = totals[0]
            for a in range(1, m):
                if totals[a] > best:
                    best = totals[a]
            if totals[cl] == best:
                in_win[i, j] = True
                ties = 0
                for a in range(m):
                    if totals[a] == best:
                        ties += 1
                unique[i, j] = ties == 1


def outcomes_loop(counts: np.ndarray, ranks: np.ndarray, scores: np.ndarray) -> Outcomes:
    """Explicit-loop kernel; compiled when numba is available."""
    counts = np.ascontiguousarray(counts, dtype=np.int64)
    ranks = np.ascontiguousarray(ranks, dtype=np.int64)
    scores = np.ascontiguousarray(scores, dtype=np.int64)
    N = counts.shape[0]
    S = scores.shape[0]
    loser = np.full(N, -1, np.int64)
    in_win = np.zeros((N, S), np.bool_)
    unique = np.zeros((N, S), np.bool_)
    _outcomes_loop(counts, ranks, scores, loser, in_win, unique)
    return Outcomes(loser, in_win, unique)


def _fits_int64(counts: np.ndarray, scores: np.ndarray) -> bool:
    if counts.dtype == object or scores.dtype == object:
        return False
    if counts.size == 0 or scores.size == 0:
        return True
    voters = int(counts.sum(axis=1).max())
    return voters * int(np.abs(scores).max()) < INT64_SAFE


def cl_outcomes(counts, ranks, scores, backend: str | None = None) -> Outcomes:
    """Dispatch to the numba loop or the numpy path.

    ``backend`` is ``"numba"``, ``"numpy"`` or ``None`` (numba unless
    disabled via the environment).  Inputs that could overflow int64 always
    take the numpy path with Python integers.
    """
    counts = np.asarray(counts)
    if counts.ndim == 1:
        counts = counts[None, :]
    ranks = np.asarray(ranks, dtype=np.int64)
    scores = np.asarray(scores)
    if scores.ndim == 1:
        scores = scores[None, :]
    if not _fits_int64(counts, scores):
        return outcomes_numpy(counts.astype(object), ranks, scores.astype(object))
    if backend is None:
        backend = "numba" if _accel.USE_NUMBA else "numpy"
    if backend == "numba":
        return outcomes_loop(counts, ranks, scores)
    if backend == "numpy":
        return outcomes_numpy(counts.astype(np.int64), ranks, scores.astype(np.int64))
    raise ValueError(f"unknown backend {backend!r}")
