import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from clwitness.core import (
    Profile,
    ScoreVector,
    borda_vector,
    condorcet_loser,
    majority_margins,
    merge_profiles,
    plurality_vector,
    restrict_profile,
    total_scores,
    uniform_profile,
    winners,
)
from clwitness.errors import DomainError, NotApplicable
from clwitness.reduce import Reduction, derived_vectors
from clwitness.verify import verify_witness
from clwitness.witness3 import profile_to_counts
from clwitness.witnessgen import (
    embed_average,
    embed_drop,
    rank_partition,
    special_high,
    special_high_parameters,
    special_low,
    witness,
)

from conftest import random_pair, witness_pairs

TABLE1 = Profile.from_rankings("ABC", [(8, "ABC"), (7, "BCA"), (6, "CBA")])


def sv(*entries):
    return ScoreVector(tuple(F(e) for e in entries))


def constant_middle(m, a):
    return ScoreVector((1,) + (F(a),) * (m - 2) + (0,))


# verify_witness


def test_verify_table1():
    assert tuple(verify_witness(TABLE1, plurality_vector(3), borda_vector(3), 0)) == (True, True, True)
    v = verify_witness(TABLE1, borda_vector(3), plurality_vector(3), 0)
    assert v.condorcet_loser and not v.unique_winner and not v.ok


def test_verify_no_loser():
    v = verify_witness(uniform_profile("xyz", 1), plurality_vector(3), borda_vector(3), 0)
    assert not v.condorcet_loser and not v.ok


# top-level


def test_plurality_vs_borda_four():
    report = witness(plurality_vector(4), borda_vector(4))
    assert report.trace[0].tag == Reduction.AVERAGE.value
    assert report.trace[1].m == 3
    assert report.verdicts.ok and report.target == 0
    p = report.profile
    assert condorcet_loser(p) == 0
    assert winners(p, plurality_vector(4)) == {0}
    assert 0 not in winners(p, borda_vector(4))


def test_three_delegates():
    report = witness(sv(1, 1, 0), sv(1, "3/4", 0))
    assert profile_to_counts(report.profile) == (0, 0, 3, 2, 3, 0)
    assert report.trace[0].describe() == "depth=0 m=3 case A111 b=3/2 p=3 q=2"


def test_errors():
    with pytest.raises(NotApplicable):
        witness(plurality_vector(4), plurality_vector(4))
    with pytest.raises(NotApplicable):
        witness(borda_vector(5), plurality_vector(5))
    with pytest.raises(DomainError):
        witness(plurality_vector(4), plurality_vector(3))


# drop embedding


def _drop_case(s, sp, side):
    d, dp = derived_vectors(s), derived_vectors(sp)
    pick = d.drop_last if side == "last" else d.drop_first
    pick_p = dp.drop_last if side == "last" else dp.drop_first
    base = witness(ScoreVector(pick), ScoreVector(pick_p))
    return base, embed_drop(base, side, s, sp)


@pytest.mark.parametrize("s, sp, side", [
    (sv(1, "4/5", "1/5", 0), plurality_vector(4), "last"),
    (sv(1, "4/5", "1/5", 0), sv(1, 1, 0, 0), "first"),
    (sv(1, "3/4", "1/4", 0), sv(1, "1/3", "1/3", 0), "last"),
    (sv(1, "3/4", "1/4", 0), sv(1, "1/3", "1/3", 0), "first"),
])
def test_embed_drop(s, sp, side):
    base, emb = _drop_case(s, sp, side)
    p = emb.profile
    m = len(s)
    assert verify_witness(p, s, sp, 0).ok
    params = dict(emb.params)
    K = params["K"]
    assert K % math.lcm(base.profile.n, math.factorial(m - 1)) == 0
    # remove the extra voter and check the anchors
    extra = tuple(range(m - 1, -1, -1))
    counts = dict(p.counts)
    counts[extra] -= 1
    padded = Profile(p.alternatives, counts)
    assert padded.n == m * K
    for vec in (s, sp):
        totals = total_scores(padded, vec)
        assert totals[m - 1] == K * sum(vec)
        assert totals[m - 1] == sum(totals) / m
        strict = [abs(totals[0] - totals[k]) for k in range(1, m) if totals[0] != totals[k]]
        assert min(strict) > 1
    above = (padded.n + majority_margins(padded)[0, m - 1]) // 2
    assert above == m * K // 2 == padded.n - above


def test_embed_drop_rejects():
    s, sp = sv(1, "4/5", "1/5", 0), plurality_vector(4)
    base = witness(ScoreVector(derived_vectors(s).drop_last), ScoreVector(derived_vectors(sp).drop_last))
    with pytest.raises(DomainError):
        embed_drop(base, "middle", s, sp)
    with pytest.raises(DomainError):
        embed_drop(base, "first", s, sp)


# average embedding


@pytest.mark.parametrize("m", [4, 5, 6])
def test_embed_average(m):
    s, sp = constant_middle(m, 1), constant_middle(m, "1/2")
    base = witness(ScoreVector(derived_vectors(s).ave), ScoreVector(derived_vectors(sp).ave))
    emb = embed_average(base, s, sp)
    p = emb.profile
    n = base.profile.n
    assert verify_witness(p, s, sp, 0).ok
    assert p.n == m * n * (2 * m - 5) * math.factorial(m - 2)
    spread = dict(emb.params)["spread"]
    assert spread == 3 * n * (m - 2) * math.factorial(m - 2)
    for vec in (s, sp):
        totals = total_scores(p, vec)
        for w in range(3, m):
            assert totals[w] == F(p.n, m) * sum(vec)


def test_embed_average_restriction():
    m = 5
    s, sp = constant_middle(m, 1), constant_middle(m, "1/2")
    base = witness(sv(1, 1, 0), sv(1, "1/2", 0))
    emb = embed_average(base, s, sp)
    spread_part = Profile(
        emb.profile.alternatives,
        {o: c for o, c in emb.profile.items() if o[0] in (0, 1, 2) and o[-1] in (0, 1, 2)},
    )
    copies = 3 * (m - 2) * math.factorial(m - 2)
    restricted = restrict_profile(spread_part, (0, 1, 2))
    assert dict(restricted.counts) == {o: c * copies for o, c in base.profile.items()}


def test_rank_partition():
    assert rank_partition(TABLE1) == (8, 0, 13)


# cyclic profiles


def test_special_low_four():
    s, sp = constant_middle(4, "1/2"), constant_middle(4, "1/4")
    emb = special_low(s, sp, F(1, 4))
    p = emb.profile
    assert dict(emb.params)["b"] == 2 and p.n == 7
    assert total_scores(p, s) == (4, F(7, 2), F(7, 2), 3)
    tp = total_scores(p, sp)
    assert tp[1] == F(11, 4) and tp[0] == F(5, 2)
    mm = majority_margins(p)
    for k in (1, 2, 3):
        x_above = (p.n + mm[0, k]) // 2
        assert (x_above, p.n - x_above) == (3, 4)
    assert verify_witness(p, s, sp, 0).ok


def test_special_high_four():
    s, sp = constant_middle(4, "1/2"), constant_middle(4, "3/4")
    assert special_high_parameters(4, F(3, 4)) == (4, 5)
    emb = special_high(s, sp, F(3, 4))
    p = emb.profile
    assert p.n == 39
    ts = total_scores(p, s)
    assert ts == (21, 19, 19, 19)
    tp = total_scores(p, sp)
    # a direct tally gives 49/2 for y1 (still above x's 24)
    assert tp[0] == 24 and tp[1] == F(49, 2)
    mm = majority_margins(p)
    for k in (1, 2, 3):
        x_above = (p.n + mm[0, k]) // 2
        assert (x_above, p.n - x_above) == (19, 20)
    assert verify_witness(p, s, sp, 0).ok


@pytest.mark.parametrize("m", [4, 5, 6, 7])
@pytest.mark.parametrize("alpha", ["0", "1/10", "1/3", "49/100", "51/100", "2/3", "9/10", "1"])
def test_special_routes(m, alpha):
    report = witness(constant_middle(m, "1/2"), constant_middle(m, alpha))
    assert report.verdicts.ok and len(report.trace) == 1
    assert report.trace[0].tag in ("special_low", "special_high")


def test_special_wrong_side():
    s = constant_middle(4, "1/2")
    with pytest.raises(DomainError):
        special_low(s, constant_middle(4, "3/4"), F(3, 4))
    with pytest.raises(DomainError):
        special_high(s, constant_middle(4, "1/4"), F(1, 4))
    with pytest.raises(DomainError):
        special_low(plurality_vector(4), constant_middle(4, "1/4"), F(1, 4))


# properties


def _check_report(report, s, sp):
    m = len(s)
    assert report.profile.m == m
    assert verify_witness(report.profile, s, sp, 0).ok
    assert len(report.trace) <= m - 2
    assert [step.m for step in report.trace] == sorted((step.m for step in report.trace), reverse=True)
    assert report.trace[-1].m == 3 or report.trace[-1].tag.startswith("special")


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_soundness_randomized(m):
    rng = random.Random(100 + m)
    for _ in range(60):
        s, sp = random_pair(rng, m, 20)
        _check_report(witness(s, sp), s, sp)


@settings(max_examples=50)
@given(witness_pairs(5, 10))
def test_soundness_hypothesis(pair):
    s, sp = pair
    _check_report(witness(s, sp), s, sp)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_bidirectional(m):
    rng = random.Random(m)
    done = 0
    while done < 30:
        s, sp = random_pair(rng, m, 20)
        if sp == borda_vector(m):
            continue
        _check_report(witness(s, sp), s, sp)
        _check_report(witness(sp, s), sp, s)
        done += 1


@pytest.mark.parametrize("s, sp, route", [
    (sv(1, "4/5", "1/5", 0), plurality_vector(4), "drop_last"),
    (sv(1, "4/5", "1/5", 0), sv(1, 1, 0, 0), "drop_first"),
    (sv(1, "4/5", "1/2", "1/5", 0), sv(1, 0, 0, 0, 0), "drop_last"),
])
def test_drop_routes_end_to_end(s, sp, route):
    report = witness(s, sp)
    assert report.trace[0].tag == route
    _check_report(report, s, sp)


def test_merge_does_not_break_witness():
    # twice a witness is still a witness
    report = witness(plurality_vector(4), borda_vector(4))
    doubled = merge_profiles([report.profile, report.profile])
    assert verify_witness(doubled, plurality_vector(4), borda_vector(4), 0).ok
