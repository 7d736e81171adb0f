import math
from fractions import Fraction as F

import pytest

from clwitness.core import (
    Profile,
    ScoreVector,
    antiplurality_vector,
    borda_vector,
    condorcet_loser,
    plurality_vector,
    winners,
)
from clwitness.errors import BudgetExceeded, DomainError, NotApplicable
from clwitness.oracle import (
    borda_audit,
    dominance_scan,
    enumerate_anonymous_profiles,
    loser_of,
    minimal_witness_search,
    random_borda_audit,
    selects_cl,
    space_size,
)
from clwitness.verify import verify_witness


def test_space_size():
    assert space_size(3, 0) == 1
    assert space_size(3, 2) == 21
    assert space_size(3, 12) == math.comb(17, 5) == 6188
    assert space_size(4, 3) == math.comb(26, 23)


def test_enumeration_is_complete_and_distinct():
    got = list(enumerate_anonymous_profiles(3, 4))
    assert len(got) == len(set(got)) == space_size(3, 4)
    assert all(p.n == 4 for p in got)


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded) as err:
        enumerate_anonymous_profiles(4, 10, budget=1000)
    assert err.value.count == space_size(4, 10) and err.value.budget == 1000
    with pytest.raises(DomainError):
        enumerate_anonymous_profiles(2, 3)


def test_selects_cl_table1():
    table1 = Profile.from_rankings("ABC", [(8, "ABC"), (7, "BCA"), (6, "CBA")])
    assert selects_cl(table1, plurality_vector(3))
    assert not selects_cl(table1, borda_vector(3))
    assert loser_of(table1) == 0


def test_selects_cl_agrees_with_core():
    for n in range(5):
        for p in enumerate_anonymous_profiles(3, n):
            cl = condorcet_loser(p)
            assert loser_of(p) == cl
            for s in (plurality_vector(3), ScoreVector((1, F(4, 5), 0))):
                assert selects_cl(p, s) == (cl is not None and cl in winners(p, s))


def test_selects_cl_mismatched():
    with pytest.raises(DomainError):
        selects_cl(Profile("xyz"), plurality_vector(4))


def test_borda_audit_small():
    assert borda_audit(3, 8) == 0
    assert borda_audit(4, 3) == 0
    assert random_borda_audit(4, 20000, seed=3) == 0


def test_borda_audit_budget():
    with pytest.raises(BudgetExceeded):
        borda_audit(5, 6, budget=10**5)


def test_plurality_selects_losers():
    # plurality does select Condorcet losers, so the audit is a real test
    scan = dominance_scan(plurality_vector(3), borda_vector(3), 7)
    assert scan.f_only > 0 and scan.fp_only == 0


def test_minimal_plurality_borda():
    n, p = minimal_witness_search(plurality_vector(3), borda_vector(3), 9)
    assert n == 7
    assert verify_witness(p, plurality_vector(3), borda_vector(3), 0).ok
    # nothing smaller, by brute force through the core tallies
    for k in range(1, n):
        for q in enumerate_anonymous_profiles(3, k):
            cl = condorcet_loser(q)
            if cl is not None:
                assert not verify_witness(q, plurality_vector(3), borda_vector(3), cl).ok


def test_minimal_none_and_errors():
    assert minimal_witness_search(plurality_vector(3), borda_vector(3), 6) is None
    with pytest.raises(NotApplicable):
        minimal_witness_search(plurality_vector(3), plurality_vector(3), 3)
    with pytest.raises(DomainError):
        minimal_witness_search(plurality_vector(4), borda_vector(4), 3)


def test_dominance_scan_borda():
    scan = dominance_scan(borda_vector(3), plurality_vector(3), 6)
    assert scan.f_only == 0 and scan.fp_only > 0
    assert [r.profiles for r in scan.rows] == [space_size(3, n) for n in range(7)]
    assert scan.fp_only_example is not None and scan.f_only_example is None


def test_dominance_scan_incomparable():
    scan = dominance_scan(plurality_vector(3), antiplurality_vector(3), 5)
    assert scan.f_only > 0 and scan.fp_only > 0
    for ex, s, sp in ((scan.f_only_example, plurality_vector(3), antiplurality_vector(3)),
                      (scan.fp_only_example, antiplurality_vector(3), plurality_vector(3))):
        assert selects_cl(ex, s) and not selects_cl(ex, sp)
