import itertools
import random
from fractions import Fraction
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from clwitness.core import Profile, ScoreVector, is_borda

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

HERE = Path(__file__).parent
DATA = HERE / "data"


def fractions_01(max_den=100):
    return st.builds(
        lambda d, k: Fraction(k % (d + 1), d),
        st.integers(1, max_den),
        st.integers(0, 10**6),
    )


@st.composite
def score_vectors(draw, m, max_den=100):
    middle = sorted((draw(fractions_01(max_den)) for _ in range(m - 2)), reverse=True)
    return ScoreVector((Fraction(1), *middle, Fraction(0)))


@st.composite
def witness_pairs(draw, m, max_den=100):
    s = draw(score_vectors(m, max_den).filter(lambda v: not is_borda(v)))
    sp = draw(score_vectors(m, max_den).filter(lambda v: v != s))
    return s, sp


@st.composite
def profiles(draw, m, max_orders=8, max_count=6, names=None):
    orders = list(itertools.permutations(range(m)))
    chosen = draw(st.lists(st.sampled_from(orders), max_size=max_orders))
    counts = {o: draw(st.integers(1, max_count)) for o in chosen}
    return Profile(names or tuple("abcdefgh"[:m]), counts)


def random_fraction(rng: random.Random, max_den=100) -> Fraction:
    d = rng.randint(1, max_den)
    return Fraction(rng.randint(0, d), d)


def random_vector(rng: random.Random, m: int, max_den=100) -> ScoreVector:
    middle = sorted((random_fraction(rng, max_den) for _ in range(m - 2)), reverse=True)
    return ScoreVector((Fraction(1), *middle, Fraction(0)))


def random_pair(rng: random.Random, m: int, max_den=100):
    while True:
        s = random_vector(rng, m, max_den)
        if not is_borda(s):
            break
    while True:
        sp = random_vector(rng, m, max_den)
        if sp != s:
            return s, sp


# acceptance criteria report: number -> (passed, title, detail)
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num in sorted(ACCEPTANCE):
        passed, title, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num} {'PASS' if passed else 'FAIL'}: {title} | {detail}")
