"""Text formats: profile files and score-vector notation.

Profile file::

    alternatives: A B C
    # comment
    8 : A > B > C
    7 : B > C > A

Duplicate ranking lines accumulate.  Serialization is canonical: rankings
sorted lexicographically by id sequence, one line each, zero counts dropped.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import (
    Profile,
    ScoreVector,
    antiplurality_vector,
    borda_vector,
    k_approval_vector,
    plurality_vector,
)
from .errors import DomainError

_ALIASES = {
    "borda": borda_vector,
    "plurality": plurality_vector,
    "antiplurality": antiplurality_vector,
    "veto": antiplurality_vector,
}
_K_APPROVAL = re.compile(r"^k-approval:(\d+)$")


def parse_profile(text: str) -> Profile:
    alternatives = None
    rankings = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if alternatives is None:
            head, sep, rest = line.partition(":")
            if not sep or head.strip() != "alternatives":
                raise DomainError(f"line {lineno}: expected 'alternatives: <name> ...'")
            alternatives = rest.split()
            if not alternatives:
                raise DomainError(f"line {lineno}: no alternatives listed")
            continue
        count_text, sep, ranking = line.partition(":")
        if not sep:
            raise DomainError(f"line {lineno}: expected '<count> : <name> > ... > <name>'")
        try:
            count = int(count_text.strip())
        except ValueError:
            raise DomainError(f"line {lineno}: bad count {count_text.strip()!r}") from None
        if count < 0:
            raise DomainError(f"line {lineno}: negative count")
        names = [n.strip() for n in ranking.split(">")]
        try:
            Profile.from_rankings(alternatives, [(count, names)])
        except DomainError as exc:
            raise DomainError(f"line {lineno}: {exc}") from None
        rankings.append((count, names))
    if alternatives is None:
        raise DomainError("missing 'alternatives:' header")
    return Profile.from_rankings(alternatives, rankings)


def format_profile(p: Profile) -> str:
    names = p.alternatives
    lines = ["alternatives: " + " ".join(names)]
    for order, count in sorted(p.items()):
        lines.append(f"{count} : " + " > ".join(names[x] for x in order))
    return "\n".join(lines) + "\n"


def parse_score_vector(text: str, m: int | None = None) -> ScoreVector:
    """Parse ``"1, 1/2, 0"`` or an alias (``borda``, ``plurality``, ``veto``,
    ``antiplurality``, ``k-approval:<k>``).

    Explicit values are normalized; aliases need ``m``.
    """
    key = text.strip().lower()
    match = _K_APPROVAL.match(key)
    if key in _ALIASES or match:
        if m is None:
            raise DomainError(f"alias {text!r} needs the number of alternatives")
        if match:
            return k_approval_vector(m, int(match.group(1)))
        return _ALIASES[key](m)
    parts = [part.strip() for part in text.split(",")]
    try:
        values = [Fraction(part) for part in parts]
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"cannot parse score vector {text!r}") from None
    s = ScoreVector.normalize(values)
    if m is not None and len(s) != m:
        raise DomainError(f"score vector {text!r} has {len(s)} entries, expected {m}")
    return s


def is_alias(text: str) -> bool:
    key = text.strip().lower()
    return key in _ALIASES or bool(_K_APPROVAL.match(key))
