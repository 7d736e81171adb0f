"""Command-line front end.

Exit codes: 0 success, 1 parse/domain error or failed check, 2 construction
not applicable (e.g. the electing rule is Borda), 3 enumeration budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import montecarlo, oracle
from .core import condorcet_loser, total_scores, winners
from .errors import BudgetExceeded, ConstructionFault, DomainError, NotApplicable
from .notation import format_profile, is_alias, parse_profile, parse_score_vector
from .reduce import Reduction, classify, sub_conditions
from .verify import verify_witness
from .witnessgen import witness

EXIT_OK, EXIT_ERROR, EXIT_NOT_APPLICABLE, EXIT_BUDGET = 0, 1, 2, 3


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _dimension(texts, m):
    if m is not None:
        return m
    for text in texts:
        if not is_alias(text):
            return len(text.split(","))
    return 3


def _pair(args):
    m = _dimension([args.s, args.sp], args.m)
    return parse_score_vector(args.s, m), parse_score_vector(args.sp, m)


def _read_profile(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None
    return parse_profile(text)


def cmd_witness(args, out):
    s, sp = _pair(args)
    report = witness(s, sp)
    text = format_profile(report.profile)
    if args.trace:
        text += "".join(f"# trace: {step.describe()}\n" for step in report.trace)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        p = report.profile
        out.write(f"wrote {args.out}: {p.n} voters, {p.m} alternatives, target {p.alternatives[0]}\n")
    else:
        out.write(text)
    return EXIT_OK


def cmd_verify(args, out):
    p = _read_profile(args.profile)
    s, sp = parse_score_vector(args.s, p.m), parse_score_vector(args.sp, p.m)
    v = verify_witness(p, s, sp, p.index(args.target))
    out.write(
        f"CL: {_yes(v.condorcet_loser)}; f-unique-winner: {_yes(v.unique_winner)}; "
        f"f'-excludes: {_yes(v.excluded)}\n"
    )
    return EXIT_OK if v.ok else EXIT_ERROR


def cmd_classify(args, out):
    s, sp = _pair(args)
    case = classify(s, sp)
    out.write(f"case: {case.route.value}\n")
    if case.pair is not None:
        out.write(f"pair: {case.pair[0]} vs {case.pair[1]}\n")
    else:
        out.write(f"alpha: {case.alpha}\n")
    for route in (Reduction.AVERAGE, Reduction.DROP_FIRST, Reduction.DROP_LAST):
        flags = sub_conditions(s, sp, route)
        out.write(f"{route.value}: " + " ".join(f"{k}={_yes(f)}" for k, f in zip("abcd", flags)) + "\n")
    return EXIT_OK


def cmd_audit(args, out):
    if args.m < 3:
        raise DomainError("need at least three alternatives")
    total_size = sum(oracle.space_size(args.m, n) for n in range(args.nmax + 1))
    if total_size > args.budget:
        raise BudgetExceeded(total_size, args.budget)
    total = 0
    for n in range(args.nmax + 1):
        v = oracle.borda_audit_level(args.m, n, args.budget)
        total += v
        out.write(f"n={n} profiles={oracle.space_size(args.m, n)} violations={v}\n")
    out.write(f"total violations: {total}\n")
    return EXIT_OK if total == 0 else EXIT_ERROR


def cmd_scan(args, out):
    s, sp = _pair(args)
    report = oracle.dominance_scan(s, sp, args.nmax, args.budget)
    out.write(f"{'n':>3} {'profiles':>9} {'L(f)':>7} {'L(fp)':>7} {'f-only':>7} {'fp-only':>7}\n")
    for r in report.rows:
        out.write(f"{r.n:>3} {r.profiles:>9} {r.in_f:>7} {r.in_fp:>7} {r.f_only:>7} {r.fp_only:>7}\n")
    out.write(f"total f-only: {report.f_only}\ntotal fp-only: {report.fp_only}\n")
    for label, example in (("f-only", report.f_only_example), ("fp-only", report.fp_only_example)):
        if example is not None:
            out.write(f"# example {label}\n" + format_profile(example))
    return EXIT_OK


def cmd_minimal(args, out):
    s, sp = _pair(args)
    found = oracle.minimal_witness_search(s, sp, args.nmax, args.budget)
    if found is None:
        out.write(f"none with at most {args.nmax} voters\n")
        return EXIT_OK
    n, p = found
    out.write(f"minimal n: {n}\n" + format_profile(p))
    return EXIT_OK


def _s2_list(text):
    try:
        return [Fraction(part.strip()) for part in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"cannot parse --s2 list {text!r}") from None


def cmd_estimate(args, out):
    culture = montecarlo.Culture(args.culture)
    t = montecarlo.tally(_s2_list(args.s2), args.n, culture, args.samples, args.seed)
    rows = montecarlo.estimates(t, culture, args.conditional)
    out.write(
        f"culture={culture.value} n={args.n} samples={args.samples} seed={args.seed} "
        f"conditional={str(args.conditional).lower()} with_loser={t.with_loser}\n"
    )
    out.write(f"{'s2':>8} {'point':>9} {'stderr':>9} {'hits':>9} {'denom':>9}\n")
    for e in rows:
        out.write(f"{str(e.s2):>8} {e.point:>9.5f} {e.stderr:>9.5f} {e.hits:>9} {e.sample_count:>9}\n")
    out.write("# records\n")
    for e in rows:
        out.write(json.dumps(e.record(), sort_keys=True) + "\n")
    return EXIT_OK


def cmd_tally(args, out):
    p = _read_profile(args.profile)
    s = parse_score_vector(args.s, p.m)
    for name, score in zip(p.alternatives, total_scores(p, s)):
        out.write(f"{name}: {score}\n")
    out.write("winners: " + " ".join(p.alternatives[x] for x in sorted(winners(p, s))) + "\n")
    cl = condorcet_loser(p)
    out.write(f"condorcet loser: {'none' if cl is None else p.alternatives[cl]}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clwitness",
        description="Scoring rules, Condorcet losers and witness profiles (exact arithmetic).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def pair_args(p):
        p.add_argument("s", help="score vector of the rule that should elect the loser")
        p.add_argument("sp", metavar="s'", help="score vector of the other rule")
        p.add_argument("--m", type=int, default=None, help="number of alternatives for aliases (default 3)")

    def budget_arg(p):
        p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET, help="max profiles to enumerate")

    p = sub.add_parser("witness", help="synthesize a verified witness profile")
    pair_args(p)
    p.add_argument("--out", help="write the profile to this file")
    p.add_argument("--trace", action="store_true", help="append construction steps as comments")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="check the three witness conditions on a profile file")
    p.add_argument("profile")
    p.add_argument("s")
    p.add_argument("sp", metavar="s'")
    p.add_argument("target", help="name of the alternative expected to be the Condorcet loser")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="show which reduction applies to a pair")
    pair_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("audit", help="exhaustively check that Borda never elects a Condorcet loser")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--nmax", type=int, required=True)
    budget_arg(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("scan", help="compare loser-selection sets of two rules (m=3)")
    pair_args(p)
    p.add_argument("--nmax", type=int, required=True)
    budget_arg(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("minimal", help="smallest witness by exhaustive search (m=3)")
    pair_args(p)
    p.add_argument("--nmax", type=int, required=True)
    budget_arg(p)
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("estimate", help="Monte Carlo loser-selection frequencies (m=3)")
    p.add_argument("--s2", default=",".join(str(v) for v in montecarlo.S2_GRID),
                   help="comma-separated middle scores (default 0,1/10,...,1)")
    p.add_argument("--n", type=int, default=101)
    p.add_argument("--culture", choices=[c.value for c in montecarlo.Culture], default="ic")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--conditional", action="store_true",
                   help="divide by profiles that have a Condorcet loser")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("tally", help="scores, winners and Condorcet loser of a profile file")
    p.add_argument("profile")
    p.add_argument("s")
    p.set_defaults(func=cmd_tally)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except NotApplicable as exc:
        err.write(f"not applicable: {exc}\n")
        return EXIT_NOT_APPLICABLE
    except BudgetExceeded as exc:
        err.write(f"refused: {exc}\n")
        return EXIT_BUDGET
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ERROR
    except ConstructionFault as exc:
        err.write(f"internal construction fault: {exc}\n")
        return EXIT_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
