"""Command-line entry point: ``tripletrep run|eval|census``."""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .analysis import classify_homog_2local_fp, classify_l3_2local_fp
from .errors import TripletRepError, WordParseError
from .groups import GroupWord, PresentationKind, word_eval
from .reps import (
    l3_family,
    lambda_homog,
    mu_doubleprime,
    mu_matrix,
    omega,
    tits_theta,
)
from .suites import SUITES, run_suite, suite_document

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _int_or_symbol(v):
    try:
        return int(v)
    except ValueError:
        return v


def _parse_rep_spec(spec):
    """``"name:key=value,..."`` -> RepCandidate."""
    name, _, rest = spec.partition(":")
    params = {}
    for item in filter(None, (x.strip() for x in rest.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"expected key=value, got {item!r}")
        params[key.strip()] = value.strip()
    p = int(params.pop("p")) if "p" in params else None
    n = int(params.pop("n", 3))
    name = name.strip().lower()
    if name == "tits":
        return tits_theta(n)
    if name in ("mu", "mu_prime"):
        k = params.get("k", "s")
        return mu_matrix(n, None if k == "s" else int(k))
    if name in ("mu2", "mu_doubleprime"):
        k = params.get("k", "s")
        return mu_doubleprime(n, None if k == "s" else int(k))
    if name == "lambda":
        return lambda_homog(n, params.get("b", "b"), p)
    if name in ("omega1", "omega2"):
        return omega(n, int(name[-1]), params.get("b", "b"), params.get("x", "x"), p)
    if name.startswith("l3family") or name == "l3":
        j = int(params.pop("family", name[-1] if name[-1].isdigit() else 1))
        return l3_family(j, p=p, **params)
    raise ValueError(f"unknown representation {name!r}")


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    return (int(lo), int(hi)) if sep else (int(lo), int(lo))


def _cmd_run(args):
    primes = [int(x) for x in args.primes.split(",")] if args.primes else None
    if primes and any(p <= 3 for p in primes):
        print("primes must exceed 3", file=sys.stderr)
        return EXIT_ERROR
    n_range = _parse_range(args.n) if args.n else None
    reports = run_suite(args.suite, n_range, primes, args.depth, args.cap)
    doc = suite_document(args.suite, reports)
    body = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(body)
    if args.json:
        sys.stdout.write(body)
    else:
        for r in reports:
            print(f"{r.status.upper():5}  {r.check_name}  {json.dumps(r.to_dict()['parameters'])}")
    if any(r.status == "error" for r in reports):
        return EXIT_ERROR
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _cmd_eval(args):
    rep = _parse_rep_spec(args.rep)
    try:
        word = GroupWord.parse(args.word)
    except WordParseError as exc:
        print(f"error: {exc}\n  {args.word}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_ERROR
    print(word_eval(rep, word))
    return EXIT_OK


_CENSUS_KINDS = {"triplet": PresentationKind.TRIPLET, "virtual": PresentationKind.VIRTUAL_TRIPLET,
                 "welded": PresentationKind.WELDED_TRIPLET}


def _cmd_census(args):
    kind = args.kind.lower()
    if kind in ("l3", "l3-families"):
        census = classify_l3_2local_fp(args.p)
    else:
        census = classify_homog_2local_fp(_CENSUS_KINDS.get(kind, kind), args.p)
    out = census.summary()
    if args.solutions:
        out["solutionList"] = [[list(s), census.family_matches[s]] for s in census.solutions]
    print(json.dumps(out, indent=2))
    return EXIT_OK if not census.unmatched and census.reverified else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(prog="tripletrep", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a verification suite")
    run.add_argument("suite", choices=list(SUITES) + ["all"])
    run.add_argument("--n", help="strand range A..B")
    run.add_argument("--primes", help="comma-separated primes > 3")
    run.add_argument("--depth", type=int, default=8, help="kernel search word length")
    run.add_argument("--cap", type=int, default=10000, help="image closure size cap")
    run.add_argument("--out", help="write the JSON report here")
    run.add_argument("--json", action="store_true", help="print the JSON report")
    run.set_defaults(func=_cmd_run)

    ev = sub.add_parser("eval", help="evaluate a word under a representation")
    ev.add_argument("rep", help='e.g. "mu:n=3,k=1", "omega1:n=2,b=2,x=3", "tits:n=4"')
    ev.add_argument("word", help='e.g. "l1 l2 l1" or "(l1 r2)^3"')
    ev.set_defaults(func=_cmd_eval)

    ce = sub.add_parser("census", help="exhaustive 2-local classification over F_p")
    ce.add_argument("kind", help="triplet, virtual, welded or l3")
    ce.add_argument("--p", type=int, required=True)
    ce.add_argument("--solutions", action="store_true", help="list every solution")
    ce.set_defaults(func=_cmd_census)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TripletRepError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
