"""Command-line interface.

Exit codes: 0 success, 1 malformed arguments, 2 domain refusal
(unachievable k, rank cap, out-of-regime request), 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cosine, tables
from .distributions import METHODS, DistributionRequest, distribution
from .errors import DomainError, PermstatError
from .permutation import parse
from .statistics import TAGS, StatisticSpec
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3

_ALIASES = {"lbsum": "lbsum_variant"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _spec_from(args) -> StatisticSpec:
    tag = _ALIASES.get(args.stat, args.stat)
    k1 = args.k1
    if tag == "inv_k1k2" and k1 is None:
        k1 = args.k
    k = None if tag == "inv_k1k2" else args.k
    return StatisticSpec(tag, k=k, k1=k1, k2=args.k2, d=args.d, variant=args.variant)


def _add_stat_args(p):
    p.add_argument("--stat", required=True, choices=sorted(TAGS + tuple(_ALIASES)))
    p.add_argument("--k", type=int)
    p.add_argument("--k1", type=int, help="position gap for inv_k1k2 (defaults to --k)")
    p.add_argument("--k2", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--variant", choices=["base", "ge_k", "le_k", "eq_k"])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="permstat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stat", help="evaluate a statistic on one permutation")
    p.add_argument("--perm", required=True)
    _add_stat_args(p)

    p = sub.add_parser("dist", help="distribution polynomial over S_n")
    _add_stat_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--format", choices=["json", "csv", "pretty"], default="pretty")
    p.add_argument("--cross-check", action="store_true")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("cosine", help="permutations with a given dot product")
    csub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    c = csub.add_parser("construct")
    c.add_argument("--k", type=int, required=True)
    c = csub.add_parser("count")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--max-rank", type=int)
    c = csub.add_parser("parity", help="exploratory search, not a verified claim")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--max-rank", type=int)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", default="all", choices=sorted(SUITES) + ["all"])
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--allow-large", action="store_true", help="permit --max-n >= 10")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("tables", help="regenerate a distribution table")
    p.add_argument("--table", required=True, choices=tables.TABLES)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--d", type=int, default=2, help="modulus for table L")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    return parser


def _cmd_stat(args, out):
    spec = _spec_from(args)
    print(spec(parse(args.perm)), file=out)


def _cmd_dist(args, out):
    spec = _spec_from(args)
    poly = distribution(DistributionRequest(spec, args.n, args.method),
                        jobs=args.jobs, cross_check=args.cross_check)
    if args.format == "json":
        print(json.dumps(poly.to_json()), file=out)
    elif args.format == "csv":
        out.write(tables.render_csv("N", [(args.n, (), poly)]))
    else:
        print(poly.pretty(), file=out)


def _cmd_cosine(args, out):
    if args.action == "construct":
        print(cosine.construct(args.k), file=out)
    elif args.action == "count":
        print(cosine.count_with_cosine(args.k, args.max_rank), file=out)
    else:
        witness = cosine.odd_parity_witness(args.k, args.max_rank)
        print("none" if witness is None else witness, file=out)


def _cmd_verify(args, out):
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    if args.max_n >= 10 and not args.allow_large:
        raise UsageError("--max-n >= 10 requires --allow-large")
    reports = run_suite(args.suite, args.max_n)
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2), file=out)
    else:
        for r in reports:
            line = f"{r.status.upper():4} {r.suite}/{r.check} [{r.range}]"
            if r.counterexample:
                line += f" counterexample={r.counterexample}"
            print(line, file=out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VERIFY


def _cmd_tables(args, out):
    data = tables.rows(args.table, args.n_max, d=args.d)
    if args.format == "json":
        print(tables.render_json(args.table, data), file=out)
    else:
        out.write(tables.render_csv(args.table, data))


_COMMANDS = {
    "stat": _cmd_stat,
    "dist": _cmd_dist,
    "cosine": _cmd_cosine,
    "verify": _cmd_verify,
    "tables": _cmd_tables,
}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        code = _COMMANDS[args.command](args, out)
        return EXIT_OK if code is None else code
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except cosine.NotAchievable as exc:
        print(f"not achievable: {exc}", file=err)
        return EXIT_DOMAIN
    except DomainError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    except PermstatError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
