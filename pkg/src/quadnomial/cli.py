"""Command-line front end: ``verify``, ``coeff`` and ``errata``.

Exit codes: 0 all checks hold, 1 a congruence failed, 2 usage error,
3 an exact row exceeded the size budget.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import partial
from typing import Optional

from quadnomial import oracle
from quadnomial.congruence_suite import CLAIM_GROUPS, run_prime
from quadnomial.errata import adjudicate
from quadnomial.numtheory import primes_between
from quadnomial.qnomial import qnomial_exact
from quadnomial.report import SweepReport, to_csv, to_json, to_table

log = logging.getLogger("quadnomial")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class SweepConfig:
    prime_min: int = 5
    prime_max: int = 100
    n_max: int = 1
    checks: tuple = CLAIM_GROUPS
    format: str = "table"
    budget: int = oracle.DEFAULT_BUDGET
    parallelism: int = 1
    signed: bool = False

    def validate(self, allow_empty_range: bool = False):
        if self.prime_min < 5:
            raise UsageError(f"--prime-min must be >= 5, got {self.prime_min}")
        if self.prime_max < self.prime_min and not allow_empty_range:
            raise UsageError("--prime-max must be >= --prime-min")
        if self.n_max < 1:
            raise UsageError(f"--n-max must be >= 1, got {self.n_max}")
        if not self.checks:
            raise UsageError("--checks selects nothing")
        if self.budget < 1:
            raise UsageError("--budget must be positive")
        if self.parallelism < 1:
            raise UsageError("--jobs must be positive")


def parse_checks(text: str) -> tuple:
    if text.strip().lower() == "all":
        return CLAIM_GROUPS
    picked = []
    for tok in text.split(","):
        tok = tok.strip().upper()
        if not tok:
            continue
        if tok not in CLAIM_GROUPS:
            raise UsageError(f"unknown check {tok!r}; choose from {', '.join(CLAIM_GROUPS)} or 'all'")
        if tok not in picked:
            picked.append(tok)
    return tuple(picked)


def run_sweep(config: SweepConfig) -> SweepReport:
    primes = primes_between(config.prime_min, config.prime_max)
    task = partial(run_prime, n_max=config.n_max, groups=config.checks, budget=config.budget)
    report = SweepReport()
    if config.parallelism > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            for part in pool.map(task, primes):
                report.merge(part)
    else:
        for p in primes:
            report.merge(task(p))
    return report.sorted()


def render(report: SweepReport, config: SweepConfig) -> str:
    if config.format == "csv":
        return to_csv(report, config.signed)
    if config.format == "json":
        cfg = asdict(config)
        cfg["checks"] = list(config.checks)
        return to_json(report, cfg, config.signed)
    return to_table(report, config.signed)


def render_errata(results, config: SweepConfig) -> str:
    rows = [r.as_dict() for r in results]
    if config.format == "json":
        cfg = {"prime_min": config.prime_min, "prime_max": config.prime_max, "n_max": config.n_max}
        return json.dumps({"config": cfg, "items": rows}, indent=2) + "\n"
    fields = ["item_id", "cases", "statement_matches", "proof_matches", "winner",
              "statement_counterexample", "proof_counterexample", "description"]
    if config.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({f: r[f] for f in fields})
        return buf.getvalue()
    lines = []
    for r in rows:
        lines.append(
            f"{r['item_id']}: {r['winner']} matches computation "
            f"(statement {r['statement_matches']}/{r['cases']}, proof line {r['proof_matches']}/{r['cases']}"
            + (f", proof fails first at {r['proof_counterexample']}" if r["proof_counterexample"] else "")
            + ")"
        )
        lines.append(f"    {r['description']}")
    if not rows:
        lines.append("no flagged items apply to this prime range")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _add_sweep_args(sp, defaults: SweepConfig):
    sp.add_argument("--prime-min", type=int, default=defaults.prime_min)
    sp.add_argument("--prime-max", type=int, default=defaults.prime_max)
    sp.add_argument("--n-max", type=int, default=defaults.n_max)
    sp.add_argument("--format", choices=("csv", "json", "table"), default="table")
    sp.add_argument("--out", metavar="FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadnomial",
        description="Quadrinomial coefficient congruences modulo p^2: compute and verify.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    d = SweepConfig()
    v = sub.add_parser("verify", help="check congruences over a grid of primes and multipliers")
    _add_sweep_args(v, d)
    v.add_argument("--checks", default="all",
                   help="comma list of " + ",".join(CLAIM_GROUPS) + " or 'all'")
    v.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET,
                   help="largest exact coefficient vector the oracle may build")
    v.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    v.add_argument("--signed", action="store_true",
                   help="print residues in (-m/2, m/2] instead of [0, m)")

    c = sub.add_parser("coeff", help="print C(N, k)_3, exactly or modulo --mod")
    c.add_argument("n_row", type=int)
    c.add_argument("k", type=int)
    c.add_argument("--mod", type=int, dest="modulus")
    c.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)

    e = sub.add_parser("errata", help="compare statement and proof-line forms for known misprints")
    _add_sweep_args(e, SweepConfig(prime_max=200, n_max=1))
    return parser


def cmd_verify(args) -> int:
    config = SweepConfig(
        prime_min=args.prime_min,
        prime_max=args.prime_max,
        n_max=args.n_max,
        checks=parse_checks(args.checks),
        format=args.format,
        budget=args.budget,
        parallelism=args.jobs,
        signed=args.signed,
    )
    config.validate()
    report = run_sweep(config)
    _emit(render(report, config), args.out)
    fails = report.failures
    for f in fails[:20]:
        log.warning("FAIL %s p=%s n=%s k=%s lhs=%s rhs=%s %s",
                    f.claim_id, f.p, f.n, f.k, f.lhs.value, f.rhs.value, f.full_note())
    return EXIT_FAIL if fails else EXIT_OK


def cmd_coeff(args) -> int:
    if args.n_row < 0:
        raise UsageError("row must be nonnegative")
    if args.modulus is not None and args.modulus < 1:
        raise UsageError("--mod must be positive")
    print(qnomial_exact(args.n_row, args.k, args.modulus, budget=args.budget))
    return EXIT_OK


def cmd_errata(args) -> int:
    config = SweepConfig(prime_min=args.prime_min, prime_max=args.prime_max,
                         n_max=args.n_max, format=args.format)
    config.validate(allow_empty_range=True)
    results = adjudicate(config.prime_min, config.prime_max, config.n_max)
    _emit(render_errata(results, config), args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    handler = {"verify": cmd_verify, "coeff": cmd_coeff, "errata": cmd_errata}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"quadnomial: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except oracle.SizeBudgetExceeded as exc:
        print(f"quadnomial: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
