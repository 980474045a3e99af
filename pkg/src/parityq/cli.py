"""Command-line front end.

    parityq verify --id T1.3 --order 200           run identity checks
    parityq table --family od-eu --variant over --order 10 --format csv
    parityq enumerate --family od-eu --variant over --n 3
    parityq list                                   show the registry

Exit status: 0 all requested checks pass, 1 at least one fails,
2 usage or configuration error.  Nothing else.

Rationals are always emitted as exact strings (json uses the same "p/q"
text as fractions.Fraction), never floats.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .checking import CheckReport
from .enumeration import (
    SepConfig,
    Variant,
    count_sep,
    enumerate_sep,
    parse_variant,
    series_sep,
)
from .errors import QSeriesError, UnknownIdentityError
from .registry import all_ids, check, entry, family_closed, registry

MAX_ORDER = 2000
ENUMERATION_GUARD = 100_000
BFILE_DIGIT_LIMIT = 1000


@dataclass
class RunConfig:
    command: str
    ids: list[str] | None = None
    order: int = 100
    family: str | None = None
    variant: str | None = None
    n: int = 0
    fmt: str = "human"
    as_json: bool = False
    jobs: int = 1


class UsageError(Exception):
    pass


def _clamp_order(order: int) -> int:
    if order < 1:
        raise UsageError("--order must be >= 1")
    if order > MAX_ORDER:
        print(
            f"warning: --order capped at {MAX_ORDER} "
            "(coefficient extraction is quadratic in the order)",
            file=sys.stderr,
        )
        return MAX_ORDER
    return order


def _verify_worker(args: tuple[str, int]) -> dict:
    id_, order = args
    return check(id_, order).to_json()


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.ids == ["all"]:
        ids = all_ids()
    else:
        known = set(all_ids())
        bad = [i for i in cfg.ids if i not in known]
        if bad:
            raise UsageError(
                f"unknown identity id(s): {', '.join(bad)}; "
                f"valid ids: {', '.join(all_ids())}"
            )
        ids = list(cfg.ids)
    order = _clamp_order(cfg.order)

    if cfg.jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            raw = list(pool.map(_verify_worker, [(i, order) for i in ids]))
        reports = [CheckReport.from_json(r) for r in raw]
    else:
        reports = [check(i, order) for i in ids]

    if cfg.as_json:
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.describe())
    return 0 if all(r.passed for r in reports) else 1


def _resolve_family(cfg: RunConfig) -> tuple[SepConfig, Variant]:
    if not cfg.family or not cfg.variant:
        raise UsageError("--family and --variant are required")
    try:
        sep = SepConfig.from_code(cfg.family)
        variant = parse_variant(cfg.variant)
    except ValueError as exc:
        raise UsageError(str(exc))
    return sep, variant


def cmd_table(cfg: RunConfig) -> int:
    sep, variant = _resolve_family(cfg)
    order = _clamp_order(cfg.order)
    oracle = series_sep(sep, variant, order)

    if cfg.fmt == "bfile":
        lines = []
        for n in range(order):
            v = oracle.coefficient(n)
            if v.denominator != 1:
                raise UsageError(f"oracle value at n={n} is not an integer: {v}")
            if len(str(v.numerator)) > BFILE_DIGIT_LIMIT:
                raise UsageError(f"oracle value at n={n} exceeds b-file line conventions")
            lines.append(f"{n} {v.numerator}")
        print("\n".join(lines))
        return 0

    resolved = family_closed(sep.code, variant)
    if resolved is None:
        raise UsageError(
            f"no closed form is registered for family {sep.code} variant {variant.value}"
        )
    name, builder = resolved
    closed = builder(order)
    if closed.trunc < order:
        raise UsageError(
            f"closed form for {sep.code}/{variant.value} only guarantees "
            f"order {closed.trunc} < requested {order}"
        )
    rows = []
    for n in range(order):
        c, o = closed.coefficient(n), oracle.coefficient(n)
        rows.append((n, c, o, c == o))

    if cfg.fmt == "csv":
        print("n,closed,oracle,match")
        for n, c, o, ok in rows:
            print(f"{n},{c},{o},{'true' if ok else 'false'}")
    elif cfg.fmt == "json":
        print(json.dumps([
            {"n": n, "closed": str(c), "oracle": str(o), "match": ok}
            for n, c, o, ok in rows
        ], indent=2))
    else:
        print(f"family {sep.code} variant {variant.value} (closed form {name})")
        print(f"{'n':>5} {'closed':>16} {'oracle':>16} match")
        for n, c, o, ok in rows:
            print(f"{n:>5} {str(c):>16} {str(o):>16} {'true' if ok else 'FALSE'}")
    return 0 if all(ok for _, _, _, ok in rows) else 1


def cmd_enumerate(cfg: RunConfig) -> int:
    sep, variant = _resolve_family(cfg)
    if cfg.n < 0:
        raise UsageError("--n must be >= 0")
    total = count_sep(sep, variant, cfg.n)
    if total > ENUMERATION_GUARD:
        raise UsageError(
            f"{total} objects would be listed (guard is {ENUMERATION_GUARD})"
        )
    items = list(enumerate_sep(sep, variant, cfg.n))
    if cfg.as_json:
        print(json.dumps([p.to_json() for p in items]))
    else:
        for p in items:
            print(p.render())
    return 0


def cmd_list() -> int:
    for e in registry():
        kind = "expressions: " + "/".join(e.tags) if e.expressions else "parameterized check"
        print(f"{e.id:12s} min_order={e.min_order:<4d} {e.description}")
        print(f"{'':12s} {kind}")
        print(f"{'':12s} {e.formula}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parityq",
        description="Exact verification of the parity-separated (over)partition identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run registered identity checks")
    p.add_argument("--id", action="append", required=True,
                   help="identity id, repeatable; 'all' for every entry")
    p.add_argument("--order", type=int, default=100)
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("table", help="coefficient table: closed form vs oracle")
    p.add_argument("--family", required=True, help="e.g. od-eu (low block first)")
    p.add_argument("--variant", required=True, help="plain | over | mod")
    p.add_argument("--order", type=int, default=100)
    p.add_argument("--format", dest="fmt", default="human",
                   choices=["human", "csv", "json", "bfile"])

    p = sub.add_parser("enumerate", help="list the decorated partitions of n")
    p.add_argument("--family", required=True)
    p.add_argument("--variant", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")

    sub.add_parser("list", help="show every registered identity")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which matches our contract
        return 2 if exc.code not in (0, None) else 0
    try:
        if ns.command == "verify":
            cfg = RunConfig("verify", ids=ns.id, order=ns.order,
                            as_json=ns.json, jobs=max(1, ns.jobs))
            return cmd_verify(cfg)
        if ns.command == "table":
            cfg = RunConfig("table", family=ns.family, variant=ns.variant,
                            order=ns.order, fmt=ns.fmt)
            return cmd_table(cfg)
        if ns.command == "enumerate":
            cfg = RunConfig("enumerate", family=ns.family, variant=ns.variant,
                            n=ns.n, as_json=ns.json)
            return cmd_enumerate(cfg)
        if ns.command == "list":
            return cmd_list()
        raise UsageError(f"unknown command {ns.command!r}")
    except (UsageError, UnknownIdentityError, QSeriesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
