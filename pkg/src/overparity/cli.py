"""Command-line entry point: ``overparity <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import bijections as bj
from .core import STATISTICS, Overpartition, parse, parse_partition, stat_profile
from .counting import ParityFamilyId, RhsId, parity_pair, rhs_count
from .errors import OverparityError
from .families import FamilyId, SetId, enumerate_family, member
from .qseries import DEFAULT_ORDER, FORM_COUNT, ExprId, build
from .tables import all_tables, render
from .verify import MAP_CHECKS, MODES, REGISTRY, resolve, run_tasks

FORMATS = ("text", "csv", "json")


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> None:
    _emit(json.dumps(obj, indent=2))


def _global_flags() -> argparse.ArgumentParser:
    g = argparse.ArgumentParser(add_help=False)
    g.add_argument("--max-n", type=int, default=25, help="largest weight to enumerate (default 25)")
    g.add_argument("--order", type=int, default=DEFAULT_ORDER, help="series truncation order (default 200)")
    g.add_argument("--format", choices=FORMATS, default="text")
    g.add_argument("--jobs", type=int, default=1, help="worker processes for verify; 0 means one per CPU")
    return g


def cmd_enumerate(args) -> int:
    items = enumerate_family(args.family, args.n)
    if args.set:
        items = (pi for pi in items if member(args.set, pi))
    items = list(items)
    if args.count_only:
        _emit(str(len(items)))
    elif args.format == "json":
        _dump([pi.to_json() for pi in items])
    else:
        for pi in items:
            _emit(str(pi) if pi.parts else "()")
    return 0


def cmd_count(args) -> int:
    if (args.family is None) == (args.rhs is None):
        raise UsageError("give exactly one of --family or --rhs")
    if args.table:
        ns = range(1, args.max_n + 1)
    else:
        if args.n is None:
            raise UsageError("--n is required unless --table is given")
        ns = [args.n]
    if args.family is not None:
        rows = [(n, *parity_pair(args.family, n)) for n in ns]
        rows = [(n, a, b, a - b) for n, a, b in rows]
        header = ("n", "A", "B", "A-B")
    else:
        rows = [(n, rhs_count(args.rhs, n)) for n in ns]
        header = ("n", args.rhs)
    if args.format == "json":
        _dump([dict(zip(header, r)) for r in rows])
    elif args.table or args.format == "csv":
        _emit("\n".join(",".join(map(str, r)) for r in [header] + rows))
    elif args.family is not None:
        n, a, b, d = rows[0]
        _emit(f"A={a} B={b} A-B={d}")
    else:
        _emit(str(rows[0][1]))
    return 0


def cmd_series(args) -> int:
    expr = ExprId(args.expr)
    if args.form >= FORM_COUNT.get(expr, 1):
        raise UsageError(f"{expr.value} has {FORM_COUNT.get(expr, 1)} form(s)")
    s = build(expr, args.order, t=args.t, form=args.form)
    if args.format == "json":
        _dump({"expr": expr.value, "order": args.order, "t": args.t, "form": args.form,
               "coefficients": list(s.coeffs)})
    else:
        _emit("\n".join(["n,coeff"] + [f"{n},{c}" for n, c in enumerate(s.coeffs)]))
    return 0


def _parities(pi: Overpartition) -> dict[str, int]:
    st = stat_profile(pi)
    return {name: getattr(st, name) % 2 for name in STATISTICS}


def cmd_map(args) -> int:
    name = bj.MapId(args.name)
    if name is bj.MapId.odd_largest_witness:
        n = int(args.input)
        image = bj.odd_largest_witness(n)
        if args.format == "json":
            _dump({"map": name.value, "input": n, "image": list(image.parts)})
        else:
            _emit(image.display())
        return 0
    if name is bj.MapId.double_half:
        lam = parse_partition(args.input)
        image = bj.double_half_inverse(lam) if args.inverse else bj.double_half(lam)
        before = Overpartition.from_partition(lam)
        after = Overpartition.from_partition(image)
    else:
        before = parse(args.input)
        after = bj.apply_map(name, before)
        image = after
    pb, pa = _parities(before), _parities(after)
    if args.format == "json":
        _dump({"map": name.value, "input": before.to_json(), "image": after.to_json(),
               "parity_before": pb, "parity_after": pa})
        return 0
    _emit(f"image: {image.display()}")
    lines = ["statistic,before,after"] + [f"{k},{pb[k]},{pa[k]}" for k in STATISTICS]
    _emit("\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    if args.order < args.max_n and args.mode != "enum":
        raise UsageError("--order must be at least --max-n")
    tasks: list[tuple[str, str]] = []
    if args.all:
        tasks = [("identity", k) for k in REGISTRY]
        if args.mode != "series":
            tasks += [("map", k) for k in MAP_CHECKS]
    for ident in args.id or []:
        try:
            tasks += [("map" if k in MAP_CHECKS else "identity", k) for k in resolve(ident)]
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    for m in args.map or []:
        if m not in MAP_CHECKS:
            raise UsageError(f"unknown map check {m!r}")
        tasks.append(("map", m))
    if not tasks:
        raise UsageError("nothing to verify: give --all, --id or --map")
    jobs = args.jobs if args.jobs > 0 else (os.cpu_count() or 1)
    summary = run_tasks(tasks, args.max_n, args.order, args.mode, jobs)
    if args.format == "json":
        _dump(summary.to_json(args.timings))
    else:
        _emit(summary.text(args.timings))
    return 0 if summary.ok else 1


def cmd_tables(args) -> int:
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    if args.format == "json":
        _dump([t.to_json() for t in all_tables(args.n)])
    else:
        _emit(render(args.n, args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    g = _global_flags()
    parser = argparse.ArgumentParser(prog="overparity",
                                     description="Parity identities on overpartition statistics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[g], help="list a family of weight n")
    p.add_argument("--family", choices=[f.value for f in FamilyId], default="OP")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", choices=[s.value for s in SetId], help="keep only members of a named set")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", parents=[g], help="parity pairs and right-hand-side counts")
    p.add_argument("--family", choices=[f.value for f in ParityFamilyId])
    p.add_argument("--rhs", choices=[r.value for r in RhsId])
    p.add_argument("--n", type=int)
    p.add_argument("--table", action="store_true", help="emit rows n=1..max-n as CSV")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("series", parents=[g], help="coefficients of a q-series expression")
    p.add_argument("--expr", choices=[e.value for e in ExprId], required=True)
    p.add_argument("--t", type=int, help="value of t for GEN_P and GEN_D")
    p.add_argument("--form", type=int, default=0, help="which equivalent form to build")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("map", parents=[g], help="apply a bijection or involution")
    p.add_argument("--name", choices=[m.value for m in bj.MapId], required=True)
    p.add_argument("--input", required=True, help='e.g. "8~,7,5,3~,2~"; an integer for the witness')
    p.add_argument("--inverse", action="store_true", help="apply the inverse of double_half")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", parents=[g], help="run registered identities and map checks")
    p.add_argument("--all", action="store_true")
    p.add_argument("--id", action="append", help="identity id or group (repeatable)")
    p.add_argument("--map", action="append", help="map check id (repeatable)")
    p.add_argument("--mode", choices=MODES, default="both")
    p.add_argument("--timings", action="store_true", help="include wall times (output no longer byte-stable)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", parents=[g], help="statistic and A/B tables for weight n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, OverparityError, ValueError) as exc:
        print(f"overparity {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
