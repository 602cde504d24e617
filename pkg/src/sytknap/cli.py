"""Command-line surface: single evaluations, identity verification, table
reproduction, symbolic certificates, search and scans.

Exit status: 0 all checks passed, 1 at least one verification failed
(reports are still emitted), 2 usage or bounds error.  Runs are seedless and
deterministic: the same invocation always produces byte-identical output.
"""

import argparse
import json
import os
import sys

from .certificates import CERTIFICATES, certify_all
from .degrees import degree, syt_enumerate
from .identities import (
    report_to_json,
    verify_analytic_ladder,
    verify_boundary,
    verify_branch_rows,
    verify_catalan_pair,
    verify_expansion,
    verify_hook_wrap,
    verify_knapsack,
    verify_ladder,
    verify_riordan,
)
from .partitions import format_shape, parse_shape
from .paths import PathKind, count_paths, enumerate_paths
from .render import TABLES, render_report, render_table
from .search import build_pool, find_equal_sum_pairs, scan_even_ladders

OUT_DIR_ENV = "SYTKNAP_OUT_DIR"


def _emit(text: str, out: str | None) -> None:
    sys.stdout.write(text)
    if out:
        base = os.environ.get(OUT_DIR_ENV, "")
        path = out if os.path.isabs(out) or not base else os.path.join(base, out)
        with open(path, "w") as fh:
            fh.write(text)


def _cmd_degree(args) -> int:
    shape = parse_shape(args.shape)
    value = syt_enumerate(shape) if args.route == "enumerate" else degree(shape)
    _emit(f"{value}\n", args.out)
    return 0


def _cmd_paths(args) -> int:
    kind = PathKind(args.kind)
    if args.list:
        paths = enumerate_paths(kind, args.n)
        text = "\n".join(p if p else "(empty)" for p in paths)
        _emit((text + "\n") if paths else "", args.out)
        return 0
    _emit(f"{count_paths(kind, args.n)}\n", args.out)
    return 0


def _require(args, names: tuple[str, ...], family: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError(f"verify --id {family} needs {' '.join(missing)}")


def _verify_reports(args) -> list:
    family = args.id
    if family == "knapsack":
        _require(args, ("n",), family)
        if args.k is None:
            reports = []
            for k in range(args.n // 2 + 1):
                reports.extend(verify_knapsack(args.n, k))
            return reports
        return list(verify_knapsack(args.n, args.k))
    if family == "riordan":
        _require(args, ("n",), family)
        return verify_riordan(args.n)
    if family == "ladder":
        _require(args, ("d", "k", "m"), family)
        return [verify_ladder(args.d, args.k, args.m)]
    if family == "analytic":
        _require(args, ("d", "k", "m"), family)
        return [verify_analytic_ladder(args.d, args.k, args.m)]
    if family == "expansion":
        _require(args, ("n", "k"), family)
        return [verify_expansion(args.n, args.k)]
    if family == "boundary":
        _require(args, ("k", "m"), family)
        return [verify_boundary(args.k, args.m)]
    if family == "hookwrap":
        _require(args, ("mu", "k"), family)
        return [verify_hook_wrap(parse_shape(args.mu), args.k)]
    if family == "catalan-pair":
        _require(args, ("m",), family)
        return [verify_catalan_pair(args.m)]
    if family == "branch":
        _require(args, ("n", "k", "parity"), family)
        return [verify_branch_rows(args.n, args.k, args.parity == "same")]
    raise ValueError(f"unknown identity family {family!r}")


def _cmd_verify(args) -> int:
    reports = _verify_reports(args)
    if args.format == "json":
        text = json.dumps([report_to_json(r) for r in reports], indent=2) + "\n"
    else:
        text = "\n".join(render_report(r) for r in reports) + "\n"
    _emit(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_table(args) -> int:
    _emit(render_table(args.id), args.out)
    return 0


def _cmd_certify(args) -> int:
    if args.name:
        if args.name not in CERTIFICATES:
            raise ValueError(
                f"unknown certificate {args.name!r}; available: {', '.join(sorted(CERTIFICATES))}"
            )
        reports = [CERTIFICATES[args.name]()]
    else:
        reports = certify_all()
    if args.format == "json":
        text = json.dumps([r.to_json() for r in reports], indent=2) + "\n"
    else:
        lines = []
        for r in reports:
            lines.append(f"certify {r.name} -> {'PASS' if r.passed else 'FAIL'}")
            for label, diff in r.checks:
                lines.append(f"  {label}: difference = {diff}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_search(args) -> int:
    families = tuple(args.pool.split("+"))
    pool = build_pool(args.n, families)
    result = find_equal_sum_pairs(pool, args.max_side, args.max_evals)
    if args.format == "json":
        payload = {
            "n": args.n,
            "pool": sorted(format_shape(s) for s, _ in pool.members),
            "truncated": result.truncated,
            "pairs": [report_to_json(p.to_report()) for p in result.pairs],
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [
            f"pool n={args.n} families={args.pool} size={len(pool.members)}"
            f" subsets={result.subsets_enumerated}"
            + (" TRUNCATED" if result.truncated else "")
        ]
        for p in result.pairs:
            left = " + ".join(f"f({format_shape(s)})" for s in p.left)
            right = " + ".join(f"f({format_shape(s)})" for s in p.right)
            tail = f" ; {p.label}" if p.label else ""
            lines.append(f"{left} = {right} ; sum {p.total}{tail}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_scan(args) -> int:
    rows = scan_even_ladders(args.k, args.m, args.dmax)
    if args.format == "csv":
        lines = ["d,value,probe_shape,probe_value,residual,candidates,note"]
        for r in rows:
            shape = format_shape(r.probe_shape) if r.probe_shape is not None else ""
            fields = [
                str(r.d),
                str(r.value),
                shape,
                "" if r.probe_value is None else str(r.probe_value),
                "" if r.residual is None else str(r.residual),
                " ".join(r.candidates),
                r.note,
            ]
            lines.append(",".join(f'"{f}"' if "," in f else f for f in fields))
    else:
        lines = [f"even ladder scan k={args.k} m={args.m}"]
        for r in rows:
            probe = f"f({format_shape(r.probe_shape)})" if r.probe_shape is not None else "-"
            lines.append(
                f"d={r.d:<2d} value={r.value} probe={probe}"
                f" residual={'-' if r.residual is None else r.residual} ; {r.note}"
            )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sytknap",
        description="Exact character degrees of symmetric groups and "
        "verification of equal-degree-sum identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degree", help="number of standard Young tableaux of a shape")
    p.add_argument("--shape", required=True, help="comma parts with ^ repetition, e.g. 5,5,1^10")
    p.add_argument("--route", choices=("hook", "enumerate"), default="hook")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser("paths", help="lattice path counts (dyck n = semilength)")
    p.add_argument("--kind", choices=[k.value for k in PathKind], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true", help="enumerate instead of count")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("verify", help="verify one identity instance or sweep")
    p.add_argument(
        "--id",
        required=True,
        choices=(
            "knapsack",
            "riordan",
            "ladder",
            "analytic",
            "expansion",
            "boundary",
            "hookwrap",
            "catalan-pair",
            "branch",
        ),
    )
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--mu", help="base shape for hookwrap")
    p.add_argument("--parity", choices=("same", "opposite"))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table", help="reproduce a reference table (byte-stable)")
    p.add_argument("--id", required=True, choices=sorted(TABLES))
    p.add_argument("--out")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("certify", help="run symbolic certificates")
    p.add_argument("--name", help="one certificate; default runs all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("search", help="search for equal-degree-sum subset pairs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pool", default="3part+fathook")
    p.add_argument("--max-side", type=int, default=8)
    p.add_argument("--max-evals", type=int, default=10_000_000)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("scan", help="informational even-ladder scan")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--format", choices=("text", "csv"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
