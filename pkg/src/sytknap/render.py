"""Text rendering for reports and the reproducible reference tables."""

from .identities import (
    Report,
    Term,
    verify_knapsack,
    verify_ladder,
)
from .partitions import format_shape, pad


def format_term(term: Term, pad_to: int = 0) -> str:
    if term.kind == "three-row":
        return "e3(" + ",".join(str(v) for v in term.shape) + ")"
    if term.kind == "fat-hook":
        args = term.shape
        return f"e2({args[0]},{args[1]};{args[2]})"
    shape = term.shape
    if pad_to and len(shape) < pad_to:
        shape = pad(shape, pad_to)
    return f"f({format_shape(shape)})"


def format_side(report: Report, side: str) -> str:
    pad_to = report.lhs_pad if side == "L" else 0
    pieces = []
    for t in report.terms:
        if t.side != side:
            continue
        body = format_term(t, pad_to)
        if not pieces:
            pieces.append(body if t.sign > 0 else f"-{body}")
        else:
            pieces.append(("+ " if t.sign > 0 else "- ") + body)
    return " ".join(pieces) if pieces else "0"


def render_report(report: Report) -> str:
    params = " ".join(f"{k}={_param_str(v)}" for k, v in report.params.items())
    status = "PASS" if report.passed else "FAIL"
    head = f"{report.id} {params}".rstrip()
    if report.regime:
        head += f" [{report.regime}]"
    lines = [f"{head} -> {status}"]
    if report.error:
        lines.append(f"  error: {report.error}")
        return "\n".join(lines)
    lines.append(f"  {format_side(report, 'L')} = {format_side(report, 'R')}")
    lines.append(f"  {report.lhs} = {report.rhs}")
    if report.note:
        lines.append(f"  note: {report.note}")
    for label, ok in report.checks.items():
        lines.append(f"  check {label}: {'ok' if ok else 'FAILED'}")
    return "\n".join(lines)


def _param_str(v) -> str:
    if isinstance(v, tuple):
        return format_shape(v)
    return str(v)


def _table_line(label: str, report: Report) -> str:
    status = "pass" if report.passed else "FAIL"
    return (
        f"{label}: {format_side(report, 'L')} = {format_side(report, 'R')}"
        f" ; {report.lhs} = {report.rhs} ; {status}"
    )


def table_knapsack_n20() -> str:
    lines = ["fixed-second-part identities, n=20, same-parity families"]
    for k in range(0, 11, 2):
        eq1, _ = verify_knapsack(20, k)
        lines.append(_table_line(f"k={k:<2d}", eq1))
    return "\n".join(lines) + "\n"


def table_knapsack_n32() -> str:
    lines = ["fixed-second-part identities, n=32, k=11..13 (k=13 is swapped)"]
    for k in (11, 12, 13):
        eq1, eq2 = verify_knapsack(32, k)
        lines.append(_table_line(f"k={k} eq1", eq1))
        lines.append(_table_line(f"k={k} eq2", eq2))
    return "\n".join(lines) + "\n"


def table_ladder_n35() -> str:
    lines = ["three-term ladder collapse, n=35, one instance per case"]
    for k, m in ((14, 7), (11, 13), (7, 21)):
        report = verify_ladder(1, k, m)
        lines.append(_table_line(f"k={k:<2d} m={m:<2d}", report))
    return "\n".join(lines) + "\n"


TABLES = {
    "knapsack-n20": table_knapsack_n20,
    "knapsack-n32": table_knapsack_n32,
    "ladder-n35": table_ladder_n35,
}


def render_table(table_id: str) -> str:
    if table_id not in TABLES:
        raise ValueError(f"unknown table {table_id!r}; available: {', '.join(sorted(TABLES))}")
    return TABLES[table_id]()
