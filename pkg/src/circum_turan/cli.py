"""Command-line front end.

Exit codes: 0 success, 1 a property or verification failed, 2 usage or
parameter-range error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence, TextIO

from .constructions import build, canonical_tag, verify_construction
from .formulas import (
    PROBLEMS,
    AuditGrid,
    ConstructionId,
    ExtremalResult,
    RangeError,
    _g,
    audit_lemmas,
    e_G1,
    e_G2,
    e_G3,
    e_G4,
    f_value,
    half_circ,
)
from .graph import GraphError, graph6_encode, read_graph6_lines
from .invariants import BudgetExceeded, FamilyKind, ForbiddenFamily, is_free
from .oracle import (
    DEFAULT_MAX_N,
    DEFAULT_WITNESS_CAP,
    Connectivity,
    EnumerationTask,
    OracleResult,
    brute_force_ex,
    default_workers,
)

OK, FAILED, USAGE = 0, 1, 2

FAMILY_HELP = "forbidden family, written 'K<r>,C>=<k>' (clique and long cycles) or 'K<r>,P<k>' (clique and path)"


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``a..b`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            out = range(int(lo), int(hi) + 1)
        else:
            v = int(text)
            out = range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range 'a..b', got {text!r}") from None
    if len(out) == 0:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return out


def parse_family(text: str) -> ForbiddenFamily:
    try:
        return ForbiddenFamily.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


# -- rendering ------------------------------------------------------------------


def _emit_rows(rows: list[dict], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
        return
    if not rows:
        return
    cols = list(rows[0])
    if fmt == "csv":
        w = csv.DictWriter(out, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({c: _cell(row[c]) for c in cols})
        return
    cells = [[_cell(row[c]) for c in cols] for row in rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(cols)]
    out.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip() + "\n")
    for r in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def _cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(map(str, value))
    return str(value)


def _emit_record(record: dict, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        json.dump(record, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        _emit_rows([record], "csv", out)
    else:
        width = max(len(k) for k in record)
        for key, value in record.items():
            out.write(f"{key.ljust(width)}  {_cell(value)}\n")


# -- commands -------------------------------------------------------------------


def cmd_exval(args: argparse.Namespace, out: TextIO) -> int:
    res = PROBLEMS[args.problem](args.n, args.k, args.r)
    _emit_record(res.as_dict(), args.format, out)
    return OK


def cmd_construct(args: argparse.Namespace, out: TextIO) -> int:
    try:
        tag = canonical_tag(args.tag)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    cid = ConstructionId(tag, tuple(args.params))
    g = build(cid)
    if args.verify:
        problems = verify_construction(cid, g)
        if problems:
            for p in problems:
                print(f"verification failed: {p}", file=sys.stderr)
            return FAILED
    out.write(graph6_encode(g) + "\n")
    return OK


def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    fam = args.family
    source = sys.stdin if args.input in (None, "-") else open(args.input, encoding="ascii")
    rows = []
    any_violation = False
    try:
        for lineno, g in read_graph6_lines(source):
            verdict = is_free(g, fam, budget=args.budget)
            if verdict.free:
                text = "free"
            else:
                any_violation = True
                text = f"violation {verdict.certificate}"
            if args.format == "text":
                out.write(text + "\n")
            else:
                rows.append({"line": lineno, "n": g.n, "edges": g.num_edges, "verdict": text})
    finally:
        if source is not sys.stdin:
            source.close()
    if args.format != "text":
        _emit_rows(rows, args.format, out)
    return FAILED if any_violation and args.expect_free else OK


def formula_for(n: int, family: ForbiddenFamily, connectivity: Connectivity) -> ExtremalResult | None:
    """The closed-form prediction the oracle value should be compared with, if any.

    Extremal graphs of the cycle family are connected (amalgams and joins),
    so the unrestricted value also applies to connected graphs.
    """
    try:
        if family.kind is FamilyKind.CYCLES:
            if connectivity is Connectivity.TWO_CONNECTED:
                return PROBLEMS["cycles2conn"](n, family.k, family.r)
            return PROBLEMS["cycles"](n, family.k, family.r)
        if connectivity is Connectivity.ANY:
            return PROBLEMS["paths"](n, family.k, family.r)
    except RangeError:
        return None
    return None


def compare(result: OracleResult, formula: ExtremalResult | None) -> str:
    if not result.complete:
        return "INCOMPLETE"
    if formula is None:
        return "NOT-APPLICABLE"
    value = result.max_edges if result.max_edges is not None else -1
    if formula.status.is_exact:
        return "MATCH" if value == formula.value else "MISMATCH"
    # constructions behind the other statuses exist for every admissible n
    return "NOT-APPLICABLE" if value >= formula.value else "MISMATCH"


def cmd_oracle(args: argparse.Namespace, out: TextIO) -> int:
    conn = Connectivity(args.connectivity)
    task = EnumerationTask(args.n, args.family, conn, args.budget, max_n=args.max_n)
    result = brute_force_ex(task, cap=args.cap, workers=args.workers, use_cache=False)
    formula = formula_for(args.n, args.family, conn)
    verdict = compare(result, formula)
    if args.format == "json":
        json.dump({"oracle": result.to_json(),
                   "formula": formula.as_dict() if formula else None,
                   "verdict": verdict}, out, indent=2)
        out.write("\n")
    else:
        record = {
            "n": result.n,
            "family": result.family,
            "connectivity": result.connectivity,
            "oracle": result.max_edges,
            "complete": result.complete,
            "explored": result.explored,
            "classes": result.classes,
            "optimal_classes": result.optimal_classes,
            "formula": formula.value if formula else None,
            "status": formula.status.value if formula else None,
            "achievers": [str(a) for a in formula.achievers] if formula else None,
            "verdict": verdict,
            "witnesses": result.witnesses,
        }
        if args.format == "csv":
            _emit_rows([record], "csv", out)
        else:
            _emit_record({k: v for k, v in record.items() if k != "witnesses"}, "text", out)
            for w in result.witnesses:
                out.write(f"witness  {w}\n")
    return FAILED if verdict in ("MISMATCH", "INCOMPLETE") else OK


def cmd_audit(args: argparse.Namespace, out: TextIO) -> int:
    grid = AuditGrid(args.k.start, args.k.stop - 1, args.n_max)
    try:
        reports = audit_lemmas(grid, args.only)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    rows = [
        {"lemma": r.lemma, "checked": r.checked, "failures": len(r.failures),
         "first_failure": list(r.failures[0]) if r.failures else None, "passed": r.passed}
        for r in reports
    ]
    _emit_rows(rows, args.format, out)
    return OK if all(r.passed for r in reports) else FAILED


def _table_row(problem: str, n: int, k: int, r: int) -> dict:
    res = PROBLEMS[problem](n, k, r)
    row: dict = {"n": n, "k": k, "r": r, "value": res.value, "status": res.status.value,
                 "achievers": [str(a) for a in res.achievers]}
    if problem == "cycles":
        row["f"] = f_value(n, k, r)
        row["e_G1"] = e_G1(n, k) if k >= 5 else None
        row["e_G2"] = e_G2(n, k, r) if k >= 5 and r <= half_circ(k) + 1 else None
        row["left"], row["right"] = row["f"], row["e_G1"]
    elif problem == "cycles2conn":
        t = half_circ(k)
        row["g_a2"] = _g(n, 2, k, r)
        row["g_at"] = _g(n, t, k, r)
        row["e_G2"] = e_G2(n, k, r) if r <= t + 1 else None
        row["left"], row["right"] = row["g_a2"], row["g_at"]
    else:
        row["e_G3"] = e_G3(n, k, r) if r >= k // 2 + 1 else None
        row["e_G4"] = e_G4(n, k) if k >= 4 else None
        row["left"], row["right"] = row["e_G3"], row["e_G4"]
    return row


def cmd_table(args: argparse.Namespace, out: TextIO) -> int:
    rows = []
    for k in args.k:
        for r in args.r:
            crossed = False
            for n in args.n:
                try:
                    row = _table_row(args.problem, n, k, r)
                except RangeError:
                    continue
                left, right = row.pop("left"), row.pop("right")
                hit = left is not None and right is not None and right >= left
                row["crossover"] = hit and not crossed
                crossed = crossed or hit
                rows.append(row)
    if not rows:
        raise RangeError("no admissible (n, k, r) in the requested ranges")
    _emit_rows(rows, args.format, out)
    return OK


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circum-turan",
        description="Turán numbers for a clique together with long cycles or a path: "
                    "closed forms, constructions, exhaustive checks and lemma audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p: argparse.ArgumentParser, default: str = "text") -> None:
        p.add_argument("--format", choices=("text", "json", "csv"), default=default)

    p = sub.add_parser("exval", help="closed-form extremal number with status and achievers")
    p.add_argument("problem", choices=sorted(PROBLEMS))
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("r", type=int)
    fmt(p)
    p.set_defaults(func=cmd_exval)

    p = sub.add_parser("construct", help="build a construction and print it as graph6",
                       description="Tags: Turan n p | F n k r | H n a k | Gr n a k r | G1 n k | "
                                   "G2 n k r | G3 n k r | G4 n k | KX n k r | Tree n")
    p.add_argument("tag")
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--verify", action="store_true", help="re-check edge count and freeness before printing")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="test graph6 lines for freeness")
    p.add_argument("input", nargs="?", help="graph6 file (default: standard input)")
    p.add_argument("--family", type=parse_family, required=True, help=FAMILY_HELP)
    p.add_argument("--expect-free", action="store_true", help="exit 1 if any graph has a violation")
    p.add_argument("--budget", type=_positive, default=None)
    fmt(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="exhaustive extremal number compared with the closed form")
    p.add_argument("n", type=int)
    p.add_argument("--family", type=parse_family, required=True, help=FAMILY_HELP)
    p.add_argument("--connectivity", choices=[c.value for c in Connectivity], default="any")
    p.add_argument("--budget", type=_positive, default=None, help="node budget (default: CIRCUM_TURAN_BUDGET or 5e7)")
    p.add_argument("--workers", type=_positive, default=default_workers())
    p.add_argument("--cap", type=_positive, default=DEFAULT_WITNESS_CAP, help="witnesses kept")
    p.add_argument("--max-n", type=_positive, default=DEFAULT_MAX_N, help="largest n accepted")
    fmt(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("audit", help="arithmetic audits of the supporting inequalities")
    p.add_argument("--k", type=parse_range, default=range(5, 31), help="k range a..b (default 5..30)")
    p.add_argument("--n-max", type=_positive, default=200)
    p.add_argument("--only", action="append", help="restrict to the named lemma (repeatable)")
    fmt(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("table", help="closed-form values with the competing constructions side by side")
    p.add_argument("problem", choices=sorted(PROBLEMS))
    p.add_argument("--k", type=parse_range, required=True)
    p.add_argument("--r", type=parse_range, required=True)
    p.add_argument("--n", type=parse_range, required=True)
    fmt(p, "csv")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    out = out or sys.stdout
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else OK
    try:
        return args.func(args, out)
    except (RangeError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE

