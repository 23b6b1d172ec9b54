"""Command-line front end.

Subcommands: check, enumerate, path, locate, verify. Data goes to stdout,
diagnostics to stderr. Exit codes: 0 success, 1 negative domain answer
(not a triple, verification failed, ...), 2 usage error.
"""

import argparse
import json
import sys

from .eisenstein import (
    EQUILATERAL,
    Triple,
    TwinForm,
    is_eisenstein,
    pair_from_triple,
)
from .errors import Equilateral, NotForestTriple, NotPrimitive
from .forest import ForestNode, enumerate_forest, path_of_triple, triple_of_path
from .oracle import verify_bijection
from .stern_brocot import PathCode, path_of_pair


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} is not a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eisenforest",
        description="Generate, verify and invert the forest of primitive "
        "Eisenstein triples (integer triangles with a 60 degree angle).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify a candidate triple a b c")
    for name in ("a", "b", "c"):
        p.add_argument(name, type=_positive_int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="list all forest nodes with a <= bound")
    p.add_argument("--max-a", type=_positive_int, required=True, metavar="N")
    p.add_argument("--format", choices=("table", "jsonl", "dot"), default="table")
    p.add_argument(
        "--include-twins",
        action="store_true",
        help="also emit each node's twin triple as a record with c and twin_c exchanged",
    )
    p.add_argument(
        "--include-equilateral",
        action="store_true",
        help="prepend the (1,1,1) special case (it has no pair or path)",
    )
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("path", help="print the forest address of a triple")
    for name in ("a", "b", "c"):
        p.add_argument(name, type=_positive_int)
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("locate", help="resolve a path like A, B:4 or A:5.5 to its node")
    p.add_argument("code", metavar="PATH")
    p.set_defaults(func=cmd_locate)

    p = sub.add_parser("verify", help="check exactly-once coverage up to a bound")
    p.add_argument("--max-a", type=_positive_int, required=True, metavar="N")
    p.set_defaults(func=cmd_verify)

    return parser


def cmd_check(args: argparse.Namespace) -> int:
    t = Triple(args.a, args.b, args.c)
    if t == EQUILATERAL:
        print("(1,1,1): primitive Eisenstein triple, equilateral special case (outside the forest)")
        return 0
    if not is_eisenstein(t):
        print(f"{t}: not Eisensteinian ({t.a}^2 != {t.b}^2 + {t.c}^2 - {t.b}*{t.c})")
        return 1
    try:
        pair, form = pair_from_triple(t)
    except NotPrimitive as exc:
        print(f"{t}: Eisensteinian but rejected: {exc}")
        return 1
    label = "tree form" if form is TwinForm.TREE else "twin form"
    print(f"{t}: primitive Eisenstein triple ({label})")
    print(f"  twin: {Triple(t.a, t.b, t.b - t.c)}")
    print(f"  pair: {pair}")
    code = path_of_pair(pair)
    print(f"  path: {code} (depth {len(code.steps)})")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    nodes = enumerate_forest(args.max_a)
    if args.format == "dot":
        _emit_dot(nodes, args.include_equilateral)
        return 0
    records = _records(nodes, args.include_twins, args.include_equilateral)
    if args.format == "jsonl":
        for rec in records:
            print(json.dumps(rec, separators=(",", ":")))
    else:
        _emit_table(records)
    return 0


def cmd_path(args: argparse.Namespace) -> int:
    try:
        code = path_of_triple(Triple(args.a, args.b, args.c))
    except Equilateral:
        print("(1,1,1) is the equilateral special case; it has no forest path", file=sys.stderr)
        return 1
    except NotForestTriple as exc:
        print(f"not a forest triple: {exc}", file=sys.stderr)
        return 1
    print(code)
    return 0


def cmd_locate(args: argparse.Namespace) -> int:
    try:
        code = PathCode.parse(args.code)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    node = triple_of_path(code)
    print(f"triple: {node.tree_triple}")
    print(f"  twin: {node.twin_triple}")
    print(f"  pair: {node.pair}")
    print(f"  path: {node.path} (depth {node.depth})")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_a < 7:
        print(f"warning: no forest node has a <= {args.max_a}; the check is vacuous", file=sys.stderr)
    report = verify_bijection(args.max_a)
    if report.ok:
        print(f"OK: nodes={report.forest_count // 2}, triples={report.forest_count}")
        return 0
    print(
        f"FAIL: forest={report.forest_count}, brute={report.oracle_count}, "
        f"missing={len(report.missing)}, duplicated={len(report.duplicated)}"
    )
    for t in report.missing:
        print(f"  missing: {t}")
    for t in report.duplicated:
        print(f"  duplicated: {t}")
    return 1


def _records(nodes: list[ForestNode], twins: bool, equilateral: bool) -> list[dict]:
    out: list[dict] = []
    if equilateral:
        out.append(
            {"a": 1, "b": 1, "c": 1, "twin_c": None, "n": None, "m": None, "path": None, "depth": None}
        )
    for nd in nodes:
        t, tw = nd.tree_triple, nd.twin_triple
        base = {"n": nd.pair.n, "m": nd.pair.m, "path": str(nd.path), "depth": nd.depth}
        out.append({"a": t.a, "b": t.b, "c": t.c, "twin_c": tw.c, **base})
        if twins:
            out.append({"a": t.a, "b": t.b, "c": tw.c, "twin_c": t.c, **base})
    return out


def _emit_table(records: list[dict]) -> None:
    columns = ("path", "depth", "n", "m", "a", "b", "c", "twin_c")
    rows = [[("-" if rec[col] is None else str(rec[col])) for col in columns] for rec in records]
    widths = [max(len(col), *(len(row[i]) for row in rows)) if rows else len(col)
              for i, col in enumerate(columns)]
    print("  ".join(col.ljust(widths[i]) for i, col in enumerate(columns)).rstrip())
    for row in rows:
        print("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())


def _emit_dot(nodes: list[ForestNode], equilateral: bool) -> None:
    print("digraph eisenstein_forest {")
    if equilateral:
        print('  "equilateral" [label="(1,1,1)"];')
    for nd in nodes:
        t, tw = nd.tree_triple, nd.twin_triple
        print(f'  "{nd.path}" [label="({t.a},{t.b},{t.c}/{tw.c})"];')
        if nd.depth > 0:
            parent = PathCode(nd.path.root, nd.path.steps[:-1])
            print(f'  "{parent}" -> "{nd.path}" [label="{nd.path.steps[-1]}"];')
    print("}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
