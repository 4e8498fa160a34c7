"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size guard hit.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import glnq
from .bratteli import BratteliDiagram, dot_export, json_export
from .errors import GuardError
from .qpoly import d_poly
from .qset_partitions import ENUMERATION_LIMIT, count_qsp_symbolic, enumerate_qsp, render_ascii
from .schensted import trace_rows
from .verify import run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _table(headers, rows) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _fmt_set(xs) -> str:
    return "{" + ",".join(map(str, xs)) + "}"


def cmd_dpoly(args) -> tuple[int, str]:
    if args.n < 1 or args.r < 0:
        raise UsageError("need --n >= 1 and --r >= 0")
    poly = d_poly(args.n, args.r)
    if args.at is not None:
        return EXIT_OK, json.dumps(poly(args.at))
    if args.format == "table":
        return EXIT_OK, _table(["power", "coefficient"], enumerate(poly.coeffs))
    return EXIT_OK, json.dumps({"n": args.n, "r": args.r, "coefficients": poly.to_json(), "polynomial": str(poly)})


def cmd_di(args) -> tuple[int, str]:
    try:
        seq = [int(x) for x in args.seq.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--seq must be comma-separated integers, got {args.seq!r}") from None
    rows = trace_rows(seq, args.n)
    if args.format == "table":
        body = []
        for row in rows:
            P = " / ".join(" ".join(map(str, r)) for r in row["P"])
            w = "".join(map(str, row["w_a"])) if "w_a" in row else ""
            bs = _fmt_set(row["BS"]) if "BS" in row else ""
            des = _fmt_set(row["Des"]) if "Des" in row else ""
            body.append([row["i"], row["a_i"] if row["a_i"] is not None else "", P, w, bs, des])
        return EXIT_OK, _table(["i", "a_i", "P_i", "w_a", "BS(w_a)", "Des(P_i)"], body)
    return EXIT_OK, json.dumps(rows)


def cmd_bratteli(args) -> tuple[int, str]:
    d = BratteliDiagram.build(args.n, args.levels)
    if args.format == "dot":
        return EXIT_OK, dot_export(d).rstrip("\n")
    if args.format == "table":
        rows = [[str(lv), "(" + ",".join(map(str, lam)) + ")", d.multiplicities[(lv, lam)]]
                for lv, shapes in d.levels.items() for lam in shapes]
        return EXIT_OK, _table(["level", "partition", "multiplicity"], rows)
    return EXIT_OK, json_export(d)


def cmd_qsp(args) -> tuple[int, str]:
    if args.count_only:
        poly = count_qsp_symbolic(args.n, args.r)
        return EXIT_OK, json.dumps({"n": args.n, "r": args.r, "q": args.q, "count": poly(args.q),
                                    "polynomial": poly.to_json()})
    elements = enumerate_qsp(args.n, args.r, args.q, limit=args.max_enum)
    if args.format == "table":
        blocks = [f"heights={list(K.heights)} entries={[list(c) for c in K.entries]}\n{render_ascii(K)}"
                  for K in elements]
        return EXIT_OK, "\n\n".join(blocks)
    return EXIT_OK, json.dumps([K.to_json() for K in elements])


def cmd_rep(args) -> tuple[int, str]:
    glnq.PrimeField(args.q)
    g = glnq.parse_gen(args.gen, args.n, args.q)
    m = glnq.rep_matrix(g, args.n, args.r, args.q, max_dim=args.max_dim)
    if args.format == "table":
        return EXIT_OK, "\n".join(" ".join(map(str, row)) for row in m.dense().tolist())
    return EXIT_OK, m.dumps()


def cmd_verify(args) -> tuple[int, str]:
    results = run_suite(args.suite, max_n=args.max_n, max_group_order=args.max_group_order)
    text = "\n".join(r.line() for r in results)
    return (EXIT_OK if all(r.passed for r in results) else EXIT_FAIL), text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--max-dim", type=int, default=glnq.DEFAULT_MAX_DIM,
                        help="largest module dimension to build (default %(default)s)")
    common.add_argument("--max-group-order", type=int, default=glnq.DEFAULT_MAX_GROUP_ORDER,
                        help="largest |GL_n(F_q)| to enumerate (default %(default)s)")
    common.add_argument("--max-enum", type=int, default=ENUMERATION_LIMIT,
                        help="bound on n^r q^(nr) for q-set partition listings (default %(default)s)")

    parser = argparse.ArgumentParser(prog="qpartition", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("dpoly", parents=[common], help="the dimension polynomial d_{n,r}(q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--at", type=int, help="evaluate at this q instead of printing coefficients")
    p.set_defaults(func=cmd_dpoly)

    p = sub.add_parser("di", parents=[common], help="delete-insert trace of a sequence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seq", required=True, help="comma-separated letters in 1..n")
    p.set_defaults(func=cmd_di)

    p = sub.add_parser("bratteli", help="Bratteli diagram with path counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--levels", type=str, required=True, help="deepest level, e.g. 3 or 5/2")
    p.add_argument("--format", choices=["json", "dot", "table"], default="json")
    p.set_defaults(func=cmd_bratteli)

    p = sub.add_parser("qsp", parents=[common], help="n-restricted q-set partitions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_qsp)

    p = sub.add_parser("rep", parents=[common], help="permutation matrix of a group element on the basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--gen", required=True, help="s<i> | x:i,j,t | h:k,t | matrix:<row-major entries>")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("verify", parents=[common], help="run acceptance checks")
    p.add_argument("--suite", choices=["all", "identities", "basis", "commutant"], default="all")
    p.add_argument("--max-n", type=int, help="skip commutant cases with larger n")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = args.func(args)
    except GuardError as exc:
        print(f"guard exceeded: {exc.guard} ({exc.value} > {exc.limit})", file=err)
        return EXIT_GUARD
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        parser.print_usage(err)
        return EXIT_USAGE
    print(text, file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
